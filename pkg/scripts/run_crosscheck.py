#!/usr/bin/env python3
"""Build the full fan corpus in a scratch directory and run the crosscheck
battery over it (three syzygy pipelines, link correspondence, Ext
decomposition, orbit-space vanishing).

Usage: python scripts/run_crosscheck.py [--jobs N] [--keep DIR]
"""

from __future__ import annotations

import argparse
import sys
import tempfile
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from build_corpus import build  # noqa: E402  (sibling script)

from facesyz import cli  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--keep", type=Path, default=None,
                    help="write the corpus here instead of a temp dir")
    args = ap.parse_args()
    if args.keep:
        corpus_dir = args.keep
        n = build(corpus_dir)
        print(f"corpus: {n} fans in {corpus_dir}")
        return cli.main(["crosscheck", str(corpus_dir), "--jobs", str(args.jobs)])
    with tempfile.TemporaryDirectory(prefix="facesyz_corpus_") as tmp:
        corpus_dir = Path(tmp)
        n = build(corpus_dir)
        print(f"corpus: {n} fans in {corpus_dir}")
        return cli.main(["crosscheck", str(corpus_dir), "--jobs", str(args.jobs)])


if __name__ == "__main__":
    raise SystemExit(main())
