#!/usr/bin/env python3
"""Build the crosscheck corpus: every unit-pool fan (rank <= 3, <= 5 rays)
plus the named fan fixtures, one .fan file each.

Usage: python scripts/build_corpus.py OUT_DIR [--max-rank N] [--max-rays N]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from facesyz.corpus import enumerate_unit_fans, named_fan_fixtures
from facesyz.formats import write_fan


def build(out_dir: Path, max_rank: int = 3, max_rays: int = 5) -> int:
    out_dir.mkdir(parents=True, exist_ok=True)
    count = 0
    for i, f in enumerate(enumerate_unit_fans(max_rank, max_rays)):
        (out_dir / f"unit_{i:05d}.fan").write_text(write_fan(f))
        count += 1
    for name, f in sorted(named_fan_fixtures().items()):
        (out_dir / f"{name}.fan").write_text(write_fan(f))
        count += 1
    return count


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("out_dir", type=Path)
    ap.add_argument("--max-rank", type=int, default=3)
    ap.add_argument("--max-rays", type=int, default=5)
    args = ap.parse_args()
    n = build(args.out_dir, args.max_rank, args.max_rays)
    print(f"wrote {n} fan files to {args.out_dir}")


if __name__ == "__main__":
    main()
