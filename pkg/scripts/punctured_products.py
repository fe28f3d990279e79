#!/usr/bin/env python3
"""Syzygy orders of punctured products: remove two vertices from a product
of simplices and tabulate the computed order against the join dimension.

Usage: python scripts/punctured_products.py [--dims 1,1,1]
"""

from __future__ import annotations

import argparse
import sys
from itertools import product
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from facesyz.corpus import punctured_product_structure, vertex_id  # noqa: E402
from facesyz.syzygy import syzygy_order_faces  # noqa: E402


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--dims", default="1,1,1", help="simplex dimensions of the product")
    args = ap.parse_args()
    dims = [int(x) for x in args.dims.split(",")]
    rank = sum(dims)
    verts = list(product(*[range(d + 1) for d in dims]))
    print(f"product of simplices {dims} (rank {rank}); order vs join dimension")
    print(f"{'v1':>12} {'v2':>12} {'join dim':>9} {'order':>6}")
    for i, v1 in enumerate(verts):
        for v2 in verts[i + 1:]:
            join_dim = sum(a != b for a, b in zip(v1, v2))
            s = punctured_product_structure(dims, v1, v2)
            order = syzygy_order_faces(s).order
            marker = "" if order == join_dim - 1 else "  <-- unexpected"
            print(f"{vertex_id(dims, v1):>12} {vertex_id(dims, v2):>12} "
                  f"{join_dim:>9} {order:>6}{marker}")


if __name__ == "__main__":
    main()
