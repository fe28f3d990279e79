#!/usr/bin/env python3
"""Compare the Chang-Skjelbred kernel of the punctured-cube moment graph
with the closed-form Hilbert series window, degree by degree.

Usage: python scripts/gkm_window.py [--r 3] [--max-degree 20]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from facesyz.corpus import fan_punctured_cube  # noqa: E402
from facesyz.exactla import HilbertSeries, series_add, series_mul, series_window  # noqa: E402
from facesyz.gkm import cs_kernel_dims, from_punctured_cube  # noqa: E402
from facesyz.stanley import koszul_syzygy_hilbert  # noqa: E402
from facesyz.syzygy import syzygy_order_faces  # noqa: E402
from math import comb  # noqa: E402


def closed_form(r: int) -> HilbertSeries:
    # free summands generated in degrees 0..2(r-2) plus the (r-1)-st Koszul
    # syzygy, whose generators already sit in q-degree r-1
    free_coeffs = [comb(r, i) for i in range(r - 1)]
    total = series_mul(HilbertSeries(free_coeffs), HilbertSeries([1], r))
    return series_add(total, koszul_syzygy_hilbert(r, r - 1))


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", type=int, default=3)
    ap.add_argument("--max-degree", type=int, default=20)
    args = ap.parse_args()
    r, top = args.r, args.max_degree

    order = syzygy_order_faces(fan_punctured_cube(r)).order
    print(f"punctured (P^1)^{r}: syzygy order {order}"
          + ("" if order >= 2 else "  (kernel is only an upper bound!)"))
    g = from_punctured_cube(r)
    dims = cs_kernel_dims(g, top)
    window = series_window(closed_form(r), top // 2)
    print(f"{'degree':>6} {'q-deg':>6} {'kernel':>8} {'formula':>8}")
    all_match = True
    for m in range(top // 2 + 1):
        k, w = dims.get(2 * m), window.get(m)
        mark = "" if k == w else "  <-- differ"
        all_match = all_match and k == w
        print(f"{2 * m:>6} {m:>6} {k:>8} {w:>8}{mark}")
    print("windows agree" if all_match else "windows DIFFER")


if __name__ == "__main__":
    main()
