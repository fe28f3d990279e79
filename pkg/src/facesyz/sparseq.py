"""Internal exact sparse Gaussian elimination over the rationals.

Rows are dicts column -> integer (callers clear denominators; row scaling
does not change the rank).  Pivoting is deterministic and prefers unit
entries, which keeps the incidence-style systems used by the Ext oracle
and the GKM kernel computation small and fast.  Not part of the public
linear-algebra API.
"""

from __future__ import annotations

from math import gcd


def _normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def sparse_rank(rows: list[dict[int, int]]) -> int:
    """Rank of the matrix whose rows are the given sparse integer rows."""
    work = [_normalize({c: v for c, v in r.items() if v}) for r in rows]
    work = [r for r in work if r]
    rank = 0
    while work:
        # deterministic pivot: sparsest row, then smallest |entry|, then column
        best = None
        for idx, row in enumerate(work):
            c, v = min(row.items(), key=lambda cv: (abs(cv[1]), cv[0]))
            key = (len(row), abs(v), c, idx)
            if best is None or key < best[0]:
                best = (key, idx, c, v)
                if len(row) == 1 and abs(v) == 1:
                    break
        _, idx, pc, pv = best
        pivot = work.pop(idx)
        rank += 1
        nxt = []
        for row in work:
            v = row.get(pc)
            if v is None:
                nxt.append(row)
                continue
            out = {}
            for c, x in row.items():
                y = pv * x - v * pivot.get(c, 0)
                if y:
                    out[c] = y
            for c, x in pivot.items():
                if c not in row:
                    y = -v * x
                    if y:
                        out[c] = y
            if out:
                nxt.append(_normalize(out))
        work = nxt
    return rank


def sparse_nullity(rows: list[dict[int, int]], ncols: int) -> int:
    return ncols - sparse_rank(rows)
