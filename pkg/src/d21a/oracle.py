"""Slow, independent cross-checks.

Nothing here imports the modules it is used to validate.
"""
from __future__ import annotations

from itertools import combinations
from typing import List, Sequence, Tuple

from .arith import as_scalar

_ODD = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
_EVEN = [(1, 1, 0), (1, 0, 1), (0, 1, 1)]


def enum_multiplicity(nu: Sequence[int]) -> Tuple[int, int]:
    """Verma multiplicity at offset ``nu`` by exhaustive search.

    Loops over every even-root exponent vector that fits under ``nu`` and every
    subset of positive odd roots, by subset size.
    """
    nu = tuple(nu)
    # an even exponent can never exceed the coordinates its root touches
    bounds = [min(nu[i] for i in range(3) if e[i]) for e in _EVEN]
    counts = [0, 0]
    for size in range(5):
        for S in combinations(_ODD, size):
            for a in range(bounds[0] + 1):
                for b in range(bounds[1] + 1):
                    for c in range(bounds[2] + 1):
                        tot = [sum(v[i] for v in S) for i in range(3)]
                        for n, e in zip((a, b, c), _EVEN):
                            for i in range(3):
                                tot[i] += n * e[i]
                        if tuple(tot) == nu:
                            counts[size % 2] += 1
    return tuple(counts)


def dense_matrix_rank(M: Sequence[Sequence]) -> int:
    """Rank by column-wise elimination over Q(a), pivoting on the last usable row."""
    rows = [[as_scalar(x) for x in r] for r in M]
    if not rows:
        return 0
    ncols = len(rows[0])
    free: List[int] = list(range(len(rows)))
    rank = 0
    for col in range(ncols - 1, -1, -1):
        piv = None
        for r in reversed(free):
            if not rows[r][col].is_zero():
                piv = r
                break
        if piv is None:
            continue
        free.remove(piv)
        rank += 1
        p = rows[piv][col]
        for r in free:
            if rows[r][col].is_zero():
                continue
            f = rows[r][col] / p
            rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv])]
    return rank
