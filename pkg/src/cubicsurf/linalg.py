"""Exact integer linear algebra: rank, gcd normalisation, small inverses."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for i in range(r + 1, len(m)):
            row = m[i]
            f = row[c]
            if f == 0:
                # Bareiss step still has to rescale this row
                for k in range(c + 1, ncols):
                    row[k] = (p * row[k]) // prev
            else:
                pr = m[r]
                for k in range(c + 1, ncols):
                    row[k] = (p * row[k] - f * pr[k]) // prev
            row[c] = 0
        prev = p
        r += 1
        if r == len(m):
            break
    return r


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries (direction kept)."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(x // g for x in v)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def inverse_columns(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Primitive integer columns of the inverse of a square non-singular matrix.

    Column ``k`` is, up to a positive scalar, the vector ``x`` with
    ``rows[i] . x == 0`` for ``i != k`` and ``rows[k] . x > 0``.
    """
    n = len(rows)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        p = aug[c][c]
        aug[c] = [x / p for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    cols = []
    for k in range(n):
        col = [aug[i][n + k] for i in range(n)]
        den = 1
        for x in col:
            den = den * x.denominator // gcd(den, x.denominator)
        cols.append(primitive([int(x * den) for x in col]))
    return cols
