"""Small exact linear algebra over the rationals."""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

Vector = tuple[int, ...]


def primitive(v: Sequence[int | Fraction]) -> Vector:
    """Scale a rational vector to the primitive integer vector on its ray."""
    fr = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    ints = [int(x * den) for x in fr]
    g = reduce(gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def rref(rows: Sequence[Sequence[int | Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[int | Fraction]]) -> int:
    if not rows:
        return 0
    return len(_int_rank_rows(rows))


def _int_rank_rows(rows: Sequence[Sequence[int | Fraction]]) -> list[list[int]]:
    # fraction-free elimination; returns the nonzero echelon rows
    m = [list(primitive(r)) for r in rows]
    m = [r for r in m if any(r)]
    if not m:
        return []
    ncols = len(m[0])
    out = []
    for c in range(ncols):
        p = next((i for i, r in enumerate(m) if r[c] != 0), None)
        if p is None:
            continue
        piv = m.pop(p)
        out.append(piv)
        nxt = []
        for r in m:
            if r[c] != 0:
                r = [piv[c] * a - r[c] * b for a, b in zip(r, piv)]
                r = list(primitive(r))
            if any(r):
                nxt.append(r)
        m = nxt
        if not m:
            break
    return out


def nullspace(rows: Sequence[Sequence[int | Fraction]], ncols: int) -> list[Vector]:
    """Primitive integer basis of {x : r.x = 0 for all rows}, from the RREF."""
    red, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(red, pivots):
            x[p] = -row[f]
        basis.append(primitive(x))
    return basis


def row_space_basis(rows: Sequence[Sequence[int | Fraction]], ncols: int) -> list[Vector]:
    red, _ = rref(rows, ncols)
    return [primitive(r) for r in red]


def inverse(a: Sequence[Sequence[int | Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))
