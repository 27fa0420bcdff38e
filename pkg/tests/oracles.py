"""Independent reference computations used by the test-suite.

Nothing here calls into the Freudenthal / Brauer / alternating-sum code paths.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

import numpy as np


def clebsch_gordan(a: int, b: int) -> dict[tuple[int], int]:
    return {(c,): 1 for c in range(abs(a - b), a + b + 1, 2)}


# -- Euclidean root systems -------------------------------------------------------


def euclidean_roots(simple: list[list[int]]) -> set[tuple[Fraction, ...]]:
    """All roots, closing the simple roots under their reflections in Euclidean space."""
    simple = [tuple(Fraction(x) for x in r) for r in simple]

    def refl(v, a):
        c = 2 * sum(x * y for x, y in zip(v, a)) / sum(x * x for x in a)
        return tuple(x - c * y for x, y in zip(v, a))

    roots = set(simple)
    frontier = list(simple)
    while frontier:
        v = frontier.pop()
        for a in simple:
            w = refl(v, a)
            if w not in roots:
                roots.add(w)
                frontier.append(w)
    return roots


# -- sl3 via tableaux ----------------------------------------------------------------


def partition_of(a: int, b: int) -> tuple[int, int]:
    return (a + b, b)


def ssyt(shape: tuple[int, ...], n: int):
    """Semistandard Young tableaux of ``shape`` with entries 1..n, as row tuples."""
    rows: list[list[tuple[int, ...]]] = []

    def rows_under(prev, length):
        for row in combinations_with_replacement_sorted(n, length):
            if prev is None or all(row[i] > prev[i] for i in range(length)):
                yield row

    def rec(i, prev, acc):
        if i == len(shape):
            yield tuple(acc)
            return
        for row in rows_under(prev, shape[i]):
            yield from rec(i + 1, row, acc + [row])

    return list(rec(0, None, []))


def combinations_with_replacement_sorted(n: int, length: int):
    from itertools import combinations_with_replacement
    return combinations_with_replacement(range(1, n + 1), length)


def sl3_weight_multiplicities(a: int, b: int) -> Counter:
    """Weights of V(a, b) for sl3 from tableau contents, in fundamental coordinates."""
    shape = tuple(x for x in partition_of(a, b) if x)
    out = Counter()
    for t in ssyt(shape, 3):
        c = Counter(x for row in t for x in row)
        out[(c[1] - c[2], c[2] - c[3])] += 1
    return out


def lr_coefficient(lam: tuple[int, ...], mu: tuple[int, ...], nu: tuple[int, ...]) -> int:
    """c^nu_{lam, mu}: LR tableaux of skew shape nu/lam and content mu."""
    lam = tuple(lam) + (0,) * (len(nu) - len(lam))
    if any(l > n for l, n in zip(lam, nu)) or sum(nu) != sum(lam) + sum(mu):
        return 0
    skew = [(lam[i], nu[i]) for i in range(len(nu))]
    content = tuple(x for x in mu if x)
    k = len(content)
    count = 0

    def fill(i, prev_row, acc):
        nonlocal count
        if i == len(skew):
            word = [x for row in acc for x in reversed(row)]
            tally = Counter()
            for x in word:
                tally[x] += 1
                if x > 1 and tally[x] > tally[x - 1]:
                    return
            if all(tally[j + 1] == content[j] for j in range(k)) and sum(tally.values()) == sum(content):
                count += 1
            return
        start, end = skew[i]
        length = end - start
        for row in combinations_with_replacement_sorted(k, length) if k else [()]:
            if length and not k:
                continue
            ok = True
            for j in range(length):
                col = start + j
                if prev_row is not None and col < len(prev_row) and prev_row[col] is not None:
                    if row[j] <= prev_row[col]:
                        ok = False
                        break
            if not ok:
                continue
            full = [None] * end
            for j in range(length):
                full[start + j] = row[j]
            fill(i + 1, full, acc + [list(row)])

    fill(0, None, [])
    return count


def sl3_tensor_multiplicity(mu: tuple[int, int], l1: tuple[int, int], l2: tuple[int, int]) -> int:
    """Multiplicity of V(mu) in V(l1) ⊗ V(l2) for sl3 via the LR rule."""
    p1, p2 = partition_of(*l1), partition_of(*l2)
    total = sum(p1) + sum(p2)
    base = mu[0] + 2 * mu[1]
    if (total - base) % 3 or total < base:
        return 0
    t = (total - base) // 3
    nu = (mu[0] + mu[1] + t, mu[1] + t, t)
    return lr_coefficient(p1, p2, nu)


def principal_sl2_in_sl3(a: int, b: int) -> dict[tuple[int], int]:
    """Restriction of V(a, b) to the principal sl2, from tableau weights 2*(#1 - #3)."""
    shape = tuple(x for x in partition_of(a, b) if x)
    n = Counter()
    for t in ssyt(shape, 3):
        c = Counter(x for row in t for x in row)
        n[2 * (c[1] - c[3])] += 1
    return {(j,): n[j] - n[j + 2] for j in sorted(n) if j >= 0 and n[j] - n[j + 2] > 0}


# -- cones -------------------------------------------------------------------------------


def brute_force_facets(gens: list[tuple[int, ...]], dim: int) -> set[tuple[int, ...]]:
    """Facet normals of a full-dimensional cone by trying every (dim-1)-subset of generators."""
    from branchlab._linalg import nullspace, primitive, rank

    out = set()
    for sub in combinations(gens, dim - 1):
        if rank(list(sub)) != dim - 1:
            continue
        (h,) = nullspace(list(sub), dim)
        vals = [sum(a * b for a, b in zip(h, g)) for g in gens]
        if all(v >= 0 for v in vals):
            out.add(primitive(h))
        elif all(v <= 0 for v in vals):
            out.add(primitive([-x for x in h]))
    return out


def in_cone_lp(g, others) -> bool:
    """Feasibility of g = sum t_i o_i with t >= 0, by linear programming."""
    from scipy.optimize import linprog

    if not others:
        return not any(g)
    a = np.array(others, dtype=float).T
    res = linprog(np.zeros(len(others)), A_eq=a, b_eq=np.array(g, dtype=float),
                  bounds=[(0, None)] * len(others), method="highs")
    return res.status == 0


def finite_difference_degree(seq: list[int]) -> int | None:
    d = list(seq)
    for order in range(len(seq)):
        if len(set(d)) == 1:
            return order
        d = [b - a for a, b in zip(d, d[1:])]
    return None


def all_lattice_points(bound: int, dim: int):
    return product(range(bound + 1), repeat=dim)
