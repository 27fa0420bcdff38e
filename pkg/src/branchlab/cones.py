"""Exact rational polyhedral cones.

A cone is kept in canonical form: primitive integer vectors, deduplicated and
sorted lexicographically.  The generator list is ``R ∪ ±L`` where ``L`` is the
RREF basis of the lineality space and ``R`` are the extreme rays of the cone
intersected with ``L``'s orthogonal complement; for pointed cones this is just
the set of extreme rays.  Halfspace normals ``h`` describe ``{x : <h, x> >= 0}``
in the same canonical form, via the dual cone.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import _linalg
from ._linalg import Vector, dot, primitive
from .errors import DimensionMismatchError


def _canonical_rows(vectors: Iterable[Sequence], dim: int) -> list[Vector]:
    out = set()
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatchError(f"vector {tuple(v)} is not of length {dim}")
        p = primitive(v)
        if any(p):
            out.add(p)
    return sorted(out)


def _pointed_dd(m: list[Vector], k: int) -> list[Vector]:
    """Extreme rays of the pointed cone {y : row.y >= 0} in Z^k, rows of rank k.

    Rows are processed in the given order; two rays are adjacent when the
    processed rows tight at both have rank k - 2.
    """
    basis_idx: list[int] = []
    for i, row in enumerate(m):
        if _linalg.rank([m[j] for j in basis_idx] + [row]) > len(basis_idx):
            basis_idx.append(i)
            if len(basis_idx) == k:
                break
    inv = _linalg.inverse([m[i] for i in basis_idx])
    rays = [primitive([inv[r][c] for r in range(k)]) for c in range(k)]
    processed = list(basis_idx)
    zeros = [frozenset(i for i in processed if dot(m[i], r) == 0) for r in rays]

    for i, a in enumerate(m):
        if i in basis_idx:
            continue
        vals = [dot(a, r) for r in rays]
        if all(v >= 0 for v in vals):
            processed.append(i)
            zeros = [z | {i} if v == 0 else z for z, v in zip(zeros, vals)]
            continue
        new_rays, new_zeros = [], []
        pos, neg = [], []
        for r, z, v in zip(rays, zeros, vals):
            if v > 0:
                pos.append((r, z, v))
            elif v < 0:
                neg.append((r, z, v))
            if v >= 0:
                new_rays.append(r)
                new_zeros.append(z | {i} if v == 0 else z)
        for p, zp, vp in pos:
            for q, zq, vq in neg:
                common = zp & zq
                if len(common) < k - 2:
                    continue
                if k > 2 and _linalg.rank([m[j] for j in common]) != k - 2:
                    continue
                r = primitive([vp * b - vq * c for b, c in zip(q, p)])
                if not any(r):
                    continue
                new_rays.append(r)
                new_zeros.append(frozenset(common | {i}))
        rays, zeros = new_rays, new_zeros
        processed.append(i)
    return sorted(set(rays))


def generators_of(rows: Sequence[Sequence], dim: int) -> tuple[list[Vector], list[Vector]]:
    """Lineality basis and pointed-part extreme rays of {x : <row, x> >= 0}."""
    rows = _canonical_rows(rows, dim)
    if not rows:
        return [tuple(int(i == j) for j in range(dim)) for i in range(dim)], []
    lineality = _linalg.nullspace(rows, dim)
    basis = _linalg.row_space_basis(rows, dim)
    k = len(basis)
    m = [tuple(dot(r, b) for b in basis) for r in rows]
    y_rays = _pointed_dd(m, k)
    rays = sorted({primitive([sum(y[t] * basis[t][j] for t in range(k)) for j in range(dim)])
                   for y in y_rays})
    return lineality, rays


def _with_lineality(lineality: list[Vector], rays: list[Vector]) -> tuple[Vector, ...]:
    out = set(rays)
    for v in lineality:
        out.add(v)
        out.add(tuple(-x for x in v))
    return tuple(sorted(out))


@dataclass(frozen=True)
class RationalCone:
    ambient_dim: int
    generators: tuple[Vector, ...]
    halfspaces: tuple[Vector, ...]
    pointed: bool
    dim: int

    def contains(self, x: Sequence) -> bool:
        return cone_predicates(self, x)["contains"]

    def interior(self, x: Sequence) -> bool:
        return cone_predicates(self, x)["interior"]

    def as_json(self) -> dict:
        return {"dim": self.ambient_dim, "rays": [list(v) for v in self.generators],
                "normals": [list(v) for v in self.halfspaces]}

    def __le__(self, other: RationalCone) -> bool:
        return all(other.contains(g) for g in self.generators)


def cone_from_generators(ambient_dim: int, vectors: Iterable[Sequence]) -> RationalCone:
    """Cone generated by ``vectors`` (rational entries allowed), in canonical form."""
    gens = _canonical_rows(vectors, ambient_dim)
    dual_lin, dual_rays = generators_of(gens, ambient_dim)
    normals = _with_lineality(dual_lin, dual_rays)
    lin, rays = generators_of(normals, ambient_dim)
    return RationalCone(
        ambient_dim=ambient_dim,
        generators=_with_lineality(lin, rays) if gens else (),
        halfspaces=normals,
        pointed=not lin or not gens,
        dim=_linalg.rank(gens) if gens else 0,
    )


def cone_from_halfspaces(ambient_dim: int, normals: Iterable[Sequence]) -> RationalCone:
    lin, rays = generators_of(list(normals), ambient_dim)
    return cone_from_generators(ambient_dim, _with_lineality(lin, rays))


def dual_halfspaces(c: RationalCone) -> list[Vector]:
    """Irredundant canonical normals of ``c``."""
    return list(c.halfspaces)


def cone_predicates(c: RationalCone, x: Sequence) -> dict[str, bool]:
    if len(x) != c.ambient_dim:
        raise DimensionMismatchError(f"point of length {len(x)} in a cone of ambient dimension {c.ambient_dim}")
    x = [Fraction(v) for v in x]
    vals = [dot(h, x) for h in c.halfspaces]
    contains = all(v >= 0 for v in vals)
    interior = contains and c.dim == c.ambient_dim and all(v > 0 for v in vals)
    return {"contains": contains, "interior": interior}
