"""Root systems, weight lattices and Weyl-group normalisation.

All weights are integer vectors in fundamental-weight coordinates.  The Cartan
matrix follows ``cartan[i][j] = <alpha_i^vee, alpha_j>``, so the simple root
``alpha_j`` is column ``j`` of the Cartan matrix (row ``j`` of its transpose).
Positive roots are stored in simple-root coordinates.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from . import _linalg
from .errors import DimensionMismatchError, ParseError, UnsupportedTypeError

Weight = tuple[int, ...]

SUPPORTED_TYPES = "A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), G2"

_SIMPLE_RE = re.compile(r"^(?:([ABCD])(\d+)|(G)(2))$")


def _euclidean_simple_roots(kind: str, n: int) -> list[list[int]]:
    def e(i: int, dim: int) -> list[int]:
        v = [0] * dim
        v[i] = 1
        return v

    def sub(u, v):
        return [a - b for a, b in zip(u, v)]

    if kind == "A":
        d = n + 1
        return [sub(e(i, d), e(i + 1, d)) for i in range(n)]
    if kind == "G":
        return [[1, -1, 0], [-2, 1, 1]]
    roots = [sub(e(i, n), e(i + 1, n)) for i in range(n - 1)]
    if kind == "B":
        roots.append(e(n - 1, n))
    elif kind == "C":
        roots.append([2 * x for x in e(n - 1, n)])
    else:  # D
        roots.append([a + b for a, b in zip(e(n - 2, n), e(n - 1, n))])
    return roots


def _check_simple(kind: str, n: int, token: str) -> None:
    lower = {"A": 1, "B": 2, "C": 3, "D": 4, "G": 2}[kind]
    if n < lower or (kind == "G" and n != 2):
        raise UnsupportedTypeError(f"unsupported simple type {token!r}; supported: {SUPPORTED_TYPES}")


def parse_type_spec(type_spec: str) -> tuple[tuple[str, int], ...]:
    """Parse ``TYPE := SIMPLE ("x" SIMPLE)*`` into ``(kind, n)`` pairs."""
    if not isinstance(type_spec, str) or not type_spec:
        raise ParseError(f"empty type spec {type_spec!r}")
    out = []
    for token in type_spec.split("x"):
        m = _SIMPLE_RE.match(token)
        if m is None:
            if re.match(r"^[A-Z]\d+$", token):
                raise UnsupportedTypeError(
                    f"unsupported simple type {token!r}; supported: {SUPPORTED_TYPES}")
            raise ParseError(f"malformed type spec {type_spec!r} at {token!r}")
        kind, digits = (m.group(1), m.group(2)) if m.group(1) else ("G", "2")
        n = int(digits)
        _check_simple(kind, n, token)
        out.append((kind, n))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Root datum of a finite product of simple types.

    ``sqlen`` holds the squared lengths of the simple roots and ``form`` the
    Gram matrix of the fundamental weights, both scaled by ``form_scale`` so
    that every entry is an integer.
    """

    name: str
    factors: tuple[str, ...]
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Weight, ...]
    factor_slices: tuple[tuple[int, int], ...]
    sqlen: tuple[int, ...]
    form: tuple[tuple[int, ...], ...]
    simple_roots: tuple[Weight, ...] = field(repr=False)
    positive_roots_fw: tuple[Weight, ...] = field(repr=False)
    coroots: tuple[Weight, ...] = field(repr=False)
    height_functional: Weight = field(repr=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and other.name == self.name

    def __hash__(self) -> int:
        return hash(self.name)

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @property
    def dim_group(self) -> int:
        return self.rank + 2 * len(self.positive_roots)

    @property
    def fundamental_weight_basis(self) -> str:
        return "fundamental"

    def factor_systems(self) -> list[RootSystem]:
        return [build_root_system(f) for f in self.factors]

    def inner(self, u: Weight, v: Weight) -> int:
        """Scaled invariant inner product of two weights."""
        return sum(u[i] * sum(r[j] * v[j] for j in range(self.rank)) for i, r in enumerate(self.form))

    def height(self, w: Weight) -> int:
        """Scaled sum of simple-root coordinates; strictly monotone in dominance order."""
        return sum(h * x for h, x in zip(self.height_functional, w))

    def coroot_pairing(self, w: Weight, root_index: int) -> int:
        return sum(c * x for c, x in zip(self.coroots[root_index], w))

    def check_weight(self, w) -> Weight:
        w = tuple(int(x) for x in w)
        if len(w) != self.rank:
            raise DimensionMismatchError(f"weight {w} has length {len(w)}, {self.name} has rank {self.rank}")
        return w

    def is_dominant(self, w: Weight) -> bool:
        return all(x >= 0 for x in w)

    def reflect(self, w: Weight, i: int) -> Weight:
        c = w[i]
        if c == 0:
            return w
        a = self.simple_roots[i]
        return tuple(x - c * y for x, y in zip(w, a))

    def in_root_lattice_cone(self, diff: Weight) -> bool:
        """True iff ``diff`` is a nonnegative integer combination of simple roots."""
        return all(c.denominator == 1 and c >= 0 for c in self.root_coordinates(diff))

    def root_coordinates(self, w: Weight) -> list[Fraction]:
        inv = _inverse_cartan(self.name)
        return [sum(inv[i][j] * w[j] for j in range(self.rank)) for i in range(self.rank)]


@lru_cache(maxsize=None)
def _inverse_cartan(name: str) -> tuple[tuple[Fraction, ...], ...]:
    rs = build_root_system(name)
    return tuple(tuple(r) for r in _linalg.inverse(rs.cartan))


@lru_cache(maxsize=None)
def _simple_data(kind: str, n: int):
    sroots = _euclidean_simple_roots(kind, n)
    r = len(sroots)
    ip = [[_linalg.dot(a, b) for b in sroots] for a in sroots]
    cartan = [[2 * ip[i][j] // ip[i][i] for j in range(r)] for i in range(r)]
    sqlen = [ip[i][i] for i in range(r)]
    return cartan, sqlen


def _positive_roots(cartan: list[list[int]]) -> list[Weight]:
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        beta = queue.pop()
        for i in range(r):
            c = sum(cartan[i][j] * beta[j] for j in range(r))
            if c == 0:
                continue
            image = tuple(b - c * int(k == i) for k, b in enumerate(beta))
            if all(x >= 0 for x in image) and any(image) and image not in seen:
                seen.add(image)
                queue.append(image)
    return sorted(seen)


@lru_cache(maxsize=None)
def build_root_system(type_spec: str) -> RootSystem:
    """Build the root system for a spec such as ``"A2"`` or ``"A1xA1"``."""
    parsed = parse_type_spec(type_spec)
    name = "x".join(f"{k}{n}" for k, n in parsed)
    if name != type_spec:
        return build_root_system(name)

    blocks = [_simple_data(k, n) for k, n in parsed]
    rank = sum(len(c) for c, _ in blocks)
    cartan = [[0] * rank for _ in range(rank)]
    sqlen: list[int] = []
    slices = []
    pos: list[Weight] = []
    off = 0
    for c, s in blocks:
        r = len(c)
        for i in range(r):
            for j in range(r):
                cartan[off + i][off + j] = c[i][j]
        for beta in _positive_roots(c):
            pos.append((0,) * off + beta + (0,) * (rank - off - r))
        sqlen.extend(s)
        slices.append((off, off + r))
        off += r
    pos.sort()

    # Gram matrix of fundamental weights: D A^{-1} with D = diag(|alpha_i|^2 / 2)
    inv = _linalg.inverse(cartan)
    gram = [[Fraction(sqlen[i], 2) * inv[i][j] for j in range(rank)] for i in range(rank)]
    scale = lcm(*(x.denominator for row in gram for x in row), 1)
    form = tuple(tuple(int(x * scale) for x in row) for row in gram)
    height = [sum(inv[i][j] for i in range(rank)) for j in range(rank)]
    hscale = lcm(*(x.denominator for x in height), 1)

    simple_roots = tuple(tuple(cartan[i][j] for i in range(rank)) for j in range(rank))
    pos_fw = tuple(
        tuple(sum(cartan[i][j] * beta[j] for j in range(rank)) for i in range(rank)) for beta in pos
    )
    coroots = []
    for beta in pos:
        beta_sq = sum(beta[i] * beta[j] * sqlen[i] * cartan[i][j] for i in range(rank) for j in range(rank)) // 2
        co = [Fraction(beta[j] * sqlen[j], beta_sq) for j in range(rank)]
        assert all(x.denominator == 1 for x in co)
        coroots.append(tuple(int(x) for x in co))

    return RootSystem(
        name=name,
        factors=tuple(f"{k}{n}" for k, n in parsed),
        rank=rank,
        cartan=tuple(tuple(r) for r in cartan),
        positive_roots=tuple(pos),
        factor_slices=tuple(slices),
        sqlen=tuple(sqlen),
        form=form,
        simple_roots=simple_roots,
        positive_roots_fw=pos_fw,
        coroots=tuple(coroots),
        height_functional=tuple(int(x * hscale) for x in height),
    )


def to_dominant(rs: RootSystem, w, *, regular: bool = False) -> tuple[Weight, int]:
    """Move ``w`` into the dominant chamber by simple reflections.

    Returns the dominant representative and ``(-1)**(reflections applied)``.
    With ``regular=True`` the input is taken to be already rho-shifted and the
    sign is 0 whenever the representative lies on a wall.
    """
    w = list(rs.check_weight(w))
    sign = 1
    simple = rs.simple_roots
    n = rs.rank
    while True:
        for i in range(n):
            c = w[i]
            if c < 0:
                a = simple[i]
                for k in range(n):
                    w[k] -= c * a[k]
                sign = -sign
                break
        else:
            break
    if regular and 0 in w:
        sign = 0
    return tuple(w), sign


def weyl_orbit(rs: RootSystem, w: Weight) -> dict[Weight, int]:
    """Orbit of ``w`` under W, each element mapped to the parity sign of a word reaching it."""
    orbit = {w: 1}
    queue = [w]
    while queue:
        v = queue.pop()
        s = orbit[v]
        for i in range(rs.rank):
            if v[i] == 0:
                continue
            u = rs.reflect(v, i)
            if u not in orbit:
                orbit[u] = -s
                queue.append(u)
    return orbit


def parse_weight(text: str, rs: RootSystem | None = None) -> Weight:
    """Parse ``"2,3"`` or factor blocks ``"1,1;1,1"`` into a weight.

    When ``rs`` is given, the length is checked and, if several ``;`` blocks
    are present, each block must match the rank of the corresponding factor.
    """
    if not isinstance(text, str) or not text.strip():
        raise ParseError(f"empty weight string {text!r}")
    blocks = [b.strip() for b in text.split(";")]
    coords: list[int] = []
    sizes = []
    for b in blocks:
        try:
            vals = [int(x) for x in b.split(",")]
        except ValueError:
            raise ParseError(f"malformed weight string {text!r}") from None
        coords.extend(vals)
        sizes.append(len(vals))
    w = tuple(coords)
    if rs is not None:
        rs.check_weight(w)
        if len(blocks) > 1:
            expected = [b - a for a, b in rs.factor_slices]
            if sizes != expected:
                raise DimensionMismatchError(
                    f"weight blocks {sizes} do not match factor ranks {expected} of {rs.name}")
    return w


def format_weight(w) -> str:
    return ",".join(str(x) for x in w)
