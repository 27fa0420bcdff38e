"""Weight multiplicities, Weyl dimensions and branching along an embedding.

Characters of product root systems are handled factor by factor: the
character of ``V(l1) x V(l2)`` is the outer product of the factor characters,
and its restriction is the convolution of the factor pushforwards.  This keeps
tensor-product branching at the cost of the factors rather than of the product.
"""

from __future__ import annotations

import threading
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import TYPE_CHECKING, Mapping

from .errors import InconsistentEmbeddingError, NonDominantWeightError, ResourceLimitError
from .lie import RootSystem, Weight, build_root_system, weyl_orbit

if TYPE_CHECKING:
    from .cache import MultiplicityCache
    from .embedding import Embedding

DEFAULT_WEIGHT_CAP = 5_000_000

_weight_cap = DEFAULT_WEIGHT_CAP


def set_weight_cap(cap: int) -> int:
    """Set the maximum number of distinct weights a character may hold; returns the old cap."""
    global _weight_cap
    old, _weight_cap = _weight_cap, int(cap)
    return old


@dataclass(frozen=True)
class Character:
    rs: RootSystem
    table: Mapping[Weight, int]

    @property
    def total_dimension(self) -> int:
        return sum(self.table.values())

    def is_w_stable(self) -> bool:
        for w, m in self.table.items():
            for i in range(self.rs.rank):
                if self.table.get(self.rs.reflect(w, i), 0) != m:
                    return False
        return True


@dataclass(frozen=True)
class DominantDecomposition:
    rs: RootSystem
    table: dict[Weight, int] = field(default_factory=dict)

    @property
    def total_dimension(self) -> int:
        return sum(m * weyl_dimension(self.rs, w) for w, m in self.table.items())

    def multiplicity(self, mu: Weight) -> int:
        return self.table.get(tuple(mu), 0)


def _require_dominant(rs: RootSystem, lam) -> Weight:
    lam = rs.check_weight(lam)
    if not rs.is_dominant(lam):
        raise NonDominantWeightError(f"{lam} is not dominant for {rs.name}")
    return lam


def _dominant_rep(simple: tuple[Weight, ...], w: Weight) -> Weight:
    w = list(w)
    n = len(w)
    while True:
        for i in range(n):
            c = w[i]
            if c < 0:
                a = simple[i]
                for k in range(n):
                    w[k] -= c * a[k]
                break
        else:
            return tuple(w)


def weyl_dimension(rs: RootSystem, lam) -> int:
    """Dimension of the irreducible module with highest weight ``lam``."""
    lam = _require_dominant(rs, lam)
    num = Fraction(1)
    for co in rs.coroots:
        num *= Fraction(sum(c * (x + 1) for c, x in zip(co, lam)), sum(co))
    assert num.denominator == 1
    return int(num)


def _split(rs: RootSystem, w: Weight) -> list[Weight]:
    return [w[a:b] for a, b in rs.factor_slices]


@lru_cache(maxsize=4096)
def _simple_dominant_character(name: str, lam: Weight) -> dict[Weight, int]:
    # Freudenthal's recursion restricted to dominant weights; non-dominant
    # weights on root strings are folded back by the Weyl group.
    rs = build_root_system(name)
    n = rs.rank
    pos = rs.positive_roots_fw
    form = rs.form

    seen = {lam}
    queue = [lam]
    while queue:
        mu = queue.pop()
        for beta in pos:
            nu = tuple(a - b for a, b in zip(mu, beta))
            if nu not in seen and all(x >= 0 for x in nu):
                seen.add(nu)
                queue.append(nu)

    def inner(u, v):
        return sum(u[i] * form[i][j] * v[j] for i in range(n) for j in range(n))

    form_beta = [tuple(sum(form[i][j] * b[j] for j in range(n)) for i in range(n)) for b in pos]
    beta_sq = [inner(b, b) for b in pos]
    lam_rho = tuple(x + 1 for x in lam)
    top = inner(lam_rho, lam_rho)
    order = sorted(seen, key=lambda w: (-rs.height(w), w))
    mult = {lam: 1}
    simple = rs.simple_roots
    fold: dict[Weight, Weight] = {}
    for mu in order[1:]:
        total = 0
        for beta, fb, bsq in zip(pos, form_beta, beta_sq):
            ip = sum(x * y for x, y in zip(mu, fb))
            nu = mu
            while True:
                nu = tuple(a + b for a, b in zip(nu, beta))
                ip += bsq
                d = fold.get(nu)
                if d is None:
                    d = fold[nu] = _dominant_rep(simple, nu)
                m = mult.get(d)
                if m is None:
                    break
                total += m * ip
        mu_rho = tuple(x + 1 for x in mu)
        denom = top - inner(mu_rho, mu_rho)
        q, r = divmod(2 * total, denom)
        assert r == 0 and q > 0, (name, lam, mu)
        mult[mu] = q
    return mult


def dominant_character(rs: RootSystem, lam) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of ``V(lam)``."""
    lam = _require_dominant(rs, lam)
    out: dict[Weight, int] = {(): 1}
    for f, part in zip(rs.factors, _split(rs, lam)):
        fac = _simple_dominant_character(f, part)
        out = {w + v: m * k for w, m in out.items() for v, k in fac.items()}
    return out


@lru_cache(maxsize=1024)
def _simple_full_character(name: str, lam: Weight) -> dict[Weight, int]:
    rs = build_root_system(name)
    table: dict[Weight, int] = {}
    for w, m in _simple_dominant_character(name, lam).items():
        for v in weyl_orbit(rs, w):
            table[v] = m
        if len(table) > _weight_cap:
            raise ResourceLimitError(
                f"character of V{lam} for {name} exceeds the weight cap {_weight_cap}")
    return table


def freudenthal_character(rs: RootSystem, lam) -> Character:
    """Full weight-multiplicity table of ``V(lam)``."""
    lam = _require_dominant(rs, lam)
    parts = [_simple_full_character(f, p) for f, p in zip(rs.factors, _split(rs, lam))]
    count = 1
    for p in parts:
        count *= len(p)
    if count > _weight_cap:
        raise ResourceLimitError(f"character of V{lam} for {rs.name} has {count} weights, cap {_weight_cap}")
    table: dict[Weight, int] = {(): 1}
    for p in parts:
        table = {w + v: m * k for w, m in table.items() for v, k in p.items()}
    return Character(rs, table)


# -- restriction -------------------------------------------------------------


@lru_cache(maxsize=4096)
def _pushforward(name: str, lam: Weight, columns: tuple[Weight, ...]) -> dict[Weight, int]:
    """Image of the character of V(lam) under the linear map whose columns are given."""
    out: dict[Weight, int] = defaultdict(int)
    tdim = len(columns[0]) if columns else 0
    for w, m in _simple_full_character(name, lam).items():
        img = [0] * tdim
        for x, col in zip(w, columns):
            if x:
                for i in range(tdim):
                    img[i] += x * col[i]
        out[tuple(img)] += m
    return dict(out)


def _convolve(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> dict[Weight, int]:
    if len(a) * len(b) > 50 * _weight_cap:
        raise ResourceLimitError("restricted character convolution exceeds the weight cap")
    out: dict[Weight, int] = defaultdict(int)
    for u, m in a.items():
        for v, k in b.items():
            out[tuple(x + y for x, y in zip(u, v))] += m * k
    if len(out) > _weight_cap:
        raise ResourceLimitError(f"restricted character has {len(out)} weights, cap {_weight_cap}")
    return dict(out)


def _factor_pushforwards(e: Embedding, lam: Weight) -> list[dict[Weight, int]]:
    src = e.source
    cols = list(zip(*e.restriction))  # column j = image of the j-th fundamental weight
    out = []
    for f, (a, b) in zip(src.factors, src.factor_slices):
        out.append(_pushforward(f, lam[a:b], tuple(tuple(c) for c in cols[a:b])))
    return out


def restricted_character(e: Embedding, lam) -> Character:
    """Character of ``V(lam)`` viewed as a (virtual) character of the target."""
    lam = _require_dominant(e.source, lam)
    parts = _factor_pushforwards(e, lam)
    table = parts[0]
    for p in parts[1:]:
        table = _convolve(table, p)
    return Character(e.target, {w: m for w, m in table.items() if m})


def _height_key(rs: RootSystem):
    return lambda w: (rs.height(w), w)


def branch(e: Embedding, lam) -> DominantDecomposition:
    """Decompose the restriction of ``V(lam)`` by Brauer subtraction."""
    tgt = e.target
    restricted = restricted_character(e, lam)
    rem = {w: m for w, m in restricted.table.items() if tgt.is_dominant(w)}
    result: dict[Weight, int] = {}
    key = _height_key(tgt)
    while rem:
        top = max(rem, key=key)
        c = rem[top]
        if c < 0:
            raise InconsistentEmbeddingError(
                f"restriction of V{tuple(lam)} is not a genuine {tgt.name} character (weight {top})")
        result[top] = c
        for w, m in dominant_character(tgt, top).items():
            v = rem.get(w, 0) - c * m
            if v < 0:
                raise InconsistentEmbeddingError(
                    f"Brauer subtraction went negative at {w} while branching V{tuple(lam)}")
            if v:
                rem[w] = v
            else:
                rem.pop(w, None)
    return DominantDecomposition(tgt, dict(sorted(result.items())))


def klimyk_branch(e: Embedding, lam) -> DominantDecomposition:
    """Decompose the restriction of ``V(lam)`` by the rho-shifted alternating sum."""
    tgt = e.target
    restricted = restricted_character(e, lam)
    simple = tgt.simple_roots
    acc: dict[Weight, int] = defaultdict(int)
    n = tgt.rank
    for w, m in restricted.table.items():
        v = list(x + 1 for x in w)
        sign = 1
        while True:
            for i in range(n):
                c = v[i]
                if c < 0:
                    a = simple[i]
                    for k in range(n):
                        v[k] -= c * a[k]
                    sign = -sign
                    break
            else:
                break
        if 0 in v:
            continue
        acc[tuple(x - 1 for x in v)] += sign * m
    table = {w: m for w, m in sorted(acc.items()) if m}
    bad = [w for w, m in table.items() if m < 0]
    if bad:
        raise InconsistentEmbeddingError(f"negative multiplicity at {bad[0]} while branching V{tuple(lam)}")
    return DominantDecomposition(tgt, table)


# -- single multiplicities ----------------------------------------------------

_memo: dict[tuple, int] = {}
_memo_lock = threading.Lock()


def _alternating_coefficient(e: Embedding, mu: Weight, lam: Weight) -> int:
    # m(mu) = sum_w sign(w) * restricted_mult(w(mu + rho) - rho); needs |W| lookups only
    parts = sorted(_factor_pushforwards(e, lam), key=len)
    head, rest = parts[0], parts[1:]
    other = rest[0] if rest else None
    for p in rest[1:]:
        other = _convolve(other, p)

    def restricted_mult(g: Weight) -> int:
        if other is None:
            return head.get(g, 0)
        total = 0
        for x, m in head.items():
            k = other.get(tuple(a - b for a, b in zip(g, x)))
            if k:
                total += m * k
        return total

    shifted = tuple(x + 1 for x in mu)
    total = 0
    for v, s in weyl_orbit(e.target, shifted).items():
        total += s * restricted_mult(tuple(x - 1 for x in v))
    return total


def branching_multiplicity(e: Embedding, mu, lam, cache: MultiplicityCache | None = None) -> int:
    """Multiplicity of ``W(mu)`` in the restriction of ``V(lam)``.

    Equal to ``branch(e, lam).multiplicity(mu)``; evaluated through the
    alternating sum so only the requested coefficient is computed.
    """
    mu = _require_dominant(e.target, mu)
    lam = _require_dominant(e.source, lam)
    key = (e.fingerprint, mu, lam)
    value = _memo.get(key)
    if value is None and cache is not None:
        value = cache.get(e.fingerprint, mu, lam)
    if value is None:
        value = _alternating_coefficient(e, mu, lam)
        if value < 0:
            raise InconsistentEmbeddingError(f"negative multiplicity {value} for {mu} in V{lam}")
    with _memo_lock:
        _memo.setdefault(key, value)
    if cache is not None:
        cache.put(e.fingerprint, mu, lam, value)
    return value


def clear_caches() -> None:
    """Drop every in-process memo (characters, pushforwards, multiplicities)."""
    _simple_dominant_character.cache_clear()
    _simple_full_character.cache_clear()
    _pushforward.cache_clear()
    with _memo_lock:
        _memo.clear()
