"""Stretched multiplicities ``k -> m(k mu, k lam)`` and their growth.

Limits are taken along ``k ∈ qN`` where ``q`` is the quasi-period read off the
positivity pattern of the sequence: at parity-obstructed points the sequence
vanishes on a residue class and the unrestricted limit does not exist.
The zero-dimensional volume of a nonempty fibre is 1.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import TYPE_CHECKING, Sequence, Union

from .branching_cone import EffConeModel, branching_cone
from .characters import branching_multiplicity
from .cones import cone_predicates
from .embedding import Embedding, space_dims
from .errors import NotInteriorError, SequenceTooShortError, ValidationError

if TYPE_CHECKING:
    from .cache import MultiplicityCache

DEFAULT_K = 12
DEFAULT_CONE_LEVEL = 3
MAX_QUASI_PERIOD = 6
MAX_DEGREE = 4

Degree = Union[int, str]


@dataclass(frozen=True)
class StretchSequence:
    embedding: Embedding
    mu: tuple[int, ...]
    lam: tuple[int, ...]
    values: tuple[int, ...]
    K: int
    quasi_period: int
    degree: Degree
    leading: float | None

    def subsequence(self) -> list[tuple[int, int]]:
        """``(k, m(k))`` for ``k`` a multiple of the quasi-period."""
        return [(k, self.values[k]) for k in range(0, self.K + 1, self.quasi_period)]

    def as_json(self) -> dict:
        return {"point": {"mu": list(self.mu), "lambda": list(self.lam)}, "q": self.quasi_period,
                "degree": self.degree, "leading": self.leading, "values": list(self.values)}


@dataclass(frozen=True)
class VolumeEstimate:
    mu: tuple[int, ...]
    lam: tuple[int, ...]
    n: int
    volume: float
    exact: Fraction
    confidence: float | None
    subsequence_q: int
    degree: Degree
    values: tuple[int, ...]
    warnings: tuple[str, ...] = field(default=())

    @property
    def point(self) -> tuple[int, ...]:
        return self.mu + self.lam

    def as_json(self) -> dict:
        out = {"n": self.n, "volume": self.volume, "confidence": self.confidence, "q": self.subsequence_q,
               "degree": self.degree, "point": {"mu": list(self.mu), "lambda": list(self.lam)},
               "values": list(self.values)}
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out


def _positivity_periods(values: Sequence[int], max_q: int) -> list[int]:
    start = len(values) // 2
    return [q for q in range(1, max_q + 1)
            if all(len({values[k] > 0 for k in range(start, len(values)) if k % q == r}) <= 1
                   for r in range(q))]


def quasi_period(values: Sequence[int], max_q: int = MAX_QUASI_PERIOD) -> int:
    """Smallest q such that the sequence restricted to ``qN`` behaves polynomially.

    A candidate q must give every residue class a constant positivity pattern
    on the tail (second half of the sequence), and the finite differences of
    ``values[::q]`` must settle.  The second condition matters when the
    coefficients themselves are periodic, e.g. ``1, 1, 2, 2, 3, 3, ...``.
    Falls back to the smallest positivity period, or 1 with a warning.
    """
    candidates = _positivity_periods(values, max_q)
    if not candidates:
        warnings.warn(f"no quasi-period <= {max_q} found; using q = 1", stacklevel=2)
        return 1
    for q in candidates:
        if isinstance(_degree_of(values[::q]), int):
            return q
    return candidates[0]


def _degree_of(sub: Sequence[int]) -> Degree:
    diff = list(sub)
    for d in range(MAX_DEGREE + 1):
        if len(diff) < 2:
            return "inconclusive"
        # three agreeing samples when available: two can coincide by accident (1,1,2,2,...)
        if len(set(diff[-3:])) == 1:
            return d
        diff = [b - a for a, b in zip(diff, diff[1:])]
    return "inconclusive"


def growth_degree(s: StretchSequence) -> Degree:
    """Order of the first finite difference (along ``qN``) whose last samples agree.

    The last three samples must agree when there are three, otherwise the last two.
    """
    return _degree_of([m for _, m in s.subsequence()])


def _leading_estimates(points: Sequence[tuple[int, int]], n: int) -> list[Fraction]:
    """Estimates of lim m(k)/k^n from consecutive pairs fitted by v k^n + c k^(n-1)."""
    pts = [(k, m) for k, m in points if k > 0]
    if n == 0:
        return [Fraction(m) for _, m in pts]
    if len(pts) == 1:
        k, m = pts[0]
        return [Fraction(m, k ** n)]
    out = []
    for (k1, m1), (k2, m2) in zip(pts, pts[1:]):
        det = k1 ** n * k2 ** (n - 1) - k2 ** n * k1 ** (n - 1)
        out.append(Fraction(m1 * k2 ** (n - 1) - m2 * k1 ** (n - 1), det))
    return out


def _relative_gap(est: Sequence[Fraction]) -> float | None:
    if len(est) < 2:
        return None
    a, b = est[-1], est[-2]
    if a == b:
        return 0.0
    if a == 0:
        return math.inf
    return float(abs(a - b) / abs(a))


def _check_weights(e: Embedding, mu, lam) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return e.target.check_weight(mu), e.source.check_weight(lam)


def stretch_sequence(e: Embedding, mu, lam, K: int = DEFAULT_K, *,
                     cache: MultiplicityCache | None = None) -> StretchSequence:
    if K < 8:
        raise SequenceTooShortError(f"K must be at least 8, got {K}")
    mu, lam = _check_weights(e, mu, lam)
    values = tuple(
        branching_multiplicity(e, tuple(k * x for x in mu), tuple(k * x for x in lam), cache)
        for k in range(K + 1))
    q = quasi_period(values)
    sub = [(k, values[k]) for k in range(0, K + 1, q)]
    degree = _degree_of([m for _, m in sub])
    leading = None
    if isinstance(degree, int):
        est = _leading_estimates(sub, degree)
        leading = float(est[-1]) if est else None
    return StretchSequence(e, mu, lam, values, K, q, degree, leading)


def default_cone(e: Embedding) -> EffConeModel:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return branching_cone(e, DEFAULT_CONE_LEVEL)


def asymptotic_volume(e: Embedding, mu, lam, K: int = DEFAULT_K, *, cone: EffConeModel | None = None,
                      cache: MultiplicityCache | None = None) -> VolumeEstimate:
    """Extrapolated ``lim m(k mu, k lam) / k^n`` along ``k ∈ qN`` at an interior point."""
    mu, lam = _check_weights(e, mu, lam)
    model = cone if cone is not None else default_cone(e)
    if not cone_predicates(model.cone, mu + lam)["interior"]:
        raise NotInteriorError(f"({mu}; {lam}) is not interior to the sampled branching cone of {e.name}")
    n = space_dims(e).n
    s = stretch_sequence(e, mu, lam, K, cache=cache)
    est = _leading_estimates(s.subsequence(), n)
    notes = []
    if s.degree != n:
        notes.append(f"growth degree {s.degree} differs from quotient dimension {n}")
        warnings.warn(notes[-1], stacklevel=2)
    exact = est[-1]
    return VolumeEstimate(mu, lam, n, float(exact), exact, _relative_gap(est), s.quasi_period,
                          s.degree, s.values, tuple(notes))


RationalPoint = Sequence[Union[int, Fraction]]


def volume_at(e: Embedding, point: RationalPoint, K: int = DEFAULT_K, *, cone: EffConeModel | None = None,
              cache: MultiplicityCache | None = None) -> tuple[Fraction, VolumeEstimate]:
    """Volume at a rational point ``mu ⧺ lam`` using ``Vol(c x) = c^n Vol(x)``."""
    fr = [Fraction(x) for x in point]
    scale = lcm(*(x.denominator for x in fr), 1)
    ints = [int(x * scale) for x in fr]
    r = e.target.rank
    est = asymptotic_volume(e, ints[:r], ints[r:], K, cone=cone, cache=cache)
    return est.exact / Fraction(scale) ** est.n, est


def logconcavity_report(e: Embedding, points: Sequence[RationalPoint], K: int = DEFAULT_K,
                        tol: float = 0.05, *, cone: EffConeModel | None = None,
                        cache: MultiplicityCache | None = None) -> dict:
    """Check ``Vol(mid)^2 >= (1 - tol) Vol(x1) Vol(x2)`` for every pair of points."""
    if len(points) < 2:
        raise ValidationError("log-concavity needs at least two points")
    if not 0 < tol < 1:
        raise ValidationError(f"tol must lie in (0, 1), got {tol}")
    model = cone if cone is not None else default_cone(e)
    pts = [tuple(Fraction(x) for x in p) for p in points]
    n = space_dims(e).n
    vols: dict[tuple, Fraction] = {}

    def vol(p):
        if p not in vols:
            vols[p] = volume_at(e, p, K, cone=model, cache=cache)[0]
        return vols[p]

    triples = []
    for a, b in combinations(pts, 2):
        v1, v2 = vol(a), vol(b)
        # midpoint volume from the doubled (lattice-friendlier) sum point
        vm = vol(tuple(x + y for x, y in zip(a, b))) / 2 ** n
        ok = vm * vm >= (1 - Fraction(tol)) * v1 * v2
        triples.append({
            "xi1": [str(x) for x in a], "xi2": [str(x) for x in b],
            "midpoint": [str((x + y) / 2) for x, y in zip(a, b)],
            "vol1": float(v1), "vol2": float(v2), "vol_mid": float(vm), "pass": bool(ok),
        })
    return {"embedding": e.name, "n": n, "K": K, "tol": tol, "triples": triples,
            "all_pass": all(t["pass"] for t in triples)}


def fiber_report(e: Embedding, mu, lam, K: int = DEFAULT_K, *, estimate: VolumeEstimate | None = None,
                 cone: EffConeModel | None = None, cache: MultiplicityCache | None = None) -> dict:
    """Describe the fibre over ``(mu; lam)`` as far as its volume determines it."""
    est = estimate if estimate is not None else asymptotic_volume(e, mu, lam, K, cone=cone, cache=cache)
    base = {"point": {"mu": list(est.mu), "lambda": list(est.lam)}, "n": est.n, "volume": est.volume}
    if est.n == 0:
        return {**base, "kind": "point", "description": "point fiber (nonempty)", "body_constructed": True}
    if est.n == 1:
        return {**base, "kind": "interval", "interval": [0.0, est.volume],
                "description": "interval of this length, determined up to translation",
                "body_constructed": True}
    return {**base, "kind": "volume-only", "description": "body not constructed", "body_constructed": False}
