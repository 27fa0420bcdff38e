"""Sampled branching cones.

The support of the multiplicity function is enumerated over a coordinatewise
bounded grid of source weights and the cone it spans is tracked level by
level.  A cone is reported as stabilised once three consecutive levels agree;
that is the strongest claim made, never exact equality with the true cone.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .characters import branch
from .cones import RationalCone, cone_from_generators
from .embedding import Embedding
from .errors import ResourceLimitError, ValidationError

DEFAULT_GRID_CAP = 10_000

SIGMA_NOTE = (
    "coordinates are (mu; lambda) in fundamental-weight bases; they are read both as "
    "weights and as classes of the descended divisors on the quotient, with the "
    "identification taken as the identity up to positive rescaling of basis vectors"
)


@dataclass(frozen=True)
class SupportSample:
    embedding: Embedding
    level: int
    points: tuple[tuple[int, ...], ...]

    def __contains__(self, point) -> bool:
        return tuple(point) in set(self.points)


@dataclass(frozen=True)
class EffConeModel:
    embedding: Embedding
    cone: RationalCone
    stabilized_at: int
    stabilized: bool
    level: int
    pointed: bool
    full_dimensional: bool
    sigma_note: str = SIGMA_NOTE
    history: tuple[RationalCone, ...] = field(default=(), repr=False)


def _points_for(e: Embedding, lam: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [mu + lam for mu in branch(e, lam).table]


def _grid(e: Embedding, lo: int, hi: int, cap: int) -> list[tuple[int, ...]]:
    """Source dominant weights with max coordinate in [lo, hi]."""
    count = (hi + 1) ** e.source.rank
    if count > cap:
        raise ResourceLimitError(f"weight grid of size {count} exceeds the cap {cap}")
    return [lam for lam in product(range(hi + 1), repeat=e.source.rank) if max(lam, default=0) >= lo]


def _collect(e: Embedding, grid: list[tuple[int, ...]], workers: int) -> set[tuple[int, ...]]:
    points: set[tuple[int, ...]] = set()
    if workers > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for chunk in pool.map(_points_for, [e] * len(grid), grid):
                points.update(chunk)
    else:
        for lam in grid:
            points.update(_points_for(e, lam))
    return points


def enumerate_support(e: Embedding, level: int, *, grid_cap: int = DEFAULT_GRID_CAP,
                      workers: int = 1) -> SupportSample:
    """All ``mu ⧺ lam`` with positive multiplicity and every coordinate of ``lam`` at most ``level``."""
    if level < 1:
        raise ValidationError(f"level must be >= 1, got {level}")
    points = _collect(e, _grid(e, 0, level, grid_cap), workers)
    return SupportSample(e, level, tuple(sorted(points)))


def branching_cone(e: Embedding, max_level: int, *, grid_cap: int = DEFAULT_GRID_CAP,
                   workers: int = 1) -> EffConeModel:
    if max_level < 2:
        raise ValidationError(f"max_level must be >= 2, got {max_level}")
    _grid(e, 0, max_level, grid_cap)
    return _branching_cone(e, max_level, grid_cap, workers)


@lru_cache(maxsize=64)
def _branching_cone(e: Embedding, max_level: int, grid_cap: int, workers: int) -> EffConeModel:
    dim = e.target.rank + e.source.rank
    history: list[RationalCone] = []
    gens: tuple = ()
    for lvl in range(1, max_level + 1):
        lo = 0 if lvl == 1 else lvl
        new = _collect(e, _grid(e, lo, lvl, grid_cap), workers)
        cone = cone_from_generators(dim, list(gens) + sorted(new))
        gens = cone.generators
        history.append(cone)

    stabilized_at, stabilized = max_level, False
    for i in range(len(history) - 2):
        if history[i] == history[i + 1] == history[i + 2]:
            stabilized_at, stabilized = i + 1, True
            break
    if not stabilized:
        warnings.warn(f"branching cone of {e.name} not stabilised by level {max_level}", stacklevel=3)
    final = history[-1]
    return EffConeModel(
        embedding=e,
        cone=final,
        stabilized_at=stabilized_at,
        stabilized=stabilized,
        level=max_level,
        pointed=final.pointed,
        full_dimensional=final.dim == dim,
        history=tuple(history),
    )


def coordinate_names(e: Embedding) -> list[str]:
    return [f"mu{i + 1}" for i in range(e.target.rank)] + [f"lambda{i + 1}" for i in range(e.source.rank)]


def format_inequalities(model: EffConeModel) -> list[str]:
    names = coordinate_names(model.embedding)
    lines = []
    for h in model.cone.halfspaces:
        terms = []
        for c, name in zip(h, names):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            terms.append(f"{sign} {mag}{name}")
        text = " ".join(terms)
        text = text[2:] if text.startswith("+ ") else "-" + text[2:]
        lines.append(f"{text} >= 0")
    return lines


def eff_cone_report(model: EffConeModel) -> dict:
    """Structural verdicts on a sampled cone; pointedness is recomputed from the cone itself."""
    c = model.cone
    e = model.embedding
    return {
        "embedding": e.name,
        "fingerprint": e.fingerprint,
        "claim": "stabilized sample cone" if model.stabilized else "unstabilized sample cone",
        "level": model.level,
        "stabilized": model.stabilized,
        "stabilized_at": model.stabilized_at,
        "cone": c.as_json(),
        "cone_dim": c.dim,
        "pointed": c.pointed,
        "rational_polyhedral": True,
        "facets": len(c.halfspaces) if c.pointed else None,
        "full_dimensional": c.dim == c.ambient_dim,
        "expected_full_dimensional": e.expect_full_dimensional,
        "coordinates": coordinate_names(e),
        "sigma": model.sigma_note,
    }
