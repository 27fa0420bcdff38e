"""Subalgebra embeddings presented by restriction matrices on weight lattices.

An embedding ``g ⊆ g'`` is stored from the point of view of restriction:
``source`` is the large algebra g', ``target`` is the subalgebra g, and
``restriction`` is a ``target.rank x source.rank`` integer matrix sending a
source weight (fundamental coordinates) to its restriction.
"""

from __future__ import annotations

import hashlib
import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from pathlib import Path

from .errors import DimensionMismatchError, ParseError, ValidationError
from .lie import RootSystem, build_root_system, parse_type_spec

BUILTIN_PREFIXES = ("diag", "principal-a1", "id")


@dataclass(frozen=True)
class Embedding:
    source: RootSystem
    target: RootSystem
    restriction: tuple[tuple[int, ...], ...]
    name: str = "custom"

    def __post_init__(self):
        rows = self.restriction
        if len(rows) != self.target.rank or any(len(r) != self.source.rank for r in rows):
            raise DimensionMismatchError(
                f"restriction matrix must be {self.target.rank}x{self.source.rank} "
                f"for {self.target.name} in {self.source.name}")

    def spec_json(self) -> dict:
        return {"source": self.source.name, "target": self.target.name,
                "matrix": [list(r) for r in self.restriction]}

    @property
    def fingerprint(self) -> str:
        blob = json.dumps(self.spec_json(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def restrict(self, lam) -> tuple[int, ...]:
        return tuple(sum(a * x for a, x in zip(row, lam)) for row in self.restriction)

    @property
    def expect_full_dimensional(self) -> bool | None:
        """Whether no nonzero ideal of the subalgebra is an ideal of the ambient one.

        Known for the built-in families only.
        """
        if self.name.startswith("id:"):
            return False
        if self.name.startswith(("diag:", "principal-a1:")):
            return True
        return None


def _principal_row(rs: RootSystem) -> tuple[int, ...]:
    # fundamental weight i evaluated on 2*rho^vee = sum of positive coroots
    return tuple(sum(co[i] for co in rs.coroots) for i in range(rs.rank))


def diagonal(type_spec: str) -> Embedding:
    tgt = build_root_system(type_spec)
    src = build_root_system(f"{tgt.name}x{tgt.name}")
    r = tgt.rank
    rows = tuple(tuple(int(j % r == i) for j in range(2 * r)) for i in range(r))
    return Embedding(src, tgt, rows, f"diag:{tgt.name}")


def principal_a1(type_spec: str) -> Embedding:
    src = build_root_system(type_spec)
    if len(src.factors) != 1:
        raise ParseError(f"principal-a1 needs a simple type, got {type_spec!r}")
    return Embedding(src, build_root_system("A1"), (_principal_row(src),), f"principal-a1:{src.name}")


def identity(type_spec: str) -> Embedding:
    rs = build_root_system(type_spec)
    rows = tuple(tuple(int(i == j) for j in range(rs.rank)) for i in range(rs.rank))
    return Embedding(rs, rs, rows, f"id:{rs.name}")


BUILTIN_EMBEDDINGS = ("diag:A1", "diag:A2", "principal-a1:A2", "id:A1", "id:B2")


def validate_embedding(e: Embedding, max_sum: int = 3) -> None:
    """Reject ``e`` unless branching conserves dimension for small source weights."""
    from .characters import branch, weyl_dimension
    from .errors import InconsistentEmbeddingError

    for lam in dominant_weights_up_to_sum(e.source.rank, max_sum):
        try:
            dec = branch(e, lam)
        except InconsistentEmbeddingError as exc:
            raise ValidationError(f"embedding rejected: {exc}") from None
        if dec.total_dimension != weyl_dimension(e.source, lam):
            raise ValidationError(f"embedding rejected: dimension not conserved at {lam}")


def dominant_weights_up_to_sum(rank: int, max_sum: int):
    for lam in product(range(max_sum + 1), repeat=rank):
        if sum(lam) <= max_sum:
            yield lam


def from_spec_dict(data: dict, name: str = "custom", validate: bool = True) -> Embedding:
    if not isinstance(data, dict) or set(data) != {"source", "target", "matrix"}:
        raise ParseError("embedding spec must be an object with keys source, target, matrix")
    matrix = data["matrix"]
    if not isinstance(matrix, list) or not all(
            isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in matrix):
        raise ParseError("matrix must be a list of integer rows")
    e = Embedding(build_root_system(data["source"]), build_root_system(data["target"]),
                  tuple(tuple(r) for r in matrix), name)
    if validate:
        validate_embedding(e)
    return e


def load_embedding(spec: str, validate: bool = True) -> Embedding:
    """Resolve ``diag:<TYPE>``, ``principal-a1:<TYPE>``, ``id:<TYPE>`` or a JSON file path.

    Built-ins are trusted; file specs go through :func:`validate_embedding`.
    """
    prefix, _, rest = spec.partition(":")
    if prefix in BUILTIN_PREFIXES and rest:
        parse_type_spec(rest)
        return {"diag": diagonal, "principal-a1": principal_a1, "id": identity}[prefix](rest)
    path = Path(spec)
    if not path.is_file():
        raise ParseError(f"unknown embedding {spec!r}: not a builtin tag and not a file")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"embedding file {spec!r} is not valid JSON: {exc}") from None
    return from_spec_dict(data, name="custom", validate=validate)


@dataclass(frozen=True)
class SpaceDims:
    dim_X: int
    dim_G: int
    n: int
    warning: str | None = None

    def as_json(self) -> dict:
        out = {"dim_X": self.dim_X, "dim_G": self.dim_G, "n": self.n}
        if self.warning:
            out["warning"] = self.warning
        return out


def space_dims(e: Embedding) -> SpaceDims:
    """Dimensions of the flag variety X, of the subgroup, and of the quotient."""
    dim_x = len(e.target.positive_roots) + len(e.source.positive_roots)
    dim_g = e.target.dim_group
    raw = dim_x - dim_g
    warning = None
    if raw < 0:
        warning = f"dim_G={dim_g} exceeds dim_X={dim_x}; quotient dimension floored at 0"
        warnings.warn(warning, stacklevel=2)
    return SpaceDims(dim_x, dim_g, max(raw, 0), warning)


def combined_point(mu, lam) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in (*mu, *lam))
