"""Command-line interface.

Exit status is 0 on success, 1 for usage and input errors, 2 for errors raised
while computing.  Every error is reported as one JSON object on stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import errors
from .asymptotics import DEFAULT_CONE_LEVEL, DEFAULT_K, asymptotic_volume, logconcavity_report, stretch_sequence
from .branching_cone import branching_cone, eff_cone_report, format_inequalities
from .cache import MultiplicityCache
from .characters import branch, branching_multiplicity, weyl_dimension
from .embedding import load_embedding, space_dims
from .lie import format_weight, parse_weight

INPUT_ERRORS = (
    errors.ParseError, errors.UnsupportedTypeError, errors.DimensionMismatchError,
    errors.NonDominantWeightError, errors.ValidationError, errors.SequenceTooShortError,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _diagnose(code: str, message: str) -> None:
    print(_dump({"error": code, "message": message}), file=sys.stderr)


def _rational_block(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for part in text.split(";") for x in part.split(",")]
    except (ValueError, ZeroDivisionError):
        raise errors.ParseError(f"malformed rational weight {text!r}") from None


def _read_points(path: str, e) -> list[tuple[Fraction, ...]]:
    """Points file: a JSON list of ``{"mu": W, "lambda": W}``; W a weight string or list."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise errors.ParseError(f"cannot read points file {path!r}: {exc}") from None
    if not isinstance(data, list):
        raise errors.ParseError("points file must hold a JSON list")
    pts = []
    for item in data:
        if not isinstance(item, dict) or set(item) != {"mu", "lambda"}:
            raise errors.ParseError(f"point entry {item!r} must have keys mu and lambda")
        coords = []
        for key, rs in (("mu", e.target), ("lambda", e.source)):
            val = item[key]
            block = _rational_block(val) if isinstance(val, str) else [Fraction(str(x)) for x in val]
            if len(block) != rs.rank:
                raise errors.DimensionMismatchError(f"{key} {val!r} does not have length {rs.rank}")
            coords.extend(block)
        pts.append(tuple(coords))
    return pts


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="branchlab", description="Exact branching multiplicities, cones and asymptotics.")
    common = _Parser(add_help=False)
    common.add_argument("-e", "--embedding", required=True,
                        help="diag:<TYPE>, principal-a1:<TYPE>, id:<TYPE> or a JSON spec file")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the multiplicity cache")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("dims", parents=[common], help="dimensions of X, G and the quotient")

    p = sub.add_parser("branch", parents=[common], help="decompose V(lambda) over the subalgebra")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("mult", parents=[common], help="one branching multiplicity")
    p.add_argument("--mu", required=True)
    p.add_argument("--lambda", dest="lam", required=True)

    p = sub.add_parser("cone", parents=[common], help="sampled branching cone")
    p.add_argument("--level", type=int, default=4)
    p.add_argument("--json", action="store_true")

    for name, text in (("stretch", "stretched multiplicity sequence"), ("volume", "asymptotic fibre volume")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--mu", required=True)
        p.add_argument("--lambda", dest="lam", required=True)
        p.add_argument("-K", dest="K", type=int, default=DEFAULT_K)
        if name == "volume":
            p.add_argument("--cone-level", type=int, default=DEFAULT_CONE_LEVEL)

    p = sub.add_parser("logcc", parents=[common], help="log-concavity of volumes over a point set")
    p.add_argument("--points", required=True)
    p.add_argument("-K", dest="K", type=int, default=DEFAULT_K)
    p.add_argument("--tol", type=float, default=0.05)
    p.add_argument("--cone-level", type=int, default=DEFAULT_CONE_LEVEL)
    return parser


def _execute(args, out) -> None:
    e = load_embedding(args.embedding)
    cache = None if args.no_cache else MultiplicityCache()
    try:
        _dispatch(args, e, cache, out)
    finally:
        if cache is not None:
            cache.flush()


def _dispatch(args, e, cache, out) -> None:
    cmd = args.command
    if cmd == "dims":
        print(_dump(space_dims(e).as_json()), file=out)
    elif cmd == "branch":
        lam = parse_weight(args.lam, e.source)
        dec = branch(e, lam)
        if args.json:
            print(_dump({format_weight(mu): m for mu, m in dec.table.items()}), file=out)
        else:
            print(f"V({format_weight(lam)}) of {e.source.name}, dim {weyl_dimension(e.source, lam)}", file=out)
            for mu, m in dec.table.items():
                print(f"  W({format_weight(mu)})  mult {m}  dim {weyl_dimension(e.target, mu)}", file=out)
    elif cmd == "mult":
        mu, lam = parse_weight(args.mu, e.target), parse_weight(args.lam, e.source)
        m = branching_multiplicity(e, mu, lam, cache)
        print(_dump({"mu": list(mu), "lambda": list(lam), "multiplicity": m}), file=out)
    elif cmd == "cone":
        model = branching_cone(e, args.level)
        report = eff_cone_report(model)
        if args.json:
            print(_dump(report), file=out)
        else:
            print(f"{report['claim']} for {e.name} at level {model.level} "
                  f"(stabilized at {model.stabilized_at}); coordinates {', '.join(report['coordinates'])}", file=out)
            for line in format_inequalities(model):
                print(f"  {line}", file=out)
            print(f"pointed: {report['pointed']}  full-dimensional: {report['full_dimensional']}  "
                  f"dim: {report['cone_dim']}", file=out)
    elif cmd == "stretch":
        mu, lam = parse_weight(args.mu, e.target), parse_weight(args.lam, e.source)
        s = stretch_sequence(e, mu, lam, args.K, cache=cache)
        print(_dump({"n": space_dims(e).n, **s.as_json()}), file=out)
    elif cmd == "volume":
        mu, lam = parse_weight(args.mu, e.target), parse_weight(args.lam, e.source)
        model = branching_cone(e, args.cone_level)
        print(_dump(asymptotic_volume(e, mu, lam, args.K, cone=model, cache=cache).as_json()), file=out)
    elif cmd == "logcc":
        points = _read_points(args.points, e)
        model = branching_cone(e, args.cone_level)
        print(_dump(logconcavity_report(e, points, args.K, args.tol, cone=model, cache=cache)), file=out)


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _diagnose("usage", str(exc))
        return 1
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            _execute(args, out)
    except INPUT_ERRORS as exc:
        _diagnose(exc.code, str(exc))
        return 1
    except errors.BranchlabError as exc:
        _diagnose(exc.code, str(exc))
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
