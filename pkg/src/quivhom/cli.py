"""Command line surface.

One verb per construction:

  quivhom validate FILE
  quivhom realize FILE [--word W] [-o OUT]
  quivhom singular FILE --word W --max-dim N [-o OUT]
  quivhom ingest simplicial FILE [-o OUT]
  quivhom homology {cubical,path,mpath,cell,cubical-path} FILE
          [--word W] [--power M] [--max-dim N] [--field q|f:P] [--json]

Exit codes: 0 success, 1 validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cubical import CubicalSet, ValidationError, validate_cubical
from .files import (ParseError, SimplicialComplexInput, artifact_to_data,
                    load_artifact, simplicial_to_digraph)
from .homology import compute_homology
from .linalg import QQ, PrimeField
from .quiver import NonSimpleError, Quiver
from .realization import realize
from .singular import singular_cubical_set

USAGE_ERROR = 2
VALIDATION_ERROR = 1


def _write_output(data: dict, out: str | None) -> None:
    text = json.dumps(data, indent=2, sort_keys=True) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_field(spec: str):
    if spec == "q":
        return QQ
    if spec.startswith("f:"):
        try:
            return PrimeField(int(spec[2:]))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc
    raise argparse.ArgumentTypeError(f"field must be 'q' or 'f:P', got {spec!r}")


def emit_report(report: dict, as_json: bool) -> str:
    """Deterministic rendering of a homology report.

    The text form refuses to print Betti numbers beyond the reliable
    degree; the JSON form carries everything plus the bound.
    """
    if as_json:
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    lines = [f"theory: {report['theory']}", f"field: {report['field']}"]
    for key in sorted(report["params"]):
        value = report["params"][key]
        if value is not None:
            lines.append(f"{key}: {value}")
    lines.append(f"chain ranks: {' '.join(map(str, report['chain_ranks']))}")
    valid = report["valid_up_to"]
    lines.append(f"valid up to degree: {valid}")
    shown = report["betti"][:valid + 1] if valid >= 0 else []
    lines.append(f"betti: {' '.join(map(str, shown))}")
    return "\n".join(lines) + "\n"


def _cmd_validate(args) -> int:
    obj = load_artifact(args.file)
    kind = {Quiver: "quiver", CubicalSet: "cubical_set",
            SimplicialComplexInput: "simplicial"}
    for cls, name in kind.items():
        if isinstance(obj, cls):
            print(f"ok: {name}")
            return 0
    return 0


def _cmd_realize(args) -> int:
    obj = load_artifact(args.file)
    if not isinstance(obj, CubicalSet):
        print("realize needs a cubical set file", file=sys.stderr)
        return USAGE_ERROR
    result = realize(obj, args.word)
    _write_output(artifact_to_data(result.quiver), args.output)
    return 0


def _cmd_singular(args) -> int:
    obj = load_artifact(args.file)
    if not isinstance(obj, Quiver):
        print("singular needs a quiver file", file=sys.stderr)
        return USAGE_ERROR
    sc = singular_cubical_set(obj, args.word, args.max_dim)
    _write_output(artifact_to_data(sc.presentation), args.output)
    return 0


def _cmd_ingest(args) -> int:
    obj = load_artifact(args.file)
    if not isinstance(obj, SimplicialComplexInput):
        print("ingest simplicial needs a simplicial file", file=sys.stderr)
        return USAGE_ERROR
    _write_output(artifact_to_data(simplicial_to_digraph(obj)), args.output)
    return 0


def _cmd_homology(args) -> int:
    obj = load_artifact(args.file)
    theory = args.theory.replace("-", "_")
    field_ = args.field
    if theory in ("path", "mpath", "cubical_path") and field_ is not QQ:
        print(f"{args.theory} homology is computed over the rationals",
              file=sys.stderr)
        return USAGE_ERROR
    report = compute_homology(theory, obj, word=args.word, power=args.power,
                              max_dim=args.max_dim, field_=field_)
    sys.stdout.write(emit_report(report, args.json))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quivhom",
        description="Cubical sets, quiver realizations, and exact homology")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an artifact file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("realize", help="quiver realization of a cubical set")
    p.add_argument("file")
    p.add_argument("--word", default="+")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_realize)

    p = sub.add_parser("singular", help="truncated singular cubical set of a quiver")
    p.add_argument("file")
    p.add_argument("--word", required=True)
    p.add_argument("--max-dim", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=_cmd_singular)

    p = sub.add_parser("ingest", help="convert other inputs to artifacts")
    ingest_sub = p.add_subparsers(dest="what", required=True)
    ps = ingest_sub.add_parser("simplicial",
                               help="face-poset digraph of a simplicial complex")
    ps.add_argument("file")
    ps.add_argument("-o", "--output", default=None)
    ps.set_defaults(func=_cmd_ingest)

    p = sub.add_parser("homology", help="compute a homology report")
    p.add_argument("theory",
                   choices=["cubical", "path", "mpath", "cell", "cubical-path"])
    p.add_argument("file")
    p.add_argument("--word", default=None)
    p.add_argument("--power", type=int, default=None)
    p.add_argument("--max-dim", type=int, default=None)
    p.add_argument("--field", type=_parse_field, default=QQ)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_homology)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        return args.func(args)
    except (ParseError, ValidationError, NonSimpleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VALIDATION_ERROR
    except (ValueError, TypeError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
