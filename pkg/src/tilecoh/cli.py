"""Command-line front end.

Commands: validate, cohomology, hull, snf, dirlim.  Exit codes are
exhaustive and mutually exclusive: 0 on success, 1 on a mathematical or
validation failure, 2 on an I/O or parse failure.
"""

from __future__ import annotations

import argparse
import sys

from .complexes import SubstitutionComplex, cohomology, primitivity, validate
from .formats import (
    FormatError,
    cohomology_report_to_json,
    emit_json,
    hull_report_to_json,
    limit_to_json,
    load_complex,
    load_matrix,
    render_matrix_text,
)
from .hull import hull_cohomology
from .intmat import IntMatrix
from .limits import Presented, stationary_limit
from .normalforms import smith_normal_form


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tilecoh",
        description=(
            "Exact cohomology of finite 2-dimensional CW-complexes and of "
            "substitution tiling hulls, plus Smith normal forms and "
            "stationary direct limits of integer matrices."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--quiet", action="store_true", help="suppress auxiliary output")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the structural identities of a complex file")
    p.add_argument("path")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("cohomology", parents=[common], help="H^0, H^1, H^2 of a complex, with induced maps")
    p.add_argument("path")
    p.set_defaults(handler=_cmd_cohomology)

    p = sub.add_parser("hull", parents=[common], help="hull cohomology, K-theory, and primitivity")
    p.add_argument("path")
    p.set_defaults(handler=_cmd_hull)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form of a matrix file")
    p.add_argument("path")
    p.set_defaults(handler=_cmd_snf)

    p = sub.add_parser("dirlim", parents=[common], help="stationary direct limit of a square matrix file")
    p.add_argument("path")
    p.set_defaults(handler=_cmd_dirlim)

    return parser


def _cmd_validate(args: argparse.Namespace) -> int:
    obj = load_complex(args.path)
    violations = validate(obj)
    if args.json:
        print(
            emit_json(
                {
                    "valid": not violations,
                    "violations": [
                        {"identity": v.identity, "column": v.column} for v in violations
                    ],
                }
            ),
            end="",
        )
    elif violations:
        if not args.quiet:
            for v in violations:
                print(v)
    elif not args.quiet:
        print("valid")
    return 1 if violations else 0


def _load_validated(path: str):
    obj = load_complex(path)
    violations = validate(obj)
    if violations:
        raise ValueError(
            "complex fails validation: " + "; ".join(str(v) for v in violations)
        )
    return obj


def _cmd_cohomology(args: argparse.Namespace) -> int:
    obj = _load_validated(args.path)
    report = cohomology(obj)
    if args.json:
        print(emit_json(cohomology_report_to_json(report)), end="")
        return 0
    print(f"H0: {report.h0.group}")
    print(f"H1: {report.h1.group}")
    print(f"H2: {report.h2.group}")
    if report.has_induced_maps and not args.quiet:
        for name, endo in (("H0", report.g0), ("H1", report.g1), ("H2", report.g2)):
            print(f"induced map on {name}:")
            _print_matrix(endo.matrix)
    return 0


def _cmd_hull(args: argparse.Namespace) -> int:
    obj = _load_validated(args.path)
    if not isinstance(obj, SubstitutionComplex):
        raise ValueError("hull cohomology requires substitution data (gamma1/gamma2)")
    report = hull_cohomology(cohomology(obj))
    try:
        primitive, witness = primitivity(obj.b2)
    except ValueError:
        primitive, witness = False, None
    if args.json:
        print(emit_json(hull_report_to_json(report, primitive, witness)), end="")
        return 0
    print(f"H0(Omega): {report.h0}")
    print(f"H1(Omega): {report.h1}")
    print(f"H2(Omega): {report.h2}")
    if report.k0 is None:
        print("K0: cannot combine (some limit is unclassified)")
        print("K1: cannot combine (some limit is unclassified)")
    else:
        print(f"K0: {report.k0}")
        print(f"K1: {report.k1}")
    if not args.quiet:
        if primitive:
            print(f"face inflation primitive: yes (power {witness} is positive)")
        else:
            print("face inflation primitive: no")
    return 0


def _cmd_snf(args: argparse.Namespace) -> int:
    matrix = load_matrix(args.path)
    snf = smith_normal_form(matrix)
    if args.json:
        print(
            emit_json(
                {
                    "P": snf.p.to_lists(),
                    "D": snf.d.to_lists(),
                    "Q": snf.q.to_lists(),
                    "rank": snf.rank,
                    "invariant_factors": list(snf.invariant_factors),
                }
            ),
            end="",
        )
        return 0
    factors = ", ".join(str(v) for v in snf.invariant_factors) or "(none)"
    print(f"invariant factors: {factors}")
    if not args.quiet:
        for name, m in (("P", snf.p), ("D", snf.d), ("Q", snf.q)):
            print(f"{name}:")
            _print_matrix(m)
    return 0


def _cmd_dirlim(args: argparse.Namespace) -> int:
    matrix = load_matrix(args.path)
    result = stationary_limit(matrix)
    if args.json:
        print(emit_json(limit_to_json(result)), end="")
        return 0
    print(result)
    if isinstance(result, Presented) and not args.quiet:
        _print_matrix(result.reduced_matrix)
    return 0


def _print_matrix(m: IntMatrix) -> None:
    text = render_matrix_text(m)
    for line in text.splitlines()[1:]:
        print(f"  {line}")
    if m.rows == 0:
        print("  (empty)")
