"""Command-line driver.

JSON goes to stdout, diagnostics to stderr.  Exit status: 0 success,
1 domain/validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import jsonio
from .boolean import BooleanAlgebra, free_boolean_algebra
from .errors import FreeVLError
from .exact import as_fraction, format_fraction
from .lattice import (
    canonicalize,
    cone_certificate,
    cone_contains_atoms,
    cone_contains_quantifier,
    cone_witness,
    extend_hom,
    hom_from_atom_images,
    ppp_sup,
)
from .parse import parse_formal_sum
from .riesz import FiniteFunctional, al_norm_check, functional_to_measure, integrate, measure_to_functional
from .stone import SimpleFunction, stone_space, to_dot, to_json, to_simple_function, urysohn_truncation

DEFAULT_GENERATORS = 2


class UsageError(Exception):
    pass


def _emit(obj, out) -> None:
    out.write(json.dumps(obj) + "\n")


def _load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FreeVLError(f"{path} is not valid JSON: {exc}") from None


def _algebra(args) -> BooleanAlgebra:
    if getattr(args, "algebra", None):
        return jsonio.algebra_from_json(_load_json(args.algebra))
    if getattr(args, "atoms", None) is not None:
        return BooleanAlgebra(args.atoms)
    n = args.generators if getattr(args, "generators", None) is not None else DEFAULT_GENERATORS
    return free_boolean_algebra(n)[0]


def cmd_algebra(args, out, err) -> int:
    algebra, _ = free_boolean_algebra(args.generators)
    _emit(jsonio.algebra_to_json(algebra), out)
    return 0


def cmd_canon(args, out, err) -> int:
    algebra = _algebra(args)
    _emit(jsonio.lattice_to_json(canonicalize(parse_formal_sum(args.sum, algebra))), out)
    return 0


def cmd_cone(args, out, err) -> int:
    algebra = _algebra(args)
    e = parse_formal_sum(args.sum, algebra)
    results = {}
    if args.mode in ("atoms", "both"):
        results["atoms"] = cone_contains_atoms(e)
    if args.mode in ("quantifier", "both"):
        results["quantifier"] = cone_contains_quantifier(e)
    verdicts = set(results.values())
    agree = len(verdicts) == 1
    in_cone = results.get("atoms", results.get("quantifier"))
    report = {"in_cone": in_cone, "mode": args.mode, "results": results, "agree": agree}
    witness = cone_witness(e)
    if witness is None:
        report["certificate"] = jsonio.certificate_to_json(cone_certificate(e))
    else:
        total = sum((c for a, c in e.items() if (a.mask >> witness) & 1), Fraction(0))
        report["witness"] = {"atom": witness, "label": algebra.atom_label(witness), "sum": format_fraction(total)}
    _emit(report, out)
    suffix = " (both modes agree)" if args.mode == "both" and agree else ""
    if not agree:
        suffix = " (MODES DISAGREE)"
    err.write(f"in cone: {str(in_cone).lower()}{suffix}\n")
    return 0 if agree else 1


def cmd_op(args, out, err) -> int:
    algebra = _algebra(args)
    f = canonicalize(parse_formal_sum(args.first, algebra))
    if args.operation == "abs":
        if args.second is not None:
            raise UsageError("op abs takes a single sum")
        result = abs(f)
    else:
        if args.second is None:
            raise UsageError(f"op {args.operation} takes two sums")
        h = canonicalize(parse_formal_sum(args.second, algebra))
        result = {"meet": lambda: f & h, "join": lambda: f | h, "pppsup": lambda: ppp_sup(f, h)}[args.operation]()
    _emit(jsonio.lattice_to_json(result), out)
    return 0


def cmd_hom(args, out, err) -> int:
    algebra = _algebra(args)
    data = _load_json(args.target)
    if "atom_images" in data:
        psi = hom_from_atom_images(algebra, data["atom_images"])
    elif "psi" in data:
        psi = {
            jsonio.element_from_json(algebra, item["element"]): tuple(as_fraction(x) for x in item["value"])
            for item in data["psi"]
        }
    else:
        raise FreeVLError('target file needs "atom_images" or "psi"')
    j = extend_hom(psi)
    report = {
        "dimension": j.target.dimension,
        "disjointness_additive": True,
        "psi_injective": j.psi_injective,
        "injective": j.injective,
        "span_dimension": j.span_dimension(),
        "atom_images": [[format_fraction(x) for x in v] for v in j.atom_images],
        "evaluations": [
            {"sum": text, "value": [format_fraction(x) for x in j(canonicalize(parse_formal_sum(text, algebra)))]}
            for text in args.eval or ()
        ],
    }
    _emit(report, out)
    return 0


def cmd_stone(args, out, err) -> int:
    algebra = _algebra(args)
    space = stone_space(algebra)
    if args.format == "dot":
        if args.function:
            raise UsageError("--function is only available with --format json")
        out.write(to_dot(space))
        if algebra.atom_count > 6:
            err.write("note: Hasse diagram omitted above 6 atoms\n")
        return 0
    doc = to_json(space)
    if args.function:
        f = canonicalize(parse_formal_sum(args.function, algebra))
        doc["function"] = to_simple_function(f, space).to_json()
    _emit(doc, out)
    return 0


def cmd_riesz(args, out, err) -> int:
    xi = FiniteFunctional.from_mapping(jsonio.function_from_json(_load_json(args.functional)).as_dict())
    mu = functional_to_measure(xi)
    indicators_ok = all(
        xi(SimpleFunction.indicator(xi.points, [p])) == mu([p]) for p in xi.points
    )
    report = {
        "positive": True,
        "measure": mu.to_json(),
        "total_mass": format_fraction(mu.total),
        "roundtrip": measure_to_functional(mu) == xi and indicators_ok,
    }
    if args.function:
        f = jsonio.function_from_json(_load_json(args.function))
        report["integral"] = {"functional": format_fraction(xi(f)), "measure": format_fraction(integrate(f, mu))}
    if args.with_:
        nu = FiniteFunctional.from_mapping(jsonio.function_from_json(_load_json(args.with_)).as_dict())
        report["al_norm"] = al_norm_check(xi, nu).to_json()
    _emit(report, out)
    return 0


def cmd_urysohn(args, out, err) -> int:
    h = jsonio.function_from_json(_load_json(args.h))
    _emit(urysohn_truncation(h).to_json(), out)
    return 0


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # "-1*a1" and "-(g1 | g2)" are sums, not options
        self._negative_number_matcher = re.compile(r"^-[\d(!]")

    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    alg = argparse.ArgumentParser(add_help=False)
    group = alg.add_mutually_exclusive_group()
    group.add_argument("--generators", type=int, help=f"free algebra on N generators (default {DEFAULT_GENERATORS})")
    group.add_argument("--atoms", type=int, help="plain algebra with N atoms named a1..aN")
    group.add_argument("--algebra", metavar="FILE", help='algebra JSON {"atoms": n, "generators": [...]}')

    parser = _Parser(prog="freevl", description="Free vector lattices over finite Boolean algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("algebra", help="describe a free Boolean algebra")
    p.add_argument("action", choices=["new"])
    p.add_argument("--generators", type=int, required=True)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("canon", parents=[alg], help="canonical atom valuation of a sum")
    p.add_argument("sum")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("cone", parents=[alg], help="cone membership plus certificate or witness")
    p.add_argument("sum")
    p.add_argument("--mode", choices=["quantifier", "atoms", "both"], default="both")
    p.set_defaults(func=cmd_cone)

    p = sub.add_parser("op", parents=[alg], help="lattice operations on classes of sums")
    p.add_argument("operation", choices=["abs", "meet", "join", "pppsup"])
    p.add_argument("first")
    p.add_argument("second", nargs="?")
    p.set_defaults(func=cmd_op)

    p = sub.add_parser("hom", parents=[alg], help="verify and extend a map into Q^m")
    p.add_argument("--target", required=True, metavar="FILE")
    p.add_argument("--eval", action="append", metavar="SUM")
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("stone", parents=[alg], help="export the Stone space")
    p.add_argument("action", choices=["export"])
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.add_argument("--function", metavar="SUM", help="also export the simple function of this sum (json only)")
    p.set_defaults(func=cmd_stone)

    p = sub.add_parser("riesz", help="functional/measure correspondence on a finite space")
    p.add_argument("action", choices=["check"])
    p.add_argument("--functional", required=True, metavar="FILE")
    p.add_argument("--with", dest="with_", metavar="FILE", help="second positive functional for the norm identity")
    p.add_argument("--function", metavar="FILE", help="simple function to integrate both ways")
    p.set_defaults(func=cmd_riesz)

    p = sub.add_parser("urysohn", help="apply (3h - 1)^+ & 1")
    p.add_argument("--h", required=True, metavar="FILE")
    p.set_defaults(func=cmd_urysohn)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args, out, err)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except (FreeVLError, ValueError, KeyError, TypeError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
