"""Command-line interface.

Exit codes: 0 on success, 1 on a domain failure (invalid solution,
failed verification, division by zero), 2 on usage or parse errors.
Results go to stdout, diagnostics to stderr; ``--json`` switches every
command to a machine-readable report.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cyclo import cyclotomic
from .documents import (
    DocumentError,
    format_rational,
    load_solution_spec,
    load_structure_data,
    structure_data_to_dict,
)
from .expressions import ParseError, eval_expr, format_expr, parse_expr
from .poly import quantum_integer
from .solutions import (
    NotASolution,
    commutativity_violations,
    synthesize,
    verify_functional_equation,
)
from .structure import TooFewPrimes, closed_form, decompose


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfe",
        description="Exact arithmetic for sequences of rational functions "
        "multiplying like quantum integers.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit a machine-readable JSON report"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cyclo", parents=[common], help="print the K-th cyclotomic polynomial")
    p.add_argument("k", type=_positive_int, metavar="K")
    p.set_defaults(handler=_cmd_cyclo)

    p = sub.add_parser("qint", parents=[common], help="print the quantum integer [N] at q^R")
    p.add_argument("n", type=_positive_int, metavar="N")
    p.add_argument("r", type=_positive_int, metavar="R", nargs="?", default=1)
    p.set_defaults(handler=_cmd_qint)

    p = sub.add_parser("check", parents=[common], help="check the commutativity condition of a spec")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("synth", parents=[common], help="synthesize the N-th term of a spec")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("n", type=_positive_int, metavar="N")
    p.set_defaults(handler=_cmd_synth)

    p = sub.add_parser("verify", parents=[common], help="verify the functional equation at (M, N)")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.add_argument("m", type=_positive_int, metavar="M")
    p.add_argument("n", type=_positive_int, metavar="N")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("decompose", parents=[common], help="recover the structure data of a spec")
    p.add_argument("--spec", required=True, metavar="FILE")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser(
        "closed-form", parents=[common], help="evaluate structure data at N"
    )
    p.add_argument("--structure", required=True, metavar="FILE")
    p.add_argument("n", type=_positive_int, metavar="N")
    p.set_defaults(handler=_cmd_closed_form)

    p = sub.add_parser(
        "standard-form", parents=[common], help="normal form scale * q^e * u/v of an expression"
    )
    p.add_argument("expr", metavar="EXPR")
    p.set_defaults(handler=_cmd_standard_form)

    return parser


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _cmd_cyclo(args: argparse.Namespace) -> int:
    text = format_expr(cyclotomic(args.k))
    _emit(args, text, {"expr": text})
    return 0


def _cmd_qint(args: argparse.Namespace) -> int:
    text = format_expr(quantum_integer(args.n, args.r))
    _emit(args, text, {"expr": text})
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    spec = load_solution_spec(args.spec)
    violations = commutativity_violations(spec)
    if args.json:
        print(json.dumps({"commutes": not violations, "violations": [list(v) for v in violations]}))
    elif violations:
        print("violations: " + " ".join(f"({a}, {b})" for a, b in violations))
    else:
        print("ok")
    return 1 if violations else 0


def _cmd_synth(args: argparse.Namespace) -> int:
    spec = load_solution_spec(args.spec)
    text = format_expr(synthesize(spec, args.n))
    _emit(args, text, {"expr": text})
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    spec = load_solution_spec(args.spec)
    holds = verify_functional_equation(spec, args.m, args.n)
    _emit(args, "ok" if holds else "violated", {"holds": holds})
    return 0 if holds else 1


def _cmd_decompose(args: argparse.Namespace) -> int:
    spec = load_solution_spec(args.spec)
    sd = decompose(spec)
    doc = structure_data_to_dict(sd)
    if args.json:
        print(json.dumps(doc))
    else:
        print("primes: " + ", ".join(str(p) for p in sd.primes))
        for p in sd.primes:
            print(f"lambda({p}) = {format_rational(sd.scales[p])}")
        print(f"t0 = {format_rational(sd.shift)}")
        for r, t in sorted(sd.exponents.items()):
            print(f"term(r={r}) = {t}")
    return 0


def _cmd_closed_form(args: argparse.Namespace) -> int:
    sd = load_structure_data(args.structure)
    text = format_expr(closed_form(sd, args.n))
    _emit(args, text, {"expr": text})
    return 0


def _cmd_standard_form(args: argparse.Namespace) -> int:
    value = eval_expr(parse_expr(args.expr))
    form = value.standard_form()
    payload = {
        "lambda": format_rational(form.scale),
        "e": form.shift,
        "u": format_expr(form.num),
        "v": format_expr(form.den),
    }
    text = "\n".join(
        (
            f"lambda = {payload['lambda']}",
            f"e = {payload['e']}",
            f"u = {payload['u']}",
            f"v = {payload['v']}",
        )
    )
    _emit(args, text, payload)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ParseError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (NotASolution, TooFewPrimes, ZeroDivisionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
