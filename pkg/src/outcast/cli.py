"""Command-line interface.

Exit codes: 0 pass, 1 semantic failure (not Outcast, not representable,
mismatch, census disagreement), 2 bad input, 3 a synthesized order failed
its own round-trip check.
"""

from __future__ import annotations

import argparse
import json
import sys

from outcast.choice import check_outcast
from outcast.errors import NotRepresentable, OutcastError, UniverseTooLarge
from outcast.formats import dumps_choice, dumps_order, read_choice, read_order
from outcast.oracle import random_order, theorem_census
from outcast.order import induced_choice
from outcast.synthesis import synthesize_order, verify_representation

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _input_error(exc: Exception) -> int:
    print(f"error: {exc}", file=sys.stderr)
    return EXIT_INPUT


def cmd_check(args) -> int:
    try:
        f = read_choice(args.path)
    except (OSError, OutcastError) as exc:
        return _input_error(exc)
    witness = check_outcast(f)
    if witness is None:
        print("OUTCAST")
        return EXIT_OK
    u = f.universe
    print("NOT OUTCAST")
    print(f"  A = {u.format(witness.a)}  f(A) = {u.format(f(witness.a))}")
    print(f"  B = {u.format(witness.b)}  f(B) = {u.format(f(witness.b))}")
    return EXIT_FAIL


def cmd_synthesize(args) -> int:
    try:
        f = read_choice(args.path)
    except (OSError, OutcastError) as exc:
        return _input_error(exc)
    witness = check_outcast(f)
    if witness is not None:
        u = f.universe
        print(f"NOT OUTCAST: A = {u.format(witness.a)}, B = {u.format(witness.b)}", file=sys.stderr)
        return EXIT_FAIL
    u = f.universe
    try:
        trace = synthesize_order(f)
    except NotRepresentable as exc:
        cycle = " < ".join(u.format(s) for s in exc.cycle + exc.cycle[:1])
        print(f"OUTCAST but no hyper-order induces it; forced cycle: {cycle}", file=sys.stderr)
        return EXIT_FAIL
    mismatch = verify_representation(f, trace.order)
    if mismatch is not None:
        print(
            f"internal error: synthesized order does not reproduce f at {u.format(mismatch.subset)}",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    _emit(dumps_order(trace.order), args.out)
    return EXIT_OK


def cmd_induce(args) -> int:
    try:
        order = read_order(args.path)
    except (OSError, OutcastError) as exc:
        return _input_error(exc)
    _emit(dumps_choice(induced_choice(order)), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        f = read_choice(args.fn_path)
        order = read_order(args.order_path)
    except (OSError, OutcastError) as exc:
        return _input_error(exc)
    if f.universe != order.universe:
        return _input_error(
            OutcastError(f"universe mismatch: {list(f.universe.names)} vs {list(order.universe.names)}")
        )
    mismatch = verify_representation(f, order)
    if mismatch is None:
        print("REPRESENTED")
        return EXIT_OK
    u = f.universe
    print(
        f"MISMATCH at {u.format(mismatch.subset)}: "
        f"f gives {u.format(mismatch.expected)}, order gives {u.format(mismatch.induced)}"
    )
    return EXIT_FAIL


def cmd_census(args) -> int:
    try:
        report = theorem_census(args.n)
    except (UniverseTooLarge, ValueError) as exc:
        return _input_error(exc)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK if report.directions_hold else EXIT_FAIL


def cmd_sample(args) -> int:
    """Check that randomly drawn orders induce Outcast functions."""
    try:
        orders = [random_order(args.n, args.seed + i) for i in range(args.count)]
    except (UniverseTooLarge, ValueError) as exc:
        return _input_error(exc)
    failures = 0
    for i, order in enumerate(orders):
        witness = check_outcast(induced_choice(order))
        if witness is not None:
            failures += 1
            print(f"seed {args.seed + i}: induced function violates Outcast at {witness}")
    print(json.dumps({"n": args.n, "seed": args.seed, "count": args.count, "failures": failures}))
    return EXIT_OK if failures == 0 else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="outcast", description="Outcast choice functions and the hyper-orders that induce them."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="test a choice-function file for the Outcast property")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("synthesize", help="build an order file inducing the given choice function")
    p.add_argument("path")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("induce", help="write the choice function induced by an order file")
    p.add_argument("path")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("verify", help="check that an order induces a choice function")
    p.add_argument("fn_path")
    p.add_argument("order_path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("census", help="exhaustively compare Outcast and induced functions")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("sample", help="check random orders induce Outcast functions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1000)
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    return args.func(args)


def run() -> None:
    sys.exit(main())
