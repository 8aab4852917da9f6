"""Command-line front end.

Exit codes: 0 success, 2 unreadable or invalid matrix file, 3 singular
matrix, 4 zero pivot (or zero divisor alpha) in a mode without symbolic
rescue, 5 pole at t = 0, 1 unexpected failure.

When --mode is not given, commands run EXACT first and retry once in
SYMBOLIC mode on a zero pivot/alpha, with a note on stderr; an explicit
--mode disables that fallback.
"""

from __future__ import annotations

import argparse
import csv
import sys
import time
from fractions import Fraction

from .factorization import ZeroPivotError, determinant
from .inversion import invert
from .io import MatrixFormatError, dump_comrade, dump_dense, load_comrade
from .matrix import (DenseMatrix, SingularMatrixError, comrade_times_dense,
                     example33, random_comrade, to_dense)
from .oracle import dense_invert
from .scalars import PoleAtZeroError, ScalarMode, format_rational

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_PARSE = 2
EXIT_SINGULAR = 3
EXIT_ZERO_PIVOT = 4
EXIT_POLE = 5

#: n above which the exact oracle is skipped in `bench` (residual instead).
ORACLE_LIMIT = 200


def _mode_arg(parser):
    parser.add_argument("--mode", choices=[m.value for m in ScalarMode], default=None,
                        help="arithmetic mode (default: exact with one symbolic retry)")


def _run(compute, mode_name: str | None):
    """Apply the mode policy: explicit mode, or EXACT with one SYMBOLIC retry."""
    if mode_name is not None:
        return compute(ScalarMode(mode_name))
    try:
        return compute(ScalarMode.EXACT)
    except ZeroPivotError as exc:
        print(f"note: {exc}", file=sys.stderr)
        return compute(ScalarMode.SYMBOLIC)


def _format_scalar(value) -> str:
    return repr(value) if isinstance(value, float) else format_rational(value)


def _cmd_det(args) -> int:
    C = load_comrade(args.file)
    det = _run(lambda mode: determinant(C, mode), args.mode)
    print(_format_scalar(det))
    return EXIT_OK


def _cmd_inv(args) -> int:
    C = load_comrade(args.file)
    result = _run(lambda mode: invert(C, mode), args.mode)
    dump_dense(result.inverse, args.output)
    print(f"determinant: {_format_scalar(result.determinant)}")
    if result.substitutions:
        log = ", ".join(f"{kind}[{index}]" for kind, index in result.substitutions)
    else:
        log = "none"
    print(f"substitutions: {log}")
    return EXIT_OK


def _cmd_check(args) -> int:
    C = load_comrade(args.file)
    result = _run(lambda mode: invert(C, mode), args.mode)
    product = comrade_times_dense(C, result.inverse)
    residual = (product - DenseMatrix.identity(C.n)).inf_norm()
    print(_format_scalar(residual))
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.family == "example33":
        C = example33(args.n)
    else:
        C = random_comrade(args.n, args.seed, args.zero_pivot_bias)
    dump_comrade(C, args.output)
    return EXIT_OK


def _bench_epsilon(C, result, mode: ScalarMode):
    """Accuracy column: vs the exact oracle up to ORACLE_LIMIT, residual
    norm above it."""
    if C.n <= ORACLE_LIMIT:
        exact = dense_invert(to_dense(C))
        if mode is ScalarMode.FLOAT:
            return (exact.as_floats() - result.inverse).inf_norm()
        return (exact - result.inverse).inf_norm()
    identity = DenseMatrix.identity(C.n)
    if mode is ScalarMode.FLOAT:
        identity = identity.as_floats()
    return (comrade_times_dense(C, result.inverse) - identity).inf_norm()


def _cmd_bench(args) -> int:
    mode = ScalarMode(args.mode) if args.mode else ScalarMode.FLOAT
    sizes = []
    for chunk in args.sizes.split(","):
        try:
            sizes.append(int(chunk))
        except ValueError:
            raise SystemExit(f"bad --sizes entry {chunk!r}")
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(["n", "mode", "op_count", "wall_time_seconds", "epsilon"])
        for n in sizes:
            if args.family == "example33":
                C = example33(n)
            else:
                C = random_comrade(n, args.seed, args.zero_pivot_bias)
            start = time.perf_counter()
            result = invert(C, mode, parallel_columns=args.parallel_columns)
            wall = time.perf_counter() - start
            epsilon = _bench_epsilon(C, result, mode)
            writer.writerow([n, mode.value, result.op_count,
                             f"{wall:.6f}", _format_scalar(epsilon)])
    finally:
        if args.output:
            out.close()
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="comrade",
        description="Determinants and inverses of comrade matrices "
                    "(tridiagonal plus a dense last row).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="print the determinant of a comrade matrix file")
    p.add_argument("file")
    _mode_arg(p)
    p.set_defaults(handler=_cmd_det)

    p = sub.add_parser("inv", help="write the inverse as a dense matrix file")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    _mode_arg(p)
    p.set_defaults(handler=_cmd_inv)

    p = sub.add_parser("check", help="print the inf-norm of C*C^-1 - I "
                                     "(exactly 0 on the exact paths)")
    p.add_argument("file")
    _mode_arg(p)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("gen", help="generate a matrix file from a built-in family")
    p.add_argument("--family", choices=["example33", "random"], required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zero-pivot-bias", type=float, default=0.0)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("bench", help="time inversions and write a CSV report")
    p.add_argument("--family", choices=["example33", "random"], required=True)
    p.add_argument("--sizes", required=True, help="comma-separated, e.g. 50,100,500")
    p.add_argument("--mode", choices=[m.value for m in ScalarMode], default=None,
                   help="arithmetic mode (default: float)")
    p.add_argument("--parallel-columns", action="store_true",
                   help="solve the last two columns on two threads")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--zero-pivot-bias", type=float, default=0.0)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(handler=_cmd_bench)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SingularMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except ZeroPivotError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO_PIVOT
    except PoleAtZeroError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_POLE


if __name__ == "__main__":
    sys.exit(main())
