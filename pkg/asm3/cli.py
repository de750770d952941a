import argparse
import logging
import sys
from typing import List, Optional, Sequence

from asm3.configs import DeepVerifyConfig, OracleConfig, VerifyConfig
from asm3.core.asm_types import ASMError, OrderTooLarge
from asm3.core.constants import FORMULA_WEIGHT
from asm3.genfun import generating_function, normalized, row
from asm3.kernel import f_closed, f_solve_linear
from asm3.oracle import MODE_BRUTEFORCE, MODE_DP, MODES, enumerate_asms
from asm3.recurrences import a3_total
from asm3.verify import SUITE_ALL, SUITE_NAMES, first_failure, run_suites
from utils.records import (FORMAT_CSV, FORMATS, SCHEMA_POLY, SCHEMA_TABLE, SCHEMA_TOTALS, SCHEMA_VERIFY, OutputRecord,
                           emit, poly_record, table_record, totals_record)

logger = logging.getLogger("asm3.cli")

METHOD_CLOSED = "closed"
METHOD_LINEAR = "linear"

EXIT_OK = 0
EXIT_FAILURE = 1


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return n


def _oracle_config(args) -> OracleConfig:
    return OracleConfig(workers=args.workers)


def cmd_table(args, parser) -> int:
    records: List[OutputRecord] = []
    if args.x == FORMULA_WEIGHT:
        for n in range(1, args.n_max + 1):
            records += [table_record(n, r, c) for r, c in enumerate(row(n).counts, start=1)]
    else:
        config = _oracle_config(args)
        limit = config.bruteforce_max_order if args.mode == MODE_BRUTEFORCE else config.dp_max_order
        if args.n_max > limit:
            parser.error(f"x={args.x} uses the {args.mode} oracle, which is limited to n <= {limit}")
        for n in range(1, args.n_max + 1):
            counts = enumerate_asms(n, args.x, args.mode, config).counts
            records += [table_record(n, r, c) for r, c in enumerate(counts, start=1)]
    emit(records, SCHEMA_TABLE, args.format, sys.stdout)
    return EXIT_OK


def cmd_genfun(args, parser) -> int:
    poly = normalized(args.n) if args.normalized else generating_function(args.n)
    emit([poly_record(d, c) for d, c in enumerate(poly.coefficients)], SCHEMA_POLY, args.format, sys.stdout)
    return EXIT_OK


def cmd_fpoly(args, parser) -> int:
    if args.n < 2:
        parser.error(f"f-poly needs --n >= 2, got {args.n}")
    f = f_closed(args.n) if args.method == METHOD_CLOSED else f_solve_linear(args.n)
    emit([poly_record(m, c) for m, c in f.items()], SCHEMA_POLY, args.format, sys.stdout)
    return EXIT_OK


def cmd_totals(args, parser) -> int:
    emit([totals_record(n, a3_total(n)) for n in range(1, args.n_max + 1)], SCHEMA_TOTALS, args.format, sys.stdout)
    return EXIT_OK


def cmd_oracle(args, parser) -> int:
    try:
        result = enumerate_asms(args.n, args.x, args.mode, _oracle_config(args))
    except OrderTooLarge as e:
        parser.error(str(e))
    records = [table_record(args.n, r, c) for r, c in enumerate(result.counts, start=1)]
    emit(records, SCHEMA_TABLE, args.format, sys.stdout)
    return EXIT_OK


def cmd_verify(args, parser) -> int:
    config = DeepVerifyConfig() if args.deep else VerifyConfig()
    if args.nu_max is not None:
        config.nu_max = args.nu_max
    if args.n_max is not None:
        limit = config.oracle_config.bruteforce_max_order
        if args.n_max > limit:
            parser.error(f"--n-max bounds the brute force oracle, which is limited to n <= {limit}")
        config.oracle_n_max = args.n_max
        config.dp_n_max = max(config.dp_n_max, args.n_max)
    config.workers = args.workers

    reports = run_suites(args.suite, config)
    records = [record for report in reports for record in report.records]
    emit(records, SCHEMA_VERIFY, args.format, sys.stdout)

    failure = first_failure(reports)
    if failure is not None:
        suite, case, _, detail = failure.values
        print(f"FAIL {suite} {case}: {detail}", file=sys.stderr)
        return EXIT_FAILURE
    logger.info(f"all {len(records)} checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default=FORMAT_CSV, choices=FORMATS)  # csv rows or one json array
    common.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"])

    parser = argparse.ArgumentParser(prog="asm3", description="Exact 3-enumerated refined ASM counts")
    sub = parser.add_subparsers(dest="command")
    sub.required = True

    p = sub.add_parser("table", parents=[common], help="A(n,r;x) for every n <= n-max")
    p.add_argument("--n-max", required=True, type=_positive)
    p.add_argument("--x", default=FORMULA_WEIGHT, type=_positive)  # any x other than 3 goes through the oracle
    p.add_argument("--mode", default=MODE_DP, choices=MODES)
    p.add_argument("--workers", default=1, type=_positive)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("genfun", parents=[common], help="coefficients of G_n(t)")
    p.add_argument("--n", required=True, type=_positive)
    p.add_argument("--normalized", action="store_true")  # divide by A(n;3)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("f-poly", parents=[common], help="frequency listing of f_n(u)")
    p.add_argument("--n", required=True, type=_positive)
    p.add_argument("--method", default=METHOD_CLOSED, choices=[METHOD_CLOSED, METHOD_LINEAR])
    p.set_defaults(func=cmd_fpoly)

    p = sub.add_parser("totals", parents=[common], help="A(n;3) for every n <= n-max")
    p.add_argument("--n-max", required=True, type=_positive)
    p.set_defaults(func=cmd_totals)

    p = sub.add_parser("oracle", parents=[common], help="weighted enumeration of ASMs of order n")
    p.add_argument("--n", required=True, type=_positive)
    p.add_argument("--x", default=FORMULA_WEIGHT, type=_positive)
    p.add_argument("--mode", default=MODE_DP, choices=MODES)
    p.add_argument("--workers", default=1, type=_positive)  # processes for the dp, one per first-row column
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", default=SUITE_ALL, choices=SUITE_NAMES)
    p.add_argument("--nu-max", default=None, type=int)
    p.add_argument("--n-max", default=None, type=_positive)  # brute force bound of the oracle suite
    p.add_argument("--workers", default=1, type=_positive)  # processes, one per suite
    p.add_argument("--deep", action="store_true")  # start from DeepVerifyConfig bounds
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "nu_max", None) is not None and args.nu_max < 0:
        parser.error(f"--nu-max must be nonnegative, got {args.nu_max}")

    logging.getLogger("asm3").setLevel(args.log_level)
    for k, v in sorted(vars(args).items()):
        if k != "func":
            logger.info(f"{k}: {v}")

    try:
        return args.func(args, parser)
    except ASMError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
