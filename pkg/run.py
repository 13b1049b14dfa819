#!/usr/bin/env python3
"""
Clifford Subalgebras - Command Line
Exit status: 0 verified, 1 verification failure, 2 usage error
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from config import Config
from src.classify import (
    classify,
    lemma_vectors,
    sampling_oracle,
    verify_lemma,
    verify_sign_patterns,
    verify_theorem,
)
from src.clifford import build_table
from src.closure import derive_conditions
from src.errors import BoundsError, CliffordError, ScalarDomainError
from src.fixtures import G3_PRODUCT_TABLE
from src.scalars import GaussianRational
from src.subspace import CanonicalBasis, canonical_bases, dimension_exponent
from src.theorem import FAMILY_NAMES
from utils.logger import log_summary, setup_logging
from utils.render import (
    classification_json,
    dump_json,
    render_bases,
    render_classification,
    render_conditions,
    render_oracle,
    render_theorem,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Arguments parsed but out of range"""


def emit(lines: List[str]):
    for line in lines:
        print(line)


def cmd_table(args, config: Config) -> int:
    table = build_table(args.n)
    if args.check_paper:
        if args.n != 3:
            raise UsageError("--check-paper compares against the g(3) table; use --n 3")
        mismatches = table.mismatches(G3_PRODUCT_TABLE)
        total = len(G3_PRODUCT_TABLE) ** 2
        print(f"{total - len(mismatches)}/{total} cells match")
        for row, col, got, want in mismatches:
            print(f"  {row}*{col}: computed {got}, expected {want}")
        return EXIT_FAILED if mismatches else EXIT_OK
    if args.format == "json":
        print(dump_json(table.to_json()))
    else:
        print(table.render())
    return EXIT_OK


def cmd_bases(args, config: Config) -> int:
    if args.dim < 2 or dimension_exponent(args.dim) is None:
        raise UsageError(f"--dim must be a power of two >= 2, got {args.dim}")
    emit(render_bases(canonical_bases(args.dim)))
    return EXIT_OK


def _basis(args, config: Config) -> CanonicalBasis:
    if not 1 <= args.n <= config.classify.max_n:
        raise UsageError(f"--n must be in 1..{config.classify.max_n}")
    N = 1 << args.n
    if not 1 <= args.basis <= N:
        raise UsageError(f"--basis must be in 1..{N} for n = {args.n}")
    return CanonicalBasis(args.basis, N)


def cmd_conditions(args, config: Config) -> int:
    cs = derive_conditions(_basis(args, config))
    if args.json:
        print(dump_json(cs.to_json()))
    else:
        emit(render_conditions(cs))
    return EXIT_OK


def cmd_classify(args, config: Config) -> int:
    if args.sequential:
        config.classify.parallel = False
    result = classify(args.n, config)
    counts = result.summary
    log_summary(
        result.n,
        counts["one_parameter_families"],
        counts["isolated"],
        counts["contradictions"],
        counts["unresolved"],
    )
    text = dump_json(classification_json(result)) if args.json else "\n".join(render_classification(result))
    if args.out:
        try:
            Path(args.out).write_text(text + "\n")
        except OSError as e:
            raise UsageError(f"cannot write --out {args.out}: {e.strerror or e}")
        print(result.summary_line())
    else:
        print(text)
    return EXIT_OK if result.verified else EXIT_FAILED


def cmd_verify(args, config: Config) -> int:
    names = FAMILY_NAMES if args.family == "all" else (args.family,)
    classification = classify(3, config)
    report = verify_theorem(names, classification)
    emit(render_theorem(report))
    passed = report.passed
    if args.family == "all":
        patterns = verify_sign_patterns()
        closed_symbolic = sum(patterns.symbolic.values())
        closed_zero = sum(patterns.at_zero.values())
        closed_isolated = sum(patterns.isolated.values())
        print(
            f"sign patterns: {closed_symbolic}/{len(patterns.symbolic)} closed in a, "
            f"{closed_zero}/{len(patterns.at_zero)} closed at a = 0, "
            f"{closed_isolated}/{len(patterns.isolated)} isolated closed"
        )
        passed = passed and patterns.passed
    return EXIT_OK if passed else EXIT_FAILED


def cmd_oracle(args, config: Config) -> int:
    cb = _basis(args, config)
    trials = args.trials if args.trials is not None else config.oracle.trials
    seed = args.seed if args.seed is not None else config.oracle.seed
    if trials < 1:
        raise UsageError("--trials must be >= 1")
    report = sampling_oracle(cb.m, trials, seed, n=args.n, config=config.oracle)
    if args.json:
        print(dump_json(report.to_json()))
    else:
        emit(render_oracle(report))
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_lemma(args, config: Config) -> int:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    try:
        point = GaussianRational.parse(args.point)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot read --point {args.point!r} as a Gaussian rational")
    try:
        lemma_vectors(args.family, point)
    except ScalarDomainError as e:
        raise UsageError(str(e))
    closed = verify_lemma(args.family, args.k, point)
    status = "closed" if closed else "NOT CLOSED"
    print(f"{args.family} at a = {point} in g({3 + args.k}): {status}")
    return EXIT_OK if closed else EXIT_FAILED


COMMANDS = {
    "table": cmd_table,
    "bases": cmd_bases,
    "conditions": cmd_conditions,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "lemma": cmd_lemma,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="run.py",
        description="Exact classification of (2^n - 1)-dimensional subalgebras of g(n, C)",
    )
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        default=None,
        help="Logging level (default from CLIFFSUB_LOG_LEVEL)"
    )
    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="Print the product table of g(n)")
    table.add_argument("--n", type=int, default=3)
    table.add_argument("--format", choices=["text", "json"], default="text")
    table.add_argument("--check-paper", action="store_true", help="Compare g(3) with the reference table")

    bases = sub.add_parser("bases", help="List canonical bases of the (N-1)-dimensional subspaces")
    bases.add_argument("--dim", type=int, default=8)

    conditions = sub.add_parser("conditions", help="Print the closure conditions of one canonical basis")
    conditions.add_argument("--basis", type=int, required=True)
    conditions.add_argument("--n", type=int, default=3)
    conditions.add_argument("--json", action="store_true")

    cls = sub.add_parser("classify", help="Classify all subalgebras of codimension one")
    cls.add_argument("--n", type=int, default=3)
    cls.add_argument("--json", action="store_true")
    cls.add_argument("--out", default=None, help="Write the full result to this file")
    cls.add_argument("--sequential", action="store_true", help="Solve bases one after another")

    verify = sub.add_parser("verify", help="Verify the known subalgebras h1..h8")
    verify.add_argument("--family", choices=list(FAMILY_NAMES) + ["all"], default="all")

    oracle = sub.add_parser("oracle", help="Cross-check conditions against direct closure by sampling")
    oracle.add_argument("--basis", type=int, required=True)
    oracle.add_argument("--trials", type=int, default=None)
    oracle.add_argument("--seed", type=int, default=None)
    oracle.add_argument("--n", type=int, default=3)
    oracle.add_argument("--json", action="store_true")

    lemma = sub.add_parser("lemma", help="Check closure after embedding into g(3 + k)")
    lemma.add_argument("--family", choices=list(FAMILY_NAMES), required=True)
    lemma.add_argument("--k", type=int, default=1)
    lemma.add_argument("--point", default="0", help="Value of the parameter a, e.g. 0 or 5/4*I")

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    config = Config.from_env()
    level = "DEBUG" if args.debug else (args.log_level or config.log.level)
    setup_logging(log_level=level, log_to_file=config.log.log_to_file)

    try:
        return COMMANDS[args.command](args, config)
    except (UsageError, BoundsError) as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except CliffordError as e:
        logger.error(f"{args.command} failed: {e}")
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
