"""
Command-line interface for steinbraid.

Provides a braid calculator (nf, eq), the relator catalog export (catalog) and
the verification suites (verify).

Exit codes:
    0  success / equal / every check passed
    1  distinct words / at least one check failed
    2  malformed input or invalid configuration
    3  the two word-problem engines disagree (eq --engine both)
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from .braid import parse_braid
from .config import EngineChoice, OutputFormat, RunConfig
from .errors import ConfigError, SteinbraidError
from .garside import equal as garside_equal
from .garside import normal_form
from .handles import oracle_equal
from .homs import STRANDS
from .rings import parse_ring
from .steinberg import relator_catalog
from .suites import SELECTORS, run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_DISAGREEMENT = 3


def _config(args) -> RunConfig:
    return RunConfig(
        strands=args.strands,
        ring=parse_ring(args.ring) if args.ring else None,
        samples=args.samples,
        seed=args.seed,
        engine=EngineChoice(args.engine),
        output_format=OutputFormat(args.format),
        extended_rings=args.extended_rings,
    ).validate()


def _emit(text: str, output: Optional[str] = None):
    if output:
        with open(output, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def nf_command(args) -> int:
    """Print the Garside normal form of a word."""
    config = _config(args)
    form = normal_form(parse_braid(args.word, config.strands))
    if config.output_format == OutputFormat.STRUCTURED:
        record = {
            "infimum": form.infimum,
            "factors": [str(factor) for factor in form.factors],
        }
        _emit(json.dumps(record) + "\n", args.output)
    else:
        _emit(str(form) + "\n", args.output)
    return EXIT_OK


def eq_command(args) -> int:
    """Decide whether two words are the same braid."""
    config = _config(args)
    u = parse_braid(args.left, config.strands)
    v = parse_braid(args.right, config.strands)

    if config.engine == EngineChoice.GARSIDE:
        verdict = garside_equal(u, v)
    elif config.engine == EngineChoice.ORACLE:
        verdict = oracle_equal(u, v, config.step_budget)
    else:
        verdict = garside_equal(u, v)
        if oracle_equal(u, v, config.step_budget) != verdict:
            logger.warning("engines disagree on %s = %s", u, v)
            print("Error: engines disagree", file=sys.stderr)
            return EXIT_DISAGREEMENT

    print("equal" if verdict else "distinct")
    return EXIT_OK if verdict else EXIT_FAILED


def catalog_command(args) -> int:
    """Print the relator catalog."""
    catalog = relator_catalog(args.kind)
    if args.format == OutputFormat.STRUCTURED.value:
        text = "".join(json.dumps(relator.to_dict()) + "\n" for relator in catalog)
    else:
        text = "".join(
            f"{relator.id:<14} [{relator.lhs}] = {relator.rhs}\n" for relator in catalog
        )
    _emit(text, args.output)
    return EXIT_OK


def verify_command(args) -> int:
    """Run verification suites and print the report."""
    config = _config(args)
    if config.strands != STRANDS:
        raise ConfigError(f"verify runs in B{STRANDS}; --strands {config.strands} is not supported")
    report = run_suites(args.suite, config)
    if args.output:
        report.save(args.output, config.output_format.value)
    else:
        sys.stdout.write(report.render(config.output_format.value))

    summary = report.summary()
    logger.info("%d checks, %d failed", summary["total"], summary["failed"])
    return EXIT_OK if report.all_passed else EXIT_FAILED


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--strands",
        type=int,
        default=6,
        help="Number of strands for nf/eq; verify only runs in B6 (default: 6)",
    )
    common.add_argument("--ring", help="Ring: int or zmod:<m> (default: Z, plus Z/5 for appendix)")
    common.add_argument(
        "--samples", type=int, default=100, help="Random samples per check (default: 100)"
    )
    common.add_argument("--seed", type=int, default=0, help="Random seed (default: 0)")
    common.add_argument(
        "--engine",
        choices=[choice.value for choice in EngineChoice],
        default=EngineChoice.GARSIDE.value,
        help="Word-problem engine (default: garside)",
    )
    common.add_argument(
        "--format",
        choices=[fmt.value for fmt in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Output format (default: text)",
    )
    common.add_argument("--output", help="Write output to this file instead of stdout")
    common.add_argument(
        "--extended-rings",
        action="store_true",
        help="Run the appendix suite over Z, Z/2, Z/3, Z/4, Z/5 and Z/12",
    )
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logging"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="steinbraid",
        description="steinbraid - braid groups, Sp4(Z) and the C2 Steinberg group",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Garside normal form
  steinbraid nf "s1 s2 s1"

  # Word problem with both engines
  steinbraid eq "s1 s2 s1" "s2 s1 s2" --engine both

  # Run every verification suite
  steinbraid verify all --seed 42

  # One suite over Z/12, as JSON lines
  steinbraid verify appendix --ring zmod:12 --format structured
        """,
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    nf_parser = subparsers.add_parser("nf", parents=[common], help="Print a Garside normal form")
    nf_parser.add_argument("word", help='Braid word, e.g. "s1 s2^-1 s3" or "1 -2 3"')
    nf_parser.set_defaults(func=nf_command)

    eq_parser = subparsers.add_parser("eq", parents=[common], help="Compare two braid words")
    eq_parser.add_argument("left", help="First braid word")
    eq_parser.add_argument("right", help="Second braid word")
    eq_parser.add_argument(
        "--oracle",
        action="store_const",
        const=EngineChoice.ORACLE.value,
        dest="engine",
        help="Use handle reduction (same as --engine oracle)",
    )
    eq_parser.set_defaults(func=eq_command)

    verify_parser = subparsers.add_parser(
        "verify", parents=[common], help="Run verification suites"
    )
    verify_parser.add_argument(
        "suite", nargs="?", default="all", choices=SELECTORS, help="Suite to run (default: all)"
    )
    verify_parser.set_defaults(func=verify_command)

    catalog_parser = subparsers.add_parser(
        "catalog", parents=[common], help="Print the relator catalog"
    )
    catalog_parser.add_argument(
        "--kind",
        choices=["unparametrized", "parametrized"],
        default="unparametrized",
        help="Which catalog (default: unparametrized)",
    )
    catalog_parser.set_defaults(func=catalog_command)

    return parser


def _configure_logging(verbosity: int):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s"
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_USAGE

    _configure_logging(args.verbose)
    try:
        return args.func(args)
    except SteinbraidError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
