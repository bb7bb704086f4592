"""Command line interface for the ppd recogniser."""
from __future__ import annotations

from argparse import ArgumentParser, Namespace
from fractions import Fraction
from pathlib import Path
from typing import NoReturn, Optional
import json
import logging
import sys

from .classical_groups import (
    Family,
    GroupCase,
    GroupInput,
    Level,
    block_triangular_group,
    extension_field_group,
    monomial_group,
    standard_group,
    subfield_scalar_group,
)
from .config import DEFAULT_CONFIG_NAMES, RecognizerConfig, discover_config
from .element_classify import classify_element
from .errors import PpdError
from .estimation import estimate_proportions
from .finite_field import FieldParams, field_from_order, field_make
from .groupfile import load_group_file, write_group_file
from .matrices import parse_matrix
from .oracle import enumerate_group, exact_ppd_profile
from .ppd_arithmetic import phi_triple, ppd_list
from .recognition import Outcome, recognize

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NOT_OMEGA = 1
EXIT_FAILED = 2
EXIT_USAGE = 3

CONSTRUCTIONS = ("extension", "monomial", "subfield", "block")


class _UsageError(Exception):
    pass


class _Parser(ArgumentParser):
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_field_arguments(parser: ArgumentParser) -> None:
    parser.add_argument("--q", type=int, help="Field order (a prime power)")
    parser.add_argument("--p", type=int, help="Field characteristic, with --a")
    parser.add_argument("--a", type=int, default=1, help="Extension degree over GF(p)")


def build_parser() -> ArgumentParser:
    parser = _Parser(prog="ppd-recognizer", description="Primitive prime divisor elements and classical group recognition")
    parser.add_argument("--config", type=Path, help="Optional path to a JSON/YAML configuration file")
    parser.add_argument(
        "--discover-config",
        action="store_true",
        help="Discover configuration files in the working directory (ppd-recognizer.yaml/.yml/.json)",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="Log to stderr (-v info, -vv debug)")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Write a group file for a classical group or a test construction")
    gen.add_argument("--case", required=True, help="sl, sp, su, o+, o-, o, or one of: " + ", ".join(CONSTRUCTIONS))
    gen.add_argument("--d", type=int, required=True, help="Dimension")
    _add_field_arguments(gen)
    gen.add_argument("--level", choices=[level.value for level in Level], default=Level.OMEGA.value)
    gen.add_argument("--degree", type=int, default=2, help="Extension degree for --case extension")
    gen.add_argument("--sub-degree", type=int, default=1, help="Subfield degree for --case subfield")
    gen.add_argument("--split", type=int, help="Size of the first block for --case block (default d/2)")
    gen.add_argument("--output", type=Path, help="Write to this file instead of standard output")

    classify = commands.add_parser("classify", help="Classify one matrix as a ppd-element")
    _add_field_arguments(classify)
    classify.add_argument("--d", type=int, help="Dimension (checked against the matrix)")
    classify.add_argument("--matrix", required=True, help='Rows separated by ";", e.g. "0 1 0;0 0 1;1 1 0"')

    tables = commands.add_parser("tables", help="Print Phi, Phi_l, Phi_b and the ppds of q^e - 1")
    _add_field_arguments(tables)
    tables.add_argument("--emax", type=int, required=True, help="Largest e to tabulate")

    estimate = commands.add_parser("estimate", help="Sampled ppd proportions of a group")
    estimate.add_argument("--group", type=Path, required=True, help="Group file")
    estimate.add_argument("--samples", type=int, default=1000)
    estimate.add_argument("--seed", type=int, required=True)
    estimate.add_argument("--jobs", type=int, default=1)
    estimate.add_argument("--report", type=Path, help="Directory for proportion_stats.json")

    recognise = commands.add_parser("recognize", help="Decide whether a group contains Omega")
    recognise.add_argument("--group", type=Path, required=True, help="Group file")
    recognise.add_argument("--epsilon", type=float, help="Error bound (default from configuration)")
    recognise.add_argument("--seed", type=int, required=True)
    recognise.add_argument("--report", type=Path, help="Write the verdict as JSON to this path")

    oracle = commands.add_parser("oracle", help="Enumerate a small group and print exact ppd proportions")
    oracle.add_argument("--group", type=Path, required=True, help="Group file")
    oracle.add_argument("--cap", type=int, help="Enumeration cap (default from configuration)")
    return parser


def load_config(args: Namespace) -> RecognizerConfig:
    if args.config:
        config_path = args.config
    elif args.discover_config:
        config_path = discover_config([Path.cwd() / name for name in DEFAULT_CONFIG_NAMES])
    else:
        config_path = None
    config = RecognizerConfig.load(config_path) if config_path else RecognizerConfig()
    config.validate()
    return config


def _field(args: Namespace, config: RecognizerConfig) -> FieldParams:
    if args.q is not None:
        return field_from_order(args.q, config.limits)
    if args.p is not None:
        return field_make(args.p, args.a, config.limits)
    raise _UsageError("either --q or --p is required")


def _build_group(args: Namespace, config: RecognizerConfig) -> GroupInput:
    field = _field(args, config)
    case = args.case.lower()
    if case == "extension":
        if args.d % args.degree:
            raise _UsageError("--degree must divide --d")
        return extension_field_group(field, args.d // args.degree, args.degree)
    if case == "monomial":
        return monomial_group(field, args.d)
    if case == "subfield":
        return subfield_scalar_group(field, args.d, args.sub_degree)
    if case == "block":
        split = args.split or args.d // 2
        return block_triangular_group(field, split, args.d - split)
    return standard_group(GroupCase(Family.parse(case), args.d, field), args.level)


def _command_gen(args: Namespace, config: RecognizerConfig) -> int:
    text = write_group_file(_build_group(args, config))
    if args.output:
        args.output.write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _command_classify(args: Namespace, config: RecognizerConfig) -> int:
    matrix = parse_matrix(_field(args, config), args.matrix)
    if args.d is not None and args.d != matrix.d:
        raise _UsageError(f"--d {args.d} does not match a {matrix.d}x{matrix.d} matrix")
    witness = classify_element(matrix, config.limits)
    print(witness.describe() if witness else "none")
    return EXIT_OK


def _command_tables(args: Namespace, config: RecognizerConfig) -> int:
    field = _field(args, config)
    print("e q phi phi_l phi_b ppds")
    for e in range(1, args.emax + 1):
        triple = phi_triple(e, field.q, field.p, field.a, config.limits)
        primes = ",".join(str(r) for r in ppd_list(field.q, e, config.limits).primes) or "-"
        print(f"{e} {field.q} {triple.phi} {triple.phi_large} {triple.phi_basic} {primes}")
    return EXIT_OK


def _command_estimate(args: Namespace, config: RecognizerConfig) -> int:
    group = load_group_file(args.group, config.limits)
    stats = estimate_proportions(
        group.generators, args.samples, args.seed, jobs=args.jobs, config=config, label=group.case.label()
    )
    for e in sorted(stats.ppd_counts):
        print(
            f"e={e} ppd={stats.ppd_counts[e]} large={stats.large_counts.get(e, 0)} "
            f"basic={stats.basic_counts.get(e, 0)} frequency={stats.frequency(e):.6f}"
        )
    print(f"samples={stats.samples} seed={args.seed} jobs={args.jobs}")
    if args.report:
        stats.write(args.report)
    return EXIT_OK


def _command_recognize(args: Namespace, config: RecognizerConfig) -> int:
    group = load_group_file(args.group, config.limits)
    epsilon = config.recognition.epsilon if args.epsilon is None else args.epsilon
    if not 0 < epsilon < 1:
        raise _UsageError("--epsilon must lie strictly between 0 and 1")
    verdict = recognize(group, epsilon, args.seed, config)
    sys.stdout.write(verdict.render())
    if args.report:
        args.report.write_text(json.dumps(verdict.as_dict(), indent=2, sort_keys=True), encoding="utf-8")
    if verdict.outcome is Outcome.CONTAINS_OMEGA:
        return EXIT_OK
    if verdict.outcome is Outcome.LIKELY_NOT_OMEGA:
        return EXIT_NOT_OMEGA
    return EXIT_FAILED


def _command_oracle(args: Namespace, config: RecognizerConfig) -> int:
    group = load_group_file(args.group, config.limits)
    enumerated = enumerate_group(group.generators, cap=args.cap, config=config.oracle)
    profile = exact_ppd_profile(enumerated, config.limits)
    print(f"order {enumerated.order}")
    for e in range(group.d // 2 + 1, group.d + 1):
        value = profile.get(e, Fraction(0))
        print(f"e={e} proportion={value.numerator}/{value.denominator}")
    return EXIT_OK


_COMMANDS = {
    "gen": _command_gen,
    "classify": _command_classify,
    "tables": _command_tables,
    "estimate": _command_estimate,
    "recognize": _command_recognize,
    "oracle": _command_oracle,
}


def run(argv: Optional[list[str]] = None) -> int:
    """Run one subcommand and return its exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.verbose:
        logging.basicConfig(
            level=logging.DEBUG if args.verbose > 1 else logging.INFO,
            stream=sys.stderr,
            format="%(levelname)s %(name)s: %(message)s",
        )
    try:
        config = load_config(args)
        return _COMMANDS[args.command](args, config)
    except _UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"ppd-recognizer: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PpdError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, OSError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


def main(argv: Optional[list[str]] = None) -> None:
    raise SystemExit(run(argv))


if __name__ == "__main__":
    main()
