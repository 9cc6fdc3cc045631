"""
cyclonorm command line.

Results go to stdout, one line per record; diagnostics go to stderr.
Exit codes: 0 success, 1 a verification came out false, 2 bad input or precondition.
"""
import argparse
import logging
import sys
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, TextIO, get_args

from pydantic import ValidationError

from cyclonorm.core.config import LogLevel, Settings
from cyclonorm.core.domino import domino_enumerate, domino_table
from cyclonorm.core.exceptions import CycloNormError
from cyclonorm.core.models import SweepRecord
from cyclonorm.core.norms import cache_stats, norm_primitive, product_all_roots
from cyclonorm.core.quadfield import relnorm_summary
from cyclonorm.core.sequences import lucas_value
from cyclonorm.utils.formatters import RecordFormatter
from cyclonorm.utils.parser import parse_expr
from cyclonorm.verifiers.base_verifier import BaseVerifier
from cyclonorm.verifiers.domino_verifier import CorollaryVerifier
from cyclonorm.verifiers.norm_verifiers import (
    CosineVerifier,
    SurveyVerifier,
    Theorem1Verifier,
    Theorem2Verifier,
    UnitSweepVerifier,
)
from cyclonorm.verifiers.relnorm_verifiers import (
    ImagRelNormVerifier,
    RealRelNormVerifier,
    one_minus_x_pow,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

EPILOG = """
Examples:
  cyclonorm norm --poly "1-x+x^2" --n 35
  cyclonorm norm --poly "1-x+x^2" --n 4 --all-roots
  cyclonorm domino --n 17 --brute-force
  cyclonorm verify theorem1 --min 5 --max 10000 --jobs 4
  cyclonorm verify relnorm --imag --max-prime 199 --all-k --format json
  cyclonorm sweep unit --poly "1-x-x^2" --min 2 --max 50
"""


class UsageError(Exception):
    """argparse refused the command line"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _common_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps a flag given before the subcommand from being reset by the subparser
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output_format", choices=["text", "json", "csv"],
                        default=argparse.SUPPRESS, help="Output format (default: text)")
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS,
                        help="Worker threads for sweeps (default: 1)")
    common.add_argument("--log-level", default=argparse.SUPPRESS,
                        choices=list(get_args(LogLevel)),
                        help="Diagnostic verbosity on stderr (default: WARNING)")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = _Parser(
        prog="cyclonorm",
        description="Exact norms of integer polynomials at roots of unity",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG,
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    norm = commands.add_parser("norm", parents=[common], help="Norm of r(zeta) for one n")
    norm.add_argument("--poly", required=True, help='Polynomial in x, e.g. "1 - x + x^2"')
    norm.add_argument("--n", type=int, required=True)
    norm.add_argument("--all-roots", action="store_true",
                      help="Product over every zeta^k, k = 1..n-1, instead of primitive roots")

    verify = commands.add_parser("verify", help="Sweep one of the identities")
    checks = verify.add_subparsers(dest="check", required=True, parser_class=_Parser)
    for name in ("theorem1", "corollary", "cosine"):
        sub = checks.add_parser(name, parents=[common])
        sub.add_argument("--min", type=int, required=True)
        sub.add_argument("--max", type=int, required=True)
    theorem2 = checks.add_parser("theorem2", parents=[common])
    theorem2.add_argument("--max-prime", type=int, default=None)
    theorem2.add_argument("--p", type=int, default=None, help="Check a single prime")
    relnorm = checks.add_parser("relnorm", parents=[common])
    field = relnorm.add_mutually_exclusive_group(required=True)
    field.add_argument("--real", action="store_true", help="p = 1 mod 4")
    field.add_argument("--imag", action="store_true", help="p = 3 mod 4")
    relnorm.add_argument("--max-prime", type=int, required=True)
    relnorm.add_argument("--all-k", action="store_true", help="Every k in 1..p-1 (imaginary only)")

    domino = commands.add_parser("domino", parents=[common], help="Domino counts on the n-cycle")
    domino.add_argument("--n", type=int, required=True)
    domino.add_argument("--brute-force", action="store_true",
                        help="Enumerate placements (3 <= n <= 30)")

    lucas = commands.add_parser("lucas", parents=[common], help="Lucas number L(m)")
    lucas.add_argument("--m", type=int, required=True)

    sweep = commands.add_parser("sweep", help="Norm of one polynomial across n")
    kinds = sweep.add_subparsers(dest="kind", required=True, parser_class=_Parser)
    unit = kinds.add_parser("unit", parents=[common])
    unit.add_argument("--poly", required=True)
    unit.add_argument("--min", type=int, required=True)
    unit.add_argument("--max", type=int, required=True)

    survey = commands.add_parser("survey", parents=[common],
                                 help="Norms of every +-1 polynomial of a degree")
    survey.add_argument("--degree", type=int, required=True)
    survey.add_argument("--p", type=int, required=True)

    rel = commands.add_parser("relnorm", parents=[common],
                              help="Relative norm of 1 - zeta^k to the quadratic subfield")
    rel.add_argument("--p", type=int, required=True)
    rel.add_argument("--k", type=int, default=1)
    return parser


def resolve_settings(args: argparse.Namespace) -> Settings:
    """Environment first, explicit flags on top"""
    settings = Settings.from_env()
    overrides = {
        key: getattr(args, key)
        for key in ("output_format", "jobs", "log_level")
        if getattr(args, key, None) is not None
    }
    return Settings(**{**settings.model_dump(), **overrides})


def _norm_records(args: argparse.Namespace) -> Iterator[SweepRecord]:
    expr = parse_expr(args.poly)
    report = norm_primitive(expr.parsed, args.n)
    if not args.all_roots:
        yield SweepRecord.from_report("norm", report)
        return
    value = product_all_roots(expr.parsed, args.n)
    yield SweepRecord(command="norm", n=args.n, poly=expr.canonical(), value=value,
                      unit=value in (1, -1), method=report.method.value)


def _domino_records(args: argparse.Namespace) -> Iterator[SweepRecord]:
    table = domino_enumerate(args.n) if args.brute_force else domino_table(args.n)
    yield SweepRecord(command="domino", n=args.n, value=table.counts,
                      method="brute_force" if args.brute_force else "closed_form")


def _lucas_records(args: argparse.Namespace) -> Iterator[SweepRecord]:
    result = lucas_value(args.m)
    yield SweepRecord(command="lucas", n=result.index, value=result.value, method="fast_doubling")


def _relnorm_records(args: argparse.Namespace, settings: Settings) -> Iterator[SweepRecord]:
    summary = relnorm_summary(args.p, args.k, settings)
    details: Dict[str, object] = {"relnorm": summary["value"]}
    for key in ("class_number", "sign", "m", "unit"):
        if key in summary:
            details[key] = summary[key]
    yield SweepRecord(command="relnorm", n=args.p, poly=one_minus_x_pow(args.k % args.p),
                      value=details, method="gauss_period", ok=summary.get("ok"))


def _verifier_for(args: argparse.Namespace, settings: Settings) -> Optional[BaseVerifier]:
    if args.command == "verify":
        if args.check == "relnorm":
            return RealRelNormVerifier(settings) if args.real else ImagRelNormVerifier(settings)
        classes = {
            "theorem1": Theorem1Verifier,
            "theorem2": Theorem2Verifier,
            "corollary": CorollaryVerifier,
            "cosine": CosineVerifier,
        }
        return classes[args.check](settings)
    if args.command == "sweep":
        return UnitSweepVerifier(settings)
    if args.command == "survey":
        return SurveyVerifier(settings)
    return None


def _verifier_context(args: argparse.Namespace) -> Dict[str, object]:
    context = {key: value for key, value in vars(args).items() if value is not None}
    if args.command == "sweep":
        context["poly"] = parse_expr(args.poly).parsed
    if args.command == "survey":
        context["n"] = args.p
    if getattr(args, "check", None) == "theorem2" and args.p is None and args.max_prime is None:
        raise UsageError("verify theorem2: one of --max-prime or --p is required")
    return context


def records_for(args: argparse.Namespace, settings: Settings) -> Iterable[SweepRecord]:
    """Output records for a parsed command line; sweeps run through BaseVerifier.run"""
    verifier = _verifier_for(args, settings)
    if verifier is not None:
        records, error = verifier.run(_verifier_context(args))
        if error:
            raise CycloNormError(error)
        return records
    if args.command == "norm":
        return _norm_records(args)
    if args.command == "domino":
        return _domino_records(args)
    if args.command == "lucas":
        return _lucas_records(args)
    return _relnorm_records(args, settings)


def _emit(records: Iterable[SweepRecord], formatter: RecordFormatter, out: TextIO) -> bool:
    emitted: List[SweepRecord] = []
    header = formatter.header()
    for record in records:
        if header is not None:
            print(header, file=out)
            header = None
        print(formatter.format(record), file=out, flush=True)
        emitted.append(record)
    return BaseVerifier.all_ok(emitted)


def run(
    argv: Optional[Sequence[str]] = None,
    out: Optional[TextIO] = None,
    err: Optional[TextIO] = None,
) -> int:
    """
    Execute one command line and return its exit code

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None
        out: Result stream (stdout)
        err: Diagnostic stream (stderr)
    """
    out = out or sys.stdout
    err = err or sys.stderr
    arguments: List[str] = list(sys.argv[1:] if argv is None else argv)

    try:
        args = build_parser().parse_args(arguments)
        settings = resolve_settings(args)
    except UsageError as e:
        print(str(e), file=err)
        return EXIT_USAGE
    except ValidationError as e:
        print(f"cyclonorm: invalid settings: {e.errors()[0]['msg']}", file=err)
        return EXIT_USAGE
    except ValueError as e:
        print(f"cyclonorm: invalid settings: {e}", file=err)
        return EXIT_USAGE
    except SystemExit as e:
        # --help and friends
        return e.code if isinstance(e.code, int) else EXIT_OK

    logging.basicConfig(level=settings.log_level, stream=err,
                        format="%(levelname)s %(name)s: %(message)s")
    logger.debug("argv=%s settings=%s", arguments, settings)

    try:
        ok = _emit(records_for(args, settings), RecordFormatter(settings.output_format), out)
    except (CycloNormError, UsageError) as e:
        print(f"cyclonorm: {e}", file=err)
        return EXIT_USAGE
    logger.debug("cache sizes: %s", cache_stats())
    return EXIT_OK if ok else EXIT_FAILED


def main():
    """Console-script entry point"""
    sys.exit(run())


if __name__ == "__main__":
    main()
