"""Entry point of the markoff command line."""

import argparse
import logging
import sys

from markoff.cli.commands import COMMANDS, LEMMAS
from markoff.cli.result import EXIT_USAGE, CommandResult
from markoff.errors import MarkoffError
from markoff.settings import DEFAULT_SETTINGS_FILE, Settings

LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)


def build_parser() -> argparse.ArgumentParser:
    """Return the parser of all sub-commands."""
    parser = argparse.ArgumentParser(
        prog="markoff",
        description=(
            "Exact values of the Lagrange and Markoff spectra from "
            "continued fractions."
        ),
    )
    parser.add_argument(
        "--config",
        default=DEFAULT_SETTINGS_FILE,
        help="settings file (default: %(default)s)",
    )
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="log progress (-v) or details (-vv) on stderr",
    )
    output = parser.add_mutually_exclusive_group()
    output.add_argument(
        "--json",
        dest="format",
        action="store_const",
        const="json",
        default="json",
        help="print JSON (default)",
    )
    output.add_argument(
        "--text",
        dest="format",
        action="store_const",
        const="text",
        help="print one 'key: value' line per field",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    evaluate = commands.add_parser("eval", help="evaluate a continued fraction")
    evaluate.add_argument("expr", help='e.g. "[0; (2, 1, 2, 2)]"')

    spectrum = commands.add_parser(
        "spectrum", help="lambda_i, M, L or mu of a sequence"
    )
    spectrum.add_argument("kind", choices=("lambda", "M", "L", "mu"))
    spectrum.add_argument(
        "sequence", help='"<(2, 1)| 1 2 |(2)>" or "[0; 1, (2)]"'
    )
    spectrum.add_argument("-i", "--index", type=int)
    spectrum.add_argument("--max-window", type=int)
    spectrum.add_argument("--window-periods", type=int)

    gbur = commands.add_parser("gbur", help="endpoints of the n-th gap")
    gbur.add_argument("n", type=int)

    zeta = commands.add_parser("zeta", help="lambda windows along zeta_n")
    zeta.add_argument("n", type=int)
    zeta.add_argument("--blocks", type=int, default=6)
    zeta.add_argument("--csv", help="write (index, lo, hi) rows to a file")

    verify = commands.add_parser("verify", help="run a verifier")
    verify.add_argument("lemma", choices=LEMMAS)
    verify.add_argument("--n", type=int)
    verify.add_argument("--trials", type=int)
    verify.add_argument("--seed", type=int)
    verify.add_argument("--length", type=int, help="for min-avoiding")
    verify.add_argument("--max-period", type=int, help="for banned")
    verify.add_argument("--blocks", type=int, help="for zeta")
    verify.add_argument("--sequence", help="for firstelements")
    verify.add_argument("--index", type=int, help="for firstelements")

    admissible = commands.add_parser(
        "admissible", help="search a periodic sequence reaching a value"
    )
    admissible.add_argument(
        "target",
        help='"gbur-alpha-star N", "theorem1-lambda0", a continued '
        "fraction or an exact value",
    )
    admissible.add_argument("--max-period", type=int)
    admissible.add_argument("--alphabet-max", type=int)
    admissible.add_argument("--workers", type=int)
    admissible.add_argument(
        "--no-prune",
        action="store_true",
        help="keep the periods with banned patterns",
    )
    return parser


def run(
    arguments: argparse.Namespace, settings: type[Settings]
) -> CommandResult:
    """Run the selected command with loaded settings."""
    inputs = {
        key: value
        for key, value in sorted(vars(arguments).items())
        if key not in ("config", "verbose", "format")
    }
    return COMMANDS[arguments.command](inputs, settings)


def main(argv: list[str] | None = None) -> int:
    """Run the command line and return the exit status."""
    arguments = build_parser().parse_args(argv)
    level = LEVELS[min(arguments.verbose, len(LEVELS) - 1)]
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        settings = Settings.load(arguments.config)
    except ValueError as error:
        print(f"markoff: {arguments.config}: {error}", file=sys.stderr)
        return EXIT_USAGE

    try:
        result = run(arguments, settings)
    except MarkoffError as error:
        print(f"markoff: {error}", file=sys.stderr)
        return EXIT_USAGE

    if arguments.format == "text":
        print("\n".join(result.lines()))
    else:
        print(result.dumps())

    return result.exit_status
