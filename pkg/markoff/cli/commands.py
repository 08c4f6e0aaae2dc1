"""Commands of the command line, one function per sub-command.

Each command receives the parsed arguments and the loaded settings and
returns a `CommandResult`. Flags left unset fall back to the settings.

"""

import csv
import logging
from pathlib import Path
from typing import Any

from parse import parse

from markoff.cf.periodic import PeriodicCF, eval_periodic
from markoff.cf.syntax import parse_value
from markoff.cli.result import CommandResult
from markoff.constructions import (
    extremal_sequence,
    gbur_alpha_star,
    gbur_pair,
    theorem1_lambda0,
)
from markoff.errors import PreconditionError
from markoff.exact.surdsum import SurdSum, value_payload
from markoff.settings import Settings
from markoff.spectra.biseq import BiSeq
from markoff.spectra.values import (
    L_value,
    M_value,
    is_attainable,
    lambda_alpha,
    lambda_at,
    mu_quadratic,
)
from markoff.verifiers.admissible import admissible_search
from markoff.verifiers.banned import (
    banned_contrapositive,
    firstelements_classify,
    min_avoiding_check,
)
from markoff.verifiers.properties import (
    comp_property,
    repeat_property,
    surgery_property,
    window_property,
)
from markoff.verifiers.report import Report
from markoff.verifiers.zeta import zeta_check, zeta_windows

logger = logging.getLogger(__name__)

Arguments = dict[str, Any]

LEMMAS = (
    "comp",
    "repeat",
    "surgery",
    "window",
    "min-avoiding",
    "banned",
    "firstelements",
    "zeta",
)


def _option(arguments: Arguments, name: str, settings: type[Settings]):
    """Return a flag value, or the setting of the same name if unset."""
    value = arguments.get(name)
    return getattr(settings, name) if value is None else value


def _payload(value, settings: type[Settings]) -> dict:
    return value_payload(
        value, settings.refine_bits, settings.decimal_digits
    )


def cmd_eval(arguments: Arguments, settings: type[Settings]) -> CommandResult:
    """Evaluate a continued fraction exactly."""
    cf = PeriodicCF.parse(arguments["expr"])
    value = eval_periodic(cf)
    output = _payload(value, settings)
    output["cf"] = str(cf)
    return CommandResult("eval", arguments, output)


def _sequence_or_cf(text: str) -> BiSeq | PeriodicCF:
    if text.lstrip().startswith("<"):
        return BiSeq.parse(text)

    return PeriodicCF.parse(text)


def cmd_spectrum(
    arguments: Arguments, settings: type[Settings]
) -> CommandResult:
    """Compute lambda_i, M, L or mu of a sequence or a continued fraction.

    M and L read a bi-infinite sequence, mu a continued fraction, lambda
    either (lambda_i(alpha) for a continued fraction).

    """
    kind = arguments["kind"]
    data = _sequence_or_cf(arguments["sequence"])
    index = arguments.get("index")
    match kind, data:
        case "lambda", _ if index is None:
            raise PreconditionError("lambda needs an index (-i)")
        case "lambda", BiSeq():
            output = {"value": _payload(lambda_at(data, index), settings)}
        case "lambda", PeriodicCF():
            output = {"value": _payload(lambda_alpha(data, index), settings)}
        case "M", BiSeq():
            result = M_value(
                data,
                _option(arguments, "window_periods", settings),
                _option(arguments, "max_window", settings),
            )
            output = result.to_json(
                settings.refine_bits, settings.decimal_digits
            )
        case "L", BiSeq():
            output = L_value(data).to_json(
                settings.refine_bits, settings.decimal_digits
            )
        case "mu", PeriodicCF():
            output = {
                "value": _payload(mu_quadratic(data), settings),
                "attainable": is_attainable(data),
            }
        case _:
            expected = "a continued fraction" if kind == "mu" else (
                "a bi-infinite sequence"
            )
            raise PreconditionError(f"{kind} needs {expected}")

    return CommandResult("spectrum", arguments, output)


def cmd_gbur(arguments: Arguments, settings: type[Settings]) -> CommandResult:
    """Print the endpoints of the n-th maximal gap."""
    pair = gbur_pair(arguments["n"])
    output = pair.to_json(settings.refine_bits, settings.decimal_digits)
    return CommandResult("gbur", arguments, output)


def write_zeta_csv(path: Path, n: int, blocks: int) -> int:
    """Write (index, lo, hi) rows of the lambda windows, return the count.

    Endpoints are written as exact fractions, so every row still encloses
    its lambda value.

    """
    rows = zeta_windows(n, blocks)
    with path.open("w", newline="", encoding="utf-8") as file:
        writer = csv.writer(file)
        writer.writerow(("index", "lo", "hi"))
        for index, _, interval in rows:
            bounds = interval.to_json()
            writer.writerow((index, bounds["lo"], bounds["hi"]))

    logger.info("%d rows written to %s", len(rows), path)
    return len(rows)


def cmd_zeta(arguments: Arguments, settings: type[Settings]) -> CommandResult:
    """Check the zeta_n prefix, optionally writing the windows as CSV."""
    n, blocks = arguments["n"], arguments["blocks"]
    report = zeta_check(n, blocks)
    output = report.to_json()
    if (path := arguments.get("csv")) is not None:
        output["csv"] = {
            "path": str(path),
            "rows": write_zeta_csv(Path(path), n, blocks),
        }

    return CommandResult("zeta", arguments, output, report.status)


def _verify(arguments: Arguments, settings: type[Settings]) -> Report:
    lemma = arguments["lemma"]
    trials = _option(arguments, "trials", settings)
    seed = _option(arguments, "seed", settings)
    n = arguments.get("n")
    match lemma:
        case "comp":
            return comp_property(
                1 if n is None else n, trials, seed, settings.word_lengths
            )
        case "repeat":
            return repeat_property(0 if n is None else n, trials, seed)
        case "surgery":
            return surgery_property(trials, seed)
        case "window":
            return window_property(trials, seed)
        case "min-avoiding":
            length = arguments.get("length")
            return min_avoiding_check(14 if length is None else length)
        case "banned":
            max_period = arguments.get("max_period")
            max_period = 6 if max_period is None else max_period
            return banned_contrapositive(max_period)
        case "firstelements":
            if (text := arguments.get("sequence")) is not None:
                sequence = BiSeq.parse(text)
            else:
                sequence = extremal_sequence(1 if n is None else n)
            return firstelements_classify(sequence, arguments.get("index"))
        case "zeta":
            blocks = arguments.get("blocks")
            return zeta_check(
                2 if n is None else n, 6 if blocks is None else blocks
            )

    raise PreconditionError(f"{lemma!r} isn't a known statement")


def cmd_verify(
    arguments: Arguments, settings: type[Settings]
) -> CommandResult:
    """Run a verifier and return its report."""
    report = _verify(arguments, settings)
    logger.info(
        "%s: %d trials, status %s", report.lemma, report.trials, report.status
    )
    return CommandResult("verify", arguments, report.to_json(), report.status)


def parse_target(text: str) -> SurdSum:
    """Parse an admissibility target.

    The target is "gbur-alpha-star N", "theorem1-lambda0", a continued
    fraction or the printed form of an exact value.

    """
    text = text.strip()
    if text == "theorem1-lambda0":
        return theorem1_lambda0()

    if (result := parse("gbur-alpha-star {n:d}", text)) is not None:
        return gbur_alpha_star(result["n"])

    if text.startswith("["):
        return SurdSum.coerce(eval_periodic(PeriodicCF.parse(text)))

    return SurdSum.coerce(parse_value(text))


def cmd_admissible(
    arguments: Arguments, settings: type[Settings]
) -> CommandResult:
    """Search a purely periodic sequence reaching the target."""
    target = parse_target(arguments["target"])
    report = admissible_search(
        target,
        _option(arguments, "max_period", settings),
        _option(arguments, "alphabet_max", settings),
        settings.prune_banned and not arguments.get("no_prune", False),
        _option(arguments, "workers", settings),
        settings.lyndon_batch,
    )
    output = report.to_json(settings.refine_bits, settings.decimal_digits)
    return CommandResult("admissible", arguments, output)


COMMANDS = {
    "eval": cmd_eval,
    "spectrum": cmd_spectrum,
    "gbur": cmd_gbur,
    "zeta": cmd_zeta,
    "verify": cmd_verify,
    "admissible": cmd_admissible,
}
