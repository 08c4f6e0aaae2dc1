"""Finite evidence that the blocks C_n(k) approach alpha*_n.

Lambda values of the concatenation C_n(1) C_n(2) ... are enclosed from
a finite prefix with `lambda_window`, taking the widest slack available
at each position.

"""

from fractions import Fraction
import logging

from markoff.constructions import gbur_alpha_star, zeta_prefix
from markoff.exact.interval import Interval
from markoff.exact.surdsum import SurdSum, ss_compare
from markoff.spectra.window import epsilon, lambda_window
from markoff.verifiers.report import Report

logger = logging.getLogger(__name__)

# The last checked 2** must be this close to alpha*_n.
CLOSENESS = Fraction(1, 10**4)


def zeta_windows(n: int, blocks: int) -> list[tuple[int, int, Interval]]:
    """Return (index, slack, interval) for every interior position.

    The prefix holds one block more than `blocks`, so the letters after
    the last checked 2** are known.

    """
    word = zeta_prefix(n, blocks + 1).word
    rows = []
    for index in range(1, len(word) - 1):
        slack = min(index, len(word) - index - 1)
        rows.append((index, slack, lambda_window(word, index, slack)))

    return rows


def zeta_check(n: int, blocks: int) -> Report:
    """Check the lambda values of a prefix against alpha*_n.

    Every interval lies below alpha*_n + 4 * eps_slack, the intervals at
    the 2** letters of blocks 1, ..., `blocks` increase strictly, and the
    last one is within 10^-4 of alpha*_n.

    """
    target = gbur_alpha_star(n)
    prefix = zeta_prefix(n, blocks + 1)
    windows = {index: (slack, interval)
               for index, slack, interval in zeta_windows(n, blocks)}
    report = Report("zeta", {"n": n, "blocks": blocks})
    for index, (slack, interval) in windows.items():
        report.trials += 1
        bound = target + 4 * epsilon(slack)
        if ss_compare(SurdSum.coerce(interval.hi), bound) != "less":
            report.fail({"index": index, "hi": str(interval.hi)})

    stars = []
    previous: Interval | None = None
    for k, position in enumerate(prefix.double_stars[:blocks], start=1):
        _, interval = windows[position]
        stars.append(
            {"k": k, "index": position, "interval": interval.to_json()}
        )
        if previous is not None and not previous.hi < interval.lo:
            report.fail({"k": k, "reason": "not increasing"})
        previous = interval

    if previous is not None:
        low = ss_compare(SurdSum.coerce(previous.lo), target - CLOSENESS)
        high = ss_compare(SurdSum.coerce(previous.hi), target + CLOSENESS)
        if low != "greater" or high != "less":
            report.fail({"k": blocks, "reason": "not close to alpha*"})

    report.result = {"stars": stars}
    logger.info("zeta %d: %d windows checked", n, report.trials)
    return report
