"""Patterns excluded below 1 + sqrt(5) and the first letters of extremal
sequences.

A sequence with M(B) < 1 + sqrt(5) only uses the letters 1 and 2 and
contains neither (2, 1, 2, 1) nor (1, 2, 1, 2). Among the expansions
[0; w] with w over {1, 2} avoiding (2, 1, 2, 1), the smallest is
w_0 = [0; (2, 1, 2, 2)].

"""

from itertools import product
import logging

from markoff.cf.periodic import PeriodicCF, eval_periodic
from markoff.cf.words import Word, check_word, lyndon_words, rotate
from markoff.constructions import (
    LEFT_BLOCK,
    gbur_alpha_star,
    gbur_beta,
    w0_x0_y0,
)
from markoff.errors import PreconditionError
from markoff.exact.surd import QuadSurd
from markoff.exact.surdsum import SurdSum, ss_compare
from markoff.spectra.biseq import BiSeq
from markoff.spectra.values import M_value, lambda_at, periodic_maximum
from markoff.verifiers.report import Report

logger = logging.getLogger(__name__)

BANNED_PATTERNS = ((2, 1, 2, 1), (1, 2, 1, 2))
HURWITZ_BOUND = QuadSurd.sqrt(5) + 1

# Classification gives up on n beyond this, beta_n being then close
# enough to 1 + sqrt(5) for any sensible input.
MAX_CLASS = 64


def contains_banned(word: Word, cyclic: bool = True) -> bool:
    """Return whether a word has a letter >= 3 or a banned pattern.

    With `cyclic`, the word is read as a period and patterns crossing
    the wrap count.

    """
    word = check_word(word)
    if any(letter >= 3 for letter in word):
        return True

    if cyclic and word:
        size = len(word)
        text = word * (4 // size + 2)
        starts = range(size)
    else:
        text = word
        starts = range(len(word) - 3)

    return any(text[start:start + 4] in BANNED_PATTERNS for start in starts)


def min_avoiding_check(length: int) -> Report:
    """Check every avoiding word of a length completes above w_0.

    Each word over {1, 2} of this length without (2, 1, 2, 1) is followed
    by the letters of overline{2, 1, 2, 2} from the same position on, so
    the prefix of w_0 completes to w_0 itself.

    """
    if length < 4:
        raise PreconditionError(f"length {length} is below 4")

    w0, _, _ = w0_x0_y0(1)
    completion = rotate(LEFT_BLOCK, length % 4)
    expected = tuple(LEFT_BLOCK[i % 4] for i in range(length))
    report = Report("min-avoiding", {"length": length})
    minimum: QuadSurd | None = None
    minimizer: Word = ()
    for word in product((1, 2), repeat=length):
        if contains_banned(word, cyclic=False):
            continue

        report.trials += 1
        value = eval_periodic(PeriodicCF(0, word, completion))
        if value < w0:
            report.fail({"word": list(word), "value": str(value)})

        if minimum is None or value < minimum:
            minimum, minimizer = value, word

    report.result = {
        "minimizer": list(minimizer),
        "minimum": str(minimum),
        "w0": str(w0),
    }
    if minimizer != expected:
        report.fail({"minimizer": list(minimizer), "expected": list(expected)})

    logger.info("min-avoiding %d: %d words checked", length, report.trials)
    return report


def _expansions(sequence: BiSeq, index: int) -> tuple[PeriodicCF, PeriodicCF]:
    """Return x and y around a position, x <= y."""
    forward = sequence.forward(index)
    x = PeriodicCF(0, forward.preperiod, forward.period)
    y = sequence.backward(index)
    # x and y may come from periods with different fields.
    order = ss_compare(
        SurdSum.coerce(eval_periodic(x)), SurdSum.coerce(eval_periodic(y))
    )
    if order == "greater":
        x, y = y, x

    return x, y


def _leading_ones(cf: PeriodicCF, limit: int) -> tuple[int, int | None]:
    """Return the length of the leading run of 1s and the next letter."""
    run = 0
    for letter in cf.prefix(limit):
        if letter != 1:
            return run, letter
        run += 1

    return run, None


def shape_class(x: PeriodicCF, y: PeriodicCF) -> int | None:
    """Return n if x = [0; 1^(2n), 2, ...] and y = [0; 1^(2n), ...]."""
    limit = len(x.preperiod) + 2 * len(x.period) + 2
    run, following = _leading_ones(x, limit)
    if following != 2 or run % 2:
        return None

    ones, _ = _leading_ones(y, run)
    return run // 2 if ones >= run else None


def bound_class(value: SurdSum) -> int | None:
    """Return the n >= 0 with beta_n <= value <= alpha*_(n+1), if any."""
    if ss_compare(value, SurdSum.coerce(HURWITZ_BOUND)) != "less":
        return None

    for n in range(MAX_CLASS):
        if ss_compare(value, SurdSum.coerce(gbur_beta(n))) == "less":
            return None

        if ss_compare(value, gbur_alpha_star(n + 1)) != "greater":
            return n

    return None


def firstelements_classify(
    sequence: BiSeq, index: int | None = None
) -> Report:
    """Classify a sequence by the letters around its maximum.

    The classification is read at `index`, which must satisfy
    lambda_index(B) == M(B); by default the witness of `M_value`. With
    x <= y the two expansions around a letter 2, the prefix shapes
    x = [0; 1^(2n), 2, ...], y = [0; 1^(2n), ...] must agree with
    beta_n <= M(B) <= alpha*_(n+1).

    Raises:
        PreconditionError: M(B) isn't attained at `index`.

    """
    result = M_value(sequence)
    if index is None:
        if not result.attained:
            raise PreconditionError(f"M{sequence} isn't attained")
        index = result.witness
    elif ss_compare(lambda_at(sequence, index), result.value) != "equal":
        raise PreconditionError(
            f"lambda_{index}{sequence} isn't the maximum, rotate first"
        )

    report = Report(
        "firstelements", {"sequence": str(sequence), "index": index}, trials=1
    )
    if sequence.b(index) != 2:
        report.degenerate(f"b_{index} is {sequence.b(index)}, not 2")
        return report

    x, y = _expansions(sequence, index)
    by_shape = shape_class(x, y)
    by_bounds = bound_class(result.value)
    report.result = {
        "x": str(x),
        "y": str(y),
        "shape": by_shape,
        "bounds": by_bounds,
    }
    if by_shape != by_bounds:
        report.fail({"shape": by_shape, "bounds": by_bounds})

    return report


def banned_contrapositive(max_period: int) -> Report:
    """Check M >= 1 + sqrt(5) for periodic sequences with banned patterns.

    Every primitive necklace over {1, ..., 4} of length <= max_period is
    checked.

    """
    report = Report("banned", {"max_period": max_period})
    bound = SurdSum.coerce(HURWITZ_BOUND)
    for word in lyndon_words(4, max_period):
        if not contains_banned(word):
            continue

        report.trials += 1
        value, _ = periodic_maximum(word)
        if ss_compare(value, bound) == "less":
            report.fail({"period": list(word), "M": str(value)})

    logger.info("banned: %d periods checked", report.trials)
    return report

