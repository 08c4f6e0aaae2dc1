"""Removing or doubling an even block of partial quotients.

For gamma = [0; A, B, C] with |B| even, gamma lies strictly between
gamma1 = [0; A, C] and gamma2 = [0; A, B, B, C], so one of the two
surgeries increases the value.

"""

import logging

from markoff.cf.periodic import PeriodicCF, eval_periodic
from markoff.cf.words import Word, check_word
from markoff.errors import PreconditionError
from markoff.verifiers.repeat import find_repeat
from markoff.verifiers.report import Report

logger = logging.getLogger(__name__)


def _with_tail(word: Word, tail: PeriodicCF) -> PeriodicCF:
    return PeriodicCF(0, word + tail.preperiod, tail.period)


def surgery_check(a_word: Word, b_block: Word, c_tail: PeriodicCF) -> Report:
    """Check the strict betweenness of gamma and max(gamma1, gamma2) > gamma.

    Args:
        a_word (Word): the prefix A.
        b_block (Word): the block B, of even length.
        c_tail (PeriodicCF): the continuation C, read from its preperiod
                (its integer part is ignored). It must be written with a
                preperiod, even if that preperiod rolls into the period
                (like [0; 2, (1, 2)]); equal values are then reported as
                degenerate.

    Raises:
        PreconditionError: B has an odd length or C is written without
                a preperiod.

    """
    a_word, b_block = check_word(a_word), check_word(b_block)
    if len(b_block) % 2:
        raise PreconditionError(
            f"the block {b_block} has an odd length {len(b_block)}"
        )

    if c_tail.is_finite:
        raise PreconditionError(f"the continuation {c_tail} is finite")

    if not c_tail.preperiod:
        raise PreconditionError(
            f"the continuation {c_tail} is purely periodic"
        )

    report = Report(
        "surgery",
        {"A": list(a_word), "B": list(b_block), "C": str(c_tail)},
        trials=1,
    )
    gamma = eval_periodic(_with_tail(a_word + b_block, c_tail))
    gamma1 = eval_periodic(_with_tail(a_word, c_tail))
    gamma2 = eval_periodic(_with_tail(a_word + b_block * 2, c_tail))
    report.result = {
        "gamma": str(gamma),
        "gamma1": str(gamma1),
        "gamma2": str(gamma2),
    }

    if gamma == gamma1 or gamma == gamma2 or gamma1 == gamma2:
        report.degenerate("two of the three values are equal")
        return report

    low, high = min(gamma1, gamma2), max(gamma1, gamma2)
    if not low < gamma < high:
        report.fail({"case": report.parameters, "values": report.result})

    return report


def surgery_from_repeat(word: Word, n: int, tail: PeriodicCF) -> Report:
    """Cut word + tail at a parity repeat, then check the surgery.

    With the witness (n1, n2) of `find_repeat`, A holds the letters
    before n1, B those from n1 to n2 - 1 and C the rest of the word
    followed by the tail.

    """
    word = check_word(word)
    witness = find_repeat(word, n, best_effort=True)
    if witness is None:
        raise PreconditionError(f"no repeat of length {2 * n + 2} in {word}")

    a_word = word[:witness.n1 - 1]
    b_block = word[witness.n1 - 1:witness.n2 - 1]
    c_tail = _with_tail(word[witness.n2 - 1:], tail)
    report = surgery_check(a_word, b_block, c_tail)
    report.result["witness"] = witness.to_json()
    return report
