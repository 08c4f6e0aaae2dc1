"""Ordering continued fractions from their first difference.

Two expansions [a0; common, b1, ...] and [a0; common, c1, ...] with
b1 != c1 compare by the parity of len(common): for an odd length the one
with the larger letter is larger, for an even length it is smaller.

"""

from typing import Literal

from markoff.cf.periodic import PeriodicCF, eval_periodic
from markoff.cf.words import Word, check_alphabet, check_word
from markoff.errors import PreconditionError
from markoff.exact.surdsum import SurdSum, ss_compare

Tail = Word | PeriodicCF


def tail_letters(tail: Tail) -> Word:
    """Return the letters given explicitly by a tail (its a0 ignored)."""
    if isinstance(tail, PeriodicCF):
        return tail.preperiod + tail.period

    return check_word(tail)


def tail_cf(a0: int, common: Word, tail: Tail) -> PeriodicCF:
    """Return [a0; common, tail], a word tail being repeated forever."""
    if isinstance(tail, PeriodicCF):
        return PeriodicCF(a0, tuple(common) + tail.preperiod, tail.period)

    if not tail:
        raise PreconditionError("a word tail can't be empty")

    return PeriodicCF(a0, tuple(common), tuple(tail))


def compare_by_parity(
    a0: int, common: Word, tail1: Tail, tail2: Tail
) -> Literal["less", "greater"]:
    """Order [a0; common, tail1] against [a0; common, tail2].

    Args:
        a0 (int): the shared integer part.
        common (Word): the shared partial quotients.
        tail1 (Word or PeriodicCF): the first continuation.
        tail2 (Word or PeriodicCF): the second continuation.

    Raises:
        PreconditionError: the tails start with the same letter.
        UnsupportedAlphabetError: a letter is above 4.

    """
    common = check_word(common)
    first, second = tail_letters(tail1), tail_letters(tail2)
    if not first or not second:
        raise PreconditionError("both tails need a first letter")

    for word in (common, first, second):
        check_alphabet(word)

    if first[0] == second[0]:
        raise PreconditionError(
            f"tails both start with {first[0]}, the ordering isn't decided "
            "by the first letter"
        )

    larger_first = first[0] > second[0]
    if len(common) % 2 == 0:
        larger_first = not larger_first

    return "greater" if larger_first else "less"


def compare_exactly(
    a0: int, common: Word, tail1: Tail, tail2: Tail
) -> Literal["less", "equal", "greater"]:
    """Order the two expansions by exact evaluation, across fields."""
    first = eval_periodic(tail_cf(a0, common, tail1))
    second = eval_periodic(tail_cf(a0, common, tail2))
    return ss_compare(SurdSum.coerce(first), SurdSum.coerce(second))
