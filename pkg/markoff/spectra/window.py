"""Certified lambda values from a finite part of a sequence."""

from fractions import Fraction

from markoff.cf.mobius import word_mobius
from markoff.cf.words import Word, check_alphabet, check_word
from markoff.errors import PreconditionError
from markoff.exact.interval import Interval

# Complete quotients over the alphabet {1, ..., 4} lie in [1, 5].
TAIL_RANGE = (Fraction(1), Fraction(5))


def epsilon(n: int) -> Fraction:
    """Return 2**-(n - 1), the bound on continued fractions sharing n terms."""
    return Fraction(2) ** (1 - n)


def delta(n: int) -> Fraction:
    """Return 5**-(2 * (n + 2)), the separation of first differences."""
    return Fraction(1, 5 ** (2 * (n + 2)))


def lambda_window(prefix: Word, index: int, slack: int) -> Interval:
    """Enclose lambda_index of every extension of a finite word.

    Only letters index - slack ... index + slack are read (0-based), the
    unknown continuations on both sides being complete quotients in
    [1, 5]. Both parts are monotone in their continuation, so the
    endpoints are exact rationals.

    Args:
        prefix (Word): the known letters.
        index (int): the position of lambda, 0-based.
        slack (int): the letters read on each side.

    Raises:
        PreconditionError: the slack window leaves the prefix.
        UnsupportedAlphabetError: a letter of the window is above 4.

    """
    prefix = check_word(prefix)
    if slack < 1 or slack > min(index, len(prefix) - index - 1):
        raise PreconditionError(
            f"slack {slack} around position {index} doesn't fit in a word "
            f"of length {len(prefix)}"
        )

    ahead = prefix[index:index + slack + 1]
    behind = prefix[index - slack:index][::-1]
    check_alphabet(ahead + behind)

    forward = word_mobius(ahead)
    backward = word_mobius(behind, 0)
    candidates = [
        forward.apply(low) + backward.apply(high)
        for low in TAIL_RANGE
        for high in TAIL_RANGE
    ]
    return Interval(min(candidates), max(candidates))
