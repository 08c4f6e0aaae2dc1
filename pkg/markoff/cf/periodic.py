"""Finite and eventually periodic continued fractions.

A `PeriodicCF` is [a0; preperiod, period, period, ...]. Its value is a
quadratic surd: the periodic tail t > 1 is the attracting fixed point of
the period's Möbius map, and the preperiod map sends it to the value.

"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import count, cycle, islice
import logging
from math import floor
from typing import Iterator

from markoff.cf.mobius import word_mobius
from markoff.cf.syntax import format_cf, parse_cf_parts
from markoff.cf.words import Word, check_word, minimal_period
from markoff.exact.surd import QuadSurd, qs_arith, qs_floor, qs_normalize

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class PeriodicCF:

    """An eventually periodic continued fraction [a0; preperiod, (period)].

    An empty period denotes the finite continued fraction [a0; preperiod],
    as returned when expanding rationals.

    """

    a0: int
    preperiod: Word = ()
    period: Word = ()

    def __post_init__(self):
        object.__setattr__(self, "preperiod", check_word(self.preperiod))
        object.__setattr__(self, "period", check_word(self.period))

    @classmethod
    def parse(cls, text: str) -> "PeriodicCF":
        """Parse "[a0; p1, p2, (q1, q2)]"."""
        return cls(*parse_cf_parts(text))

    @property
    def is_finite(self) -> bool:
        """Return whether the expansion terminates (rational value)."""
        return not self.period

    @property
    def is_purely_periodic(self) -> bool:
        """Return whether the fraction part is [0; (period)]."""
        return bool(self.period) and not self.preperiod

    def letters(self) -> Iterator[int]:
        """Yield a1, a2, ... (the integer part excluded)."""
        yield from self.preperiod
        if self.period:
            yield from cycle(self.period)

    def prefix(self, size: int) -> Word:
        """Return the first `size` partial quotients after a0."""
        return tuple(islice(self.letters(), size))

    def letter(self, index: int) -> int:
        """Return a_index, 1-based, a_0 being the integer part."""
        if index == 0:
            return self.a0

        if index < 0:
            raise IndexError(f"{index} isn't a partial quotient index")

        if index <= len(self.preperiod):
            return self.preperiod[index - 1]

        if not self.period:
            raise IndexError(f"{self} has no partial quotient {index}")

        offset = index - len(self.preperiod) - 1
        return self.period[offset % len(self.period)]

    def tail(self, index: int) -> "PeriodicCF":
        """Return the complete quotient [a_index; a_index+1, ...]."""
        if index < 1:
            return self

        head = self.letter(index)
        pre_size = len(self.preperiod)
        if index <= pre_size:
            return PeriodicCF(head, self.preperiod[index:], self.period)

        offset = (index - pre_size) % len(self.period)
        period = self.period[offset:] + self.period[:offset]
        return PeriodicCF(head, (), period)

    def __str__(self) -> str:
        return format_cf(self.a0, self.preperiod, self.period)


def eval_finite(a0: int, word: Word) -> Fraction:
    """Return the exact value of [a0; word]."""
    return word_mobius(check_word(word), a0).at_infinity()


def convergents(a0: int, word: Word) -> list[Fraction]:
    """Return the convergents p_k/q_k of [a0; word], k = 0..len(word)."""
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    result = [Fraction(p, q)]
    for letter in word:
        p_prev, p = p, letter * p + p_prev
        q_prev, q = q, letter * q + q_prev
        result.append(Fraction(p, q))

    return result


@lru_cache(maxsize=8192)
def periodic_tail(period: Word) -> QuadSurd:
    """Return the value t > 1 of [period[0]; period[1], ..., (period)].

    It is the larger root of r*t^2 + (s - p)*t - q == 0 where (p q; r s)
    is the Möbius map of the period.

    """
    mobius = word_mobius(period)
    return qs_normalize(
        mobius.p - mobius.s, 1, 2 * mobius.r, mobius.discriminant
    )


@lru_cache(maxsize=8192)
def eval_periodic(cf: PeriodicCF) -> QuadSurd:
    """Return the exact value of an eventually periodic continued fraction."""
    prefix = word_mobius(cf.preperiod, cf.a0)
    if cf.is_finite:
        return QuadSurd.rational(prefix.at_infinity())

    return prefix.apply(periodic_tail(cf.period))


def _expand_rational(value: Fraction) -> PeriodicCF:
    a0 = floor(value)
    rest = value - a0
    letters = []
    while rest:
        rest = 1 / rest
        letter = floor(rest)
        letters.append(letter)
        rest -= letter

    return PeriodicCF(a0, tuple(letters), ())


def expand_surd(x: QuadSurd) -> PeriodicCF:
    """Return the continued fraction expansion of a quadratic surd.

    Rationals get a finite expansion (empty period). Otherwise complete
    quotients are iterated exactly until a state repeats.

    """
    if x.is_rational:
        return _expand_rational(x.to_fraction())

    a0 = qs_floor(x)
    state = qs_arith("inv", x - a0)
    seen: dict[QuadSurd, int] = {}
    letters: list[int] = []
    for position in count():
        if state in seen:
            break

        seen[state] = position
        letter = qs_floor(state)
        letters.append(letter)
        state = qs_arith("inv", state - letter)

    start = seen[state]
    logger.debug(
        "%s: preperiod of %d, period of %d", x, start, len(letters) - start
    )
    return canonical_period(
        PeriodicCF(a0, tuple(letters[:start]), tuple(letters[start:]))
    )


def canonical_period(cf: PeriodicCF) -> PeriodicCF:
    """Return the form with minimal period and minimal preperiod.

    Trailing preperiod letters equal to the last period letter are
    absorbed, rotating the period right each time. The integer part is
    never absorbed.

    """
    if cf.is_finite:
        return cf

    period = minimal_period(cf.period)
    preperiod = list(cf.preperiod)
    while preperiod and preperiod[-1] == period[-1]:
        preperiod.pop()
        period = period[-1:] + period[:-1]

    return PeriodicCF(cf.a0, tuple(preperiod), period)

