"""Möbius maps built from partial quotients.

The partial quotient a acts as t -> a + 1/t, i.e. the matrix (a 1; 1 0).
The product for a word (a1, ..., an) maps a tail t to [a1; a2, ..., an, t]
and its columns hold the last two convergents.

"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from markoff.errors import DivisionByZeroError
from markoff.exact.surd import QuadSurd


@dataclass(frozen=True, slots=True)
class Mobius:

    """The map t -> (p*t + q) / (r*t + s)."""

    p: int
    q: int
    r: int
    s: int

    @classmethod
    def identity(cls) -> "Mobius":
        return cls(1, 0, 0, 1)

    @classmethod
    def quotient(cls, letter: int) -> "Mobius":
        """Return the map t -> letter + 1/t."""
        return cls(letter, 1, 1, 0)

    @property
    def determinant(self) -> int:
        return self.p * self.s - self.q * self.r

    @property
    def trace(self) -> int:
        return self.p + self.s

    @property
    def discriminant(self) -> int:
        """Return the discriminant of the fixed-point equation.

        Fixed points solve r*t^2 + (s - p)*t - q == 0.

        """
        return (self.p - self.s) ** 2 + 4 * self.q * self.r

    def __matmul__(self, other: "Mobius") -> "Mobius":
        return Mobius(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def at_infinity(self) -> Fraction:
        """Return the image of infinity, p/r."""
        if self.r == 0:
            raise DivisionByZeroError(f"{self} sends infinity to infinity")
        return Fraction(self.p, self.r)

    def apply(self, t: int | Fraction | QuadSurd) -> Fraction | QuadSurd:
        """Return the exact image of t."""
        if isinstance(t, QuadSurd):
            return (t * self.p + self.q) / (t * self.r + self.s)

        t = Fraction(t)
        denominator = self.r * t + self.s
        if denominator == 0:
            raise DivisionByZeroError(f"{self} sends {t} to infinity")
        return (self.p * t + self.q) / denominator


def word_mobius(word: Iterable[int], a0: int | None = None) -> Mobius:
    """Return the product of the partial-quotient maps of a word.

    Args:
        word (iterable): the partial quotients.
        a0 (int): an optional integer part prepended to the word.

    """
    result = Mobius.identity() if a0 is None else Mobius.quotient(a0)
    for letter in word:
        result = result @ Mobius.quotient(letter)
    return result
