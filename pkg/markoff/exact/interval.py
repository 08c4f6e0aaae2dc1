"""Rational intervals certifying real algebraic values.

Refinement never uses binary floating point: sqrt(r) is enclosed by
isqrt(r * 4**k) / 2**k and the next dyadic number, so every interval
returned by `refine` provably contains the value.

"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable


@dataclass(frozen=True, slots=True)
class Interval:

    """A closed interval [lo, hi] with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: int | Fraction) -> "Interval":
        """Return the interval reduced to one rational value."""
        value = Fraction(value)
        return cls(value, value)

    @property
    def width(self) -> Fraction:
        """Return hi - lo."""
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        """Return the middle of the interval."""
        return (self.lo + self.hi) / 2

    def contains(self, value: int | Fraction) -> bool:
        """Return whether a rational value lies in the interval."""
        return self.lo <= value <= self.hi

    def excludes_zero(self) -> bool:
        """Return whether zero lies outside the interval."""
        return self.lo > 0 or self.hi < 0

    def sign(self) -> int | None:
        """Return the sign of every point, or None if zero is inside."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def __add__(self, other: "Interval") -> "Interval":
        if not isinstance(other, Interval):
            return NotImplemented
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other: "Interval") -> "Interval":
        if not isinstance(other, Interval):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: int | Fraction) -> "Interval":
        """Return the interval multiplied by a rational factor."""
        lo, hi = self.lo * factor, self.hi * factor
        return Interval(min(lo, hi), max(lo, hi))

    def hull(self, other: "Interval") -> "Interval":
        """Return the smallest interval containing both intervals."""
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def decimal(self, digits: int) -> str:
        """Return the midpoint truncated to `digits` decimals."""
        scaled = self.midpoint * 10**digits
        negative = scaled < 0
        whole = abs(scaled.numerator) // scaled.denominator
        integer, fraction = divmod(whole, 10**digits)
        text = f"{integer}.{fraction:0{digits}d}" if digits else f"{integer}"
        return f"-{text}" if negative else text

    def to_json(self) -> dict[str, str]:
        """Return the endpoints as exact text."""
        return {"lo": str(self.lo), "hi": str(self.hi)}


def sqrt_interval(radicand: int, bits: int) -> Interval:
    """Enclose sqrt(radicand) in an interval of width 2**-bits."""
    if radicand < 0:
        raise ValueError(f"{radicand} has no real square root")

    root = isqrt(radicand)
    if root * root == radicand:
        return Interval.point(root)

    low = isqrt(radicand << (2 * bits))
    return Interval(Fraction(low, 1 << bits), Fraction(low + 1, 1 << bits))


def refine_terms(terms: Iterable[tuple[int, Fraction]], bits: int) -> Interval:
    """Enclose sum(coefficient * sqrt(radicand)) to within 2**-bits.

    Args:
        terms (iterable): pairs (radicand, coefficient), radicand 1 being
                the rational part.
        bits (int): the requested precision.

    """
    terms = list(terms)
    total = sum(abs(coefficient) for radicand, coefficient in terms
                if radicand != 1)
    # Each irrational term contributes |coefficient| * 2**-extra.
    extra = bits + 1
    if total:
        extra += (total.numerator // total.denominator + 1).bit_length()

    interval = Interval.point(0)
    for radicand, coefficient in terms:
        if radicand == 1:
            interval = interval + Interval.point(coefficient)
        else:
            interval = interval + sqrt_interval(radicand, extra).scale(
                coefficient
            )

    return interval
