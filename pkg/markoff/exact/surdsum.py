"""Exact elements of a real biquadratic field.

A `SurdSum` is a finite sum of rational multiples of square roots of
squarefree integers, all living in one field Q(sqrt(d1), sqrt(d2)). It is
the natural home of lambda values: each is a sum of two quadratic surds
which may come from different quadratic fields.

The terms are kept as a sorted tuple of (radicand, coefficient) pairs,
radicand 1 holding the rational part. Since 1, sqrt(d1), sqrt(d2) and
sqrt(d1 * d2) are linearly independent over Q, this form is canonical.

"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Literal

from sympy import Poly, QQ, Rational, Symbol

from markoff.errors import FieldMismatchError
from markoff.exact.interval import Interval, refine_terms
from markoff.exact.surd import QuadSurd, qs_normalize

Ordering = Literal["less", "equal", "greater"]
X = Symbol("X")


def _product_radicand(first: int, second: int) -> tuple[int, int]:
    """Return (g, r) with sqrt(first * second) == g * sqrt(r)."""
    common = gcd(first, second)
    return (common, first * second // (common * common))


def _generators(radicands) -> tuple[int, ...]:
    """Return at most two radicands generating the field of `radicands`.

    Raises:
        FieldMismatchError: the radicands need three generators.

    """
    radicands = sorted(radicands)
    generators: list[int] = []
    span = {1}
    for radicand in radicands:
        if radicand in span:
            continue

        generators.append(radicand)
        if len(generators) > 2:
            raise FieldMismatchError(
                f"radicands {radicands} don't fit in one "
                "biquadratic field"
            )

        span |= {_product_radicand(radicand, other)[1] for other in span}

    # Canonical generators: the two smallest radicands of the field.
    irrational = sorted(span - {1})
    return tuple(irrational[:2])


@dataclass(frozen=True, slots=True)
class SurdSum:

    """An exact value base + s1*sqrt(d1) + s2*sqrt(d2) + s12*sqrt(d1*d2).

    Build instances with `SurdSum.of`, `ss_make` or arithmetic: the
    constructor expects canonical terms.

    """

    terms: tuple[tuple[int, Fraction], ...]

    @classmethod
    def of(cls, mapping: dict[int, Fraction]) -> "SurdSum":
        """Return the canonical sum of coefficient * sqrt(radicand)."""
        terms = tuple(
            (radicand, Fraction(coefficient))
            for radicand, coefficient in sorted(mapping.items())
            if coefficient
        )
        _generators(radicand for radicand, _ in terms if radicand != 1)
        return cls(terms)

    @classmethod
    def coerce(cls, value: "SurdSum | QuadSurd | int | Fraction") -> "SurdSum":
        """Return value as a SurdSum."""
        match value:
            case SurdSum():
                return value
            case QuadSurd():
                mapping = {1: Fraction(value.a, value.c)}
                if value.b:
                    mapping[value.d] = Fraction(value.b, value.c)
                return cls.of(mapping)
            case int() | Fraction():
                return cls.of({1: Fraction(value)})

        raise TypeError(f"can't convert {value!r} to a SurdSum")

    @property
    def mapping(self) -> dict[int, Fraction]:
        """Return the terms as a dictionary radicand -> coefficient."""
        return dict(self.terms)

    @property
    def radicands(self) -> tuple[int, ...]:
        """Return the irrational radicands with a nonzero coefficient."""
        return tuple(radicand for radicand, _ in self.terms if radicand != 1)

    @property
    def generators(self) -> tuple[int, int]:
        """Return (d1, d2), the two smallest radicands of the field.

        A quadratic value has d1 == d2, a rational one d1 == d2 == 0.

        """
        generators = _generators(self.radicands)
        match generators:
            case ():
                return (0, 0)
            case (single,):
                return (single, single)

        return generators

    @property
    def base(self) -> Fraction:
        """Return the rational part."""
        return self.mapping.get(1, Fraction(0))

    @property
    def d1(self) -> int:
        return self.generators[0]

    @property
    def d2(self) -> int:
        return self.generators[1]

    @property
    def s1(self) -> Fraction:
        """Return the coefficient of sqrt(d1)."""
        if not self.d1:
            return Fraction(0)

        return self.mapping.get(self.d1, Fraction(0))

    @property
    def s2(self) -> Fraction:
        """Return the coefficient of sqrt(d2), zero for quadratic values."""
        d1, d2 = self.generators
        if d1 == d2:
            return Fraction(0)

        return self.mapping.get(d2, Fraction(0))

    @property
    def s12(self) -> Fraction:
        """Return the coefficient of sqrt(d1 * d2)."""
        d1, d2 = self.generators
        if d1 == d2:
            return Fraction(0)

        common, radicand = _product_radicand(d1, d2)
        return self.mapping.get(radicand, Fraction(0)) / common

    @property
    def is_rational(self) -> bool:
        """Return whether the value is rational."""
        return not self.radicands

    @property
    def is_zero(self) -> bool:
        """Return whether the value is exactly zero."""
        return not self.terms

    def as_surd(self) -> QuadSurd | None:
        """Return the value as a QuadSurd, or None outside a quadratic field."""
        radicands = self.radicands
        if len(radicands) > 1:
            return None

        base = self.base
        if not radicands:
            return QuadSurd.rational(base)

        coefficient = self.mapping[radicands[0]]
        denominator = lcm(base.denominator, coefficient.denominator)
        return qs_normalize(
            int(base * denominator),
            int(coefficient * denominator),
            denominator,
            radicands[0],
        )

    def __str__(self) -> str:
        return (
            f"{self.base} + {self.s1}*sqrt({self.d1}) + "
            f"{self.s2}*sqrt({self.d2}) + "
            f"{self.s12}*sqrt({self.d1}*{self.d2})"
        )

    def __repr__(self) -> str:
        return f"SurdSum({self})"

    def __neg__(self) -> "SurdSum":
        return SurdSum(tuple((r, -c) for r, c in self.terms))

    def __add__(self, other):
        if not isinstance(other, (SurdSum, QuadSurd, int, Fraction)):
            return NotImplemented

        mapping = self.mapping
        for radicand, coefficient in SurdSum.coerce(other).terms:
            mapping[radicand] = mapping.get(radicand, 0) + coefficient
        return SurdSum.of(mapping)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (SurdSum, QuadSurd, int, Fraction)):
            return NotImplemented
        return self + (-SurdSum.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (SurdSum, QuadSurd, int, Fraction)):
            return NotImplemented
        return SurdSum.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (SurdSum, QuadSurd, int, Fraction)):
            return NotImplemented

        mapping: dict[int, Fraction] = {}
        for first, left in self.terms:
            for second, right in SurdSum.coerce(other).terms:
                common, radicand = _product_radicand(first, second)
                mapping[radicand] = (
                    mapping.get(radicand, 0) + left * right * common
                )
        return SurdSum.of(mapping)

    __rmul__ = __mul__

    def __lt__(self, other):
        return ss_compare(self, SurdSum.coerce(other)) == "less"

    def __le__(self, other):
        return ss_compare(self, SurdSum.coerce(other)) != "greater"

    def __gt__(self, other):
        return ss_compare(self, SurdSum.coerce(other)) == "greater"

    def __ge__(self, other):
        return ss_compare(self, SurdSum.coerce(other)) != "less"


def ss_make(x: QuadSurd | SurdSum, y: QuadSurd | SurdSum) -> SurdSum:
    """Return x + y embedded in their compositum field.

    Equal radicands and rational operands collapse to fewer terms.

    """
    return SurdSum.coerce(x) + SurdSum.coerce(y)


def _cleared(poly: Poly) -> list[int]:
    """Return integer coefficients, coprime, leading one positive."""
    coefficients = [
        Fraction(int(c.p), int(c.q)) for c in poly.all_coeffs()
    ]
    denominator = lcm(*(c.denominator for c in coefficients))
    integers = [int(c * denominator) for c in coefficients]
    content = gcd(*integers)
    if integers[0] < 0:
        content = -content

    return [value // content for value in integers]


def ss_minpoly(u: SurdSum) -> list[int]:
    """Return the product of X - conjugate over the distinct conjugates.

    Coefficients are integers, highest degree first, coprime, with a
    positive leading coefficient. The minimal polynomial of u divides it.

    """
    base = Rational(u.base.numerator, u.base.denominator)
    shifted = Poly(X - base, X, domain=QQ)
    if u.is_rational:
        return _cleared(shifted)

    if len(u.radicands) == 1:
        (radicand,) = u.radicands
        coefficient = u.mapping[radicand]
        square = coefficient * coefficient * radicand
        return _cleared(
            shifted**2 - Rational(square.numerator, square.denominator)
        )

    d1, d2 = u.generators
    s1, s2, s12 = u.s1, u.s2, u.s12
    # Pair the conjugates on the sign of sqrt(d2), then on sqrt(d1).
    constant = s1 * s1 * d1 - s2 * s2 * d2 - s12 * s12 * d1 * d2
    cross = 2 * s2 * s12 * d2
    inner = shifted**2 + Rational(constant.numerator, constant.denominator)
    odd = shifted * Rational(2 * s1.numerator, s1.denominator) + Rational(
        cross.numerator, cross.denominator
    )
    return _cleared(inner**2 - odd**2 * d1)


def evaluate(coefficients: list[int], u: SurdSum) -> SurdSum:
    """Evaluate a polynomial (highest degree first) at u exactly."""
    result = SurdSum.of({})
    for coefficient in coefficients:
        result = result * u + coefficient
    return result


def refine(u: SurdSum | QuadSurd, bits: int) -> Interval:
    """Return an interval of width <= 2**-bits containing u."""
    if bits < 1:
        raise ValueError(f"{bits} isn't a positive number of bits")

    return refine_terms(SurdSum.coerce(u).terms, bits)


def _difference_terms(u, v) -> tuple[tuple[int, Fraction], ...]:
    """Return the canonical terms of u - v, whatever their field."""
    mapping = SurdSum.coerce(u).mapping
    for radicand, coefficient in SurdSum.coerce(v).terms:
        mapping[radicand] = mapping.get(radicand, 0) - coefficient

    return tuple(
        (radicand, coefficient)
        for radicand, coefficient in sorted(mapping.items())
        if coefficient
    )


def ss_compare(
    u: SurdSum | QuadSurd, v: SurdSum | QuadSurd, bits: int = 64
) -> Ordering:
    """Order two exact values, from any fields.

    Square roots of distinct squarefree integers are linearly independent
    over Q, so u == v exactly when the terms of u - v all cancel. A
    nonzero difference is refined with a doubling number of bits until
    its interval excludes zero.

    Args:
        u (SurdSum or QuadSurd): the first value.
        v (SurdSum or QuadSurd): the second value.
        bits (int): the precision of the first refinement.

    """
    terms = _difference_terms(u, v)
    if not terms:
        return "equal"

    if terms[0][0] == 1 and len(terms) == 1:
        return "greater" if terms[0][1] > 0 else "less"

    while True:
        interval = refine_terms(terms, bits)
        if interval.lo > 0:
            return "greater"
        if interval.hi < 0:
            return "less"

        bits *= 2


def value_payload(
    u: SurdSum | QuadSurd, bits: int = 40, digits: int = 30
) -> dict:
    """Return the JSON description of an exact value."""
    u_sum = SurdSum.coerce(u)
    surd = u_sum.as_surd()
    exact = str(surd) if surd is not None else str(u_sum)
    # Enough bits for the decimal digits, never fewer than requested.
    decimal_bits = max(bits, digits * 4 + 8)
    return {
        "exact": exact,
        "minpoly": ss_minpoly(u_sum),
        "interval": refine(u_sum, bits).to_json(),
        "decimal": refine(u_sum, decimal_bits).decimal(digits),
    }
