"""Quadratic surds (a + b*sqrt(d))/c with exact integer arithmetic.

Every value of an eventually periodic continued fraction is such a surd.
Values are immutable and kept in canonical form:

    - d is squarefree, d >= 2, or d == 0 for rationals (then b == 0);
    - c > 0;
    - gcd(a, b, c) == 1.

Two surds are therefore equal if and only if their fields are equal.

"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Literal

from sympy import factorint

from markoff.errors import (
    DivisionByZeroError,
    FieldMismatchError,
    InvalidDenominatorError,
)

Operation = Literal["add", "sub", "mul", "div", "neg", "inv"]


@lru_cache(maxsize=4096)
def squarefree_split(d: int) -> tuple[int, int]:
    """Split d >= 0 into (f, r) with d == f * f * r and r squarefree."""
    if d < 0:
        raise ValueError(f"{d} isn't a nonnegative radicand")

    if d < 2:
        return (1, d)

    root = isqrt(d)
    if root * root == d:
        return (root, 1)

    factor, rest = 1, 1
    for prime, power in factorint(d).items():
        factor *= prime ** (power // 2)
        if power % 2:
            rest *= prime

    return (factor, rest)


@dataclass(frozen=True, slots=True)
class QuadSurd:

    """An exact quadratic surd (a + b*sqrt(d))/c in canonical form.

    Do not call the constructor directly with unreduced values: use
    `qs_normalize` (or the class helpers) which enforce the invariants.

    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def rational(cls, value: int | Fraction) -> "QuadSurd":
        """Return the surd holding a rational value."""
        value = Fraction(value)
        return cls(value.numerator, 0, value.denominator, 0)

    @classmethod
    def sqrt(cls, d: int) -> "QuadSurd":
        """Return the surd sqrt(d)."""
        return qs_normalize(0, 1, 1, d)

    @classmethod
    def coerce(cls, value: "QuadSurd | int | Fraction") -> "QuadSurd":
        """Return value as a surd, converting rationals."""
        if isinstance(value, QuadSurd):
            return value

        if isinstance(value, (int, Fraction)):
            return cls.rational(value)

        raise TypeError(f"can't convert {value!r} to a quadratic surd")

    @property
    def is_rational(self) -> bool:
        """Return whether the surd is a rational number."""
        return self.b == 0

    @property
    def is_zero(self) -> bool:
        """Return whether the surd is exactly zero."""
        return self.a == 0 and self.b == 0

    @property
    def rational_part(self) -> Fraction:
        """Return a/c."""
        return Fraction(self.a, self.c)

    @property
    def radical_part(self) -> Fraction:
        """Return b/c, the coefficient of sqrt(d)."""
        return Fraction(self.b, self.c)

    def to_fraction(self) -> Fraction:
        """Return the value as a fraction, if rational."""
        if not self.is_rational:
            raise ValueError(f"{self} isn't rational")

        return Fraction(self.a, self.c)

    def conjugate(self) -> "QuadSurd":
        """Return (a - b*sqrt(d))/c."""
        return QuadSurd(self.a, -self.b, self.c, self.d)

    def norm(self) -> Fraction:
        """Return the field norm, the product with the conjugate."""
        return Fraction(self.a * self.a - self.b * self.b * self.d,
                        self.c * self.c)

    def sign(self) -> int:
        """Return -1, 0 or 1 according to the sign of the value."""
        return _sign(self.a, self.b, self.d)

    def __str__(self) -> str:
        return f"({self.a} + {self.b}*sqrt({self.d}))/{self.c}"

    def __repr__(self) -> str:
        return f"QuadSurd{self}"

    def __floor__(self) -> int:
        return qs_floor(self)

    def __neg__(self) -> "QuadSurd":
        return qs_arith("neg", self)

    def __add__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return qs_arith("add", self, QuadSurd.coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return qs_arith("sub", self, QuadSurd.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return qs_arith("sub", QuadSurd.coerce(other), self)

    def __mul__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return qs_arith("mul", self, QuadSurd.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return qs_arith("div", self, QuadSurd.coerce(other))

    def __rtruediv__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return qs_arith("div", QuadSurd.coerce(other), self)

    def _difference_sign(self, other) -> int:
        return (self - QuadSurd.coerce(other)).sign()

    def __lt__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return self._difference_sign(other) < 0

    def __le__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return self._difference_sign(other) <= 0

    def __gt__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return self._difference_sign(other) > 0

    def __ge__(self, other):
        if not isinstance(other, (QuadSurd, int, Fraction)):
            return NotImplemented
        return self._difference_sign(other) >= 0


def _sign(a: int, b: int, d: int) -> int:
    """Sign of a + b*sqrt(d), d squarefree or 0."""
    if b == 0 or d == 0:
        return (a > 0) - (a < 0)

    sign_b = 1 if b > 0 else -1
    if a == 0 or (a > 0) == (b > 0):
        return sign_b

    # Opposite signs: the larger magnitude wins, a*a == b*b*d can't happen.
    sign_a = -sign_b
    return sign_a if a * a > b * b * d else sign_b


def _reduced(a: int, b: int, c: int, d: int) -> QuadSurd:
    """Build a canonical surd, d being already squarefree (or 0, 1)."""
    if c == 0:
        raise InvalidDenominatorError("a surd can't have a zero denominator")

    if d == 1:
        a, b, d = a + b, 0, 0
    elif b == 0 or d == 0:
        a, b, d = a + b * isqrt(d) if d else a, 0, 0

    if c < 0:
        a, b, c = -a, -b, -c

    divisor = gcd(a, b, c)
    if divisor > 1:
        a, b, c = a // divisor, b // divisor, c // divisor

    return QuadSurd(a, b, c, d)


def qs_normalize(a: int, b: int, c: int, d: int) -> QuadSurd:
    """Return the canonical surd equal to (a + b*sqrt(d))/c.

    Square factors of d are moved into b, the sign of c is made positive
    and the common factor of a, b and c is removed.

    Raises:
        InvalidDenominatorError: c is zero.

    """
    if c == 0:
        raise InvalidDenominatorError("a surd can't have a zero denominator")

    if d < 0:
        raise ValueError(f"{d} isn't a real radicand")

    factor, rest = squarefree_split(d)
    return _reduced(a, b * factor, c, rest)


def _field(x: QuadSurd, y: QuadSurd) -> int:
    """Return the common radicand of x and y."""
    if x.d == 0:
        return y.d

    if y.d == 0 or x.d == y.d:
        return x.d

    raise FieldMismatchError(
        f"{x} and {y} live in different quadratic fields, "
        "lift them to a SurdSum"
    )


def qs_arith(
    op: Operation, x: QuadSurd, y: QuadSurd | None = None
) -> QuadSurd:
    """Apply an exact field operation to one or two surds.

    Args:
        op (str): one of add, sub, mul, div, neg, inv.
        x (QuadSurd): the first operand.
        y (QuadSurd): the second operand, ignored by neg and inv.

    Raises:
        FieldMismatchError: the operands have distinct radicands.
        DivisionByZeroError: the divisor is zero.

    """
    match op:
        case "neg":
            return QuadSurd(-x.a, -x.b, x.c, x.d)
        case "inv":
            if x.is_zero:
                raise DivisionByZeroError(f"can't invert {x}")

            # c / (a + b*sqrt(d)) = c * (a - b*sqrt(d)) / (a^2 - b^2*d)
            return _reduced(
                x.c * x.a, -x.c * x.b, x.a * x.a - x.b * x.b * x.d, x.d
            )

    if y is None:
        raise ValueError(f"{op!r} needs two operands")

    d = _field(x, y)
    match op:
        case "add":
            return _reduced(
                x.a * y.c + y.a * x.c, x.b * y.c + y.b * x.c, x.c * y.c, d
            )
        case "sub":
            return _reduced(
                x.a * y.c - y.a * x.c, x.b * y.c - y.b * x.c, x.c * y.c, d
            )
        case "mul":
            return _reduced(
                x.a * y.a + x.b * y.b * d,
                x.a * y.b + x.b * y.a,
                x.c * y.c,
                d,
            )
        case "div":
            return qs_arith("mul", x, qs_arith("inv", y))
        case _:
            raise ValueError(f"unknown operation: {op!r}")


def qs_floor(x: QuadSurd) -> int:
    """Return the greatest integer <= x, exactly.

    For b > 0, floor(b*sqrt(d)) is isqrt(b*b*d) since the product is
    irrational; for b < 0 it is one less than -isqrt(b*b*d).

    """
    if x.b == 0:
        return x.a // x.c

    root = isqrt(x.b * x.b * x.d)
    radical_floor = root if x.b > 0 else -root - 1
    return (x.a + radical_floor) // x.c
