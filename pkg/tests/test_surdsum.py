"""Tests of biquadratic values, their polynomials and their ordering."""

from fractions import Fraction
from itertools import permutations
import random

import pytest
from sympy import Poly, Rational, Symbol, minimal_polynomial, sqrt

from markoff.errors import FieldMismatchError
from markoff.exact.surd import QuadSurd, qs_normalize
from markoff.exact.surdsum import (
    SurdSum,
    evaluate,
    ss_compare,
    ss_make,
    ss_minpoly,
    value_payload,
)

x = Symbol("x")

VALUES = [
    SurdSum.of({1: Fraction(3, 4)}),
    SurdSum.of({5: Fraction(1)}),
    SurdSum.of({1: Fraction(-1, 2), 5: Fraction(1, 2)}),
    SurdSum.of({2: Fraction(1), 3: Fraction(1)}),
    SurdSum.of({1: Fraction(1, 2), 2: 1, 3: -1, 6: 2}),
    SurdSum.of({6: Fraction(1), 10: Fraction(1), 15: Fraction(1)}),
    SurdSum.of({1: Fraction(7), 2: Fraction(-2, 3), 10: Fraction(1, 5)}),
]


def as_sympy(value: SurdSum):
    return sum(
        Rational(coefficient.numerator, coefficient.denominator)
        * sqrt(radicand)
        for radicand, coefficient in value.terms
    )


@pytest.mark.parametrize("value", VALUES, ids=str)
def test_minpoly_matches_sympy(value):
    expected = Poly(minimal_polynomial(as_sympy(value), x), x).all_coeffs()
    assert ss_minpoly(value) == [int(c) for c in expected]


@pytest.mark.parametrize("value", VALUES, ids=str)
def test_minpoly_vanishes(value):
    assert evaluate(ss_minpoly(value), value).is_zero


def test_minpoly_examples():
    assert ss_minpoly(SurdSum.coerce(QuadSurd.sqrt(5))) == [1, 0, -5]
    golden = SurdSum.coerce(qs_normalize(-1, 1, 2, 5))
    assert ss_minpoly(golden) == [1, 1, -1]
    assert ss_minpoly(ss_make(QuadSurd.sqrt(2), QuadSurd.sqrt(3))) == [
        1,
        0,
        -10,
        0,
        1,
    ]


def test_generators():
    assert SurdSum.coerce(3).generators == (0, 0)
    root = SurdSum.coerce(QuadSurd.sqrt(5))
    assert (root.d1, root.d2) == (5, 5)
    assert root.s1 == 1 and root.s2 == 0 and root.s12 == 0
    assert SurdSum.of({2: 1, 3: 1}).generators == (2, 3)
    value = SurdSum.of({6: 1, 10: 1, 15: 4})
    assert value.generators == (6, 10)
    assert value.s12 == 2


def test_three_generators_mismatch():
    with pytest.raises(FieldMismatchError):
        SurdSum.of({2: 1, 3: 1, 5: 1})


def test_arithmetic():
    total = ss_make(QuadSurd.sqrt(2), QuadSurd.sqrt(3))
    assert total * total == SurdSum.of({1: 5, 6: 2})
    assert total - QuadSurd.sqrt(3) == SurdSum.coerce(QuadSurd.sqrt(2))
    assert ss_make(QuadSurd.sqrt(2), QuadSurd.sqrt(2)) == SurdSum.coerce(
        QuadSurd.sqrt(8)
    )
    assert (total - total).is_zero


def test_as_surd():
    value = SurdSum.of({1: Fraction(-1, 2), 5: Fraction(1, 2)})
    assert value.as_surd() == qs_normalize(-1, 1, 2, 5)
    assert SurdSum.of({2: 1, 3: 1}).as_surd() is None
    assert SurdSum.coerce(Fraction(2, 3)).as_surd() == QuadSurd.rational(
        Fraction(2, 3)
    )


def test_compare():
    total = ss_make(QuadSurd.sqrt(2), QuadSurd.sqrt(3))
    assert ss_compare(total, QuadSurd.sqrt(10)) == "less"
    assert ss_compare(QuadSurd.sqrt(10), total) == "greater"
    assert ss_compare(QuadSurd.sqrt(5), Fraction(9, 4)) == "less"
    assert ss_compare(total, SurdSum.of({2: 1, 3: 1})) == "equal"
    assert total < QuadSurd.sqrt(10)


def test_compare_close_values():
    # sqrt(10**12 + 1) is 10**6 + 1/(2 * 10**6) - 1.25e-19 or so.
    root = QuadSurd.sqrt(10**12 + 1)
    close = Fraction(10**6) + Fraction(1, 2 * 10**6)
    assert ss_compare(root, close) == "less"
    assert ss_compare(root, close - Fraction(1, 10**18)) == "greater"


def test_value_payload():
    payload = value_payload(QuadSurd.sqrt(5))
    assert payload["exact"] == "(0 + 1*sqrt(5))/1"
    assert payload["minpoly"] == [1, 0, -5]
    assert payload["decimal"].startswith("2.2360679774997896964")
    assert Fraction(payload["interval"]["lo"]) ** 2 < 5
    assert Fraction(payload["interval"]["hi"]) ** 2 > 5


def test_compare_across_biquadratic_fields():
    total = ss_make(QuadSurd.sqrt(2), QuadSurd.sqrt(3))
    assert ss_compare(total, SurdSum.coerce(QuadSurd.sqrt(10))) == "less"
    assert ss_compare(total, SurdSum.of({5: 1, 7: 1})) == "less"
    assert ss_compare(SurdSum.of({6: 1, 10: 1}), total) == "greater"
    # sqrt(8) reduces to 2*sqrt(2).
    other = ss_make(QuadSurd.sqrt(8), QuadSurd.sqrt(3))
    assert ss_compare(other, SurdSum.of({2: 2, 3: 1})) == "equal"


def test_three_generators_message():
    with pytest.raises(FieldMismatchError, match=r"\[2, 3, 5\]"):
        SurdSum.of({5: 1, 3: 1, 2: 1})


RADICANDS = (2, 3, 5, 6, 7, 10, 11)


def random_surd(rng: random.Random) -> QuadSurd:
    return qs_normalize(
        rng.randint(-5, 5),
        rng.choice((-3, -2, -1, 1, 2, 3)),
        rng.randint(1, 5),
        rng.choice(RADICANDS),
    )


def random_sum(rng: random.Random) -> SurdSum:
    return ss_make(random_surd(rng), random_surd(rng))


def test_minpoly_vanishes_at_random_sums():
    rng = random.Random(21)
    for _ in range(100):
        value = random_sum(rng)
        assert evaluate(ss_minpoly(value), value).is_zero


def test_compare_is_a_total_order():
    rng = random.Random(22)
    flipped = {"less": "greater", "equal": "equal", "greater": "less"}
    for _ in range(100):
        triple = [random_sum(rng) for _ in range(3)]
        for u in triple:
            assert ss_compare(u, u) == "equal"
            for v in triple:
                assert ss_compare(v, u) == flipped[ss_compare(u, v)]

        for u, v, w in permutations(triple):
            if u < v and v < w:
                assert u < w
