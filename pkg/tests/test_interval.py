"""Tests of rational intervals and refinement."""

from fractions import Fraction

import pytest

from markoff.exact.interval import Interval, refine_terms, sqrt_interval
from markoff.exact.surd import QuadSurd
from markoff.exact.surdsum import SurdSum, refine


def test_empty_interval_rejected():
    with pytest.raises(ValueError):
        Interval(Fraction(2), Fraction(1))


def test_sign():
    assert Interval(Fraction(1, 3), Fraction(1, 2)).sign() == 1
    assert Interval(Fraction(-1), Fraction(-1, 2)).sign() == -1
    assert Interval.point(0).sign() == 0
    assert Interval(Fraction(-1), Fraction(1)).sign() is None
    assert not Interval(Fraction(-1), Fraction(1)).excludes_zero()


def test_arithmetic():
    first = Interval(Fraction(1), Fraction(2))
    second = Interval(Fraction(-1), Fraction(3))
    assert first + second == Interval(Fraction(0), Fraction(5))
    assert first - second == Interval(Fraction(-2), Fraction(3))
    assert first.scale(-2) == Interval(Fraction(-4), Fraction(-2))
    assert first.hull(second) == second
    assert first.width == 1
    assert first.midpoint == Fraction(3, 2)


def test_sqrt_interval():
    interval = sqrt_interval(2, 20)
    assert interval.lo**2 < 2 < interval.hi**2
    assert interval.width == Fraction(1, 2**20)
    assert sqrt_interval(49, 20) == Interval.point(7)

    with pytest.raises(ValueError):
        sqrt_interval(-1, 4)


def test_refine_width_and_enclosure():
    value = SurdSum.of({1: Fraction(1, 3), 2: Fraction(-5), 3: Fraction(7)})
    for bits in (1, 8, 40, 100):
        interval = refine(value, bits)
        finer = refine(value, bits + 20)
        assert interval.width <= Fraction(1, 2**bits)
        assert interval.lo <= finer.hi and finer.lo <= interval.hi


def test_refine_terms_rational_only():
    assert refine_terms([(1, Fraction(5, 7))], 10) == Interval.point(
        Fraction(5, 7)
    )


def test_decimal():
    assert Interval.point(Fraction(1, 3)).decimal(5) == "0.33333"
    assert Interval.point(Fraction(-1, 3)).decimal(3) == "-0.333"
    assert Interval.point(Fraction(5, 2)).decimal(0) == "2"
    assert refine(QuadSurd.sqrt(2), 80).decimal(10) == "1.4142135623"


def test_refine_rejects_nonpositive_bits():
    with pytest.raises(ValueError):
        refine(QuadSurd.sqrt(2), 0)
