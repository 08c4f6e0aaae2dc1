"""Tests of quadratic surds."""

from fractions import Fraction
from math import floor
import random

import pytest

from markoff.errors import (
    DivisionByZeroError,
    FieldMismatchError,
    InvalidDenominatorError,
)
from markoff.exact.surd import (
    QuadSurd,
    qs_arith,
    qs_floor,
    qs_normalize,
    squarefree_split,
)


def test_squarefree_split():
    assert squarefree_split(0) == (1, 0)
    assert squarefree_split(1) == (1, 1)
    assert squarefree_split(12) == (2, 3)
    assert squarefree_split(49) == (7, 1)
    assert squarefree_split(360) == (6, 10)
    assert squarefree_split(30) == (1, 30)


def test_normalize_canonical_form():
    assert qs_normalize(2, 2, 4, 8) == QuadSurd(1, 2, 2, 2)
    assert qs_normalize(1, 2, -3, 5) == QuadSurd(-1, -2, 3, 5)
    assert qs_normalize(6, 3, 9, 5) == QuadSurd(2, 1, 3, 5)


def test_normalize_perfect_square_radicand_is_rational():
    assert qs_normalize(1, 1, 1, 4) == QuadSurd.rational(3)
    assert qs_normalize(1, 5, 2, 0) == QuadSurd.rational(Fraction(1, 2))
    assert qs_normalize(3, 7, 1, 1).is_rational


def test_normalize_zero_denominator():
    with pytest.raises(InvalidDenominatorError):
        qs_normalize(1, 1, 0, 2)


def test_field_operations():
    golden = qs_normalize(1, 1, 2, 5)
    assert golden * golden == golden + 1
    assert QuadSurd.sqrt(2) * QuadSurd.sqrt(2) == QuadSurd.rational(2)
    assert 1 / golden == golden - 1
    assert -golden == qs_normalize(-1, -1, 2, 5)
    assert qs_arith("inv", QuadSurd.sqrt(3)) == qs_normalize(0, 1, 3, 3)
    assert QuadSurd.sqrt(8) - QuadSurd.sqrt(2) == QuadSurd.sqrt(2)


def test_different_fields_mismatch():
    with pytest.raises(FieldMismatchError):
        QuadSurd.sqrt(2) + QuadSurd.sqrt(3)


def test_division_by_zero():
    with pytest.raises(DivisionByZeroError):
        QuadSurd.sqrt(2) / 0

    with pytest.raises(ZeroDivisionError):
        qs_arith("inv", QuadSurd.rational(0))


def test_floor():
    assert qs_floor(QuadSurd.sqrt(2)) == 1
    assert qs_floor(qs_normalize(-1, -1, 2, 5)) == -2
    assert qs_floor(qs_normalize(-4, 1, 4, 30)) == 0
    assert floor(qs_normalize(7, 3, 2, 10)) == 8
    assert qs_floor(QuadSurd.rational(Fraction(-7, 2))) == -4


def test_ordering_and_sign():
    assert QuadSurd.sqrt(2) < Fraction(3, 2)
    assert QuadSurd.sqrt(5) > 2
    assert qs_normalize(3, -1, 1, 10).sign() == -1
    assert qs_normalize(4, -1, 1, 10).sign() == 1
    assert QuadSurd.rational(0).sign() == 0
    assert QuadSurd.sqrt(7) >= QuadSurd.sqrt(7)


def test_conjugate_and_norm():
    golden = qs_normalize(1, 1, 2, 5)
    assert golden.conjugate() == qs_normalize(1, -1, 2, 5)
    assert golden.norm() == -1
    assert str(golden) == "(1 + 1*sqrt(5))/2"


def test_random_field_identities():
    rng = random.Random(31)
    for _ in range(200):
        d = rng.choice((2, 3, 5, 6, 7, 13))
        x, y = (
            qs_normalize(
                rng.randint(-6, 6), rng.randint(-4, 4), rng.randint(1, 6), d
            )
            for _ in range(2)
        )
        assert (x - y) + y == x
        assert qs_arith("sub", x, x).is_zero
        if not x.is_zero:
            assert x * qs_arith("inv", x) == QuadSurd.rational(1)
            assert qs_arith("div", y, x) * x == y
