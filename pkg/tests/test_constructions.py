"""Tests of the gap endpoints and the words built around them."""

from fractions import Fraction

import pytest

from markoff.constructions import (
    LEFT_BLOCK,
    cnk_word,
    extremal_sequence,
    gbur_alpha_star,
    gbur_beta,
    gbur_pair,
    theorem1_lambda0,
    w0_x0_y0,
    zeta_prefix,
)
from markoff.errors import PreconditionError
from markoff.exact.surd import QuadSurd, qs_normalize
from markoff.exact.surdsum import SurdSum, refine, ss_compare, ss_make
from markoff.spectra.values import M_value

HURWITZ = SurdSum.coerce(QuadSurd.sqrt(5) + 1)


def approximately(value, expected: str) -> bool:
    return abs(refine(value, 40).midpoint - Fraction(expected)) < Fraction(
        1, 10**6
    )


@pytest.mark.parametrize(
    "value, expected",
    [
        (gbur_alpha_star(1), "3.129843"),
        (gbur_beta(1), "3.162278"),
        (gbur_alpha_star(2), "3.219648"),
        (gbur_beta(2), "3.224903"),
        (theorem1_lambda0(), "3.691471"),
    ],
)
def test_decimal_values(value, expected):
    assert approximately(value, expected)


def test_closed_forms():
    assert gbur_beta(1) == QuadSurd.sqrt(10)
    assert gbur_beta(0) == QuadSurd.sqrt(8)
    assert gbur_beta(2) == qs_normalize(0, 2, 5, 65)
    assert gbur_alpha_star(1) == SurdSum.of({30: Fraction(4, 7)})
    assert gbur_alpha_star(2) == SurdSum.of(
        {1: Fraction(985, 238), 30: Fraction(-599, 3570)}
    )


def test_gaps_are_ordered():
    previous = None
    for n in range(1, 7):
        alpha_star = gbur_alpha_star(n)
        assert ss_compare(alpha_star, gbur_beta(n)) == "less"
        assert ss_compare(alpha_star, HURWITZ) == "less"
        if previous is not None:
            assert ss_compare(previous, alpha_star) == "less"
        if n >= 2:
            assert ss_compare(gbur_alpha_star(2), alpha_star) != "greater"
        previous = alpha_star


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_x0_y0_sum(n):
    _, x0, y0 = w0_x0_y0(n)
    assert ss_make(x0, y0) + 2 == gbur_alpha_star(n + 1)


def test_w0():
    w0, _, _ = w0_x0_y0(1)
    assert w0 == qs_normalize(-4, 1, 4, 30)


def test_theorem1_lambda0_field():
    assert theorem1_lambda0().radicands == (3,)


@pytest.mark.parametrize("n, k", [(1, 1), (1, 3), (2, 1), (2, 2), (3, 4)])
def test_cnk_word(n, k):
    starred = cnk_word(n, k)
    (star,) = starred.stars
    (double_star,) = starred.double_stars
    assert len(starred.word) == 8 * k + 6 * n - 3
    assert star == 4 * k + 2 * n - 2
    assert double_star == 4 * k + 4 * n - 2
    assert starred.word[star] == starred.word[double_star] == 2
    assert starred.word[:4 * k] == LEFT_BLOCK * k
    assert set(starred.word[star + 1:double_star]) == {1}


def test_zeta_prefix():
    prefix = zeta_prefix(2, 3)
    assert len(prefix.word) == sum(8 * k + 9 for k in (1, 2, 3))
    assert len(prefix.stars) == len(prefix.double_stars) == 3
    assert prefix.word[:len(cnk_word(2, 1).word)] == cnk_word(2, 1).word
    for position in prefix.stars + prefix.double_stars:
        assert prefix.word[position] == 2


def test_extremal_sequence():
    result = M_value(extremal_sequence(1))
    assert ss_compare(result.value, gbur_alpha_star(2)) == "equal"
    assert result.attained
    assert result.witness == 2


def test_gbur_pair_json():
    payload = gbur_pair(2).to_json()
    assert payload["n"] == 2
    assert set(payload) == {"n", "alpha_star", "beta", "gap_width_decimal"}
    assert payload["beta"]["decimal"].startswith("3.224903")
    assert payload["gap_width_decimal"].startswith("0.00525")


def test_positive_parameters():
    with pytest.raises(PreconditionError):
        gbur_alpha_star(0)

    with pytest.raises(PreconditionError):
        gbur_beta(-1)

    with pytest.raises(PreconditionError):
        cnk_word(1, 0)
