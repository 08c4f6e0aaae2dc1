"""Tests of the text syntax."""

from fractions import Fraction

import pytest

from markoff.cf.periodic import PeriodicCF
from markoff.cf.syntax import (
    format_biseq,
    format_cf,
    parse_biseq_parts,
    parse_cf_parts,
    parse_value,
)
from markoff.errors import CFSyntaxError
from markoff.exact.surd import qs_normalize
from markoff.exact.surdsum import SurdSum, ss_compare
from markoff.spectra.biseq import BiSeq


def test_parse_cf():
    assert parse_cf_parts("[0; 1, 1, (2)]") == (0, (1, 1), (2,))
    assert parse_cf_parts("[0;(1)]") == (0, (), (1,))
    assert parse_cf_parts("  [3; 1 2 3]  ") == (3, (1, 2, 3), ())
    assert parse_cf_parts("[2]") == (2, (), ())
    assert parse_cf_parts("[2;]") == (2, (), ())
    assert parse_cf_parts("[-1; (2, 3)]") == (-1, (), (2, 3))


@pytest.mark.parametrize(
    "text, position",
    [
        ("[0; 1, x]", 7),
        ("[0; 1, 0]", 7),
        ("0; 1]", 0),
        ("[0; (1, 2]", 4),
        ("[0; ()]", 4),
    ],
)
def test_parse_cf_errors(text, position):
    with pytest.raises(CFSyntaxError) as error:
        parse_cf_parts(text)

    assert error.value.position == position


def test_period_must_come_last():
    with pytest.raises(CFSyntaxError, match="last"):
        parse_cf_parts("[0; (1), 2]")


def test_format_cf():
    assert format_cf(0, (1,), (2, 3)) == "[0; 1, (2, 3)]"
    assert format_cf(2, (), ()) == "[2]"
    for text in ["[0; 1, 1, (2)]", "[5; (1, 4, 3)]", "[1; 2, 3]"]:
        cf = PeriodicCF.parse(text)
        assert PeriodicCF.parse(str(cf)) == cf


def test_parse_biseq():
    assert parse_biseq_parts("<(2, 1)| 1 2 |(2)>") == ((2, 1), (1, 2), (2,))
    assert parse_biseq_parts("<(1)||(1)>") == ((1,), (), (1,))
    assert parse_biseq_parts("<(1)|2,2|(1,2)>") == ((1,), (2, 2), (1, 2))
    sequence = BiSeq((2, 1), (3,), (4, 1))
    assert BiSeq.parse(str(sequence)) == sequence
    assert format_biseq((1,), (), (2,)) == "<(1)||(2)>"


def test_parse_biseq_errors():
    with pytest.raises(CFSyntaxError, match="empty right period"):
        parse_biseq_parts("<(1)| 2 |( )>")

    with pytest.raises(CFSyntaxError) as error:
        parse_biseq_parts("(1)| 2 |(1)>")

    assert error.value.position == 0


def test_parse_value():
    assert parse_value("(-1 + 1*sqrt(5))/2") == qs_normalize(-1, 1, 2, 5)
    assert parse_value("(3 + 2*sqrt(12))/3") == qs_normalize(3, 4, 3, 3)
    expected = SurdSum.of({1: Fraction(1, 2), 2: 1, 3: 1})
    assert parse_value("1/2 + 1*sqrt(2) + 1*sqrt(3) + 0*sqrt(2*3)") == (
        expected
    )


def test_parse_value_errors():
    with pytest.raises(CFSyntaxError, match="zero denominator"):
        parse_value("(1 + 1*sqrt(5))/0")

    with pytest.raises(CFSyntaxError, match="negative radicand"):
        parse_value("(1 + 1*sqrt(-5))/2")

    with pytest.raises(CFSyntaxError):
        parse_value("three")


def test_printed_values_parse_back():
    values = [
        qs_normalize(-4, 1, 4, 30),
        SurdSum.of({1: Fraction(-7, 3), 2: Fraction(1, 2), 6: 5}),
        SurdSum.of({6: 1, 10: 1, 15: 4}),
        SurdSum.of({5: Fraction(2, 7)}),
    ]
    for value in values:
        parsed = parse_value(str(value))
        assert ss_compare(parsed, value) == "equal"
