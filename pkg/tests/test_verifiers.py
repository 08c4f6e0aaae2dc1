"""Tests of the verifiers and their reports."""

import random

import pytest

from markoff.cf.parity import compare_exactly
from markoff.cf.periodic import PeriodicCF
from markoff.constructions import extremal_sequence
from markoff.errors import MarkoffError, PreconditionError
from markoff.spectra.biseq import BiSeq
from markoff.verifiers.banned import (
    banned_contrapositive,
    contains_banned,
    firstelements_classify,
    min_avoiding_check,
)
from markoff.verifiers.comparison import comp_bounds_check
from markoff.verifiers.properties import (
    comp_property,
    repeat_property,
    surgery_property,
    window_property,
)
from markoff.verifiers.repeat import (
    RepeatWitness,
    find_repeat,
    repeat_length,
    verify_repeat,
)
from markoff.verifiers.report import MAX_FAILURES, Report, run_trials
from markoff.verifiers.surgery import surgery_check, surgery_from_repeat
from markoff.verifiers.zeta import zeta_check, zeta_windows


def test_report_caps_failures():
    report = Report("demo", {})
    for case in range(MAX_FAILURES + 5):
        report.fail(case)

    assert report.failed == MAX_FAILURES + 5
    assert len(report.failures) == MAX_FAILURES
    assert report.status == "failed"
    assert not report.ok


def test_report_degenerate():
    report = Report("demo", {})
    report.degenerate("equal values")
    assert report.status == "degenerate"
    assert report.ok
    assert report.to_json()["result"] == {"degenerate": ["equal values"]}


def test_run_trials_counts_errors():
    def predicate(case):
        if case % 2:
            raise PreconditionError("odd")
        return True

    report = run_trials(
        Report("demo", {}), lambda rng: rng.randint(0, 9), predicate, 30, 3
    )
    rng = random.Random(3)
    cases = [rng.randint(0, 9) for _ in range(30)]
    assert report.trials == 30
    assert report.failed == sum(case % 2 for case in cases)
    assert all("error" in failure for failure in report.failures)


def test_repeat_length():
    assert repeat_length(0) == 34
    assert repeat_length(1) == 1028
    with pytest.raises(PreconditionError):
        repeat_length(-1)


def test_find_repeat():
    witness = find_repeat((1, 1, 1, 1), 0, best_effort=True)
    assert witness == RepeatWitness(1, 3, 2)
    assert verify_repeat((1, 1, 1, 1), witness)
    assert find_repeat((1, 2, 3, 4), 0, best_effort=True) is None


@pytest.mark.parametrize("seed", [0, 1, 2])
@pytest.mark.parametrize("aligned", [True, False])
def test_find_repeat_on_random_words(seed, aligned):
    rng = random.Random(seed)
    word = tuple(rng.randint(1, 4) for _ in range(repeat_length(1)))
    witness = find_repeat(word, 1, aligned=aligned)
    assert witness is not None
    assert witness.block_len == 4
    assert (witness.n2 - witness.n1) % 2 == 0
    assert verify_repeat(word, witness)


def test_find_repeat_too_short():
    with pytest.raises(PreconditionError):
        find_repeat((1, 2, 1), 0)

    with pytest.raises(MarkoffError):
        find_repeat((5,) * 34, 0)


def test_verify_repeat_rejects_bad_witnesses():
    word = (1, 1, 1, 1)
    assert not verify_repeat(word, RepeatWitness(1, 2, 2))
    assert not verify_repeat(word, RepeatWitness(3, 5, 2))
    assert not verify_repeat((1, 2, 2, 1), RepeatWitness(1, 3, 2))


def test_surgery_check():
    report = surgery_check((1,), (1, 2), PeriodicCF(0, (3,), (1,)))
    assert report.status == "ok"
    assert set(report.result) == {"gamma", "gamma1", "gamma2"}


def test_surgery_check_with_preperiod_rolling_into_period():
    # [0; 2, (1, 2)] equals [0; (2, 1)], the preperiod is kept as written.
    report = surgery_check((), (1, 1), PeriodicCF(0, (2,), (1, 2)))
    assert report.status == "ok"
    report = surgery_check((2,), (1, 2), PeriodicCF(0, (1,), (2,)))
    assert report.status == "ok"


def test_surgery_preconditions():
    with pytest.raises(PreconditionError, match="odd length"):
        surgery_check((1,), (2,), PeriodicCF(0, (3,), (1,)))

    with pytest.raises(PreconditionError, match="purely periodic"):
        surgery_check((1,), (1, 2), PeriodicCF(0, (), (1, 2)))


def test_surgery_from_repeat():
    word = (3, 1, 2, 1, 2, 4)
    report = surgery_from_repeat(word, 0, PeriodicCF(0, (), (1,)))
    assert report.ok
    assert report.result["witness"] == {"n1": 2, "n2": 4, "block_len": 2}


@pytest.mark.parametrize(
    "case",
    [
        (0, (1, 2), (1,), (2,)),
        (1, (), (3, 1), (2, 4)),
        (0, (4, 4, 1), (2, 2), (1, 3)),
    ],
)
def test_comp_bounds_check(case):
    report = comp_bounds_check(*case)
    assert report.ok
    assert report.result["order"] == compare_exactly(*case)


def test_comp_bounds_check_across_fields():
    report = comp_bounds_check(0, (1,), (1,), (2,))
    assert report.ok
    assert report.result["order"] == "less"


def test_comp_bounds_check_equal_heads():
    report = comp_bounds_check(0, (1,), (2, 1), (2, 3))
    assert not report.ok
    assert "error" in report.failures[0]


def test_contains_banned():
    assert contains_banned((1, 2))
    assert not contains_banned((1, 2), cyclic=False)
    assert not contains_banned((2, 2, 1, 2))
    assert contains_banned((1, 3))
    assert contains_banned((2, 1, 2, 1, 1), cyclic=False)
    assert not contains_banned((1, 1, 2, 2))


def test_min_avoiding_check():
    report = min_avoiding_check(8)
    assert report.status == "ok"
    assert report.result["minimizer"] == [2, 1, 2, 2, 2, 1, 2, 2]
    with pytest.raises(PreconditionError):
        min_avoiding_check(3)


@pytest.mark.slow
def test_min_avoiding_check_long():
    assert min_avoiding_check(14).status == "ok"


def test_banned_contrapositive():
    report = banned_contrapositive(4)
    assert report.status == "ok"
    assert report.trials > 0


@pytest.mark.slow
def test_banned_contrapositive_long():
    assert banned_contrapositive(6).status == "ok"


def test_firstelements_classify():
    report = firstelements_classify(extremal_sequence(1))
    assert report.status == "ok"
    assert report.result["shape"] == report.result["bounds"] == 1


def test_firstelements_needs_a_maximum():
    with pytest.raises(PreconditionError):
        firstelements_classify(BiSeq((2, 1), (), (1, 2)))

    with pytest.raises(PreconditionError, match="maximum"):
        firstelements_classify(BiSeq.periodic((2, 2, 1, 2)), index=0)


def test_zeta_windows():
    rows = zeta_windows(1, 2)
    assert rows
    for index, slack, interval in rows:
        assert 1 <= slack <= index
        assert interval.lo <= interval.hi


@pytest.mark.slow
def test_zeta_check():
    report = zeta_check(2, 6)
    assert report.status == "ok"
    assert len(report.result["stars"]) == 6


def test_comp_property():
    report = comp_property(2, trials=25, seed=1)
    assert report.trials == 25
    assert report.status == "ok"


def test_repeat_property():
    report = repeat_property(0, trials=20, seed=4)
    assert report.trials == 20
    assert report.status == "ok"


def test_surgery_property():
    report = surgery_property(trials=25, seed=2)
    assert report.trials == 25
    assert report.ok


def test_window_property():
    report = window_property(trials=25, seed=5)
    assert report.trials == 25
    assert report.status == "ok"


@pytest.mark.slow
def test_properties_at_scale():
    assert comp_property(6, trials=1000).ok
    assert repeat_property(1, trials=200).ok
    assert surgery_property(trials=1000).ok
    assert window_property(trials=1000).ok
