"""Seeded random runs of the verifiers."""

import random

from markoff.cf.periodic import PeriodicCF, canonical_period
from markoff.exact.surdsum import SurdSum, ss_compare
from markoff.settings import Settings
from markoff.spectra.biseq import BiSeq
from markoff.spectra.values import lambda_at
from markoff.spectra.window import lambda_window
from markoff.verifiers.comparison import comp_bounds_check, random_comp_case
from markoff.verifiers.repeat import find_repeat, repeat_length, verify_repeat
from markoff.verifiers.report import Report, run_trials
from markoff.verifiers.surgery import surgery_check


def random_word(rng: random.Random, size: int, alphabet_max: int = 4):
    return tuple(rng.randint(1, alphabet_max) for _ in range(size))


def comp_property(
    n: int,
    trials: int = Settings.trials,
    seed: int = Settings.seed,
    lengths: tuple[int, int] = Settings.word_lengths,
) -> Report:
    """Check the distance bounds on random pairs sharing n letters."""

    def predicate(case):
        report = comp_bounds_check(*case)
        return report.failures[0] if report.failures else None

    report = Report("comp", {"n": n, "seed": seed})
    return run_trials(
        report,
        lambda rng: random_comp_case(rng, n, lengths),
        predicate,
        trials,
        seed,
    )


def repeat_property(
    n: int, trials: int = Settings.trials, seed: int = Settings.seed
) -> Report:
    """Find and verify parity repeats in random words of length N(n)."""
    size = repeat_length(n)

    def predicate(word):
        witness = find_repeat(word, n)
        if witness is None or not verify_repeat(word, witness):
            return {"length": len(word), "witness": repr(witness)}
        return None

    report = Report("repeat", {"n": n, "length": size, "seed": seed})
    return run_trials(
        report, lambda rng: random_word(rng, size), predicate, trials, seed
    )


def random_surgery_case(rng: random.Random):
    """Return (A, B, C) with |B| even and C not purely periodic."""
    while True:
        a_word = random_word(rng, rng.randint(0, 4))
        b_block = random_word(rng, 2 * rng.randint(1, 2))
        c_tail = PeriodicCF(
            0,
            random_word(rng, rng.randint(1, 3)),
            random_word(rng, rng.randint(1, 3)),
        )
        if canonical_period(c_tail).preperiod:
            return (a_word, b_block, c_tail)


def surgery_property(
    trials: int = Settings.trials, seed: int = Settings.seed
) -> Report:
    """Check the surgery betweenness on random instances.

    Degenerate instances (equal values) are counted but not failures.

    """
    report = Report("surgery", {"seed": seed})
    degenerate = 0

    def predicate(case):
        nonlocal degenerate
        outcome = surgery_check(*case)
        if outcome.status == "degenerate":
            degenerate += 1
        return outcome.failures[0] if outcome.failures else None

    run_trials(report, random_surgery_case, predicate, trials, seed)
    report.result["degenerate"] = degenerate
    return report


def window_property(
    trials: int = Settings.trials, seed: int = Settings.seed
) -> Report:
    """Check windows enclose lambda of periodic extensions of a word."""

    def generate(rng):
        size = rng.randint(3, 12)
        word = random_word(rng, size)
        index = rng.randint(1, size - 2)
        slack = rng.randint(1, min(index, size - index - 1))
        left = random_word(rng, rng.randint(1, 3))
        right = random_word(rng, rng.randint(1, 3))
        return (word, index, slack, left, right)

    def predicate(case):
        word, index, slack, left, right = case
        interval = lambda_window(word, index, slack)
        value = lambda_at(BiSeq(left, word, right), index)
        below = ss_compare(SurdSum.coerce(interval.lo), value) != "greater"
        above = ss_compare(SurdSum.coerce(interval.hi), value) != "less"
        return below and above

    report = Report("window", {"seed": seed})
    return run_trials(report, generate, predicate, trials, seed)
