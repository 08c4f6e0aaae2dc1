"""Continued fractions: evaluation, expansion and comparison."""

from markoff.cf.mobius import Mobius, word_mobius
from markoff.cf.parity import compare_by_parity, compare_exactly, tail_cf
from markoff.cf.periodic import (
    PeriodicCF,
    canonical_period,
    convergents,
    eval_finite,
    eval_periodic,
    expand_surd,
    periodic_tail,
)
from markoff.cf.words import Word

__all__ = [
    "Mobius",
    "PeriodicCF",
    "Word",
    "canonical_period",
    "compare_by_parity",
    "compare_exactly",
    "convergents",
    "eval_finite",
    "eval_periodic",
    "expand_surd",
    "periodic_tail",
    "tail_cf",
    "word_mobius",
]
