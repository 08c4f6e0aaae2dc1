"""Executable checks of the combinatorial statements."""

from markoff.verifiers.admissible import (
    AdmissibilityReport,
    admissible_search,
)
from markoff.verifiers.banned import (
    banned_contrapositive,
    contains_banned,
    firstelements_classify,
    min_avoiding_check,
)
from markoff.verifiers.comparison import comp_bounds_check
from markoff.verifiers.repeat import RepeatWitness, find_repeat, verify_repeat
from markoff.verifiers.report import Report
from markoff.verifiers.surgery import surgery_check, surgery_from_repeat
from markoff.verifiers.zeta import zeta_check, zeta_windows

__all__ = [
    "AdmissibilityReport",
    "RepeatWitness",
    "Report",
    "admissible_search",
    "banned_contrapositive",
    "comp_bounds_check",
    "contains_banned",
    "find_repeat",
    "firstelements_classify",
    "min_avoiding_check",
    "surgery_check",
    "surgery_from_repeat",
    "verify_repeat",
    "zeta_check",
    "zeta_windows",
]
