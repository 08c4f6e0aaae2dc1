"""Exact quadratic and biquadratic values, certified intervals."""

from markoff.exact.interval import Interval
from markoff.exact.surd import QuadSurd, qs_arith, qs_floor, qs_normalize
from markoff.exact.surdsum import (
    SurdSum,
    refine,
    ss_compare,
    ss_make,
    ss_minpoly,
    value_payload,
)

__all__ = [
    "Interval",
    "QuadSurd",
    "SurdSum",
    "qs_arith",
    "qs_floor",
    "qs_normalize",
    "refine",
    "ss_compare",
    "ss_make",
    "ss_minpoly",
    "value_payload",
]
