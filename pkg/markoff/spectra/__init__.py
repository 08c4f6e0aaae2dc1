"""Lambda values, Markoff and Lagrange values."""

from markoff.spectra.biseq import BiSeq
from markoff.spectra.values import (
    L_value,
    M_value,
    SpectrumResult,
    approximation_hits,
    is_attainable,
    lambda_alpha,
    lambda_at,
    mu_quadratic,
)
from markoff.spectra.window import delta, epsilon, lambda_window

__all__ = [
    "BiSeq",
    "L_value",
    "M_value",
    "SpectrumResult",
    "approximation_hits",
    "delta",
    "epsilon",
    "is_attainable",
    "lambda_alpha",
    "lambda_at",
    "lambda_window",
    "mu_quadratic",
]
