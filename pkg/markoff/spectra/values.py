"""Lambda values, Markoff and Lagrange values of sequences.

For a sequence B, lambda_i(B) = [b_i; b_i+1, ...] + [0; b_i-1, ...].
M(B) is the supremum of lambda_i(B) over all i, L(B) its limsup as i
grows.

Both are computed exactly. Past the center, adding one period block to
the backward tail (right side) or to the forward tail (left side) applies
a fixed Möbius map: the lambda values of one residue class form an orbit
converging to the value of the purely periodic sequence. The orbit is
monotone for an even block length and alternates between two monotone
subsequences for an odd one, so two periods on each side plus the two
limit values bound every lambda value.

"""

from dataclasses import dataclass
from fractions import Fraction
import logging

from markoff.cf.periodic import (
    PeriodicCF,
    canonical_period,
    convergents,
    eval_finite,
    eval_periodic,
)
from markoff.cf.words import check_alphabet
from markoff.errors import PreconditionError, WindowCapError
from markoff.exact.surdsum import SurdSum, ss_compare, ss_make, value_payload
from markoff.settings import Settings
from markoff.spectra.biseq import BiSeq

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class SpectrumResult:

    """The exact value of M(B) or L(B) and how it's reached.

    `witness` is an index i with lambda_i(B) == value when `attained`,
    "limit" otherwise. `window` is the number of periods evaluated on
    each side of the center and `tail_bound` the width 2*eps_k bounding
    the lambda values k letters past the window edge.

    """

    value: SurdSum
    attained: bool
    witness: int | str
    window: int
    tail_bound: Fraction

    def to_json(self, bits: int = 40, digits: int = 30) -> dict:
        """Return the JSON payload of the result."""
        return {
            "value": value_payload(self.value, bits, digits),
            "attained": self.attained,
            "witness": self.witness,
            "window": self.window,
            "tail_bound": str(self.tail_bound),
        }


def lambda_at(sequence: BiSeq, index: int) -> SurdSum:
    """Return lambda_index(B) exactly."""
    return ss_make(
        eval_periodic(sequence.forward(index)),
        eval_periodic(sequence.backward(index)),
    )


def _maximum(values: dict[int, SurdSum]) -> tuple[SurdSum, list[int]]:
    """Return the largest value and every index reaching it."""
    best: SurdSum | None = None
    indices: list[int] = []
    for index, value in values.items():
        if best is None:
            best, indices = value, [index]
            continue

        match ss_compare(value, best):
            case "greater":
                best, indices = value, [index]
            case "equal":
                indices.append(index)

    return best, indices


def periodic_lambdas(period) -> dict[int, SurdSum]:
    """Return lambda_i of overline{period} for i over one period."""
    periodic = BiSeq.periodic(period)
    return {
        offset: lambda_at(periodic, offset) for offset in range(len(period))
    }


def periodic_maximum(period) -> tuple[SurdSum, list[int]]:
    """Return M of overline{period} and the offsets reaching it."""
    return _maximum(periodic_lambdas(period))


def _check_window(periods: int, max_window: int) -> None:
    if periods < 2:
        raise PreconditionError(
            f"{periods} periods don't certify the supremum, at least 2 "
            "are needed"
        )

    if periods > max_window:
        raise WindowCapError(
            f"the window of {periods} periods is beyond the cap of "
            f"{max_window} periods"
        )


def M_value(
    sequence: BiSeq,
    window_periods: int = Settings.window_periods,
    max_window: int = Settings.max_window,
) -> SpectrumResult:
    """Return M(B), the supremum of all lambda values.

    Args:
        sequence (BiSeq): the sequence.
        window_periods (int): the periods evaluated on each side.
        max_window (int): the cap on `window_periods`.

    Raises:
        UnsupportedAlphabetError: a letter is above 4.
        WindowCapError: `window_periods` is above `max_window`.

    """
    check_alphabet(sequence.alphabet())
    _check_window(window_periods, max_window)
    start = -window_periods * len(sequence.left)
    stop = len(sequence.center) + window_periods * len(sequence.right)
    window = {
        index: lambda_at(sequence, index) for index in range(start, stop)
    }
    best, indices = _maximum(window)

    limit, _ = _maximum(
        {
            0: periodic_maximum(sequence.left)[0],
            1: periodic_maximum(sequence.right)[0],
        }
    )
    depth = window_periods * min(len(sequence.left), len(sequence.right))
    tail_bound = Fraction(2, 2 ** (depth - 1))
    logger.debug(
        "M%s: window [%d, %d), window max %s, limit %s",
        sequence,
        start,
        stop,
        best,
        limit,
    )

    if ss_compare(best, limit) == "less":
        return SpectrumResult(
            limit, False, "limit", window_periods, tail_bound
        )

    witness = min(indices, key=lambda index: (abs(index), index))
    return SpectrumResult(best, True, witness, window_periods, tail_bound)


def L_value(sequence: BiSeq) -> SpectrumResult:
    """Return L(B), the limsup of lambda_i(B) as i grows.

    The value is the maximum of lambda over one period of the purely
    periodic sequence on the right period; `witness` is the offset in
    that period. `attained` tells whether lambda_i(B) >= L(B) for
    infinitely many i.

    """
    check_alphabet(sequence.alphabet())
    right = sequence.right
    value, offsets = periodic_maximum(right)

    # Odd blocks make each orbit alternate around its limit.
    attained = len(right) % 2 == 1
    if not attained:
        size = len(sequence.center)
        attained = any(
            ss_compare(lambda_at(sequence, size + offset), value) != "less"
            for offset in offsets
        )

    tail_bound = Fraction(2, 2 ** (len(right) - 1))
    return SpectrumResult(value, attained, offsets[0], 1, tail_bound)


def mu_quadratic(alpha: PeriodicCF) -> SurdSum:
    """Return the Lagrange constant mu(alpha) of a quadratic irrational."""
    if alpha.is_finite:
        raise PreconditionError(f"{alpha} is rational, mu isn't defined")

    period = canonical_period(alpha).period
    return L_value(BiSeq.periodic(period)).value


def lambda_alpha(alpha: PeriodicCF, index: int) -> SurdSum:
    """Return [a_i; a_i+1, ...] + [0; a_i-1, ..., a_1] for i >= 1."""
    if index < 1:
        raise PreconditionError(f"{index} isn't a positive index")

    before = tuple(alpha.letter(j) for j in range(index - 1, 0, -1))
    return ss_make(
        eval_periodic(alpha.tail(index)), eval_finite(0, before)
    )


def is_attainable(alpha: PeriodicCF) -> bool:
    """Return whether lambda_i(alpha) >= mu(alpha) infinitely often.

    Past the preperiod, each residue class of i gives an orbit of one
    Möbius map converging to the periodic lambda value; the finite left
    tail never sits on the limit.

    """
    alpha = canonical_period(alpha)
    mu = mu_quadratic(alpha)
    period = alpha.period
    if len(period) % 2 == 1:
        return True

    first = len(alpha.preperiod) + 1
    periodic = periodic_lambdas(period)
    for offset in range(len(period)):
        if ss_compare(periodic[offset], mu) != "equal":
            continue

        if ss_compare(lambda_alpha(alpha, first + offset), mu) == "greater":
            return True

    return False


def approximation_hits(alpha: PeriodicCF, count: int) -> list[int]:
    """Return the k <= count with |alpha - p_k/q_k| <= 1/(mu * q_k**2).

    The convergent p_k/q_k satisfies the inequality exactly when
    lambda_k+1(alpha) >= mu(alpha).

    """
    value = SurdSum.coerce(eval_periodic(alpha))
    mu = mu_quadratic(alpha)
    hits = []
    for k, convergent in enumerate(
        convergents(alpha.a0, alpha.prefix(count))
    ):
        error = value - convergent
        if ss_compare(error, SurdSum.of({})) == "less":
            error = -error

        scaled = error * mu * convergent.denominator**2
        if ss_compare(scaled, SurdSum.of({1: Fraction(1)})) != "greater":
            hits.append(k)

    return hits
