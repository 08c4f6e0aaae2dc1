"""Searching a purely periodic sequence whose maximum is a given value.

A Lagrange value is admissible when some attainable number has it as
Lagrange constant, which happens exactly when a purely periodic B has
lambda_0(B) == M(B) == target. The search enumerates periods up to a
bound, one per primitive necklace (Lyndon words), so an exhausted search
only certifies the absence of witnesses up to that bound.

"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice
import logging
from math import isqrt
from typing import Iterable, Iterator, Literal

from markoff.cf.mobius import word_mobius
from markoff.cf.words import Word, check_alphabet, lyndon_words, rotate
from markoff.exact.surdsum import SurdSum, ss_compare, value_payload
from markoff.settings import Settings
from markoff.spectra.values import periodic_maximum
from markoff.verifiers.banned import HURWITZ_BOUND, contains_banned

logger = logging.getLogger(__name__)

Verdict = Literal["witness-found", "exhausted"]


@dataclass(frozen=True, slots=True)
class AdmissibilityReport:

    """The outcome of `admissible_search`."""

    target: SurdSum
    max_period: int
    alphabet_max: int
    witness: Word | None
    verdict: Verdict
    checked: int
    candidates: int

    def to_json(self, bits: int = 40, digits: int = 30) -> dict:
        """Return the JSON payload of the report."""
        payload = {
            "target": value_payload(self.target, bits, digits),
            "max_period": self.max_period,
            "alphabet_max": self.alphabet_max,
            "witness": list(self.witness) if self.witness else None,
            "verdict": self.verdict,
            "checked": self.checked,
            "candidates": self.candidates,
        }
        if self.verdict == "exhausted":
            payload["scope"] = (
                f"no witness of period <= {self.max_period} over "
                f"{{1, ..., {self.alphabet_max}}}"
            )
        return payload


def same_field(period: Word, radicand: int) -> bool:
    """Return whether overline{period} has its lambdas in Q(sqrt(radicand)).

    They all lie in Q(sqrt(D)), D = trace^2 - 4 * det of the period's
    map; D / radicand must be a square, i.e. D * radicand a square.

    """
    mobius = word_mobius(period)
    product = mobius.discriminant * radicand
    root = isqrt(product)
    return root * root == product


def _witness(period: Word, target: SurdSum) -> Word | None:
    """Return the smallest rotation with lambda_0 == M == target."""
    value, offsets = periodic_maximum(period)
    if ss_compare(value, target) != "equal":
        return None

    return min(rotate(period, offset) for offset in offsets)


def _scan(batch: list[Word], target: SurdSum) -> Word | None:
    for period in batch:
        witness = _witness(period, target)
        if witness is not None:
            return witness

    return None


def _batches(words: Iterable[Word], size: int) -> Iterator[list[Word]]:
    iterator = iter(words)
    while batch := list(islice(iterator, size)):
        yield batch


def admissible_search(
    target: SurdSum,
    max_period: int = Settings.max_period,
    alphabet_max: int = Settings.alphabet_max,
    prune_banned: bool = Settings.prune_banned,
    workers: int = Settings.workers,
    batch_size: int = Settings.lyndon_batch,
) -> AdmissibilityReport:
    """Look for a purely periodic B with lambda_0(B) == M(B) == target.

    Periods are Lyndon words over {1, ..., alphabet_max} of length up to
    `max_period`. Periods whose lambda values live in another quadratic
    field are skipped, and so are periods with banned patterns when the
    target is below 1 + sqrt(5). The first witness in Lyndon order is
    returned, whatever the number of workers.

    Args:
        target (SurdSum): the value to reach.
        max_period (int): the largest period length.
        alphabet_max (int): the largest letter, at most 4.
        prune_banned (bool): skip banned patterns below 1 + sqrt(5).
        workers (int): the number of processes evaluating candidates.
        batch_size (int): the candidates per process task.

    """
    target = SurdSum.coerce(target)
    check_alphabet((alphabet_max,))
    radicands = target.radicands
    checked = 0
    candidates: list[Word] = []
    if len(radicands) == 1:
        below = ss_compare(target, SurdSum.coerce(HURWITZ_BOUND)) == "less"
        prune = prune_banned and below
        for period in lyndon_words(alphabet_max, max_period):
            checked += 1
            if prune and contains_banned(period):
                continue

            if same_field(period, radicands[0]):
                candidates.append(period)
    else:
        logger.info("%s isn't a quadratic irrational, no search", target)

    logger.info(
        "%d periods enumerated, %d in the field of the target",
        checked,
        len(candidates),
    )
    witness = None
    if workers > 1 and len(candidates) > batch_size:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            batches = list(_batches(candidates, batch_size))
            results = executor.map(
                _scan, batches, [target] * len(batches)
            )
            witness = next((found for found in results if found), None)
    else:
        witness = _scan(candidates, target)

    return AdmissibilityReport(
        target,
        max_period,
        alphabet_max,
        witness,
        "witness-found" if witness else "exhausted",
        checked,
        len(candidates),
    )
