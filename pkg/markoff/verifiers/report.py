"""Reports shared by every verifier."""

from dataclasses import dataclass, field
import logging
import random
from typing import Any, Callable, Literal

from markoff.errors import MarkoffError

logger = logging.getLogger(__name__)

Status = Literal["ok", "failed", "degenerate"]

# Counterexamples kept in a report, the count of trials is always exact.
MAX_FAILURES = 20


@dataclass
class Report:

    """The outcome of a verifier run.

    Args:
        lemma (str): the name of the checked statement.
        parameters (dict): the parameters of the run.
        trials (int): the number of checked cases.
        failures (list): the counterexamples found (up to `MAX_FAILURES`).
        status (str): ok, failed or degenerate.
        result (dict): other data produced by the verifier.

    """

    lemma: str
    parameters: dict[str, Any]
    trials: int = 0
    failures: list[Any] = field(default_factory=list)
    status: Status = "ok"
    result: dict[str, Any] = field(default_factory=dict)
    failed: int = 0

    def fail(self, case: Any) -> None:
        """Record a counterexample."""
        self.failed += 1
        self.status = "failed"
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(case)

    def degenerate(self, reason: str) -> None:
        """Mark the instance as out of the statement's scope."""
        if self.status == "ok":
            self.status = "degenerate"
        self.result.setdefault("degenerate", []).append(reason)

    @property
    def ok(self) -> bool:
        return self.status != "failed"

    def to_json(self) -> dict[str, Any]:
        """Return the JSON payload of the report."""
        payload = {
            "lemma": self.lemma,
            "parameters": self.parameters,
            "trials": self.trials,
            "failures": self.failures,
            "failed": self.failed,
            "status": self.status,
        }
        if self.result:
            payload["result"] = self.result
        return payload


def run_trials(
    report: Report,
    generator: Callable[[random.Random], Any],
    predicate: Callable[[Any], Any],
    trials: int,
    seed: int,
) -> Report:
    """Check a predicate on generated cases, collecting counterexamples.

    The predicate returns None (or True) when a case holds, False or a
    description of the failure otherwise. Markoff errors raised by the
    predicate count as failures.

    """
    rng = random.Random(seed)
    for _ in range(trials):
        case = generator(rng)
        try:
            outcome = predicate(case)
        except MarkoffError as error:
            outcome = {"case": repr(case), "error": str(error)}

        report.trials += 1
        if outcome is None or outcome is True:
            continue

        if outcome is False:
            outcome = {"case": repr(case)}
        logger.debug("%s: counterexample %s", report.lemma, outcome)
        report.fail(outcome)

    logger.info(
        "%s: %d trials, %d failures", report.lemma, report.trials, report.failed
    )
    return report
