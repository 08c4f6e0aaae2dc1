"""Bounds on the distance of expansions sharing n partial quotients.

For letters up to 4, [a0; common, tail1] and [a0; common, tail2] with
tails differing at their first letter satisfy

    delta_n < |alpha - beta| < eps_n,   n = len(common),

with eps_n = 2^-(n - 1) and delta_n = 5^-(2(n + 2)), and their order is
the one given by the parity rule.

"""

from markoff.cf.parity import compare_by_parity, compare_exactly, tail_cf
from markoff.cf.periodic import eval_periodic
from markoff.cf.words import Word, check_word
from markoff.errors import MarkoffError
from markoff.exact.surdsum import SurdSum, ss_compare
from markoff.spectra.window import delta, epsilon
from markoff.verifiers.report import Report


def comp_bounds_check(
    a0: int, common: Word, tail1: Word, tail2: Word
) -> Report:
    """Check the distance bounds and the parity order on one instance.

    Word tails are repeated forever. Violated preconditions (letters
    above 4, equal first letters) are reported as failures.

    """
    common = check_word(common)
    n = len(common)
    report = Report(
        "comp",
        {
            "a0": a0,
            "common": list(common),
            "tail1": list(tail1),
            "tail2": list(tail2),
        },
        trials=1,
    )
    try:
        order = compare_by_parity(a0, common, tail1, tail2)
    except MarkoffError as error:
        report.fail({"error": str(error)})
        return report

    alpha = eval_periodic(tail_cf(a0, common, tail1))
    beta = eval_periodic(tail_cf(a0, common, tail2))
    distance = SurdSum.coerce(alpha) - SurdSum.coerce(beta)
    if order == "less":
        distance = -distance

    lower, upper = SurdSum.coerce(delta(n)), SurdSum.coerce(epsilon(n))
    report.result = {"n": n, "order": order}
    if ss_compare(distance, lower) != "greater":
        report.fail({"bound": "delta", "n": n, "distance": str(distance)})

    if ss_compare(distance, upper) != "less":
        report.fail({"bound": "epsilon", "n": n, "distance": str(distance)})

    if compare_exactly(a0, common, tail1, tail2) != order:
        report.fail({"bound": "parity", "n": n, "order": order})

    return report


def random_comp_case(rng, n: int, lengths: tuple[int, int]):
    """Return a random (a0, common, tail1, tail2) with n common letters."""
    common = tuple(rng.randint(1, 4) for _ in range(n))
    first, second = rng.sample(range(1, 5), 2)
    tails = []
    for head in (first, second):
        size = rng.randint(*lengths)
        tails.append((head,) + tuple(rng.randint(1, 4) for _ in range(size)))

    return (rng.randint(0, 3), common, tails[0], tails[1])
