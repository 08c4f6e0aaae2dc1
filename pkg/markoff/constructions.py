"""Named objects around the maximal gaps of the Markoff spectrum.

For n >= 1, (alpha*_n, beta_n) is a maximal gap:

    alpha*_n = 2 + [0; 1^(2n-2), (2,2,1,2)]
                 + [0; 1^(2n-1), 2, 1^(2n-2), (2,2,1,2)]
    beta_n   = 2 + 2 * [0; (1^(2n), 2)]

The words C_n(k) glue k blocks (2,1,2,2), the pattern
1^(2n-2) 2* 1^(2n-1) 2** 1^(2n-2) and k blocks (2,2,1,2). Their
concatenation over k = 1, 2, ... expands a number whose Lagrange constant
is alpha*_n, approached at the 2** letters.

"""

from dataclasses import dataclass, field

from markoff.cf.periodic import PeriodicCF, eval_periodic
from markoff.cf.words import Word
from markoff.errors import PreconditionError
from markoff.exact.surd import QuadSurd
from markoff.exact.surdsum import SurdSum, refine, ss_make, value_payload
from markoff.spectra.biseq import BiSeq

LEFT_BLOCK = (2, 1, 2, 2)
RIGHT_BLOCK = (2, 2, 1, 2)


def ones(count: int) -> Word:
    return (1,) * count


def _check_positive(**values: int) -> None:
    for name, value in values.items():
        if value < 1:
            raise PreconditionError(f"{name} should be at least 1, not {value}")


def gbur_alpha_star(n: int) -> SurdSum:
    """Return alpha*_n, the left endpoint of the n-th gap."""
    _check_positive(n=n)
    forward = PeriodicCF(0, ones(2 * n - 2), RIGHT_BLOCK)
    backward = PeriodicCF(
        0, ones(2 * n - 1) + (2,) + ones(2 * n - 2), RIGHT_BLOCK
    )
    return ss_make(eval_periodic(forward), eval_periodic(backward)) + 2


def gbur_beta(n: int) -> QuadSurd:
    """Return beta_n, the right endpoint of the n-th gap.

    The formula extends to n = 0, giving 2*sqrt(2).

    """
    if n < 0:
        raise PreconditionError(f"beta_{n} isn't defined")

    tail = eval_periodic(PeriodicCF(0, (), ones(2 * n) + (2,)))
    return tail * 2 + 2


@dataclass(frozen=True, slots=True)
class GapEndpointPair:

    """The endpoints of the n-th maximal gap."""

    n: int
    alpha_star: SurdSum
    beta: QuadSurd

    def to_json(self, bits: int = 40, digits: int = 30) -> dict:
        width = refine(SurdSum.coerce(self.beta) - self.alpha_star, 4 * digits)
        return {
            "n": self.n,
            "alpha_star": value_payload(self.alpha_star, bits, digits),
            "beta": value_payload(self.beta, bits, digits),
            "gap_width_decimal": width.decimal(digits),
        }


def gbur_pair(n: int) -> GapEndpointPair:
    """Return the n-th gap (alpha*_n, beta_n)."""
    return GapEndpointPair(n, gbur_alpha_star(n), gbur_beta(n))


@dataclass(frozen=True, slots=True)
class StarredWord:

    """A word with the 0-based positions of its starred letters 2*, 2**."""

    word: Word
    stars: tuple[int, ...] = field(default=())
    double_stars: tuple[int, ...] = field(default=())


def cnk_word(n: int, k: int) -> StarredWord:
    """Return C_n(k) with the positions of 2* and 2**.

    In C_n(k), 2* is at 4k + 2n - 2 and 2** at 4k + 4n - 2, the word
    having 8k + 6n - 3 letters.

    """
    _check_positive(n=n, k=k)
    head = LEFT_BLOCK * k + ones(2 * n - 2)
    middle = ones(2 * n - 1)
    word = (
        head + (2,) + middle + (2,) + ones(2 * n - 2) + RIGHT_BLOCK * k
    )
    star = len(head)
    return StarredWord(word, (star,), (star + len(middle) + 1,))


def zeta_prefix(n: int, blocks: int) -> StarredWord:
    """Return C_n(1) C_n(2) ... C_n(blocks) with global starred positions."""
    _check_positive(n=n, blocks=blocks)
    word: Word = ()
    stars: list[int] = []
    double_stars: list[int] = []
    for k in range(1, blocks + 1):
        block = cnk_word(n, k)
        stars.extend(len(word) + star for star in block.stars)
        double_stars.extend(len(word) + star for star in block.double_stars)
        word += block.word

    return StarredWord(word, tuple(stars), tuple(double_stars))


def w0_x0_y0(n: int) -> tuple[QuadSurd, QuadSurd, QuadSurd]:
    """Return w_0, x_0 and y_0, with 2 + x_0 + y_0 == alpha*_(n+1)."""
    _check_positive(n=n)
    w0 = eval_periodic(PeriodicCF(0, (), LEFT_BLOCK))
    x0 = eval_periodic(PeriodicCF(0, ones(2 * n), RIGHT_BLOCK))
    y0 = eval_periodic(
        PeriodicCF(0, ones(2 * n + 1) + (2,) + ones(2 * n), RIGHT_BLOCK)
    )
    return (w0, x0, y0)


def theorem1_lambda0() -> SurdSum:
    """Return a Lagrange value that no attainable number has.

    It is [3; 3, 3, 2, 1, (1, 2)] + [0; 2, 1, (1, 2)], in Q(sqrt(3)).

    """
    return ss_make(
        eval_periodic(PeriodicCF(3, (3, 3, 2, 1), (1, 2))),
        eval_periodic(PeriodicCF(0, (2, 1), (1, 2))),
    )


def extremal_sequence(n: int) -> BiSeq:
    """Return the sequence with M(B) == lambda_i(B) == alpha*_(n+1).

    It is (overline{2,1,2,2}, 1^(2n) 2 1^(2n+1) 2 1^(2n), overline{2,2,1,2}),
    the maximum sitting on both center 2s.

    """
    _check_positive(n=n)
    center = ones(2 * n) + (2,) + ones(2 * n + 1) + (2,) + ones(2 * n)
    return BiSeq(LEFT_BLOCK, center, RIGHT_BLOCK)
