"""Repeated blocks at positions of equal parity.

A word over {1, ..., 4} of length N(n) = (2n + 2)(4^(2n + 2) + 1) splits
into 4^(2n + 2) + 1 disjoint blocks of length 2n + 2. Two of them are
equal and, the block length being even, their 1-based starts are both odd.

"""

from dataclasses import dataclass
import logging

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from markoff.cf.words import Word, check_alphabet, check_word
from markoff.errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class RepeatWitness:

    """Equal blocks w[n1 + i] == w[n2 + i], 1-based, 0 <= i < block_len."""

    n1: int
    n2: int
    block_len: int

    def to_json(self) -> dict[str, int]:
        return {"n1": self.n1, "n2": self.n2, "block_len": self.block_len}


def repeat_length(n: int) -> int:
    """Return N(n), the length guaranteeing a repeat."""
    if n < 0:
        raise PreconditionError(f"{n} isn't a nonnegative integer")

    block = 2 * n + 2
    return block * (4**block + 1)


def _keys(rows: np.ndarray) -> list:
    """Return one hashable key per row."""
    if rows.shape[1] <= 27:
        # Letters are below 5, so rows are base-5 digits of an int64.
        powers = 5 ** np.arange(rows.shape[1] - 1, -1, -1, dtype=np.int64)
        return (rows.astype(np.int64) @ powers).tolist()

    return [row.tobytes() for row in rows]


def _aligned(letters: np.ndarray, block: int) -> RepeatWitness | None:
    count = len(letters) // block
    rows = letters[:count * block].reshape(count, block)
    seen: dict = {}
    for position, key in enumerate(_keys(rows)):
        if key in seen:
            return RepeatWitness(
                seen[key] * block + 1, position * block + 1, block
            )
        seen[key] = position

    return None


def _sliding(letters: np.ndarray, block: int) -> RepeatWitness | None:
    if len(letters) < block:
        return None

    rows = sliding_window_view(letters, block)
    seen: dict = {}
    for start, key in enumerate(_keys(rows)):
        parity_key = (key, start % 2)
        if parity_key in seen:
            return RepeatWitness(seen[parity_key] + 1, start + 1, block)
        seen[parity_key] = start

    return None


def find_repeat(
    word: Word,
    n: int,
    aligned: bool = True,
    best_effort: bool = False,
) -> RepeatWitness | None:
    """Find two equal blocks of length 2n + 2 starting at equal parity.

    Args:
        word (Word): the word, letters in {1, ..., 4}.
        n (int): the block half-length parameter, n >= 0.
        aligned (bool): scan disjoint aligned blocks (the pigeonhole
                argument); otherwise scan every start.
        best_effort (bool): accept words shorter than N(n). The search
                may then return None.

    Raises:
        PreconditionError: the word is shorter than N(n) without
                `best_effort`.
        UnsupportedAlphabetError: a letter is above 4.

    """
    word = check_word(word)
    check_alphabet(word)
    needed = repeat_length(n)
    if len(word) < needed and not best_effort:
        raise PreconditionError(
            f"a word of length {len(word)} is shorter than N({n}) = {needed}"
        )

    letters = np.asarray(word, dtype=np.int8)
    block = 2 * n + 2
    witness = (_aligned if aligned else _sliding)(letters, block)
    if witness is None and aligned and best_effort:
        witness = _sliding(letters, block)

    logger.debug("repeat in a word of length %d: %s", len(word), witness)
    return witness


def verify_repeat(word: Word, witness: RepeatWitness) -> bool:
    """Check a witness letter by letter, independently of the search."""
    start, end = witness.n1 - 1, witness.n2 - 1
    if not 0 <= start < end or end + witness.block_len > len(word):
        return False

    if (witness.n2 - witness.n1) % 2:
        return False

    return all(
        word[start + i] == word[end + i] for i in range(witness.block_len)
    )
