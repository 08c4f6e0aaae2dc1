"""Words of partial quotients and their rotations."""

from typing import Iterable, Iterator

from markoff.errors import PreconditionError, UnsupportedAlphabetError

Word = tuple[int, ...]

# Lemma-level estimates are only proved for letters up to this bound.
ALPHABET_BOUND = 4


def check_word(letters: Iterable[int]) -> Word:
    """Return the letters as a word, checking they're positive integers."""
    word = tuple(letters)
    for position, letter in enumerate(word):
        if not isinstance(letter, int) or letter < 1:
            raise PreconditionError(
                f"{letter!r} (position {position}) isn't a positive "
                "partial quotient"
            )

    return word


def check_alphabet(word: Iterable[int], bound: int = ALPHABET_BOUND) -> None:
    """Raise `UnsupportedAlphabetError` if a letter exceeds `bound`."""
    for letter in word:
        if letter > bound:
            raise UnsupportedAlphabetError(
                f"letter {letter} is beyond the supported alphabet "
                f"{{1, ..., {bound}}}"
            )


def minimal_period(word: Word) -> Word:
    """Return the shortest u with word == u * k for some k."""
    size = len(word)
    for length in range(1, size + 1):
        if size % length == 0 and word == word[:length] * (size // length):
            return word[:length]

    return word


def is_primitive(word: Word) -> bool:
    """Return whether the word isn't a power of a shorter word."""
    return len(minimal_period(word)) == len(word)


def rotate(word: Word, shift: int) -> Word:
    """Return the word rotated left by `shift` letters."""
    if not word:
        return word

    shift %= len(word)
    return word[shift:] + word[:shift]


def rotations(word: Word) -> list[Word]:
    """Return the distinct rotations in shift order."""
    found = []
    for shift in range(len(minimal_period(word)) or 1):
        found.append(rotate(word, shift))
    return found


def least_rotation(word: Word) -> Word:
    """Return the lexicographically smallest rotation."""
    return min(rotations(word)) if word else word


def is_rotation(first: Word, second: Word) -> bool:
    """Return whether both words are rotations of each other."""
    return len(first) == len(second) and least_rotation(
        first
    ) == least_rotation(second)


def lyndon_words(alphabet_max: int, max_length: int) -> Iterator[Word]:
    """Yield Lyndon words over {1, ..., alphabet_max} in lexicographic order.

    Every primitive necklace of length <= max_length has exactly one
    representative, its least rotation. Duval's algorithm.

    """
    if alphabet_max < 1 or max_length < 1:
        return

    word = [1]
    while word:
        yield tuple(word)
        size = len(word)
        while len(word) < max_length:
            word.append(word[len(word) - size])

        while word and word[-1] == alphabet_max:
            word.pop()

        if word:
            word[-1] += 1
