"""Eventually periodic bi-infinite sequences.

A `BiSeq` is (..., L, L, C, R, R, ...) with index 0 on the first letter
of the center C. The left period L is written in reading order: b_-1 is
its last letter.

"""

from dataclasses import dataclass

from markoff.cf.periodic import PeriodicCF
from markoff.cf.syntax import format_biseq, parse_biseq_parts
from markoff.cf.words import Word, check_word, minimal_period, rotate
from markoff.errors import PreconditionError


@dataclass(frozen=True, slots=True)
class BiSeq:

    """A bi-infinite sequence (overline{left}, center, overline{right})."""

    left: Word
    center: Word
    right: Word

    def __post_init__(self):
        for name in ("left", "center", "right"):
            object.__setattr__(self, name, check_word(getattr(self, name)))

        if not self.left or not self.right:
            raise PreconditionError("both periods of a sequence are needed")

    @classmethod
    def periodic(cls, period: Word) -> "BiSeq":
        """Return the purely periodic sequence overline{period}."""
        return cls(tuple(period), (), tuple(period))

    @classmethod
    def parse(cls, text: str) -> "BiSeq":
        """Parse "<(L)| c1 c2 |(R)>"."""
        return cls(*parse_biseq_parts(text))

    def __str__(self) -> str:
        return format_biseq(self.left, self.center, self.right)

    def b(self, index: int) -> int:
        """Return the letter at a position."""
        size = len(self.center)
        if index < 0:
            return self.left[index % len(self.left)]

        if index < size:
            return self.center[index]

        return self.right[(index - size) % len(self.right)]

    def letters(self, start: int, stop: int) -> Word:
        """Return (b_start, ..., b_stop-1)."""
        return tuple(self.b(index) for index in range(start, stop))

    def alphabet(self) -> set[int]:
        """Return the letters used by the sequence."""
        return set(self.left + self.center + self.right)

    def forward(self, index: int) -> PeriodicCF:
        """Return the continued fraction [b_i; b_i+1, b_i+2, ...]."""
        size = len(self.center)
        if index >= size:
            offset = (index - size) % len(self.right)
            return PeriodicCF(
                self.right[offset], (), rotate(self.right, offset + 1)
            )

        return PeriodicCF(
            self.b(index), self.letters(index + 1, size), self.right
        )

    def backward(self, index: int) -> PeriodicCF:
        """Return the continued fraction [0; b_i-1, b_i-2, ...]."""
        reversed_left = self.left[::-1]
        if index <= 0:
            # b_i-1 is left[(i - 1) % |L|], i.e. reversed_left[shift].
            shift = len(self.left) - 1 - (index - 1) % len(self.left)
            return PeriodicCF(0, (), rotate(reversed_left, shift))

        before = tuple(self.b(j) for j in range(index - 1, -1, -1))
        return PeriodicCF(0, before, reversed_left)

    def shift(self, steps: int) -> "BiSeq":
        """Move the origin `steps` letters to the left.

        The result b' satisfies b'_i == b_(i - steps). Moving the origin
        to the right would put center letters before index 0, which this
        representation can't hold.

        """
        if steps < 0:
            raise PreconditionError(
                f"can't move the origin {-steps} letters to the right"
            )

        head = self.letters(-steps, 0)
        return BiSeq(rotate(self.left, -steps), head + self.center, self.right)

    def reflect(self) -> "BiSeq":
        """Return the reversed sequence, b'_i == b_(|C| - 1 - i)."""
        return BiSeq(self.right[::-1], self.center[::-1], self.left[::-1])

    def normalized(self) -> "BiSeq":
        """Return an equal sequence (up to shift) with a minimal center."""
        left = minimal_period(self.left)
        right = minimal_period(self.right)
        center = list(self.center)
        while center and center[0] == left[0]:
            center.pop(0)
            left = rotate(left, 1)

        while center and center[-1] == right[-1]:
            center.pop()
            right = rotate(right, -1)

        return BiSeq(left, tuple(center), right)

    def is_purely_periodic(self) -> bool:
        """Return whether the sequence is a shift of overline{P}."""
        normal = self.normalized()
        return not normal.center and normal.left == normal.right
