"""
Braid words on an even number of strands and the endpoint permutations they induce.

A word is a sequence of signed Artin generators read from the top level (t=0, where
the top caps of a plat sit) down to the bottom level (t=1). Columns are numbered
1, ..., 2n from left to right. A letter with index i and sign +1 is the crossing
sigma_i in which the strand in column i passes over the strand in column i+1;
sign -1 is its inverse.

Words are free monoid elements: nothing is ever cancelled or normalised.
"""
from __future__ import annotations

import dataclasses
import functools
from typing import Iterable, Sequence

from .errors import (
    IndexRangeError,
    NonIntegerTokenError,
    OddStrandCountError,
    StrandMismatchError,
    ZeroTokenError,
)


@dataclasses.dataclass(frozen=True)
class Permutation:
    """
    A permutation of {1, ..., size}, stored as the tuple of images of 1, ..., size.

    >>> p = Permutation((2, 1, 3))
    >>> p.image(1), p.cycles()
    (2, [(1, 2), (3,)])
    """
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, size: int) -> Permutation:
        return cls(tuple(range(1, size + 1)))

    @classmethod
    def from_cycles(cls, size: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        """
        >>> Permutation.from_cycles(4, [(1, 3), (2, 4)]).images
        (3, 4, 1, 2)
        """
        images = list(range(1, size + 1))
        for cycle in cycles:
            for a, b in zip(cycle, list(cycle[1:]) + [cycle[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def image(self, k: int) -> int:
        return self.images[k - 1]

    def then(self, other: Permutation) -> Permutation:
        """The permutation applying ``self`` first and ``other`` second."""
        if other.size != self.size:
            raise ValueError("permutation sizes differ")
        return Permutation(tuple(other.images[x - 1] for x in self.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for k, x in enumerate(self.images, start=1):
            inv[x - 1] = k
        return Permutation(tuple(inv))

    def power(self, e: int) -> Permutation:
        result = Permutation.identity(self.size)
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            result = result.then(base)
        return result

    def is_identity(self) -> bool:
        return all(x == k for k, x in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles including fixed points, each started at its smallest element."""
        seen = [False] * self.size
        out = []
        for start in range(1, self.size + 1):
            if seen[start - 1]:
                continue
            cycle = []
            k = start
            while not seen[k - 1]:
                seen[k - 1] = True
                cycle.append(k)
                k = self.images[k - 1]
            out.append(tuple(cycle))
        return out

    def cycle_count(self) -> int:
        return len(self.cycles())


# The restriction of the braid homeomorphism to the endpoint set.
EndpointPermutation = Permutation


@dataclasses.dataclass(frozen=True)
class BraidLetter:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_int(cls, value: int) -> BraidLetter:
        return cls(abs(value), 1 if value > 0 else -1)

    def to_int(self) -> int:
        return self.sign * self.index

    def inverse(self) -> BraidLetter:
        return BraidLetter(self.index, -self.sign)

    def __str__(self):
        return str(self.to_int())


@dataclasses.dataclass(frozen=True)
class BraidWord:
    strand_count: int
    letters: tuple[BraidLetter, ...] = ()

    def __post_init__(self):
        if self.strand_count < 2 or self.strand_count % 2:
            raise OddStrandCountError(
                f"strand count must be an even integer >= 2, got {self.strand_count}")
        letters = tuple(self.letters)
        for pos, letter in enumerate(letters):
            if letter.index > self.strand_count - 1:
                raise IndexRangeError(
                    f"generator {letter.index} out of range for {self.strand_count} strands",
                    position=pos)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_ints(cls, strand_count: int, values: Iterable[int]) -> BraidWord:
        values = list(values)
        for pos, v in enumerate(values):
            if v == 0:
                raise ZeroTokenError("generator 0 is not allowed", position=pos)
        return cls(strand_count, tuple(BraidLetter.from_int(v) for v in values))

    def to_ints(self) -> list[int]:
        return [letter.to_int() for letter in self.letters]

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(str(letter) for letter in self.letters)


def parse_braid(text: str, strand_count: int) -> BraidWord:
    """
    Parse whitespace-separated signed generator indices.

    >>> parse_braid("-1 3", 4).to_ints()
    [-1, 3]
    """
    if strand_count < 2 or strand_count % 2:
        raise OddStrandCountError(
            f"strand count must be an even integer >= 2, got {strand_count}")
    values = []
    for pos, token in enumerate(text.split()):
        try:
            v = int(token)
        except ValueError:
            raise NonIntegerTokenError(
                f"token {pos + 1} ({token!r}) is not an integer", position=pos) from None
        if v == 0:
            raise ZeroTokenError(f"token {pos + 1} is 0; generators are nonzero", position=pos)
        if abs(v) > strand_count - 1:
            raise IndexRangeError(
                f"token {pos + 1} ({v}) out of range for {strand_count} strands", position=pos)
        values.append(v)
    return BraidWord.from_ints(strand_count, values)


def _transposition_images(size: int, index: int) -> tuple[int, ...]:
    images = list(range(1, size + 1))
    images[index - 1], images[index] = images[index], images[index - 1]
    return tuple(images)


def column_trace(word: BraidWord) -> list[tuple[int, ...]]:
    """
    Occupancy of the columns at every level of the word.

    Entry t of the result lists, for each column, the top column of the strand occupying
    it just below the first t letters; entry 0 is the identity and entry len(word) is
    the inverse of the endpoint permutation.
    """
    occupant = list(range(1, word.strand_count + 1))
    levels = [tuple(occupant)]
    for letter in word.letters:
        k = letter.index
        occupant[k - 1], occupant[k] = occupant[k], occupant[k - 1]
        levels.append(tuple(occupant))
    return levels


def permutation_of(word: BraidWord) -> Permutation:
    """
    Map each top column to the bottom column its strand ends at.

    >>> permutation_of(parse_braid("2 2 2", 4)).images
    (1, 3, 2, 4)
    """
    position = list(range(1, word.strand_count + 1))  # position[s-1]: current column of strand s
    at = list(range(1, word.strand_count + 1))        # at[c-1]: strand currently in column c
    for letter in word.letters:
        k = letter.index
        left, right = at[k - 1], at[k]
        at[k - 1], at[k] = right, left
        position[left - 1], position[right - 1] = k + 1, k
    return Permutation(tuple(position))


def preserves_parity_classes(perm: Permutation) -> bool:
    """True iff odd positions go to odd positions and even ones to even ones."""
    return all((k - x) % 2 == 0 for k, x in enumerate(perm.images, start=1))


def _check_same(a: BraidWord, strand_count: int):
    if a.strand_count != strand_count:
        raise StrandMismatchError(
            f"strand counts differ: {a.strand_count} vs {strand_count}")


def _as_letters(strand_count: int, letters) -> tuple[BraidLetter, ...]:
    if isinstance(letters, BraidWord):
        _check_same(letters, strand_count)
        return letters.letters
    out = tuple(BraidLetter.from_int(x) if isinstance(x, int) else x for x in letters)
    return BraidWord(strand_count, out).letters


def concatenate(a: BraidWord, b: BraidWord) -> BraidWord:
    _check_same(a, b.strand_count)
    return BraidWord(a.strand_count, a.letters + b.letters)


def prepend(word: BraidWord, letters) -> BraidWord:
    """Put ``letters`` (a word, or letters / signed ints) above ``word``, at the top caps."""
    return BraidWord(word.strand_count, _as_letters(word.strand_count, letters) + word.letters)


def append(word: BraidWord, letters) -> BraidWord:
    """Put ``letters`` below ``word``, next to the bottom caps."""
    return BraidWord(word.strand_count, word.letters + _as_letters(word.strand_count, letters))


@functools.lru_cache(maxsize=None)
def transposition(size: int, index: int) -> Permutation:
    """The permutation induced by a single generator with the given index."""
    return Permutation(_transposition_images(size, index))
