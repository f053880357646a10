"""
Linking numbers of oriented plats, read off from crossing signs.

Used as an independent check that the plat moves do not change the link: the
matrix of pairwise linking numbers is an isotopy invariant of the oriented link.
Self-crossings are ignored, so the diagonal is 0 by convention.
"""
from __future__ import annotations

import dataclasses
from typing import TYPE_CHECKING, Sequence

from .braid_core import BraidLetter
from .errors import VerificationError
from .plat import Direction

if TYPE_CHECKING:
    from .plat import OrientedPlat


@dataclasses.dataclass(frozen=True)
class LinkingMatrix:
    mu: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(rows) != self.mu or any(len(r) != self.mu for r in rows):
            raise ValueError(f"linking matrix must be {self.mu}x{self.mu}")
        for j in range(self.mu):
            if rows[j][j] != 0:
                raise ValueError("diagonal entries must be 0")
            for k in range(j):
                if rows[j][k] != rows[k][j]:
                    raise ValueError("linking matrix must be symmetric")
        object.__setattr__(self, "entries", rows)

    def __getitem__(self, jk):
        j, k = jk
        return self.entries[j - 1][k - 1]

    def relabel(self, new_of_old: Sequence[int]) -> LinkingMatrix:
        """Rename component ``j`` to ``new_of_old[j-1]``."""
        out = [[0] * self.mu for _ in range(self.mu)]
        for j in range(self.mu):
            for k in range(self.mu):
                out[new_of_old[j] - 1][new_of_old[k] - 1] = self.entries[j][k]
        return LinkingMatrix(self.mu, tuple(map(tuple, out)))

    def to_json(self) -> dict:
        return {"mu": self.mu, "lk": [list(row) for row in self.entries]}


def crossing_sign(letter: BraidLetter, dir_left: Direction, dir_right: Direction) -> int:
    """
    Sign of the crossing ``letter`` given the directions of the strands entering it
    from columns index and index+1.

    >>> crossing_sign(BraidLetter(2, -1), Direction.ASCENDING, Direction.ASCENDING)
    -1
    """
    return letter.sign * int(dir_left) * int(dir_right)


def linking_matrix(oriented: OrientedPlat) -> LinkingMatrix:
    """Half the signed count of crossings between each pair of distinct components."""
    plat, part = oriented.plat, oriented.partition
    mu = part.mu
    comp = [part.top[(s + 1) // 2 - 1] for s in range(1, plat.strand_count + 1)]
    acc = [[0] * mu for _ in range(mu)]
    at = list(range(1, plat.strand_count + 1))
    for letter in plat.word.letters:
        k = letter.index
        left, right = at[k - 1], at[k]
        j1, j2 = comp[left - 1], comp[right - 1]
        if j1 != j2:
            sign = crossing_sign(letter, oriented.strand_dir[left - 1], oriented.strand_dir[right - 1])
            acc[j1 - 1][j2 - 1] += sign
            acc[j2 - 1][j1 - 1] += sign
        at[k - 1], at[k] = right, left
    for j in range(mu):
        for k in range(mu):
            if acc[j][k] % 2:
                raise VerificationError(
                    f"odd crossing-sign sum {acc[j][k]} between components {j + 1} and {k + 1}")
    return LinkingMatrix(mu, tuple(tuple(x // 2 for x in row) for row in acc))
