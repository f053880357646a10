"""
Plat closures of braid words.

A 2n-strand word becomes a plat by joining columns (2i-1, 2i) with a top arc above the
word and with a bottom arc below it, for i = 1, ..., n. This module computes the link
components of the closure, orients them, tests the two conditions defining a *special*
plat and rewrites any plat into a special one with four link-preserving moves:

``I(i)``
    prepend s_{2i} s_{2i-1} s_{2i+1} s_{2i}: top cap i slides over top cap i+1,
    swapping the two caps.
``I'(i)``
    append the same word: the bottom caps i and i+1 are swapped.
``II(i, s)``
    prepend s_{2i-1}^s: top cap i is given a half twist, reversing the direction in
    which the closure runs through it.
``II'(i, s)``
    append s_{2i-1}^s: the same for bottom cap i.

Condition (1) asks that the arcs of each component form one consecutive block, in the
same block order on top and bottom. Condition (2) asks that the endpoint permutation
preserves the odd and even columns; equivalently, the closure admits an orientation in
which every top arc runs from column 2i-1 to 2i and every bottom arc from 2i to 2i-1.
"""
from __future__ import annotations

import dataclasses
import enum
from typing import Mapping, Sequence

from .braid_core import (
    BraidWord,
    append,
    column_trace,
    permutation_of,
    preserves_parity_classes,
    prepend,
)
from .errors import PreconditionError, VerificationError

TOP = "top"
BOTTOM = "bottom"


class Direction(enum.IntEnum):
    """Direction of a braid strand; the values are the factors used for crossing signs."""
    DESCENDING = 1
    ASCENDING = -1


@dataclasses.dataclass(frozen=True)
class PlatPresentation:
    word: BraidWord

    @classmethod
    def from_ints(cls, strands: int, values: Sequence[int] = ()) -> PlatPresentation:
        return cls(BraidWord.from_ints(strands, values))

    @property
    def strand_count(self) -> int:
        return self.word.strand_count

    @property
    def n(self) -> int:
        return self.word.strand_count // 2

    def __str__(self):
        return f"plat({self.strand_count}: {self.word})"


@dataclasses.dataclass(frozen=True)
class ArcRef:
    kind: str
    i: int

    def __post_init__(self):
        if self.kind not in (TOP, BOTTOM):
            raise ValueError(f"arc kind must be 'top' or 'bottom', got {self.kind!r}")
        if self.i < 1:
            raise ValueError(f"arc index must be >= 1, got {self.i}")


@dataclasses.dataclass(frozen=True)
class ComponentPartition:
    """
    Component ids (1-based) of the top arcs and of the bottom arcs of a plat.

    ``counts[j-1]`` is the number n_j of top arcs, equal to the number of bottom
    arcs, of component j.
    """
    mu: int
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self):
        if len(self.top) != len(self.bottom):
            raise VerificationError("top and bottom arc counts differ")
        for j in range(1, self.mu + 1):
            if self.top.count(j) != self.bottom.count(j) or self.top.count(j) == 0:
                raise VerificationError(
                    f"component {j} has {self.top.count(j)} top arcs and "
                    f"{self.bottom.count(j)} bottom arcs")
        if set(self.top) | set(self.bottom) != set(range(1, self.mu + 1)):
            raise VerificationError("component ids are not 1..mu")

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(self.top.count(j) for j in range(1, self.mu + 1))

    def component_of(self, arc: ArcRef) -> int:
        arcs = self.top if arc.kind == TOP else self.bottom
        if arc.i > len(arcs):
            raise IndexError(f"no {arc.kind} arc {arc.i}")
        return arcs[arc.i - 1]


class _UnionFind:
    def __init__(self, size):
        self.parent = list(range(size))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def components(plat: PlatPresentation) -> ComponentPartition:
    """
    Link components of the plat closure.

    Strands are the vertices; each top arc joins the strands starting at its two
    columns and each bottom arc the strands ending at its two columns. Ids are assigned
    in order of the smallest top arc each component contains.

    >>> components(PlatPresentation.from_ints(4, [2, 2, 2])).mu
    1
    """
    n = plat.n
    inv = permutation_of(plat.word).inverse()
    uf = _UnionFind(2 * n + 1)
    for i in range(1, n + 1):
        uf.union(2 * i - 1, 2 * i)
        uf.union(inv.image(2 * i - 1), inv.image(2 * i))
    ids: dict[int, int] = {}
    top = []
    for i in range(1, n + 1):
        root = uf.find(2 * i - 1)
        ids.setdefault(root, len(ids) + 1)
        top.append(ids[root])
    bottom = tuple(ids[uf.find(inv.image(2 * i - 1))] for i in range(1, n + 1))
    return ComponentPartition(len(ids), tuple(top), bottom)


def _runs(ids: Sequence[int]) -> list[int]:
    return [j for k, j in enumerate(ids) if k == 0 or ids[k - 1] != j]


def is_condition1(plat: PlatPresentation, partition: ComponentPartition) -> bool:
    """Arcs grouped into one consecutive block per component, same block order top and bottom."""
    top, bottom = _runs(partition.top), _runs(partition.bottom)
    return len(set(top)) == len(top) and top == bottom


def is_condition2(plat: PlatPresentation) -> bool:
    return preserves_parity_classes(permutation_of(plat.word))


@dataclasses.dataclass(frozen=True)
class OrientedPlat:
    """
    A plat with an orientation of every component.

    ``top_forward[i-1]`` is True when top arc i runs from column 2i-1 to column 2i;
    ``bottom_forward[i-1]`` is True when bottom arc i runs from column 2i to 2i-1.
    ``strand_dir[s-1]`` is the direction of the strand starting at top column s.
    """
    plat: PlatPresentation
    partition: ComponentPartition
    top_forward: tuple[bool, ...]
    bottom_forward: tuple[bool, ...]
    strand_dir: tuple[Direction, ...]

    def __post_init__(self):
        perm = permutation_of(self.plat.word)
        down, up = Direction.DESCENDING, Direction.ASCENDING
        for i in range(1, self.plat.n + 1):
            a, b = 2 * i - 1, 2 * i
            want = (up, down) if self.top_forward[i - 1] else (down, up)
            if (self.strand_dir[a - 1], self.strand_dir[b - 1]) != want:
                raise VerificationError(f"orientation inconsistent at top arc {i}")
        inv = perm.inverse()
        for i in range(1, self.plat.n + 1):
            a, b = inv.image(2 * i - 1), inv.image(2 * i)
            want = (up, down) if self.bottom_forward[i - 1] else (down, up)
            if (self.strand_dir[a - 1], self.strand_dir[b - 1]) != want:
                raise VerificationError(f"orientation inconsistent at bottom arc {i}")

    @property
    def mu(self) -> int:
        return self.partition.mu

    def arc_forward(self, arc: ArcRef) -> bool:
        arcs = self.top_forward if arc.kind == TOP else self.bottom_forward
        return arcs[arc.i - 1]

    def seeds(self) -> tuple[bool, ...]:
        """Direction of the lowest top arc of each component, i.e. the seeds reproducing this orientation."""
        return tuple(self.top_forward[self.partition.top.index(j)]
                     for j in range(1, self.mu + 1))


def orient(plat: PlatPresentation, partition: ComponentPartition | None = None,
           seeds: Sequence[bool] | Mapping[int, bool] | None = None) -> OrientedPlat:
    """
    Orient every component, propagating from one seed per component.

    ``seeds`` gives, per component id, whether the component's lowest top arc is
    directed forward; missing entries default to forward.
    """
    if partition is None:
        partition = components(plat)
    if seeds is None:
        seeds = {}
    elif not isinstance(seeds, Mapping):
        if len(seeds) != partition.mu:
            raise PreconditionError(f"expected {partition.mu} seeds, got {len(seeds)}")
        seeds = {j: bool(s) for j, s in enumerate(seeds, start=1)}
    for j in seeds:
        if not 1 <= j <= partition.mu:
            raise PreconditionError(f"no component {j} (mu = {partition.mu})")

    n = plat.n
    perm = permutation_of(plat.word)
    inv = perm.inverse()
    top: dict[int, bool] = {}
    bottom: dict[int, bool] = {}
    strand: dict[int, Direction] = {}
    for j in range(1, partition.mu + 1):
        ti, fwd = partition.top.index(j) + 1, seeds.get(j, True)
        while ti not in top:
            top[ti] = fwd
            leave, enter = (2 * ti, 2 * ti - 1) if fwd else (2 * ti - 1, 2 * ti)
            strand[leave] = Direction.DESCENDING
            strand[enter] = Direction.ASCENDING
            c = perm.image(leave)
            bottom[(c + 1) // 2] = c % 2 == 0
            s = inv.image(c - 1 if c % 2 == 0 else c + 1)
            ti, fwd = (s + 1) // 2, s % 2 == 1
        if top[ti] != fwd:
            raise VerificationError(f"orientation propagation did not close up on component {j}")
    return OrientedPlat(
        plat, partition,
        tuple(top[i] for i in range(1, n + 1)),
        tuple(bottom[i] for i in range(1, n + 1)),
        tuple(strand[s] for s in range(1, 2 * n + 1)),
    )


def is_condition2prime(oriented: OrientedPlat) -> bool:
    return all(oriented.top_forward) and all(oriented.bottom_forward)


def exists_orientation_condition2prime(plat: PlatPresentation) -> bool:
    """
    Whether some orientation makes every arc forward.

    Components are oriented independently, so it suffices that under the default
    orientation each component is entirely forward or entirely backward.
    """
    oriented = orient(plat)
    part = oriented.partition
    for j in range(1, part.mu + 1):
        dirs = {f for f, c in zip(oriented.top_forward, part.top) if c == j}
        dirs |= {f for f, c in zip(oriented.bottom_forward, part.bottom) if c == j}
        if len(dirs) > 1:
            return False
    return True


MOVE_TYPES = ("I", "I'", "II", "II'")


@dataclasses.dataclass(frozen=True)
class MoveRecord:
    move_type: str
    i: int
    sign: int = 1

    def __post_init__(self):
        if self.move_type not in MOVE_TYPES:
            raise ValueError(f"unknown move type {self.move_type!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"move sign must be +1 or -1, got {self.sign}")
        if self.move_type in ("I", "I'") and self.sign != 1:
            raise ValueError("moves I and I' carry sign +1")

    @property
    def at_top(self) -> bool:
        return self.move_type in ("I", "II")

    def letters(self) -> list[int]:
        i = self.i
        if self.move_type in ("I", "I'"):
            return [2 * i, 2 * i - 1, 2 * i + 1, 2 * i]
        return [self.sign * (2 * i - 1)]

    def to_json(self) -> dict:
        return {"move": self.move_type, "i": self.i, "sign": self.sign}

    def __str__(self):
        if self.move_type in ("I", "I'"):
            return f"{self.move_type}({self.i})"
        return f"{self.move_type}({self.i}, {self.sign:+d})"


def apply_move(plat: PlatPresentation, m: MoveRecord) -> PlatPresentation:
    limit = plat.n - 1 if m.move_type in ("I", "I'") else plat.n
    if not 1 <= m.i <= limit:
        raise PreconditionError(f"move {m} out of range for a {plat.strand_count}-plat")
    attach = prepend if m.at_top else append
    return PlatPresentation(attach(plat.word, m.letters()))


def transport_orientation(old: OrientedPlat, new_plat: PlatPresentation,
                          offset: int) -> tuple[OrientedPlat, tuple[int, ...]]:
    """
    Carry an orientation across a word extension.

    ``new_plat``'s word must contain ``old``'s word starting at letter ``offset``.
    Returns the orientation of ``new_plat`` agreeing with ``old`` on the shared
    strands, and the old component id of each new component.
    """
    new_part = components(new_plat)
    occupant = column_trace(new_plat.word)[offset]
    old_of_new: dict[int, int] = {}
    seeds: dict[int, bool] = {}
    default = orient(new_plat, new_part)
    for c, s in enumerate(occupant, start=1):
        j = new_part.top[(s + 1) // 2 - 1]
        old_j = old.partition.top[(c + 1) // 2 - 1]
        if old_of_new.setdefault(j, old_j) != old_j:
            raise VerificationError("components do not correspond across the move")
        agree = default.strand_dir[s - 1] == old.strand_dir[c - 1]
        seeds.setdefault(j, agree)
    oriented = orient(new_plat, new_part, seeds)
    for c, s in enumerate(occupant, start=1):
        if oriented.strand_dir[s - 1] != old.strand_dir[c - 1]:
            raise VerificationError("transported orientation disagrees with the original")
    if sorted(old_of_new.values()) != list(range(1, old.mu + 1)):
        raise VerificationError("move changed the number of components")
    return oriented, tuple(old_of_new[j] for j in range(1, new_part.mu + 1))


def apply_move_oriented(oriented: OrientedPlat, m: MoveRecord) -> tuple[OrientedPlat, tuple[int, ...]]:
    """Apply ``m`` and transport the orientation; see :func:`transport_orientation`."""
    new_plat = apply_move(oriented.plat, m)
    offset = len(m.letters()) if m.at_top else 0
    return transport_orientation(oriented, new_plat, offset)


def _twist_sign(word: BraidWord, index: int, at_top: bool) -> int:
    if word.letters:
        edge = word.letters[0] if at_top else word.letters[-1]
        if edge.index == index:
            return -edge.sign
    return -1


def specialize(plat: PlatPresentation) -> tuple[PlatPresentation, list[MoveRecord]]:
    """
    Rewrite ``plat`` into a special plat of the same link with the same number of arcs.

    Components keep their canonical ids: arcs are bubble-sorted into blocks by the
    input's component ids (moves I on top, I' on the bottom), then every arc that is
    backward under the input's default orientation, carried along the moves, gets a
    half twist (II on top, II' on the bottom). The output's default orientation is
    therefore that same orientation, with every arc forward. The result is checked
    against the input's component counts and linking matrix; a mismatch raises
    VerificationError.
    """
    from .link_invariants import linking_matrix

    start = orient(plat)
    lk_before = linking_matrix(start)
    tracked = start
    label = tuple(range(1, start.mu + 1))
    trace: list[MoveRecord] = []

    def step(m: MoveRecord):
        nonlocal tracked, label
        tracked, old_ids = apply_move_oriented(tracked, m)
        label = tuple(label[k - 1] for k in old_ids)
        trace.append(m)

    for kind, move_type in ((TOP, "I"), (BOTTOM, "I'")):
        swapped = True
        while swapped:
            swapped = False
            for i in range(1, plat.n):
                ids = tracked.partition.top if kind == TOP else tracked.partition.bottom
                if label[ids[i - 1] - 1] > label[ids[i] - 1]:
                    step(MoveRecord(move_type, i))
                    swapped = True

    if label != tuple(range(1, start.mu + 1)):
        raise VerificationError(f"sorted plat does not keep canonical component ids: {label}")

    untwisted = tracked
    for i, fwd in enumerate(untwisted.top_forward, start=1):
        if not fwd:
            step(MoveRecord("II", i, _twist_sign(tracked.plat.word, 2 * i - 1, True)))
    for i, fwd in enumerate(untwisted.bottom_forward, start=1):
        if not fwd:
            step(MoveRecord("II'", i, _twist_sign(tracked.plat.word, 2 * i - 1, False)))

    out = tracked.plat
    part = tracked.partition
    replay = plat
    for m in trace:
        replay = apply_move(replay, m)
    problems = []
    if replay != out:
        problems.append("trace does not replay to the output")
    if not is_condition1(out, part):
        problems.append("condition (1) fails on the output")
    if not is_condition2(out):
        problems.append("condition (2) fails on the output")
    if label != tuple(range(1, start.mu + 1)) or part.counts != start.partition.counts:
        problems.append(f"component counts changed: {start.partition.counts} -> {part.counts}")
    if linking_matrix(tracked) != lk_before:
        problems.append("linking matrix changed")
    if not is_condition2prime(tracked) or orient(out, part) != tracked:
        problems.append("output is not forward under its default orientation")
    if problems:
        raise VerificationError(f"specialize({plat}): " + "; ".join(problems))
    return out, trace


def is_special(plat: PlatPresentation, partition: ComponentPartition | None = None) -> bool:
    if partition is None:
        partition = components(plat)
    return is_condition1(plat, partition) and is_condition2(plat)

