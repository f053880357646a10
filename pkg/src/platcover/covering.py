"""
Combinatorics of branched cyclic coverings.

A p-fold branched cyclic covering of an oriented link is fixed by one weight
c_j in Z_p - {0} per component, the meridian of component j acting as the c_j-th
power of the p-cycle (1 2 ... p). The same data on a 2-sphere, one weight per
branch point, fixes a covering surface whose Euler characteristic is

    chi = 2p - N p + sum_k gcd(p, c_k).

From the surface covering the boundary of a handlebody over a 2b-plat one gets the
genus of the resulting Heegaard splitting, which is at most (b - 1)(p - 1).

Weights are stored as canonical representatives in [1, p - 1]. Where the
classification of coverings is phrased with gcd(b, c_j), the covering degree p is
used in place of b.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction
from typing import Sequence

from .braid_core import Permutation
from .errors import PreconditionError, VerificationError
from .plat import ComponentPartition, PlatPresentation, is_special

GCD_INTERPRETATION = "gcd(b, c_j) in the meridian-/singly-cyclic definitions is read as gcd(p, c_j)"


def _canonical_weights(p: int, weights: Sequence[int]) -> tuple[int, ...]:
    if p < 2:
        raise PreconditionError(f"covering degree must be >= 2, got {p}")
    out = tuple(int(c) % p for c in weights)
    for k, c in enumerate(out, start=1):
        if c == 0:
            raise PreconditionError(f"weight {k} ({weights[k - 1]}) is 0 mod {p}")
    return out


def _gcd_all(p: int, weights: Sequence[int]) -> int:
    return math.gcd(p, *weights)


@dataclasses.dataclass(frozen=True)
class MonodromyAssignment:
    """
    Covering degree ``p`` and one weight per link component.

    The weights must generate Z_p, otherwise they define no connected covering;
    use :meth:`unchecked` to build one anyway.
    """
    p: int
    c: tuple[int, ...]

    def __post_init__(self):
        c = _canonical_weights(self.p, self.c)
        if not c:
            raise PreconditionError("at least one component weight is required")
        if _gcd_all(self.p, c) != 1:
            raise PreconditionError(f"weights {c} do not generate Z_{self.p}")
        object.__setattr__(self, "c", c)

    @classmethod
    def unchecked(cls, p: int, c: Sequence[int]) -> MonodromyAssignment:
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "c", _canonical_weights(p, c))
        return obj

    @property
    def mu(self) -> int:
        return len(self.c)

    def scaled(self, u: int) -> MonodromyAssignment:
        if math.gcd(u, self.p) != 1:
            raise PreconditionError(f"{u} is not a unit mod {self.p}")
        return MonodromyAssignment(self.p, tuple(u * x for x in self.c))


@dataclasses.dataclass(frozen=True)
class CoveringClassification:
    strictly_cyclic: bool
    almost_strictly_cyclic: bool
    meridian_cyclic: bool
    singly_cyclic: bool
    monodromy_cyclic: bool

    def flags(self) -> tuple[bool, ...]:
        return dataclasses.astuple(self)

    def chain_holds(self) -> bool:
        f = self.flags()
        return all(not a or b for a, b in zip(f, f[1:]))

    def finest(self) -> str:
        for name, flag in zip(CLASS_NAMES, self.flags()):
            if flag:
                return name
        return "none"

    def to_json(self) -> dict:
        return dataclasses.asdict(self)


CLASS_NAMES = ("strictly-cyclic", "almost-strictly-cyclic", "meridian-cyclic",
               "singly-cyclic", "monodromy-cyclic")


def classify(a: MonodromyAssignment) -> CoveringClassification:
    """
    All five classification flags of an assignment.

    >>> classify(MonodromyAssignment(6, (1, 5))).flags()
    (False, True, True, True, True)
    """
    p, c = a.p, a.c
    first = c[0]
    units = [math.gcd(p, x) == 1 for x in c]
    return CoveringClassification(
        strictly_cyclic=all(x == first for x in c),
        almost_strictly_cyclic=all(x == first or x == p - first for x in c),
        meridian_cyclic=all(units),
        singly_cyclic=any(units),
        monodromy_cyclic=_gcd_all(p, c) == 1,
    )


@dataclasses.dataclass(frozen=True)
class BranchData:
    """
    Weighted branch points of a cyclic covering of the 2-sphere.

    The constructor enforces that the weights generate Z_p and sum to 0 mod p;
    :meth:`unchecked` skips both for building negative cases.
    """
    p: int
    weights: tuple[int, ...]

    def __post_init__(self):
        w = _canonical_weights(self.p, self.weights)
        object.__setattr__(self, "weights", w)
        problem = branch_data_problem(self.p, w)
        if problem:
            raise PreconditionError(problem)

    @classmethod
    def unchecked(cls, p: int, weights: Sequence[int]) -> BranchData:
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "weights", _canonical_weights(p, weights))
        return obj

    @property
    def n_points(self) -> int:
        return len(self.weights)

    def to_json(self) -> dict:
        return {"p": self.p, "weights": list(self.weights)}


def branch_data_problem(p: int, weights: Sequence[int]) -> str | None:
    """Describe why ``weights`` fail to define a connected covering of the sphere, or None."""
    if not weights:
        return "no branch points"
    if _gcd_all(p, weights) != 1:
        return f"weights {tuple(weights)} do not generate Z_{p}"
    if sum(weights) % p:
        return f"weights {tuple(weights)} do not sum to 0 mod {p}"
    return None


@functools.lru_cache(maxsize=None)
def p_cycle(p: int) -> Permutation:
    return Permutation(tuple(range(2, p + 1)) + (1,))


@functools.lru_cache(maxsize=None)
def cycle_power(p: int, c: int) -> Permutation:
    """The permutation (1 2 ... p)^c, built by repeated composition."""
    return p_cycle(p).power(c % p)


def monodromy_rep(b: BranchData) -> list[Permutation]:
    """
    Image in the symmetric group of the loop around each branch point.

    >>> [perm.images for perm in monodromy_rep(BranchData(3, (1, 2)))]
    [(2, 3, 1), (3, 1, 2)]
    """
    return [cycle_power(b.p, c) for c in b.weights]


def _orbit(p: int, perms: Sequence[Permutation], start: int = 1) -> set[int]:
    orbit = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for perm in perms:
            y = perm.image(x)
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def is_connected_cover(b: BranchData) -> bool:
    """Transitivity of the monodromy group, cross-checked against the gcd criterion."""
    transitive = len(_orbit(b.p, monodromy_rep(b))) == b.p
    if transitive != (_gcd_all(b.p, b.weights) == 1):
        raise VerificationError(f"orbit and gcd criteria disagree on {b}")
    return transitive


@functools.lru_cache(maxsize=None)
def _cycle_count(p: int, c: int) -> int:
    return cycle_power(p, c).cycle_count()


@dataclasses.dataclass(frozen=True)
class SurfaceCoveringReport:
    chi: int
    genus: int
    fiber_sizes: tuple[int, ...]
    connected: bool

    def to_json(self) -> dict:
        return {"chi": self.chi, "genus": self.genus,
                "fiber_sizes": list(self.fiber_sizes), "connected": self.connected}


def euler_characteristic(b: BranchData) -> SurfaceCoveringReport:
    """
    Euler characteristic and genus of the covering surface.

    The closed formula is checked against a count of the preimages of the branch
    points, obtained as the cycle counts of the monodromy permutations.

    >>> euler_characteristic(BranchData(3, (1, 1, 2, 2))).genus
    2
    """
    problem = branch_data_problem(b.p, b.weights)
    if problem:
        raise PreconditionError(problem)
    p, n = b.p, b.n_points
    fibers = tuple(math.gcd(p, c) for c in b.weights)
    chi = 2 * p - n * p + sum(fibers)
    oracle_fibers = tuple(_cycle_count(p, c) for c in b.weights)
    if fibers != oracle_fibers or chi != p * (2 - n) + sum(oracle_fibers):
        raise VerificationError(f"Euler characteristic disagrees with cycle counts for {b}")
    if chi % 2:
        raise VerificationError(f"odd Euler characteristic {chi} for {b}")
    return SurfaceCoveringReport(chi, (2 - chi) // 2, fibers, True)


def branch_data_from_special_plat(plat: PlatPresentation, partition: ComponentPartition,
                                  a: MonodromyAssignment) -> BranchData:
    """
    Branch points A_1, B_1, ..., A_b, B_b on the boundary of the ball above the plat.

    A_i carries the weight of the component through top arc i, B_i its negative.
    Weights are relative to the orientation making every arc forward, which exists
    because the plat is special.
    """
    if not is_special(plat, partition):
        raise PreconditionError(f"{plat} is not special")
    if a.mu != partition.mu:
        raise PreconditionError(f"{a.mu} weights given for {partition.mu} components")
    weights = []
    for j in partition.top:
        c = a.c[j - 1]
        weights += [c, a.p - c]
    return BranchData(a.p, tuple(weights))


def heegaard_genus(p: int, top_arc_weights: Sequence[int]) -> int:
    """
    Genus of the splitting built over a plat whose top arcs carry these weights.

    >>> heegaard_genus(3, (1, 1))
    2
    """
    w = _canonical_weights(p, top_arc_weights)
    b = len(w)
    return 1 - p + b * p - sum(math.gcd(p, c) for c in w)


def genus_bound(b: int, p: int) -> int:
    if b < 1 or p < 2:
        raise PreconditionError(f"need b >= 1 and p >= 2, got b={b}, p={p}")
    return (b - 1) * (p - 1)


def smallest_prime_factor(p: int) -> int:
    d = 2
    while d * d <= p:
        if p % d == 0:
            return d
        d += 1
    return p


def is_prime(p: int) -> bool:
    return p >= 2 and smallest_prime_factor(p) == p


def p_star(p: int) -> int:
    """
    Largest proper divisor of ``p``.

    >>> p_star(12), p_star(7)
    (6, 1)
    """
    if p < 2:
        raise PreconditionError(f"p must be >= 2, got {p}")
    return p // smallest_prime_factor(p)


def bridge_bound_exact(p: int, g: int) -> Fraction:
    """The rational bound (p - 1 + g) / (p - p*) on the bridge number."""
    if p < 2 or g < 0:
        raise PreconditionError(f"need p >= 2 and g >= 0, got p={p}, g={g}")
    return Fraction(p - 1 + g, p - p_star(p))


def bridge_bound(p: int, g: int) -> int:
    """Integer bound on the bridge number of a link whose p-fold cover has the given genus."""
    exact = bridge_bound_exact(p, g)
    if is_prime(p) and exact != 1 + Fraction(g, p - 1):
        raise VerificationError(f"prime-degree bridge bound mismatch at p={p}, g={g}")
    return math.floor(exact)


def lift_check(point_perm: Sequence[int], b: BranchData) -> bool:
    """
    Whether a permutation of the branch points (1-based images) preserves all weights,
    so that a homeomorphism inducing it lifts to the covering surface.
    """
    perm = Permutation(tuple(point_perm))
    if perm.size != b.n_points:
        raise PreconditionError(
            f"permutation acts on {perm.size} points, branch data has {b.n_points}")
    return all(b.weights[perm.image(k) - 1] == b.weights[k - 1]
               for k in range(1, b.n_points + 1))


def round_trip_check(b: int, p: int, a: MonodromyAssignment) -> bool:
    """
    Feed the genus of the splitting over a b-bridge plat back into the bridge bound.

    Top arcs take the weights of ``a`` cyclically. The bound recovers at least b, and
    exactly b when p is prime.
    """
    if a.p != p:
        raise PreconditionError(f"assignment has degree {a.p}, expected {p}")
    if not classify(a).meridian_cyclic:
        raise PreconditionError("round trip needs weights coprime to p")
    weights = [a.c[h % a.mu] for h in range(b)]
    g = heegaard_genus(p, weights)
    if g != genus_bound(b, p):
        return False
    bound = bridge_bound(p, g)
    return bound == b if is_prime(p) else bound >= b
