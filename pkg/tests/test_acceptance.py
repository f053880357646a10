"""
Exit criteria. Each test carries a ``criterion`` marker; the terminal summary prints one
PASS/FAIL line per criterion. All checks are exact.
"""
import io
import itertools
import math
import subprocess
import sys
from contextlib import redirect_stdout

import pytest

from platcover import catalog
from platcover.cli import main
from platcover.covering import (
    BranchData,
    MonodromyAssignment,
    branch_data_from_special_plat,
    bridge_bound,
    classify,
    euler_characteristic,
    genus_bound,
    heegaard_genus,
    is_prime,
    lift_check,
    p_star,
    round_trip_check,
)
from platcover.link_invariants import linking_matrix
from platcover.plat import (
    PlatPresentation,
    apply_move,
    components,
    exists_orientation_condition2prime,
    is_condition1,
    is_condition2,
    orient,
    specialize,
)

from oracles import (
    linking_by_overcrossings,
    proper_divisors_max,
    random_corpus,
    shift_cycle_count,
)
from test_cli import COVERINGS, GOLDEN

CORPUS = (
    [(f"random-{k:03d}", PlatPresentation.from_ints(s, w))
     for k, (s, w) in enumerate(random_corpus(count=300, max_strands=10, max_len=30))]
    + [(e.name, e.plat()) for e in catalog.CATALOG.values()]
)


def admissible(p, n):
    """All weight tuples of length n in [1, p-1] that sum to 0 mod p and generate Z_p."""
    for head in itertools.product(range(1, p), repeat=n - 1):
        last = -sum(head) % p
        if last and math.gcd(p, *head, last) == 1:
            yield head + (last,)


@pytest.mark.criterion(1, "specialization soundness on 300 random plats + catalog")
def test_specialization_soundness():
    assert len(CORPUS) >= 205
    assert max(p.strand_count for _, p in CORPUS) <= 10
    for name, p in CORPUS:
        out, trace = specialize(p)
        part_in, part_out = components(p), components(out)
        assert is_condition1(out, part_out), name
        assert is_condition2(out), name
        assert part_out.mu == part_in.mu, name
        assert sorted(part_out.counts) == sorted(part_in.counts), name
        assert part_out.counts == part_in.counts, name
        assert linking_matrix(orient(out)) == linking_matrix(orient(p)), name
        # second route for the linking numbers, from over-crossings only
        assert linking_by_overcrossings(out.strand_count, out.word.to_ints()) == \
            linking_by_overcrossings(p.strand_count, p.word.to_ints()), name
        replay = p
        for m in trace:
            replay = apply_move(replay, m)
        assert replay == out, name


@pytest.mark.criterion(2, "condition (2) <=> existence of a (2') orientation on the corpus")
def test_condition_equivalence():
    seen = {True: 0, False: 0}
    for name, p in CORPUS:
        c2 = is_condition2(p)
        assert exists_orientation_condition2prime(p) == c2, name
        seen[c2] += 1
    assert seen[True] and seen[False]


@pytest.mark.criterion(3, "Euler characteristic formula equals the cycle-count oracle, p<=12, N in {2,4,6}")
def test_euler_formula_vs_oracle():
    checked = 0
    for p in range(2, 13):
        cycles = {c: shift_cycle_count(p, c) for c in range(1, p)}
        for n in (2, 4, 6):
            for w in admissible(p, n):
                formula = 2 * p - n * p + sum(math.gcd(p, c) for c in w)
                oracle = p * (2 - n) + sum(cycles[c] for c in w)
                assert formula == oracle, (p, w)
                checked += 1
            # the library path on a sample of each family
            for w in itertools.islice(admissible(p, n), 200):
                assert euler_characteristic(BranchData(p, w)).chi == \
                    p * (2 - n) + sum(cycles[c] for c in w)
    assert checked > 100_000


@pytest.mark.criterion(4, "classification chain, knot coincidence and unit rescaling, p<=30, mu<=3")
def test_classification_chain():
    for p in range(2, 31):
        units = [u for u in range(2, p) if math.gcd(u, p) == 1]
        for mu in (1, 2, 3):
            table = {}
            for c in itertools.product(range(1, p), repeat=mu):
                if math.gcd(p, *c) != 1:
                    continue
                f = classify(MonodromyAssignment(p, c))
                flags = f.flags()
                assert all(not a or b for a, b in zip(flags, flags[1:])), (p, c)
                if mu == 1:
                    assert len(set(flags)) == 1, (p, c)
                table[c] = flags
            for c, flags in table.items():
                for u in units:
                    assert table[tuple(u * x % p for x in c)] == flags, (p, c, u)


@pytest.mark.criterion(5, "genus identities, p<=12, b<=5")
def test_genus_identities():
    for p in range(2, 13):
        for b in range(1, 6):
            bound = genus_bound(b, p)
            for w in itertools.product(range(1, p), repeat=b):
                if math.gcd(p, *w) != 1:
                    continue
                g = heegaard_genus(p, w)
                points = tuple(x for c in w for x in (c, p - c))
                assert g == euler_characteristic(BranchData(p, points)).genus, (p, w)
                assert g <= bound
                assert (g == bound) == all(math.gcd(p, c) == 1 for c in w), (p, w)
        # two-bridge: bound p - 1, attained by coverings of the trefoil
        assert genus_bound(2, p) == p - 1
        for w in itertools.product(range(1, p), repeat=2):
            if math.gcd(p, *w) == 1:
                assert heegaard_genus(p, w) <= p - 1
        assert heegaard_genus(p, (1, 1)) == p - 1
        trefoil, _ = specialize(catalog.get("trefoil").plat())
        data = branch_data_from_special_plat(trefoil, components(trefoil), MonodromyAssignment(p, (1,)))
        assert euler_characteristic(data).genus == p - 1
    assert heegaard_genus(2, (1, 1, 1)) == 2 == genus_bound(3, 2)


@pytest.mark.criterion(6, "bridge bound round trip and p* brute force")
def test_bound_round_trip():
    for p in range(2, 14):
        for b in range(1, 7):
            g = (b - 1) * (p - 1)
            assert heegaard_genus(p, (1,) * b) == g
            if is_prime(p):
                assert bridge_bound(p, g) == b, (p, b)
            else:
                assert bridge_bound(p, g) >= b, (p, b)
            assert round_trip_check(b, p, MonodromyAssignment(p, (1,)))
    for p in range(2, 1001):
        assert p_star(p) == proper_divisors_max(p), p


@pytest.mark.criterion(7, "lift criterion exhaustive over all permutations, N<=6")
def test_lift_criterion():
    checked = 0
    for p in (2, 3, 4):
        for n in range(2, 7):
            perms = list(itertools.permutations(range(1, n + 1)))
            for w in admissible(p, n):
                b = BranchData(p, w)
                # independent route: products of symmetric groups on the weight classes
                classes = {}
                for k, c in enumerate(w, start=1):
                    classes.setdefault(c, []).append(k)
                expected = set()
                blocks = list(classes.values())
                for images in itertools.product(*(itertools.permutations(bl) for bl in blocks)):
                    perm = [0] * n
                    for block, image in zip(blocks, images):
                        for src, dst in zip(block, image):
                            perm[src - 1] = dst
                    expected.add(tuple(perm))
                got = {perm for perm in perms if lift_check(perm, b)}
                assert got == expected, (p, w)
                checked += len(perms)
    assert checked > 10_000


def _run_cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(argv) == 0
    return buf.getvalue()


@pytest.mark.criterion(8, "CLI golden files byte-identical across runs")
def test_cli_determinism():
    for name in sorted(catalog.CATALOG):
        p, w = COVERINGS[name]
        cases = {
            f"info__{name}": ["info", "--catalog", name],
            f"specialize__{name}": ["specialize", "--catalog", name],
            f"cover__{name}": ["cover", "genus", "--catalog", name, "--p", str(p), "--weights", w],
        }
        for stem, argv in cases.items():
            golden = (GOLDEN / f"{stem}.json").read_text()
            assert _run_cli(argv) == golden, stem
            assert _run_cli(argv) == golden, stem
            fresh = subprocess.run([sys.executable, "-m", "platcover", *argv],
                                   capture_output=True, text=True, check=True).stdout
            assert fresh == golden, stem
