import itertools

import pytest
from hypothesis import given, settings, strategies as st

from platcover.errors import PreconditionError, VerificationError
from platcover.link_invariants import linking_matrix
from platcover.plat import (
    ArcRef,
    ComponentPartition,
    Direction,
    MoveRecord,
    PlatPresentation,
    apply_move,
    apply_move_oriented,
    components,
    exists_orientation_condition2prime,
    is_condition1,
    is_condition2,
    is_condition2prime,
    orient,
    specialize,
)

from oracles import random_corpus, walk_components


def plat(strands, *word):
    return PlatPresentation.from_ints(strands, word)


@st.composite
def plats(draw, max_strands=10, max_len=30):
    strands = 2 * draw(st.integers(1, max_strands // 2))
    word = draw(st.lists(
        st.integers(1, strands - 1).flatmap(lambda k: st.sampled_from([k, -k])), max_size=max_len))
    return PlatPresentation.from_ints(strands, word)


def moves_for(p):
    out = []
    for i in range(1, p.n):
        out += [MoveRecord("I", i), MoveRecord("I'", i)]
    for i in range(1, p.n + 1):
        for s in (1, -1):
            out += [MoveRecord("II", i, s), MoveRecord("II'", i, s)]
    return out


CORPUS = [PlatPresentation.from_ints(s, w) for s, w in random_corpus(count=120, max_len=20)]


class TestComponents:
    def test_unlink(self):
        part = components(plat(4))
        assert part.mu == 2
        assert part.top == (1, 2) and part.bottom == (1, 2)

    def test_hopf(self):
        part = components(plat(4, 2, 2))
        assert part.mu == 2 and part.counts == (1, 1)
        assert part.component_of(ArcRef("top", 1)) == part.component_of(ArcRef("bottom", 1))

    def test_trefoil(self):
        part = components(plat(4, 2, 2, 2))
        assert part.mu == 1 and part.counts == (2,)

    @given(plats())
    def test_matches_hand_walk(self, p):
        part = components(p)
        comps, _ = walk_components(p.strand_count, p.word.to_ints())
        assert part.mu == len(comps)
        for j, arcs in enumerate(comps, start=1):
            for kind, i in arcs:
                assert part.component_of(ArcRef(kind, i)) == j

    @given(plats())
    def test_partition_invariant_and_stability(self, p):
        part = components(p)
        assert sum(part.counts) == p.n
        for j in range(1, part.mu + 1):
            assert part.top.count(j) == part.bottom.count(j)
        # canonical ids: first occurrences along the top arcs are 1, 2, ...
        firsts = [j for k, j in enumerate(part.top) if j not in part.top[:k]]
        assert firsts == list(range(1, part.mu + 1))
        assert components(p) == part

    def test_unbalanced_partition_rejected(self):
        with pytest.raises(VerificationError):
            ComponentPartition(2, (1, 1), (1, 2))


class TestConditions:
    def test_condition1_examples(self):
        assert is_condition1(plat(4), components(plat(4)))
        assert is_condition1(plat(4, 2, 2), components(plat(4, 2, 2)))
        interleaved = plat(6, 2, 1, 3, 2, 4)
        part = components(interleaved)
        assert part.top == (1, 2, 1)
        assert not is_condition1(interleaved, part)

    def test_condition1_requires_same_block_order(self):
        assert not is_condition1(plat(4), ComponentPartition(2, (1, 2), (2, 1)))

    def test_condition2_examples(self):
        assert is_condition2(plat(4))
        assert not is_condition2(plat(4, 1))
        assert is_condition2(plat(4, 2, 2))


class TestOrientation:
    def test_unlink_default(self):
        o = orient(plat(4))
        assert o.top_forward == (True, True) and o.bottom_forward == (True, True)
        down, up = Direction.DESCENDING, Direction.ASCENDING
        assert o.strand_dir == (up, down, up, down)
        assert is_condition2prime(o)

    def test_trefoil_default(self):
        o = orient(plat(4, 2, 2, 2))
        # hand propagation: leave top arc 1 down column 2, reach bottom column 3 and
        # run bottom arc 2 from 3 to 4 (backward), climb column 4 into top arc 2 and run
        # it from 4 to 3 (backward), descend to bottom column 2 and run bottom arc 1 forward
        assert o.top_forward == (True, False)
        assert o.bottom_forward == (True, False)

    @given(plats(), st.data())
    def test_reversing_a_seed_reverses_only_that_component(self, p, data):
        part = components(p)
        j = data.draw(st.integers(1, part.mu))
        base = orient(p, part)
        flipped = orient(p, part, {j: False})
        for i in range(p.n):
            assert (base.top_forward[i] != flipped.top_forward[i]) == (part.top[i] == j)
            assert (base.bottom_forward[i] != flipped.bottom_forward[i]) == (part.bottom[i] == j)
        for s in range(p.strand_count):
            same = base.strand_dir[s] == flipped.strand_dir[s]
            assert same == (part.top[(s // 2)] != j)

    @given(plats())
    def test_matches_hand_walk_directions(self, p):
        o = orient(p)
        _, descending = walk_components(p.strand_count, p.word.to_ints())
        for s in range(1, p.strand_count + 1):
            assert (o.strand_dir[s - 1] == Direction.DESCENDING) == descending[s]

    def test_seed_count_checked(self):
        with pytest.raises(PreconditionError):
            orient(plat(4), seeds=[True])
        with pytest.raises(PreconditionError):
            orient(plat(4), seeds={3: True})

    def test_condition2prime_parity_violation(self):
        p = plat(4, 1)
        part = components(p)
        for seeds in itertools.product([True, False], repeat=part.mu):
            o = orient(p, part, seeds)
            assert o.top_forward[0] != o.bottom_forward[0]
            assert not is_condition2prime(o)
        assert not exists_orientation_condition2prime(p)

    @given(plats())
    def test_condition2_equivalent_to_2prime(self, p):
        assert exists_orientation_condition2prime(p) == is_condition2(p)

    @given(plats(max_strands=8, max_len=15))
    def test_2prime_by_enumerating_all_seeds(self, p):
        part = components(p)
        brute = any(is_condition2prime(orient(p, part, seeds))
                    for seeds in itertools.product([True, False], repeat=part.mu))
        assert brute == exists_orientation_condition2prime(p)


class TestMoves:
    def test_twist_example(self):
        out = apply_move(plat(4, 1), MoveRecord("II", 1, -1))
        assert out.word.to_ints() == [-1, 1]
        assert is_condition2(out)

    def test_move_words(self):
        assert apply_move(plat(6, 5), MoveRecord("I", 2)).word.to_ints() == [4, 3, 5, 4, 5]
        assert apply_move(plat(6, 5), MoveRecord("I'", 1)).word.to_ints() == [5, 2, 1, 3, 2]
        assert apply_move(plat(6), MoveRecord("II'", 3, 1)).word.to_ints() == [5]

    def test_move_I_on_unlink_swaps_caps(self):
        out = apply_move(plat(4), MoveRecord("I", 1))
        part = components(out)
        assert part.mu == 2
        assert part.component_of(ArcRef("top", 1)) == part.component_of(ArcRef("bottom", 2))
        assert part.component_of(ArcRef("top", 2)) == part.component_of(ArcRef("bottom", 1))

    @pytest.mark.parametrize("m", [MoveRecord("I", 2), MoveRecord("I'", 0), MoveRecord("II", 3)])
    def test_out_of_range(self, m):
        with pytest.raises(PreconditionError):
            apply_move(plat(4), m)

    def test_bad_records(self):
        with pytest.raises(ValueError):
            MoveRecord("III", 1)
        with pytest.raises(ValueError):
            MoveRecord("I", 1, -1)

    @pytest.mark.parametrize("p", CORPUS[:60])
    def test_invariants_preserved_by_every_move(self, p):
        o = orient(p)
        lk = linking_matrix(o)
        for m in moves_for(p):
            new, old_ids = apply_move_oriented(o, m)
            assert new.mu == o.mu
            assert sorted(new.partition.counts) == sorted(o.partition.counts)
            assert [o.partition.counts[k - 1] for k in old_ids] == list(new.partition.counts)
            new_of_old = [old_ids.index(j) + 1 for j in range(1, o.mu + 1)]
            assert linking_matrix(new) == lk.relabel(new_of_old)


class TestSpecialize:
    def test_parity_fixture(self):
        out, trace = specialize(plat(4, 1))
        # default orientation runs top arc 1 forward, so bottom arc 1 is the backward one
        assert trace == [MoveRecord("II'", 1, -1)]
        assert out.word.to_ints() == [1, -1]

    def test_already_special(self):
        out, trace = specialize(plat(4, 2, 2))
        assert trace == [] and out == plat(4, 2, 2)

    def test_unlink_unchanged(self):
        assert specialize(plat(6)) == (plat(6), [])

    def test_twist_sign_defaults_to_negative(self):
        # trefoil: both arcs of cap 2 backward, neighbouring letters are s_2, not s_3
        out, trace = specialize(plat(4, 2, 2, 2))
        assert trace == [MoveRecord("II", 2, -1), MoveRecord("II'", 2, -1)]
        assert out.word.to_ints() == [-3, 2, 2, 2, -3]

    def test_twist_sign_cancels_neighbour(self):
        out, trace = specialize(plat(4, -1))
        assert trace == [MoveRecord("II'", 1, 1)]
        assert out.word.to_ints() == [-1, 1]

    def test_interleaved(self):
        p = plat(6, 2, 1, 3, 2, 4)
        out, trace = specialize(p)
        assert any(m.move_type in ("I", "I'") for m in trace)
        assert is_condition1(out, components(out)) and is_condition2(out)

    @settings(max_examples=150)
    @given(plats())
    def test_output_special_and_replayable(self, p):
        out, trace = specialize(p)
        part = components(out)
        assert is_condition1(out, part) and is_condition2(out)
        replay = p
        for m in trace:
            replay = apply_move(replay, m)
        assert replay == out
        assert part.counts == components(p).counts
        assert linking_matrix(orient(out)) == linking_matrix(orient(p))
        assert specialize(out) == (out, [])
