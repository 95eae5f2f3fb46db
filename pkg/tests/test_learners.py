import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import chain, cube
from exactlearn import (ConceptTable, MembershipNode, build_complete_tree, depth, exact_depth,
                        family_table, learn_eq_halving, learn_eq_rank, learn_eq_sequential,
                        learn_membership_halving, learn_mp_rank, learn_proper_halving,
                        learn_proper_sequential, rank, verify_solves)
from exactlearn.learners import LEARNERS, majority
from exactlearn.table import EmptyTableError, GateExceeded
from exactlearn.tree import complete_paths, is_admissible
from test_table import tables

SINGLE = ConceptTable.from_bitstrings(["0110"])
EMPTY = ConceptTable(2, None, ())


@pytest.mark.parametrize("name", sorted(LEARNERS))
def test_single_tuple_depth_zero(name):
    tr = LEARNERS[name].build(SINGLE)
    assert depth(tr) == 0 and verify_solves(tr, SINGLE)


@pytest.mark.parametrize("name", sorted(LEARNERS))
def test_empty_table_rejected(name):
    with pytest.raises(EmptyTableError):
        LEARNERS[name].build(EMPTY)


def test_majority_ties_go_to_one():
    assert majority(ConceptTable.from_bitstrings(["01", "10"])) == (1, 1)


class TestMembershipHalving:
    def test_chain(self):
        tr = learn_membership_halving(chain(3))
        assert verify_solves(tr, chain(3))
        assert 2 <= depth(tr) <= 4 * math.log2(6)

    def test_cube(self):
        tr = learn_membership_halving(cube(3))
        assert verify_solves(tr, cube(3)) and depth(tr) <= 3


class TestEquivalenceLearners:
    def test_rank_f6(self):
        t = family_table("F6", 3)
        assert depth(learn_eq_rank(t)) <= 1

    def test_rank_f5(self):
        t = family_table("F5", 3, blocks=(2, 3))
        tr = learn_eq_rank(t)
        assert verify_solves(tr, t) and depth(tr) <= 2

    def test_halving(self):
        assert depth(learn_eq_halving(chain(3))) <= 3
        tr = learn_eq_halving(cube(2))
        assert verify_solves(tr, cube(2)) and depth(tr) <= 6

    def test_sequential(self):
        assert depth(learn_eq_sequential(cube(2))) == 2
        t = family_table("F6", 3)
        tr = learn_eq_sequential(t)
        assert verify_solves(tr, t) and depth(tr) <= 3
        assert tr.root.hypothesis == (1, 1, 1)


class TestProperLearners:
    def test_sequential(self):
        assert depth(learn_proper_sequential(cube(2))) <= 2
        tr = learn_proper_sequential(chain(3))
        assert verify_solves(tr, chain(3)) and depth(tr) <= 3

    def test_halving_f6(self):
        t = family_table("F6", 3)
        tr = learn_proper_halving(t)
        assert verify_solves(tr, t) and is_admissible(tr, t, "P") and depth(tr) <= 4

    def test_halving_on_cube_matches_plain_halving(self):
        assert learn_proper_halving(cube(2)) == learn_eq_halving(cube(2))

    def test_halving_open_f6_uses_proper_substitute(self):
        # the majority tuple 000 is not a row here, so a row replaces it
        t = family_table("F6", 4, closed=False)
        tr = learn_proper_halving(t)
        assert tr.root.hypothesis in t
        assert verify_solves(tr, t) and is_admissible(tr, t, "P")


class TestMpRank:
    def test_f6(self):
        t = family_table("F6", 3)
        tr = learn_mp_rank(t)
        assert verify_solves(tr, t) and depth(tr) <= 2

    def test_f5_single_block(self):
        t = family_table("F5", 2, blocks=(2,))
        tr = learn_mp_rank(t)
        assert verify_solves(tr, t) and is_admissible(tr, t, "MP") and depth(tr) <= 6

    def test_gadget_used_when_hypothesis_improper(self):
        t = family_table("F6", 3, closed=False)
        tr = learn_mp_rank(t)
        assert isinstance(tr.root, MembershipNode)
        assert verify_solves(tr, t) and depth(tr) <= 3


class TestCompleteTree:
    def test_cube(self):
        tr = build_complete_tree(cube(2), 2)
        assert tr is not None and depth(tr) == 2

    def test_chain_root_is_median(self):
        tr = build_complete_tree(chain(3), 2)
        assert tr.root.element == 1

    def test_f6_fails(self):
        assert build_complete_tree(family_table("F6", 3), 2) is None
        assert build_complete_tree(family_table("F6", 3, closed=False), 2) is None

    @pytest.mark.parametrize("d", [0, -1, 1.5])
    def test_bad_depth(self, d):
        with pytest.raises(ValueError):
            build_complete_tree(chain(3), d)

    def test_gate(self):
        with pytest.raises(GateExceeded):
            build_complete_tree(ConceptTable(17, None, ((0,) * 17, (1,) * 17)), 2)


def _uniform_consistent(tr, t, d):
    paths = complete_paths(tr)
    if len(paths) != 2 ** d:
        return False
    return all(len(p.literals) == d and t.system_mask(p.system) for p in paths)


@settings(max_examples=80, deadline=None)
@given(tables(max_n=4), st.integers(1, 4))
def test_complete_tree_exists_iff_rank_reaches_depth(t, d):
    tr = build_complete_tree(t, d)
    assert (tr is not None) == (rank(t) >= d)
    if tr is not None:
        assert _uniform_consistent(tr, t, d)


@settings(max_examples=80, deadline=None)
@given(tables(max_n=4), st.sampled_from(sorted(LEARNERS)))
def test_learner_contract(t, name):
    info = LEARNERS[name]
    tr = info.build(t)
    assert verify_solves(tr, t)
    assert is_admissible(tr, t, info.mode)
    assert depth(tr) <= info.bound(t) + 1e-9
    assert depth(tr) >= exact_depth(t, info.mode)


@settings(max_examples=30, deadline=None)
@given(tables(max_n=4), st.sampled_from(sorted(LEARNERS)))
def test_learners_deterministic(t, name):
    assert LEARNERS[name].build(t) == LEARNERS[name].build(t)
