"""Constructive decision-tree builders, one per upper-bound argument.

Every builder returns a complete tree (all branches materialised) for the
whole table.  Ties between bit values go to 1 for majority votes; anything
else ties to the lowest element index and then to value 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .table import (ConceptTable, EmptyTableError, Literal, check_gate,
                    i_reduction_number, minimal_equivalent_subsystem,
                    minimal_inconsistent_subsystem, rank, reduction_number,
                    restrict, vc_dimension)
from .tree import (DecisionTree, EquivalenceNode, Leaf, MembershipNode,
                   QueryMode, unreachable)


def _require_nonempty(t: ConceptTable) -> None:
    if not t.tuples:
        raise EmptyTableError("cannot learn over an empty table")


def _terminal(t: ConceptTable) -> Leaf:
    return Leaf(t.tuples[0]) if len(t) == 1 else unreachable(t.n)


def majority(t: ConceptTable) -> tuple[int, ...]:
    """Coordinatewise majority tuple; ties go to 1."""
    counts = [sum(r[i] for r in t.tuples) for i in range(t.n)]
    return tuple(int(2 * c >= len(t)) for c in counts)


def learn_membership_halving(t: ConceptTable) -> DecisionTree:
    """Membership-only halving.

    Each step takes the majority bits, the longest prefix of them that some
    tuple still satisfies, and a minimal subsystem with the same solutions.
    Those elements are queried in order: a disagreement moves to the tuples
    matching the answers so far, full agreement to the subsystem's solutions.
    Either set holds at most half the current tuples.
    """
    _require_nonempty(t)

    def build(cur: ConceptTable):
        if len(cur) <= 1:
            return _terminal(cur)
        bits = majority(cur)
        prefix = []
        for i in range(cur.n):
            trial = prefix + [Literal(i, bits[i])]
            if not cur.system_mask(trial):
                break
            prefix = trial
        chosen = sorted(minimal_equivalent_subsystem(cur, prefix))
        return chain(cur, chosen)

    def chain(cur, lits):
        if not lits:
            return build(cur)
        lit, rest = lits[0], lits[1:]
        agree = chain(restrict(cur, lit), rest)
        disagree = build(restrict(cur, lit.negated()))
        children = (disagree, agree) if lit.value == 1 else (agree, disagree)
        return MembershipNode(lit.element, children)

    return DecisionTree(t.n, build(t))


def _rank_hypothesis(cur: ConceptTable) -> tuple[int, ...]:
    # per element, the hypothesis bit whose counterexample side has the smaller rank
    bits = []
    for i in range(cur.n):
        sides = [restrict(cur, (i, v)) for v in (0, 1)]
        ranks = [rank(s) if len(s) else 0 for s in sides]
        counter = 0 if ranks[0] <= ranks[1] else 1
        bits.append(1 - counter)
    return tuple(bits)


def _equivalence(cur: ConceptTable, h: tuple[int, ...], recurse) -> EquivalenceNode:
    children = []
    for i in range(cur.n):
        side = restrict(cur, (i, 1 - h[i]))
        children.append(recurse(side) if len(side) else unreachable(cur.n))
    return EquivalenceNode(h, Leaf(h), tuple(children))


def learn_eq_rank(t: ConceptTable) -> DecisionTree:
    """Equivalence queries whose every counterexample lowers the rank."""
    _require_nonempty(t)

    def build(cur):
        if rank(cur) == 0:
            return _terminal(cur)
        return _equivalence(cur, _rank_hypothesis(cur), build)

    return DecisionTree(t.n, build(t))


def learn_eq_halving(t: ConceptTable) -> DecisionTree:
    """Ask the majority tuple; any counterexample keeps at most half."""
    _require_nonempty(t)

    def build(cur):
        if len(cur) <= 1:
            return _terminal(cur)
        return _equivalence(cur, majority(cur), build)

    return DecisionTree(t.n, build(t))


def learn_eq_sequential(t: ConceptTable) -> DecisionTree:
    """Start from the all-ones hypothesis and flip each contradicted bit for good."""
    _require_nonempty(t)

    def build(cur, h):
        if len(cur) <= 1:
            return _terminal(cur)
        children = []
        for i in range(cur.n):
            side = restrict(cur, (i, 1 - h[i]))
            if len(side):
                flipped = h[:i] + (1 - h[i],) + h[i + 1:]
                children.append(build(side, flipped))
            else:
                children.append(unreachable(cur.n))
        return EquivalenceNode(h, Leaf(h), tuple(children))

    return DecisionTree(t.n, build(t, (1,) * t.n))


def learn_proper_sequential(t: ConceptTable) -> DecisionTree:
    """Each hypothesis is the smallest table row agreeing with every counterexample so far."""
    _require_nonempty(t)

    def build(cur):
        if len(cur) <= 1:
            return _terminal(cur)
        return _equivalence(cur, cur.tuples[0], build)

    return DecisionTree(t.n, build(t))


def learn_proper_halving(t: ConceptTable) -> DecisionTree:
    """Halving restricted to proper hypotheses.

    When the majority tuple is not a current candidate, it is replaced by a
    candidate that agrees with it on every unbalanced element: one whose
    flipped side holds fewer than ``|cur|/r`` tuples, r being the table's
    i-reduction number (at least 2).  Every counterexample then leaves at
    most ``(1 - 1/r)`` of the candidates.
    """
    _require_nonempty(t)
    r = max(2, i_reduction_number(t))

    def build(cur):
        if len(cur) <= 1:
            return _terminal(cur)
        h = majority(cur)
        if h not in cur:
            size = len(cur)
            unbalanced = [Literal(i, h[i]) for i in range(cur.n)
                          if r * len(restrict(cur, (i, 1 - h[i]))) < size]
            mask = cur.system_mask(unbalanced)
            if not mask:
                raise RuntimeError("unbalanced part of the majority hypothesis is inconsistent")
            h = cur.rows(mask)[0]
        return _equivalence(cur, h, build)

    return DecisionTree(t.n, build(t))


def learn_mp_rank(t: ConceptTable) -> DecisionTree:
    """Membership plus proper equivalence queries within i-reduction x rank.

    Uses the rank-lowering hypothesis when it is a candidate.  Otherwise a
    minimal inconsistent part of it (at most r literals) is queried by
    membership on every path; the first disagreement hands over to the
    subtree built for that counterexample side, and the path that agrees
    everywhere is unreachable.
    """
    _require_nonempty(t)
    memo: dict[ConceptTable, object] = {}

    def build(cur):
        if cur in memo:
            return memo[cur]
        if rank(cur) == 0:
            node = _terminal(cur)
        else:
            h = _rank_hypothesis(cur)
            subtrees = []
            for i in range(cur.n):
                side = restrict(cur, (i, 1 - h[i]))
                subtrees.append(build(side) if len(side) else unreachable(cur.n))
            if h in cur:
                node = EquivalenceNode(h, Leaf(h), tuple(subtrees))
            else:
                core = sorted(minimal_inconsistent_subsystem(cur, [Literal(i, b) for i, b in enumerate(h)]))
                node = gadget(core, 0, None, subtrees, cur.n)
        memo[cur] = node
        return node

    def gadget(core, pos, first_miss, subtrees, n):
        if pos == len(core):
            return unreachable(n) if first_miss is None else subtrees[first_miss]
        lit = core[pos]
        children = []
        for v in (0, 1):
            miss = first_miss
            if miss is None and v != lit.value:
                miss = lit.element
            children.append(gadget(core, pos + 1, miss, subtrees, n))
        return MembershipNode(lit.element, tuple(children))

    return DecisionTree(t.n, build(t))


def build_complete_tree(t: ConceptTable, d: int) -> DecisionTree | None:
    """A membership tree of uniform depth ``d`` whose every path system is consistent, or None.

    Leaves carry the smallest tuple meeting their path.
    """
    _require_nonempty(t)
    check_gate(t)
    if not isinstance(d, int) or d < 1:
        raise ValueError("depth must be a positive integer")
    if d > t.n:
        return None
    memo: dict[tuple[ConceptTable, int], object] = {}

    def search(cur, k):
        if k == 0:
            return Leaf(cur.tuples[0])
        key = (cur, k)
        if key in memo:
            return memo[key]
        found = None
        for i in range(cur.n):
            zero, one = restrict(cur, (i, 0)), restrict(cur, (i, 1))
            if not len(zero) or not len(one):
                continue
            left = search(zero, k - 1)
            if left is None:
                continue
            right = search(one, k - 1)
            if right is not None:
                found = MembershipNode(i, (left, right))
                break
        memo[key] = found
        return found

    root = search(t, d)
    return None if root is None else DecisionTree(t.n, root)


# -- registry ----------------------------------------------------------------

def _bound_membership_halving(t):
    r = reduction_number(t)
    return r * r * math.log2(2 * t.n)


def _bound_proper_halving(t):
    return max(2, i_reduction_number(t)) * vc_dimension(t) * math.log(4 * t.n)


@dataclass(frozen=True)
class LearnerInfo:
    name: str
    build: Callable[[ConceptTable], DecisionTree]
    mode: QueryMode
    bound: Callable[[ConceptTable], float]
    bound_text: str


LEARNERS = {
    info.name: info for info in (
        LearnerInfo("membership_halving", learn_membership_halving, QueryMode.M,
                    _bound_membership_halving, "r^2*log2(2n), r = reduction number"),
        LearnerInfo("eq_rank", learn_eq_rank, QueryMode.E, rank, "rank"),
        LearnerInfo("eq_halving", learn_eq_halving, QueryMode.E,
                    lambda t: vc_dimension(t) * math.log2(4 * t.n), "VC*log2(4n)"),
        LearnerInfo("eq_sequential", learn_eq_sequential, QueryMode.E, lambda t: t.n, "n"),
        LearnerInfo("proper_sequential", learn_proper_sequential, QueryMode.P, lambda t: t.n, "n"),
        LearnerInfo("proper_halving", learn_proper_halving, QueryMode.P,
                    _bound_proper_halving, "r*VC*ln(4n), r = max(2, i-reduction number)"),
        LearnerInfo("mp_rank", learn_mp_rank, QueryMode.MP,
                    lambda t: i_reduction_number(t) * rank(t), "r*k, r = i-reduction number, k = rank"),
    )
}
