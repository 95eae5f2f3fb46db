"""Decision trees with membership and equivalence queries.

A membership node asks for one coordinate and has two children.  An
equivalence node proposes a full tuple (the hypothesis) and has ``n + 1``
children: the confirming answer, then one counterexample child per element.
Branches that can never be reached still exist structurally; by convention
they end in an all-zeros leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence, Union

from .table import ConceptTable, Literal


class MalformedTree(ValueError):
    pass


class QueryMode(str, Enum):
    M = "M"
    E = "E"
    ME = "ME"
    P = "P"
    MP = "MP"

    def __str__(self) -> str:
        return self.value


ALL_MODES = tuple(QueryMode)


@dataclass(frozen=True)
class Leaf:
    answer: tuple[int, ...]


@dataclass(frozen=True)
class MembershipNode:
    element: int
    children: tuple["Node", "Node"]


@dataclass(frozen=True)
class EquivalenceNode:
    hypothesis: tuple[int, ...]
    yes: "Node"
    counterexamples: tuple["Node", ...]


Node = Union[Leaf, MembershipNode, EquivalenceNode]


@dataclass(frozen=True)
class DecisionTree:
    n: int
    root: Node

    def __post_init__(self):
        _check_node(self.root, self.n)


def unreachable(n: int) -> Leaf:
    return Leaf((0,) * n)


def _check_node(node, n: int) -> None:
    stack, seen = [node], set()
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        if isinstance(node, Leaf):
            if len(node.answer) != n or any(b not in (0, 1) for b in node.answer):
                raise MalformedTree(f"leaf answer {node.answer} is not a {n}-bit tuple")
        elif isinstance(node, MembershipNode):
            if not 0 <= node.element < n:
                raise MalformedTree(f"membership element {node.element} out of range")
            if len(node.children) != 2:
                raise MalformedTree("membership node needs exactly two children")
            stack.extend(node.children)
        elif isinstance(node, EquivalenceNode):
            if len(node.hypothesis) != n or any(b not in (0, 1) for b in node.hypothesis):
                raise MalformedTree(f"hypothesis {node.hypothesis} is not a {n}-bit tuple")
            if len(node.counterexamples) != n:
                raise MalformedTree("equivalence node needs n counterexample children")
            stack.append(node.yes)
            stack.extend(node.counterexamples)
        else:
            raise MalformedTree(f"unknown node type {type(node).__name__}")


def _check_dims(tree: DecisionTree, t: ConceptTable) -> None:
    if tree.n != t.n:
        raise ValueError(f"tree dimension {tree.n} does not match table dimension {t.n}")


@dataclass(frozen=True)
class PathTrace:
    """One root-to-leaf path: the word of literals, its set, and the leaf answer."""

    literals: tuple[Literal, ...]
    system: frozenset
    answer: tuple[int, ...]


def complete_paths(tree: DecisionTree) -> list[PathTrace]:
    out = []

    def walk(node, word):
        if isinstance(node, Leaf):
            out.append(PathTrace(tuple(word), frozenset(word), node.answer))
        elif isinstance(node, MembershipNode):
            for v, child in enumerate(node.children):
                walk(child, word + [Literal(node.element, v)])
        else:
            h = node.hypothesis
            walk(node.yes, word + [Literal(i, b) for i, b in enumerate(h)])
            for i, child in enumerate(node.counterexamples):
                walk(child, word + [Literal(i, 1 - h[i])])

    walk(tree.root, [])
    return out


def verify_solves(tree: DecisionTree, t: ConceptTable) -> bool:
    """True iff every path's solution set on ``t`` has at most one tuple, and
    a path with exactly one tuple ends in a leaf labelled with it."""
    _check_dims(tree, t)
    masks = t.column_masks
    passed = set()  # (node id, mask) pairs already checked; subtrees may be shared

    def ok(node, mask):
        if not mask or (id(node), mask) in passed:
            return True
        if isinstance(node, Leaf):
            good = mask.bit_count() == 1 and t.rows(mask)[0] == node.answer
        elif isinstance(node, MembershipNode):
            i = node.element
            good = ok(node.children[0], mask & masks[i][0]) and ok(node.children[1], mask & masks[i][1])
        else:
            h = node.hypothesis
            good = ok(node.yes, mask & t.row_mask(h)) and all(
                ok(child, mask & masks[i][1 - h[i]]) for i, child in enumerate(node.counterexamples))
        if good:
            passed.add((id(node), mask))
        return good

    return ok(tree.root, t.full_mask)


def depth(tree: DecisionTree | Node) -> int:
    memo: dict[int, int] = {}

    def walk(node):
        if isinstance(node, Leaf):
            return 0
        if id(node) not in memo:
            kids = node.children if isinstance(node, MembershipNode) else (node.yes, *node.counterexamples)
            memo[id(node)] = 1 + max(walk(c) for c in kids)
        return memo[id(node)]

    return walk(tree.root if isinstance(tree, DecisionTree) else tree)


def iter_nodes(tree: DecisionTree) -> Iterator[Node]:
    """Each distinct node once, even where subtrees are shared."""
    stack, seen = [tree.root], set()
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        yield node
        if isinstance(node, MembershipNode):
            stack.extend(node.children)
        elif isinstance(node, EquivalenceNode):
            stack.append(node.yes)
            stack.extend(node.counterexamples)


def classify_queries(tree: DecisionTree, t: ConceptTable) -> set[QueryMode]:
    """Modes the tree is admissible under; a hypothesis is proper iff it is a row of ``t``."""
    _check_dims(tree, t)
    member = equiv = improper = False
    for node in iter_nodes(tree):
        if isinstance(node, MembershipNode):
            member = True
        elif isinstance(node, EquivalenceNode):
            equiv = True
            if node.hypothesis not in t:
                improper = True
    modes = {QueryMode.ME}
    if not equiv:
        modes.add(QueryMode.M)
    if not member:
        modes.add(QueryMode.E)
    if not improper:
        modes.add(QueryMode.MP)
        if not member:
            modes.add(QueryMode.P)
    return modes


def is_admissible(tree: DecisionTree, t: ConceptTable, mode: QueryMode | str) -> bool:
    return QueryMode(mode) in classify_queries(tree, t)


def to_proper_only(tree: DecisionTree, t: ConceptTable) -> DecisionTree:
    """Rewrite a solving tree with membership and proper equivalence queries
    into one using proper equivalence queries only.

    Works by induction on the root.  An equivalence root keeps its
    hypothesis, answers "yes" with a leaf and rewrites each counterexample
    subtree.  A membership root on ``u`` is dropped: the rewritten 0-subtree
    gets a copy of the rewritten 1-subtree grafted onto every leaf, and each
    resulting path that some tuple can follow ends in one more proper query
    deciding between the two leaf labels met along it.  Depth goes from h
    to at most 2**h - 1.
    """
    if not is_admissible(tree, t, QueryMode.MP):
        raise ValueError("tree uses improper hypotheses")
    if not verify_solves(tree, t):
        raise ValueError("tree does not solve the table")
    masks = t.column_masks
    n = t.n

    # subtrees no tuple can reach collapse to the unreachable leaf; otherwise
    # grafting would copy them into every leaf and blow up the tree size
    def rewrite(node, family):
        if not family:
            return unreachable(n)
        if isinstance(node, Leaf):
            return node
        if isinstance(node, EquivalenceNode):
            h = node.hypothesis
            return EquivalenceNode(h, Leaf(h), tuple(
                rewrite(child, family & masks[i][1 - h[i]])
                for i, child in enumerate(node.counterexamples)))
        i = node.element
        zero = rewrite(node.children[0], family & masks[i][0])
        one = rewrite(node.children[1], family & masks[i][1])
        return graft(zero, family, one, family)

    # equal (subtree, mask) pairs recur constantly after grafting; sharing
    # the rewritten subtrees keeps the result a DAG of manageable size.
    # Memo values hold the key node so its id cannot be reused meanwhile.
    memo: dict = {}

    def graft(node, mask, one, family):
        if not mask:
            return unreachable(n)
        key = ("g", id(node), mask, id(one), family)
        if key in memo:
            return memo[key][-1]
        if isinstance(node, Leaf):
            out = patch(one, mask, node.answer, family)
        elif isinstance(node, MembershipNode):
            e = node.element
            out = MembershipNode(e, tuple(graft(c, mask & masks[e][v], one, family)
                                          for v, c in enumerate(node.children)))
        else:
            h = node.hypothesis
            out = EquivalenceNode(
                h, graft(node.yes, mask & t.row_mask(h), one, family),
                tuple(graft(c, mask & masks[i][1 - h[i]], one, family)
                      for i, c in enumerate(node.counterexamples)))
        memo[key] = (node, one, out)
        return out

    def patch(node, mask, first, family):
        if not mask:
            return unreachable(n)
        key = ("p", id(node), mask, first, family)
        if key in memo:
            return memo[key][-1]
        if isinstance(node, Leaf):
            second = node.answer
            if t.row_mask(first) & family:
                out = EquivalenceNode(first, Leaf(first), (Leaf(second),) * n)
            elif t.row_mask(second) & family:
                out = EquivalenceNode(second, Leaf(second), (Leaf(first),) * n)
            else:
                raise AssertionError("reachable path whose leaf labels are both outside the family")
        elif isinstance(node, MembershipNode):
            e = node.element
            out = MembershipNode(e, tuple(patch(c, mask & masks[e][v], first, family)
                                          for v, c in enumerate(node.children)))
        else:
            h = node.hypothesis
            out = EquivalenceNode(
                h, patch(node.yes, mask & t.row_mask(h), first, family),
                tuple(patch(c, mask & masks[i][1 - h[i]], first, family)
                      for i, c in enumerate(node.counterexamples)))
        memo[key] = (node, out)
        return out

    return DecisionTree(n, rewrite(tree.root, t.full_mask))


def run_tree(tree: DecisionTree, concept: Sequence[int]) -> tuple[tuple[int, ...], int]:
    """Answer the tree's queries for a hidden tuple; return (leaf answer, queries asked).

    Counterexamples are reported at the lowest differing element.
    """
    concept = tuple(int(b) for b in concept)
    if len(concept) != tree.n:
        raise ValueError(f"expected a {tree.n}-bit tuple")
    node, asked = tree.root, 0
    while not isinstance(node, Leaf):
        asked += 1
        if isinstance(node, MembershipNode):
            node = node.children[concept[node.element]]
        else:
            diff = [i for i, (a, b) in enumerate(zip(node.hypothesis, concept)) if a != b]
            node = node.counterexamples[diff[0]] if diff else node.yes
    return node.answer, asked
