"""JSON files for tables and trees.

Table file::

    {"n": 3, "elements": ["l1", "l2", "l3"], "tuples": ["000", "100", "110", "111"]}

written with two-space indentation, sorted tuples and a trailing newline,
so parse-then-write reproduces a canonical file byte for byte.

Tree file: ``{"n": int, "root": node}`` where a node is one of
``{"kind": "leaf", "answer": bits}``,
``{"kind": "member", "element": i, "children": [node0, node1]}`` or
``{"kind": "equiv", "hypothesis": bits, "yes": node, "counterexamples": [...]}``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .table import ConceptTable, format_bits, parse_bits
from .tree import DecisionTree, EquivalenceNode, Leaf, MalformedTree, MembershipNode


def table_to_dict(t: ConceptTable) -> dict:
    return {"n": t.n, "elements": list(t.elements), "tuples": t.bitstrings()}


def table_from_dict(data: dict) -> ConceptTable:
    try:
        n, elements, tuples = data["n"], data["elements"], data["tuples"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"table file needs keys n, elements, tuples: {exc}") from None
    if not isinstance(n, int) or not isinstance(elements, list) or not isinstance(tuples, list):
        raise ValueError("table file has fields of the wrong type")
    return ConceptTable.from_bitstrings(tuples, elements, n=n)


def dumps_table(t: ConceptTable) -> str:
    return json.dumps(table_to_dict(t), indent=2) + "\n"


def loads_table(text: str) -> ConceptTable:
    return table_from_dict(json.loads(text))


def write_table(t: ConceptTable, path) -> None:
    Path(path).write_text(dumps_table(t))


def read_table(path) -> ConceptTable:
    return loads_table(Path(path).read_text())


def _node_to_dict(node) -> dict:
    if isinstance(node, Leaf):
        return {"kind": "leaf", "answer": format_bits(node.answer)}
    if isinstance(node, MembershipNode):
        return {"kind": "member", "element": node.element,
                "children": [_node_to_dict(c) for c in node.children]}
    return {"kind": "equiv", "hypothesis": format_bits(node.hypothesis),
            "yes": _node_to_dict(node.yes),
            "counterexamples": [_node_to_dict(c) for c in node.counterexamples]}


def _node_from_dict(data):
    if not isinstance(data, dict):
        raise MalformedTree(f"tree node must be an object, got {type(data).__name__}")
    kind = data.get("kind")
    try:
        if kind == "leaf":
            return Leaf(parse_bits(data["answer"]))
        if kind == "member":
            return MembershipNode(int(data["element"]),
                                  tuple(_node_from_dict(c) for c in data["children"]))
        if kind == "equiv":
            return EquivalenceNode(parse_bits(data["hypothesis"]), _node_from_dict(data["yes"]),
                                   tuple(_node_from_dict(c) for c in data["counterexamples"]))
    except KeyError as exc:
        raise MalformedTree(f"{kind} node is missing {exc}") from None
    raise MalformedTree(f"unknown node kind {kind!r}")


def tree_to_dict(tree: DecisionTree) -> dict:
    return {"n": tree.n, "root": _node_to_dict(tree.root)}


def tree_from_dict(data: dict) -> DecisionTree:
    if not isinstance(data, dict) or "n" not in data or "root" not in data:
        raise MalformedTree("tree file needs keys n and root")
    return DecisionTree(int(data["n"]), _node_from_dict(data["root"]))


def dumps_tree(tree: DecisionTree) -> str:
    return json.dumps(tree_to_dict(tree), indent=2) + "\n"


def loads_tree(text: str) -> DecisionTree:
    return tree_from_dict(json.loads(text))


def write_tree(tree: DecisionTree, path) -> None:
    Path(path).write_text(dumps_tree(tree))


def read_tree(path) -> DecisionTree:
    return loads_tree(Path(path).read_text())
