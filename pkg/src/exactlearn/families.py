"""Finite truncations of the seven canonical concept families.

Each family is defined on an infinite element set with infinitely many
concepts.  A truncation fixes finitely many elements; the table is then
``{c ∩ U(z) : c ∈ C}``.  Concepts whose index lies past the chosen elements
all collapse onto a few rows, so one representative index stands in for
all of them.  With ``closed=False`` only concepts indexed within the chosen
elements are used, which drops those collapsed rows.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .table import (ConceptTable, i_reduction_number, rank, reduction_number,
                    vc_dimension)

FAMILIES = ("F1", "F2", "F3", "F4", "F5", "F6", "F7")

# indicator vectors (R, D, C, I) of the seven complexity classes, in order
CLASS_ROWS = (
    (0, 0, 0, 0),
    (0, 0, 0, 1),
    (0, 1, 0, 0),
    (0, 1, 0, 1),
    (0, 1, 1, 0),
    (0, 1, 1, 1),
    (1, 1, 0, 1),
)


@dataclass(frozen=True)
class FamilySpec:
    """Which family to truncate and how far.

    ``n`` means: the element count for F1, F2, F6 and F7; the largest index
    ``m`` for F3 (elements p1..pm, l1..lm) and F4 (elements u_i, u_{i,j} with
    i, j <= m); the block range 1..n for F5 unless ``blocks`` is given.
    """

    name: str
    n: int
    blocks: tuple[int, ...] | None = None
    closed: bool = True

    def __post_init__(self):
        if self.name not in FAMILIES:
            raise ValueError(f"unknown family {self.name!r}; expected one of {FAMILIES}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"size parameter must be a positive integer, got {self.n!r}")
        if self.name == "F1" and self.n < 2:
            raise ValueError("F1 needs at least two elements")
        if self.blocks is not None:
            if self.name != "F5":
                raise ValueError("blocks only apply to F5")
            blocks = tuple(sorted(set(int(b) for b in self.blocks)))
            if not blocks or blocks[0] < 1:
                raise ValueError("F5 blocks must be positive integers")
            object.__setattr__(self, "blocks", blocks)


def _table(elements: Sequence[str], concepts: Sequence[Callable[[int], int]]) -> ConceptTable:
    rows = [tuple(member(i) for i in range(len(elements))) for member in concepts]
    if not rows:
        raise ValueError("truncation has no concepts")
    return ConceptTable(len(elements), tuple(elements), tuple(rows))


def _f1(spec: FamilySpec) -> ConceptTable:
    # elements u_0..u_{n-1}; u_0 holds the first n-1 sequence positions,
    # u_j only position j; concept c_i contains u iff u's i-th entry is 1
    k = spec.n - 1
    elements = [f"u{j}" for j in range(spec.n)]
    last = k + 1 if spec.closed else k

    def concept(i):
        return lambda j: int(1 <= i <= k) if j == 0 else int(j == i)
    return _table(elements, [concept(i) for i in range(1, last + 1)])


def _f2(spec: FamilySpec) -> ConceptTable:
    elements = [str(i + 1) for i in range(spec.n)]
    rows = [tuple((mask >> (spec.n - 1 - i)) & 1 for i in range(spec.n))
            for mask in range(2 ** spec.n)]
    return ConceptTable(spec.n, tuple(elements), tuple(rows))


def _f3(spec: FamilySpec) -> ConceptTable:
    m = spec.n
    elements = [f"p{i}" for i in range(1, m + 1)] + [f"l{i}" for i in range(1, m + 1)]
    last = m + 1 if spec.closed else m

    def concept(c):
        # c_c = {p_c, l_1, ..., l_{c-1}}
        return lambda j: int(j + 1 == c) if j < m else int(j - m + 1 <= c - 1)
    return _table(elements, [concept(c) for c in range(1, last + 1)])


def _f4_elements(m: int) -> list[tuple]:
    return [("u", i) for i in range(1, m + 1)] + [
        ("uu", i, j) for i in range(1, m + 1) for j in range(1, m + 1)]


def _f4(spec: FamilySpec) -> ConceptTable:
    m = spec.n
    keys = _f4_elements(m)
    elements = [f"u{k[1]}" if k[0] == "u" else f"u{k[1]},{k[2]}" for k in keys]
    last = m + 1 if spec.closed else m

    def concept(p, q):
        def member(j):
            key = keys[j]
            if key[0] == "u":
                return int(p > key[1])
            return int((p, q) == key[1:])
        return member
    return _table(elements, [concept(p, q)
                             for p in range(1, last + 1) for q in range(1, last + 1)])


def _f5(spec: FamilySpec) -> ConceptTable:
    blocks = spec.blocks or tuple(range(1, spec.n + 1))
    keys = []
    for i in blocks:
        keys.append(("u", i))
        keys.extend(("uu", i, j) for j in range(1, i + 1))
    elements = [f"u{k[1]}" if k[0] == "u" else f"u{k[1]},{k[2]}" for k in keys]
    pairs = [(i, j) for i in blocks for j in range(1, i + 1)]
    if spec.closed:
        # any concept from a block outside the range meets none of the elements
        outside = next(b for b in range(1, max(blocks) + 2) if b not in blocks)
        pairs.append((outside, 1))

    def concept(i, j):
        def member(e):
            key = keys[e]
            if key[0] == "u":
                return int(key[1] == i)
            return int(key[1:] == (i, j))
        return member
    return _table(elements, [concept(i, j) for i, j in pairs])


def _f6(spec: FamilySpec) -> ConceptTable:
    elements = [f"p{i}" for i in range(1, spec.n + 1)]
    last = spec.n + 1 if spec.closed else spec.n
    return _table(elements, [(lambda c: lambda j: int(j + 1 == c))(c)
                             for c in range(1, last + 1)])


def _f7(spec: FamilySpec) -> ConceptTable:
    # c_1 is empty and c_i = {l_1, ..., l_{i-1}}; c_{n+1} already contains every element
    elements = [f"l{i}" for i in range(1, spec.n + 1)]
    return _table(elements, [(lambda c: lambda j: int(j + 1 <= c - 1))(c)
                             for c in range(1, spec.n + 2)])


_GENERATORS = {"F1": _f1, "F2": _f2, "F3": _f3, "F4": _f4, "F5": _f5, "F6": _f6, "F7": _f7}


def generate(spec: FamilySpec) -> ConceptTable:
    return _GENERATORS[spec.name](spec)


def family_table(name: str, n: int, **kwargs) -> ConceptTable:
    return generate(FamilySpec(name, n, **kwargs))


@dataclass(frozen=True)
class Caps:
    """Thresholds under which a measure counts as bounded at truncation scale."""

    reduction: int = 2
    vc: int = 2
    rank: int = 2
    i_reduction: int = 2


@dataclass(frozen=True)
class StructureProfile:
    n: int
    size: int
    vc: int
    rank: int | None  # None: exceeds the rank cap
    reduction_number: int
    i_reduction_number: int
    indicator_estimate: tuple[int, int, int, int]
    caps: Caps = field(default_factory=Caps)

    @property
    def class_row(self) -> int | None:
        """1-based complexity class whose indicator vector matches, if any."""
        try:
            return CLASS_ROWS.index(self.indicator_estimate) + 1
        except ValueError:
            return None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "vc": self.vc,
            "rank": "exceeds cap" if self.rank is None else self.rank,
            "reduction_number": self.reduction_number,
            "i_reduction_number": self.i_reduction_number,
            "indicator_estimate": list(self.indicator_estimate),
            "class_row": self.class_row,
            "caps": {"reduction": self.caps.reduction, "vc": self.caps.vc,
                     "rank": self.caps.rank, "i_reduction": self.caps.i_reduction},
        }


def indicator_estimate(t: ConceptTable, caps: Caps | None = None) -> StructureProfile:
    """Measure a table and flag which measures stay under ``caps``.

    This only estimates the indicator vector at the table's scale; it says
    nothing provable about the infinite family the table came from.
    """
    caps = caps or Caps()
    vc = vc_dimension(t)
    k = rank(t, cap=caps.rank)
    red = reduction_number(t)
    ired = i_reduction_number(t)
    flags = (int(red <= caps.reduction), int(vc <= caps.vc),
             int(k is not None), int(ired <= caps.i_reduction))
    return StructureProfile(t.n, len(t), vc, k, red, ired, flags, caps)
