"""Finite concept tables, equation systems and the structural measures on them.

A :class:`ConceptTable` is the set of answer tuples a problem can have: one
column per element, one row per distinct restriction of a concept.  Every
learner, the oracle and the tree checks act on these tables.

Row subsets are handled internally as Python ``int`` bitmasks over the
table's (sorted) row positions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Sequence

MAX_ENUM_DIM = 16
MAX_ENUM_ROWS = 4096


class GateExceeded(ValueError):
    """An exhaustive computation was asked for beyond its size gate."""


class EmptyTableError(ValueError):
    """The operation needs at least one tuple."""


class Literal(NamedTuple):
    """The equation ``u_element(x) = value``."""

    element: int
    value: int

    def negated(self) -> "Literal":
        return Literal(self.element, 1 - self.value)

    def __str__(self) -> str:
        return f"u{self.element + 1}={self.value}"


EquationSystem = frozenset


def system(*pairs: tuple[int, int]) -> frozenset:
    """Build an equation system from ``(element, value)`` pairs."""
    return frozenset(Literal(int(e), int(v)) for e, v in pairs)


def parse_bits(bits: str) -> tuple[int, ...]:
    if not bits or any(ch not in "01" for ch in bits):
        raise ValueError(f"not a bit-string: {bits!r}")
    return tuple(int(ch) for ch in bits)


def format_bits(row: Sequence[int]) -> str:
    return "".join(str(b) for b in row)


@dataclass(frozen=True)
class ConceptTable:
    """A finite set of distinct bit-tuples of length ``n``.

    Rows are deduplicated and stored sorted, so two tables over the same
    elements compare and hash equal exactly when they hold the same tuples.
    """

    n: int
    elements: tuple[str, ...]
    tuples: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        elements = tuple(str(e) for e in self.elements or ())
        if not elements:
            elements = tuple(f"u{i + 1}" for i in range(self.n))
        if len(elements) != self.n:
            raise ValueError(f"expected {self.n} element labels, got {len(elements)}")
        if len(set(elements)) != self.n:
            raise ValueError("element labels must be distinct")
        rows = set()
        for row in self.tuples:
            row = tuple(int(b) for b in row)
            if len(row) != self.n:
                raise ValueError(f"tuple {row} does not have length {self.n}")
            if any(b not in (0, 1) for b in row):
                raise ValueError(f"tuple {row} is not binary")
            rows.add(row)
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "tuples", tuple(sorted(rows)))

    @classmethod
    def from_bitstrings(cls, strings: Iterable[str], elements: Sequence[str] | None = None,
                        n: int | None = None) -> "ConceptTable":
        rows = [parse_bits(s) for s in strings]
        if n is None:
            if rows:
                n = len(rows[0])
            elif elements:
                n = len(elements)
            else:
                raise ValueError("cannot infer the dimension of an empty table")
        return cls(n, tuple(elements or ()), tuple(rows))

    def with_tuples(self, rows: Iterable[Sequence[int]]) -> "ConceptTable":
        """Same elements, different tuple set."""
        return ConceptTable(self.n, self.elements, tuple(rows))

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.tuples)

    def __contains__(self, row) -> bool:
        return tuple(row) in self._index

    def bitstrings(self) -> list[str]:
        return [format_bits(r) for r in self.tuples]

    def __str__(self) -> str:
        return "{" + ",".join(self.bitstrings()) + "}"

    # -- bitmask helpers ---------------------------------------------------

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {row: pos for pos, row in enumerate(self.tuples)}

    @cached_property
    def column_masks(self) -> tuple[tuple[int, int], ...]:
        """``column_masks[i][v]`` is the mask of rows whose coordinate ``i`` is ``v``."""
        masks = []
        for i in range(self.n):
            m = [0, 0]
            for pos, row in enumerate(self.tuples):
                m[row[i]] |= 1 << pos
            masks.append((m[0], m[1]))
        return tuple(masks)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.tuples)) - 1

    def mask(self, lit: Literal) -> int:
        return self.column_masks[lit.element][lit.value]

    def row_mask(self, row: Sequence[int]) -> int:
        pos = self._index.get(tuple(row))
        return 0 if pos is None else 1 << pos

    def rows(self, mask: int) -> tuple[tuple[int, ...], ...]:
        out = []
        pos = 0
        while mask:
            if mask & 1:
                out.append(self.tuples[pos])
            mask >>= 1
            pos += 1
        return tuple(out)

    def system_mask(self, s: Iterable[Literal]) -> int:
        mask = self.full_mask
        for lit in s:
            mask &= self.mask(lit)
        return mask


def _check_literal(t: ConceptTable, lit) -> Literal:
    lit = Literal(int(lit[0]), int(lit[1]))
    if not 0 <= lit.element < t.n:
        raise IndexError(f"element index {lit.element} out of range for dimension {t.n}")
    if lit.value not in (0, 1):
        raise ValueError(f"literal value must be 0 or 1, got {lit.value}")
    return lit


def _check_system(t: ConceptTable, s: Iterable) -> frozenset:
    return frozenset(_check_literal(t, lit) for lit in s)


def _require_nonempty(t: ConceptTable) -> None:
    if not t.tuples:
        raise EmptyTableError("operation requires a nonempty table")


def check_gate(t: ConceptTable) -> None:
    if t.n > MAX_ENUM_DIM or len(t) > MAX_ENUM_ROWS:
        raise GateExceeded(
            f"exhaustive enumeration is limited to n <= {MAX_ENUM_DIM} and "
            f"<= {MAX_ENUM_ROWS} tuples (got n={t.n}, {len(t)} tuples)")


# -- operations ------------------------------------------------------------

def restrict(t: ConceptTable, lit) -> ConceptTable:
    """Tuples whose coordinate ``lit.element`` equals ``lit.value``."""
    lit = _check_literal(t, lit)
    return t.with_tuples(r for r in t.tuples if r[lit.element] == lit.value)


def solution_set(t: ConceptTable, s: Iterable) -> ConceptTable:
    s = _check_system(t, s)
    return t.with_tuples(r for r in t.tuples if all(r[e] == v for e, v in s))


def is_consistent(t: ConceptTable, s: Iterable) -> bool:
    s = _check_system(t, s)
    return t.system_mask(s) != 0


def is_shattered(t: ConceptTable, idxs: Iterable[int]) -> bool:
    idxs = tuple(idxs)
    for i in idxs:
        _check_literal(t, (i, 0))
    patterns = {tuple(r[i] for i in idxs) for r in t.tuples}
    return len(patterns) == 2 ** len(idxs)


def vc_dimension(t: ConceptTable) -> int:
    """Size of the largest shattered set of columns."""
    _require_nonempty(t)
    check_gate(t)
    best = 0
    for k in range(1, t.n + 1):
        if 2 ** k > len(t):
            break
        # shattering is hereditary: no k-set means no larger set either
        if not any(is_shattered(t, c) for c in combinations(range(t.n), k)):
            break
        best = k
    return best


def minimal_equivalent_subsystem(t: ConceptTable, s: Iterable) -> frozenset:
    """Inclusion-minimal subsystem of ``s`` with the same solutions on ``t``.

    Literals are tried for removal greedily in ascending ``(element, value)``
    order; a removal is kept whenever the solution set is unchanged.
    """
    s = _check_system(t, s)
    target = t.system_mask(s)
    if not target:
        raise ValueError("system is inconsistent on the table")
    kept = set(s)
    for lit in sorted(s):
        trial = kept - {lit}
        if t.system_mask(trial) == target:
            kept = trial
    return frozenset(kept)


def minimal_inconsistent_subsystem(t: ConceptTable, s: Iterable) -> frozenset:
    """Inclusion-minimal inconsistent subsystem of an inconsistent ``s``."""
    s = _check_system(t, s)
    if t.system_mask(s):
        raise ValueError("system is consistent on the table")
    kept = set(s)
    for lit in sorted(s):
        trial = kept - {lit}
        if not t.system_mask(trial):
            kept = trial
    return frozenset(kept)


def is_minimal_inconsistent(t: ConceptTable, s: Iterable) -> bool:
    s = _check_system(t, s)
    if t.system_mask(s):
        return False
    return all(t.system_mask(s - {lit}) for lit in s)


def reduction_number(t: ConceptTable) -> int:
    """Smallest r such that every consistent system has an equivalent subsystem of size <= r.

    The minimum equivalent subsystem of S is an irredundant one (no literal
    can be dropped), and any irredundant S is its own minimum.  So the value
    is the largest consistent irredundant system.  Consistency and
    irredundancy are both inherited by subsystems, which lets the search
    prune: a literal is added only while every literal keeps a private row
    (a row meeting all the other literals but not itself).
    """
    _require_nonempty(t)
    check_gate(t)
    masks = t.column_masks
    best = 0

    def extend(start: int, sol: int, privates: list[int]) -> None:
        nonlocal best
        best = max(best, len(privates))
        for i in range(start, t.n):
            for v in (0, 1):
                m = masks[i][v]
                own = sol & ~m
                if not own or not sol & m:
                    continue
                moved = [p & m for p in privates]
                if all(moved):
                    extend(i + 1, sol & m, moved + [own])

    extend(0, t.full_mask, [])
    return best


def minimal_inconsistent_systems(t: ConceptTable) -> Iterator[frozenset]:
    """Enumerate every inclusion-minimal inconsistent system over ``t``."""
    _require_nonempty(t)
    check_gate(t)
    masks = t.column_masks
    for i in range(t.n):
        for v in (0, 1):
            if not masks[i][v]:
                yield frozenset({Literal(i, v)})
    for i in range(t.n):
        if masks[i][0] and masks[i][1]:
            yield frozenset({Literal(i, 0), Literal(i, 1)})

    # contradiction-free systems: one literal per element, elements increasing
    def extend(start: int, chosen: list[Literal], sol: int) -> Iterator[frozenset]:
        for i in range(start, t.n):
            for v in (0, 1):
                m = masks[i][v]
                if not m:
                    continue
                if sol & m:
                    yield from extend(i + 1, chosen + [Literal(i, v)], sol & m)
                elif chosen and all(_and_except(t, chosen, j) & m for j in range(len(chosen))):
                    yield frozenset(chosen + [Literal(i, v)])

    yield from extend(0, [], t.full_mask)


def _and_except(t: ConceptTable, lits: list[Literal], skip: int) -> int:
    mask = t.full_mask
    for j, lit in enumerate(lits):
        if j != skip:
            mask &= t.mask(lit)
    return mask


def i_reduction_number(t: ConceptTable) -> int:
    """Smallest r such that every inconsistent system has an inconsistent subsystem of size <= r."""
    return max(len(s) for s in minimal_inconsistent_systems(t))


def rank(t: ConceptTable, cap: int | None = None) -> int | None:
    """The k of the smallest k-family containing ``t``.

    Zero when every column is constant; otherwise one more than the largest,
    over columns, of the smaller rank of the two restrictions.  An empty
    restriction counts as rank 0.  With ``cap`` set, returns ``None`` when the
    rank exceeds it.
    """
    _require_nonempty(t)
    k = _rank(t.tuples)
    if cap is not None and k > cap:
        return None
    return k


@lru_cache(maxsize=1 << 17)
def _rank(rows: tuple[tuple[int, ...], ...]) -> int:
    if len(rows) <= 1:
        return 0
    best = -1
    for i in range(len(rows[0])):
        zero = tuple(r for r in rows if r[i] == 0)
        if not zero or len(zero) == len(rows):
            continue
        one = tuple(r for r in rows if r[i] == 1)
        best = max(best, min(_rank(zero), _rank(one)))
    return best + 1 if best >= 0 else 0


def sauer_bound_holds(t: ConceptTable) -> bool:
    return len(t) <= (4 * t.n) ** vc_dimension(t)


def sauer_bound(t: ConceptTable) -> int:
    return (4 * t.n) ** vc_dimension(t)


def log2_ceil(x: int) -> int:
    return 0 if x <= 1 else math.ceil(math.log2(x))
