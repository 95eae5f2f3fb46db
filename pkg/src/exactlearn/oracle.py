"""Exact minimum decision-tree depth by memoized game search.

The learner picks a query, an adversary picks any answer consistent with
the remaining candidates, and the game ends once at most one candidate is
left.  The value of the game from the full table is the minimum depth of a
solving tree in the given mode.

States are bitmasks over the rows of the root table, which is fixed per
search; properness of a hypothesis is always judged against the root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .table import ConceptTable, EmptyTableError, GateExceeded, format_bits
from .tree import QueryMode

# (max n, max rows) per search kind
EQUIVALENCE_GATE = (6, 24)
MEMBERSHIP_GATE = (14, 64)
EQUIVALENCE_HARD_LIMIT = (10, 64)
MEMBERSHIP_HARD_LIMIT = (20, 256)

_USES_MEMBERSHIP = {QueryMode.M, QueryMode.ME, QueryMode.MP}
_USES_EQUIVALENCE = {QueryMode.E, QueryMode.ME, QueryMode.P, QueryMode.MP}
_PROPER_ONLY = {QueryMode.P, QueryMode.MP}


@dataclass(frozen=True)
class Query:
    kind: str  # "member" or "equiv"
    element: int | None = None
    hypothesis: tuple[int, ...] | None = None

    def __str__(self) -> str:
        if self.kind == "member":
            return f"member u{self.element + 1}"
        return f"equiv {format_bits(self.hypothesis)}"


def _check_limits(t: ConceptTable, mode: QueryMode, gate_override: bool) -> None:
    if mode in _USES_EQUIVALENCE:
        gate, hard, what = EQUIVALENCE_GATE, EQUIVALENCE_HARD_LIMIT, "equivalence"
    else:
        gate, hard, what = MEMBERSHIP_GATE, MEMBERSHIP_HARD_LIMIT, "membership"
    limit = hard if gate_override else gate
    if t.n > limit[0] or len(t) > limit[1]:
        kind = "hard limit" if gate_override else "search gate"
        raise GateExceeded(
            f"{what} {kind} is n <= {limit[0]} and <= {limit[1]} tuples "
            f"(got n={t.n}, {len(t)} tuples)")


def _ceil_log(size: int, base: int) -> int:
    d, reach = 0, 1
    while reach < size:
        reach *= base
        d += 1
    return d


class _Game:
    def __init__(self, t: ConceptTable, mode: QueryMode):
        self.t = t
        self.mode = mode
        self.cols = t.column_masks
        self.base = 2 if mode is QueryMode.M else t.n + 1
        if mode in _PROPER_ONLY:
            self.hypotheses = list(t.tuples)
        elif mode in _USES_EQUIVALENCE:
            self.hypotheses = [tuple((h >> (t.n - 1 - i)) & 1 for i in range(t.n))
                               for h in range(2 ** t.n)]
        else:
            self.hypotheses = []
        self.memo: dict[int, int] = {}

    def queries(self, mask: int) -> Iterator[tuple[Query, tuple[int, ...]]]:
        """Useful queries in tie-break order, each with its nonempty answer sets."""
        cols = self.cols
        if self.mode in _USES_MEMBERSHIP:
            for i in range(self.t.n):
                zero, one = mask & cols[i][0], mask & cols[i][1]
                if zero and one:
                    yield Query("member", element=i), (zero, one)
        seen = set()
        for h in self.hypotheses:
            children = []
            stuck = False
            for i, b in enumerate(h):
                side = mask & cols[i][1 - b]
                if side == mask:
                    stuck = True
                    break
                if side:
                    children.append(side)
            if stuck:
                continue
            yes = mask & self.t.row_mask(h)
            if yes:
                children.append(yes)
            key = frozenset(children)
            if key in seen:
                continue
            seen.add(key)
            yield Query("equiv", hypothesis=h), tuple(children)

    def lower(self, mask: int) -> int:
        return _ceil_log(mask.bit_count(), self.base)

    def upper(self, mask: int) -> int:
        return sum(1 for c0, c1 in self.cols if mask & c0 and mask & c1)

    def value(self, mask: int) -> int:
        if mask.bit_count() <= 1:
            return 0
        cached = self.memo.get(mask)
        if cached is not None:
            return cached
        low = self.lower(mask)
        best = self.upper(mask) + 1
        for _, children in self.queries(mask):
            worst = 0
            for child in sorted(children, key=int.bit_count, reverse=True):
                worst = max(worst, self.value(child))
                if worst + 1 >= best:
                    break
            if worst + 1 < best:
                best = worst + 1
                if best <= low:
                    break
        self.memo[mask] = best
        return best


def _game(t: ConceptTable, mode, gate_override: bool) -> _Game:
    mode = QueryMode(mode)
    if not t.tuples:
        raise EmptyTableError("exact depth of an empty table is undefined")
    _check_limits(t, mode, gate_override)
    return _Game(t, mode)


def exact_depth(t: ConceptTable, mode: QueryMode | str, gate_override: bool = False) -> int:
    """Minimum depth of a tree solving ``t`` with the queries allowed by ``mode``."""
    game = _game(t, mode, gate_override)
    return game.value(t.full_mask)


def best_first_query(t: ConceptTable, mode: QueryMode | str, gate_override: bool = False) -> Query:
    """First query of some optimal tree.

    Ties go to membership before equivalence, then the lowest element, then
    the lexicographically smallest hypothesis.
    """
    game = _game(t, mode, gate_override)
    if len(t) < 2:
        raise ValueError("a single-tuple table needs no query")
    target = game.value(t.full_mask)
    for query, children in game.queries(t.full_mask):
        if 1 + max(game.value(c) for c in children) == target:
            return query
    raise AssertionError("no query attains the game value")
