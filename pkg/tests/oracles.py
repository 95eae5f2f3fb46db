"""Slow, obviously-correct reference implementations used to freeze expected values.

Nothing here shares code with the package beyond the ConceptTable container:
tuple sets are plain Python sets and systems are plain sets of (i, v) pairs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product


def rows_of(t):
    return frozenset(t.tuples)


def solutions(rows, system):
    return frozenset(r for r in rows if all(r[i] == v for i, v in system))


def all_systems(n):
    """Every system over n elements, contradictory pairs included."""
    lits = [(i, v) for i in range(n) for v in (0, 1)]
    for k in range(len(lits) + 1):
        for combo in combinations(lits, k):
            yield frozenset(combo)


def vc_brute(t):
    rows = rows_of(t)
    best = 0
    for k in range(t.n + 1):
        for idx in combinations(range(t.n), k):
            if len({tuple(r[i] for i in idx) for r in rows}) == 2 ** k:
                best = max(best, k)
    return best


def reduction_brute(t):
    """max over consistent systems of the size of a smallest equivalent subsystem."""
    rows = rows_of(t)
    worst = 0
    for s in all_systems(t.n):
        target = solutions(rows, s)
        if not target:
            continue
        for k in range(len(s) + 1):
            if any(solutions(rows, sub) == target for sub in combinations(s, k)):
                worst = max(worst, k)
                break
    return worst


def i_reduction_brute(t):
    """max over inconsistent systems of the size of a smallest inconsistent subsystem."""
    rows = rows_of(t)
    worst = 0
    for s in all_systems(t.n):
        if solutions(rows, s):
            continue
        for k in range(1, len(s) + 1):
            if any(not solutions(rows, sub) for sub in combinations(s, k)):
                worst = max(worst, k)
                break
    return worst


def minimal_inconsistent_brute(t):
    rows = rows_of(t)
    out = set()
    for s in all_systems(t.n):
        if solutions(rows, s):
            continue
        if all(solutions(rows, s - {lit}) for lit in s):
            out.add(s)
    return out


def rank_brute(rows, n):
    """Direct transcription of the k-family recursion, no memo sharing with the package."""
    rows = frozenset(rows)

    @lru_cache(maxsize=None)
    def go(rs):
        for k in range(n + 1):
            if is_k_family(rs, k):
                return k
        raise AssertionError

    @lru_cache(maxsize=None)
    def is_k_family(rs, k):
        # every function constant: 0-family; a (k+1)-family needs, for each
        # element, some value whose restriction is an l-family for l <= k
        if all(len({r[i] for r in rs}) <= 1 for i in range(n)):
            return True
        if k == 0:
            return False
        for i in range(n):
            ok = False
            for v in (0, 1):
                sub = frozenset(r for r in rs if r[i] == v)
                if not sub or is_k_family(sub, k - 1):
                    ok = True
            if not ok:
                return False
        return True

    return go(rows)


def game_depth(t, mode, root=None):
    """Minimum depth by naive game search over explicit tuple sets.

    ``root`` (default ``t``) is the table that decides which hypotheses are proper.
    """
    n = t.n
    start = rows_of(t)
    root = rows_of(root if root is not None else t)
    membership = mode in ("M", "ME", "MP")
    if mode in ("P", "MP"):
        hyps = sorted(root)
    elif mode in ("E", "ME"):
        hyps = list(product((0, 1), repeat=n))
    else:
        hyps = []

    @lru_cache(maxsize=None)
    def value(rs):
        if len(rs) <= 1:
            return 0
        best = None
        if membership:
            for i in range(n):
                parts = [frozenset(r for r in rs if r[i] == v) for v in (0, 1)]
                if all(parts):
                    d = 1 + max(value(p) for p in parts)
                    best = d if best is None else min(best, d)
        for h in hyps:
            answers = []
            if h in rs:
                answers.append(frozenset({h}))
            for i in range(n):
                side = frozenset(r for r in rs if r[i] != h[i])
                if side:
                    answers.append(side)
            if any(a == rs for a in answers):
                continue
            d = 1 + max(value(a) for a in answers)
            best = d if best is None else min(best, d)
        assert best is not None
        return best

    return value(start)


def min_membership_tree_depth(t, limit=4):
    """Depth-first enumeration of membership trees: the smallest d for which
    some tree of depth <= d leaves at most one tuple on every path."""
    rows = rows_of(t)

    def exists(rs, d, used):
        if len(rs) <= 1:
            return True
        if d == 0:
            return False
        for i in range(t.n):
            if i in used:
                continue
            zero = frozenset(r for r in rs if r[i] == 0)
            one = rs - zero
            if exists(zero, d - 1, used | {i}) and exists(one, d - 1, used | {i}):
                return True
        return False

    for d in range(limit + 1):
        if exists(rows, d, frozenset()):
            return d
    return None


def f4_pattern(t, s):
    """Does a minimal inconsistent F4 system match one of the five known pair patterns?

    Patterns, over labels u_i and u_{i,j}: a contradictory pair; u_{i,j}=1 with
    u_{k,l}=1 for (i,j) != (k,l); u_{i,j}=1 with u_k=0, i>k; u_{i,j}=1 with
    u_k=1, i<=k; u_i=0 with u_j=1, i<=j.
    """
    if len(s) == 2 and {lit.element for lit in s} == {next(iter(s)).element}:
        return True  # a contradictory pair
    keys = []
    for lit in s:
        label = t.elements[lit.element][1:]
        if "," in label:
            i, j = map(int, label.split(","))
            keys.append(("uu", i, j, lit.value))
        else:
            keys.append(("u", int(label), None, lit.value))
    if len(keys) != 2:
        return False
    a, b = sorted(keys)
    if a[0] == "u" and b[0] == "uu":
        (_, k, _, vk), (_, i, _, vij) = a, b
        return (vij == 1 and vk == 0 and i > k) or (vij == 1 and vk == 1 and i <= k)
    if a[0] == "uu" and b[0] == "uu":
        return a[3] == b[3] == 1 and (a[1], a[2]) != (b[1], b[2])
    (_, k1, _, v1), (_, k2, _, v2) = a, b
    return v1 == 0 and v2 == 1 and k1 < k2
