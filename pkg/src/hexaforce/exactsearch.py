"""Small exact solvers over bit-mask encoded instances.

Both solvers are exhaustive branch-and-bound searches, sized for the
instances this library produces (at most a few hundred cycles, edge
universes under a couple hundred bits).  Witnesses are deterministic:
after the optimum value is proved, the witness is rebuilt greedily so it
is the lexicographically least optimal solution, element by element.
"""

from __future__ import annotations

from typing import Sequence


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# -- maximum clique ------------------------------------------------------


def _color_order(adj: Sequence[int], cand: int) -> tuple[list[int], list[int]]:
    """Greedy coloring of the candidate set; returns vertices in
    nondecreasing color order with their color numbers (1-based)."""
    order: list[int] = []
    colors: list[int] = []
    rest = cand
    color = 0
    while rest:
        color += 1
        avail = rest
        while avail:
            v = (avail & -avail).bit_length() - 1
            order.append(v)
            colors.append(color)
            rest &= ~(1 << v)
            avail &= ~adj[v] & ~(1 << v)
    return order, colors


def max_clique_size(adj: Sequence[int], cand: int | None = None, at_least: int | None = None) -> int:
    """Exact maximum clique cardinality within the candidate mask.

    With ``at_least`` the search stops as soon as a clique of that size is
    found, returning its size (an early-exit feasibility probe).
    """
    if cand is None:
        cand = (1 << len(adj)) - 1
    best = 0

    def expand(size: int, p: int) -> bool:
        nonlocal best
        order, colors = _color_order(adj, p)
        for i in range(len(order) - 1, -1, -1):
            if size + colors[i] <= best:
                return False
            v = order[i]
            pv = p & adj[v]
            if pv:
                if expand(size + 1, pv):
                    return True
            elif size + 1 > best:
                best = size + 1
                if at_least is not None and best >= at_least:
                    return True
            p &= ~(1 << v)
        return False

    if cand:
        expand(0, cand)
    return best


def max_clique(adj: Sequence[int]) -> list[int]:
    """Lexicographically least maximum clique, as sorted vertex indices."""
    n = len(adj)
    full = (1 << n) - 1
    k = max_clique_size(adj, full)
    chosen: list[int] = []
    cand = full
    need = k
    for v in range(n):
        if need == 0:
            break
        if not cand >> v & 1:
            continue
        inner = cand & adj[v]
        if need == 1 or max_clique_size(adj, inner, at_least=need - 1) >= need - 1:
            chosen.append(v)
            cand = inner
            need -= 1
        else:
            cand &= ~(1 << v)
    return chosen


def min_weight_clique(adj: Sequence[int], weights: Sequence[int], size: int) -> list[int]:
    """Among cliques of exactly ``size`` vertices, one of minimum total
    weight; ties resolve to the first found in index order."""
    n = len(adj)
    best_weight = [sum(weights) + 1]
    best: list[list[int]] = [[]]

    def grow(start: int, cand: int, members: list[int], weight: int) -> None:
        if len(members) == size:
            if weight < best_weight[0]:
                best_weight[0] = weight
                best[0] = list(members)
            return
        need = size - len(members)
        pool = [v for v in range(start, n) if cand >> v & 1]
        if len(pool) < need:
            return
        floor = weight + sum(sorted(weights[v] for v in pool)[:need])
        if floor >= best_weight[0]:
            return
        for i, v in enumerate(pool):
            if len(pool) - i < need:
                break
            grow(v + 1, cand & adj[v], members + [v], weight + weights[v])

    grow(0, (1 << n) - 1, [], 0)
    if not best[0] and size > 0:
        raise ValueError(f"no clique of size {size}")
    return best[0]


# -- minimum hitting set --------------------------------------------------


def _prune_supersets(sets: Sequence[int]) -> list[int]:
    kept: list[int] = []
    for s in sorted(set(sets), key=lambda m: m.bit_count()):
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


def _packing_bound(sets: Sequence[int]) -> int:
    """Count of pairwise disjoint sets, greedily; a hitting set needs at
    least one element per disjoint member."""
    taken = 0
    count = 0
    for s in sets:
        if not s & taken:
            taken |= s
            count += 1
    return count


def min_hitting_set_size(sets: Sequence[int], cap: int | None = None) -> int:
    """Exact minimum number of elements meeting every set.

    ``cap`` prunes branches that cannot beat it; when the true optimum is
    larger than ``cap`` the returned value is only a lower witness that
    exceeds cap (callers use it as a feasibility probe).
    """
    work = _prune_supersets(sets)
    if not work:
        return 0
    # Greedy upper bound: repeatedly hit the most sets at once.
    chosen = 0
    remaining = list(work)
    while remaining:
        counts: dict[int, int] = {}
        for s in remaining:
            for e in _bits(s):
                counts[e] = counts.get(e, 0) + 1
        e = min(counts, key=lambda x: (-counts[x], x))
        chosen += 1
        remaining = [s for s in remaining if not s >> e & 1]
    best = chosen if cap is None else min(chosen, cap + 1)

    def solve(remaining: list[int], used: int) -> None:
        nonlocal best
        if not remaining:
            best = min(best, used)
            return
        if used + _packing_bound(remaining) >= best:
            return
        target = min(remaining, key=lambda m: (m.bit_count(), m))
        for e in _bits(target):
            nxt = [s for s in remaining if not s >> e & 1]
            solve(nxt, used + 1)

    solve(work, 0)
    return best


def min_hitting_set(sets: Sequence[int]) -> tuple[int, frozenset[int]]:
    """Minimum hitting set with the lexicographically least witness."""
    work = _prune_supersets(sets)
    k = min_hitting_set_size(work)
    witness: list[int] = []
    remaining = work
    need = k
    universe = 0
    for s in work:
        universe |= s
    for e in _bits(universe):
        if need == 0:
            break
        nxt = [s for s in remaining if not s >> e & 1]
        if min_hitting_set_size(nxt, cap=need - 1) <= need - 1:
            witness.append(e)
            remaining = nxt
            need -= 1
    return k, frozenset(witness)
