"""Alternating cycles of a perfect matching, and compatible families.

A cycle alternates on a matching M when every second edge lies in M.
Orient each matched edge from its class-0 endpoint to its class-1
endpoint and every unmatched edge the other way; alternating cycles then
correspond one-to-one with directed cycles.  Contracting each matched
pair to a single node turns those into elementary circuits of a small
digraph, which a Johnson-style search enumerates without duplicates.

Two alternating cycles are *compatible* when every edge they share is a
matched edge.  They *cross* at a shared matched edge when the four edges
adjacent to it alternate between the two cycles in planar rotation
order; geometrically one cycle passes through the other.  Families of
pairwise compatible cycles are ranked by cardinality, with the total
number of enclosed hexagons (the h-index) as an optional secondary
objective.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import CycleLimitExceeded, NotACycle
from .exactsearch import max_clique, max_clique_size, min_weight_clique
from .hexcore import Cell, HexSystem, Point
from .matchings import PerfectMatching

#: Default ceiling on the number of enumerated cycles.
DEFAULT_CYCLE_LIMIT = 10**6


@dataclass(frozen=True)
class AlternatingCycle:
    """One alternating cycle: all its edges, the matched half, and how
    many hexagons of the system it encloses."""

    edge_bits: int
    m_edge_bits: int
    interior_hex_count: int

    def __len__(self) -> int:
        return self.edge_bits.bit_count()

    def edge_indices(self) -> tuple[int, ...]:
        out = []
        b = self.edge_bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return tuple(out)


@dataclass(frozen=True)
class CompatibleSet:
    """A pairwise compatible family of alternating cycles."""

    cycles: tuple[AlternatingCycle, ...]
    h_index: int

    @property
    def cardinality(self) -> int:
        return len(self.cycles)


# -- planar point location (exact integer ray casting) -------------------


def _point_in_polygon(pt: Point, poly: Sequence[Point]) -> bool:
    """Strict interior test for a cell center against a lattice polygon.

    Centers never lie on bonds or share a y coordinate with corners, so a
    horizontal ray through the center meets the polygon transversally and
    plain parity counting is exact.
    """
    cx, cy = pt
    inside = False
    n = len(poly)
    for i in range(n):
        ux, uy = poly[i]
        vx, vy = poly[(i + 1) % n]
        if (uy > cy) != (vy > cy):
            # Ray goes toward +x: count crossings with x > cx, exactly.
            num = (ux - cx) * (vy - uy) + (cy - uy) * (vx - ux)
            if (num > 0) == (vy > uy):
                inside = not inside
    return inside


def _interior_count(system: HexSystem, polygon: Sequence[Point]) -> int:
    return sum(1 for c in system.centers if _point_in_polygon(c, polygon))


# -- elementary circuits (Johnson-style search) ---------------------------


def _scc_of(adj: Sequence[Sequence[int]], nodes: frozenset[int], start: int) -> frozenset[int]:
    """The strongly connected component of ``start`` within the induced
    subgraph on ``nodes``; iterative forward/backward reachability."""
    def reach(forward: bool) -> set[int]:
        if forward:
            out = {v: [w for w in adj[v] if w in nodes] for v in nodes}
        else:
            out = {v: [] for v in nodes}
            for v in nodes:
                for w in adj[v]:
                    if w in nodes:
                        out[w].append(v)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in out[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    return frozenset(reach(True) & reach(False))


def _elementary_circuits(adj: Sequence[Sequence[int]], limit: int) -> Iterator[list[int]]:
    """Every elementary circuit of the digraph, each reported once with
    its least node first.  Neighbour lists must be sorted; the output
    order is then deterministic."""
    n = len(adj)
    count = 0
    for s in range(n):
        comp = _scc_of(adj, frozenset(range(s, n)), s)
        if len(comp) < 2:
            continue
        blocked = {v: False for v in comp}
        b_sets: dict[int, set[int]] = {v: set() for v in comp}
        stack: list[int] = []

        def unblock(v: int) -> None:
            blocked[v] = False
            while b_sets[v]:
                w = b_sets[v].pop()
                if blocked[w]:
                    unblock(w)

        def circuit(v: int) -> Iterator[list[int]]:
            nonlocal count
            found = False
            stack.append(v)
            blocked[v] = True
            for w in adj[v]:
                if w not in comp:
                    continue
                if w == s:
                    count += 1
                    if count > limit:
                        raise CycleLimitExceeded(f"more than {limit} cycles")
                    yield list(stack)
                    found = True
                elif not blocked[w]:
                    for c in circuit(w):
                        yield c
                        found = True
            if found:
                unblock(v)
            else:
                for w in adj[v]:
                    if w in comp:
                        b_sets[w].add(v)
            stack.pop()

        yield from circuit(s)


# -- enumeration -----------------------------------------------------------


def alternating_cycles(
    system: HexSystem, matching: PerfectMatching, limit: int = DEFAULT_CYCLE_LIMIT
) -> list[AlternatingCycle]:
    """All cycles alternating on the matching, in a fixed order
    (ascending size, then ascending edge indices)."""
    m_bits = matching.bits
    pair_edges = []
    b = m_bits
    while b:
        low = b & -b
        pair_edges.append(low.bit_length() - 1)
        b ^= low

    colors = system.colors
    black_of = []
    white_of = []
    node_of_vertex: dict[int, int] = {}
    for i, e in enumerate(pair_edges):
        u, v = system.edges[e]
        blk, wht = (u, v) if colors[u] == 0 else (v, u)
        black_of.append(blk)
        white_of.append(wht)
        node_of_vertex[blk] = i
        node_of_vertex[wht] = i

    adj: list[list[int]] = []
    for i, e in enumerate(pair_edges):
        succ = []
        for f, u in system.vertex_edges[white_of[i]]:
            if f != e:
                succ.append(node_of_vertex[u])
        adj.append(sorted(succ))

    cycles = []
    for circ in _elementary_circuits(adj, limit):
        edge_bits = 0
        m_edge_bits = 0
        polygon: list[Point] = []
        for idx, i in enumerate(circ):
            e = pair_edges[i]
            edge_bits |= 1 << e
            m_edge_bits |= 1 << e
            polygon.append(system.vertices[black_of[i]])
            polygon.append(system.vertices[white_of[i]])
            j = circ[(idx + 1) % len(circ)]
            a, bb = white_of[i], black_of[j]
            f = system.edge_index[(min(a, bb), max(a, bb))]
            edge_bits |= 1 << f
        cycles.append(AlternatingCycle(
            edge_bits=edge_bits,
            m_edge_bits=m_edge_bits,
            interior_hex_count=_interior_count(system, polygon)))
    cycles.sort(key=lambda c: (c.edge_bits.bit_count(), c.edge_indices()))
    return cycles


def alternating_hexagons(system: HexSystem, matching: PerfectMatching) -> frozenset[Cell]:
    """Hexagons whose own six edges alternate on the matching."""
    return frozenset(
        cell
        for cell, bits in zip(system.hexes, system.hex_edge_bits)
        if (bits & matching.bits).bit_count() == 3
    )


# -- pairwise relations ----------------------------------------------------


def is_compatible(c1: AlternatingCycle, c2: AlternatingCycle) -> bool:
    """True when every shared edge is a matched edge."""
    shared = c1.edge_bits & c2.edge_bits
    return shared & ~(c1.m_edge_bits | c2.m_edge_bits) == 0


def is_crossing(system: HexSystem, c1: AlternatingCycle, c2: AlternatingCycle) -> bool:
    """True when the cycles pass through one another at a shared matched
    edge: the four adjacent edges alternate between the two cycles in
    rotation order around that edge."""
    shared_m = c1.m_edge_bits & c2.m_edge_bits
    b = shared_m
    while b:
        low = b & -b
        e = low.bit_length() - 1
        b ^= low
        u, v = system.edges[e]
        ux, uy = system.vertices[u]
        vx, vy = system.vertices[v]
        d = (vx - ux, vy - uy)
        sides: dict[str, int | None] = {"aL": None, "aR": None, "bL": None, "bR": None}
        for f, w in system.vertex_edges[u]:
            if f == e:
                continue
            wx, wy = system.vertices[w]
            s = d[0] * (wy - uy) - d[1] * (wx - ux)
            sides["aL" if s > 0 else "aR"] = f
        for f, w in system.vertex_edges[v]:
            if f == e:
                continue
            wx, wy = system.vertices[w]
            s = d[0] * (wy - vy) - d[1] * (wx - vx)
            sides["bL" if s > 0 else "bR"] = f
        if any(x is None for x in sides.values()):
            continue
        in1 = {k for k, f in sides.items() if c1.edge_bits >> f & 1}
        in2 = {k for k, f in sides.items() if c2.edge_bits >> f & 1}
        if (in1, in2) in (({"aL", "bR"}, {"aR", "bL"}), ({"aR", "bL"}, {"aL", "bR"})):
            return True
    return False


def interior_hexagons(system: HexSystem, cycle: object) -> int:
    """Number of the system's hexagons strictly inside a simple cycle.

    ``cycle`` may be an AlternatingCycle, a bit mask, or an iterable of
    edge indices; anything that is not one single simple cycle raises
    NotACycle.
    """
    bits = getattr(cycle, "edge_bits", cycle)
    if not isinstance(bits, int):
        acc = 0
        for e in bits:  # type: ignore[union-attr]
            acc |= 1 << e
        bits = acc
    if bits == 0:
        raise NotACycle("empty edge set")
    edges = []
    bb = bits
    while bb:
        low = bb & -bb
        edges.append(low.bit_length() - 1)
        bb ^= low
    nbr: dict[int, list[int]] = {}
    for e in edges:
        a, b = system.edges[e]
        nbr.setdefault(a, []).append(b)
        nbr.setdefault(b, []).append(a)
    if any(len(v) != 2 for v in nbr.values()):
        raise NotACycle("vertex degree is not 2 everywhere")
    start = min(nbr)
    walk = [start, min(nbr[start])]
    while True:
        a, b = walk[-2], walk[-1]
        nxt = nbr[b][0] if nbr[b][0] != a else nbr[b][1]
        if nxt == start:
            break
        walk.append(nxt)
    if len(walk) != len(edges):
        raise NotACycle("edge set splits into several cycles")
    polygon = [system.vertices[v] for v in walk]
    return _interior_count(system, polygon)


# -- maximum compatible families -------------------------------------------


def max_compatible_set(
    system: HexSystem,
    matching: PerfectMatching,
    *,
    non_crossing: bool = False,
    minimize_h_index: bool = False,
    limit: int = DEFAULT_CYCLE_LIMIT,
) -> CompatibleSet:
    """A maximum-cardinality pairwise compatible family of alternating
    cycles.

    The default witness is the lexicographically least one in cycle
    enumeration order.  ``non_crossing`` additionally forbids crossing
    pairs; ``minimize_h_index`` picks, among maximum families, one with
    the fewest enclosed hexagons in total.
    """
    cycles = alternating_cycles(system, matching, limit=limit)
    n = len(cycles)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            ok = is_compatible(cycles[i], cycles[j])
            if ok and non_crossing:
                ok = not is_crossing(system, cycles[i], cycles[j])
            if ok:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    if minimize_h_index:
        k = max_clique_size(adj)
        weights = [c.interior_hex_count for c in cycles]
        members = min_weight_clique(adj, weights, k)
    else:
        members = max_clique(adj)
    chosen = tuple(cycles[i] for i in sorted(members))
    return CompatibleSet(cycles=chosen, h_index=sum(c.interior_hex_count for c in chosen))
