"""Perfect matchings as fixed-width edge bit sets.

The enumeration order is part of the public contract: matchings come out
of a depth-first search that always extends the lowest-index uncovered
vertex, trying its incident edges in ascending edge order.  Matching
indices used by the command line and by sampling refer to this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import MatchingLimitExceeded, NotAlternating
from .hexcore import Cell, HexSystem


@dataclass(frozen=True)
class PerfectMatching:
    """An edge subset covering every vertex exactly once, as a bit mask."""

    bits: int

    def edge_indices(self) -> tuple[int, ...]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return tuple(out)

    @classmethod
    def from_edges(cls, edges: Iterable[int]) -> "PerfectMatching":
        bits = 0
        for e in edges:
            bits |= 1 << e
        return cls(bits)

    def __len__(self) -> int:
        return self.bits.bit_count()


def is_perfect_matching(system: HexSystem, bits: int) -> bool:
    covered = 0
    for i in range(system.n_edges):
        if bits >> i & 1:
            a, b = system.edges[i]
            if covered >> a & 1 or covered >> b & 1:
                return False
            covered |= (1 << a) | (1 << b)
    return covered == (1 << system.n_vertices) - 1


def enumerate_perfect_matchings(
    system: HexSystem, limit: int | None = None
) -> Iterator[PerfectMatching]:
    """Yield every perfect matching in the fixed enumeration order.

    ``limit`` guards pathological inputs; exceeding it raises
    MatchingLimitExceeded after ``limit`` matchings have been yielded.
    """
    n = system.n_vertices
    full = (1 << n) - 1
    if n % 2:
        return
    vertex_edges = system.vertex_edges
    count = 0

    def extend(covered: int, bits: int) -> Iterator[int]:
        if covered == full:
            yield bits
            return
        free = ~covered & full
        v = (free & -free).bit_length() - 1
        for e, u in vertex_edges[v]:
            if not covered >> u & 1:
                yield from extend(covered | (1 << v) | (1 << u), bits | (1 << e))

    for bits in extend(0, 0):
        count += 1
        if limit is not None and count > limit:
            raise MatchingLimitExceeded(f"more than {limit} perfect matchings")
        yield PerfectMatching(bits)


def matching_by_index(system: HexSystem, index: int) -> PerfectMatching:
    """The ``index``-th matching of the enumeration order (0-based)."""
    from .errors import IndexOutOfRange

    if index < 0:
        raise IndexOutOfRange(f"matching index {index} is negative")
    for i, m in enumerate(enumerate_perfect_matchings(system)):
        if i == index:
            return m
    raise IndexOutOfRange(f"matching index {index} out of range")


def _check_alternating(system: HexSystem, m_bits: int, cycle_bits: int) -> None:
    """Require every vertex touched by the cycle edges to see exactly two
    of them, exactly one matched.  That is precisely alternation."""
    touched: dict[int, list[int]] = {}
    b = cycle_bits
    while b:
        low = b & -b
        e = low.bit_length() - 1
        b ^= low
        for v in system.edges[e]:
            touched.setdefault(v, [0, 0])
            touched[v][0] += 1
            touched[v][1] += (m_bits >> e) & 1
    if not touched:
        raise NotAlternating("empty edge set")
    for v, (deg, matched) in touched.items():
        if deg != 2 or matched != 1:
            raise NotAlternating(
                f"vertex {v} has {deg} cycle edges of which {matched} matched"
            )


def symmetric_difference(
    system: HexSystem, matching: PerfectMatching, cycle: object
) -> PerfectMatching:
    """M xor C for an alternating cycle C; the result is again perfect.

    ``cycle`` may be an AlternatingCycle, a raw bit mask, or an iterable
    of edge indices.  Raises NotAlternating when C does not alternate on
    this particular matching.
    """
    bits = getattr(cycle, "edge_bits", cycle)
    if not isinstance(bits, int):
        acc = 0
        for e in bits:  # type: ignore[union-attr]
            acc |= 1 << e
        bits = acc
    _check_alternating(system, matching.bits, bits)
    return PerfectMatching(matching.bits ^ bits)


def rotate_along_chain(
    system: HexSystem, matching: PerfectMatching, hexes: Sequence[Cell]
) -> PerfectMatching:
    """Fold the matching through a sequence of hexagons, flipping each.

    Every hexagon must alternate on the matching produced by the previous
    step; a violation raises NotAlternating carrying the failing step.
    """
    bits = matching.bits
    for step, cell in enumerate(hexes):
        h = system.hex_index.get(cell)
        if h is None:
            raise ValueError(f"cell {cell} is not part of the system")
        hex_bits = system.hex_edge_bits[h]
        if (bits & hex_bits).bit_count() != 3:
            raise NotAlternating(
                f"hexagon {cell} does not alternate at step {step}", step=step
            )
        bits ^= hex_bits
    return PerfectMatching(bits)
