"""Cell-level model of cata-condensed hexagonal systems.

A system is a finite set of hexagonal cells addressed by axial coordinates
(q, r).  Cells are adjacent when their axial difference is one of the six
unit directions.  A valid system is edge-connected and its cell adjacency
graph (the "dual") is a tree; that single condition rules out both fused
ring cycles and interior vertices, so what remains is exactly the class of
cata-condensed systems.

All geometry uses an integer lattice.  The center of cell (q, r) sits at

    (2q + r, 3r)

where the x unit is sqrt(3)/2 and the y unit is 1/2 of the drawn bond
length.  Corners are the center plus the six offsets in CORNER_OFFSETS.
Centers have y divisible by 3 and corners never do, so a corner can never
lie on a line through centers, and a center can never lie on a bond.  Every
incidence test below is therefore an exact sign computation on ints.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import (
    NotCatacondensed,
    NotConnected,
    NotMaximal,
    OverlappingCells,
    ParseError,
    SingleHexagon,
)

Cell = tuple[int, int]
Point = tuple[int, int]

#: Axial offsets of the six neighbouring cells, counterclockwise.
AXIAL_DIRS: tuple[Cell, ...] = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

#: The three axes along which cells can be collinear, one per opposite pair.
CHAIN_AXES: tuple[Cell, ...] = ((1, 0), (0, 1), (1, -1))

#: Corner offsets from a cell center, counterclockwise from the top corner.
CORNER_OFFSETS: tuple[Point, ...] = ((0, 2), (-1, 1), (-1, -1), (0, -2), (1, -1), (1, 1))

# Scaled direction vector of the center line for each chain axis.
_AXIS_VECTOR: Mapping[Cell, Point] = {(1, 0): (2, 0), (0, 1): (1, 3), (1, -1): (1, -3)}


def hex_center(cell: Cell) -> Point:
    q, r = cell
    return (2 * q + r, 3 * r)


def hex_corners(cell: Cell) -> tuple[Point, ...]:
    cx, cy = hex_center(cell)
    return tuple((cx + dx, cy + dy) for dx, dy in CORNER_OFFSETS)


def axial_neighbors(cell: Cell) -> tuple[Cell, ...]:
    q, r = cell
    return tuple((q + dq, r + dr) for dq, dr in AXIAL_DIRS)


class HexClass(enum.Enum):
    """Role of a hexagon within the system, by neighbour count and shape."""

    TERMINAL = "terminal"
    KINK = "kink"
    LINEAR = "linear"
    BRANCHED = "branched"


@dataclass(frozen=True)
class LinearChain:
    """A maximal run of consecutive collinear hexagons along one axis.

    ``cut_edges`` holds the indices of the edges crossed by the straight
    line through the terminal cell centers, restricted to edges of the
    chain's own hexagons.  A run of k hexagons always has k + 1 of them:
    the k - 1 shared bonds inside the run plus one outer bond at each end.
    """

    hexes: tuple[Cell, ...]
    axis: Cell
    cut_edges: frozenset[int]

    def __len__(self) -> int:
        return len(self.hexes)


@dataclass(frozen=True)
class HexSystem:
    """An immutable, validated cata-condensed hexagonal system.

    Vertices and edges carry a fixed deterministic order: vertices sort by
    scaled coordinate, edges by their (smaller, larger) vertex index pair.
    Edge sets elsewhere in the library are bit masks over this edge order.
    """

    hexes: tuple[Cell, ...]
    vertices: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]
    edge_kinds: tuple[str, ...]
    dual_edges: tuple[tuple[int, int], ...]

    # -- sizes ---------------------------------------------------------

    @property
    def n_hexes(self) -> int:
        return len(self.hexes)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    # -- derived lookups (cached, all deterministic) --------------------

    @cached_property
    def hex_index(self) -> Mapping[Cell, int]:
        return {c: i for i, c in enumerate(self.hexes)}

    @cached_property
    def vertex_index(self) -> Mapping[Point, int]:
        return {p: i for i, p in enumerate(self.vertices)}

    @cached_property
    def edge_index(self) -> Mapping[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def centers(self) -> tuple[Point, ...]:
        return tuple(hex_center(c) for c in self.hexes)

    @cached_property
    def hex_edges(self) -> tuple[tuple[int, ...], ...]:
        """For each hexagon, its six edge indices in ascending order."""
        out = []
        for cell in self.hexes:
            corners = [self.vertex_index[p] for p in hex_corners(cell)]
            idx = []
            for a, b in zip(corners, corners[1:] + corners[:1]):
                idx.append(self.edge_index[(min(a, b), max(a, b))])
            out.append(tuple(sorted(idx)))
        return tuple(out)

    @cached_property
    def hex_edge_bits(self) -> tuple[int, ...]:
        out = []
        for idx in self.hex_edges:
            bits = 0
            for i in idx:
                bits |= 1 << i
            out.append(bits)
        return tuple(out)

    @cached_property
    def edge_hexes(self) -> tuple[tuple[int, ...], ...]:
        """For each edge, the indices of the one or two hexagons using it."""
        owners: list[list[int]] = [[] for _ in self.edges]
        for h, idx in enumerate(self.hex_edges):
            for i in idx:
                owners[i].append(h)
        return tuple(tuple(o) for o in owners)

    @cached_property
    def vertex_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: (edge index, other endpoint) pairs, by edge index."""
        inc: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for i, (a, b) in enumerate(self.edges):
            inc[a].append((i, b))
            inc[b].append((i, a))
        return tuple(tuple(sorted(v)) for v in inc)

    @cached_property
    def colors(self) -> tuple[int, ...]:
        """Bipartition class per vertex: 0 where y % 3 == 1, else 1."""
        return tuple(0 if p[1] % 3 == 1 else 1 for p in self.vertices)

    @cached_property
    def dual_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.hexes]
        for a, b in self.dual_edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(v)) for v in adj)

    def all_edges_mask(self) -> int:
        return (1 << self.n_edges) - 1


def build_hex_system(cells: Iterable[Cell]) -> HexSystem:
    """Validate a cell set and derive the vertex/edge structure.

    Raises OverlappingCells on duplicate cells, NotConnected if the cells
    do not form one edge-connected patch, and NotCatacondensed if the cell
    adjacency graph has a cycle.
    """
    cell_list = [(int(q), int(r)) for q, r in cells]
    if not cell_list:
        raise ValueError("a hexagonal system needs at least one cell")
    if len(set(cell_list)) != len(cell_list):
        dupes = sorted({c for c in cell_list if cell_list.count(c) > 1})
        raise OverlappingCells(f"duplicate cells: {dupes}")
    cell_set = frozenset(cell_list)

    # Edge-connectivity over the axial adjacency.
    start = min(cell_set)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for c in frontier:
            for n in axial_neighbors(c):
                if n in cell_set and n not in seen:
                    seen.add(n)
                    nxt.append(n)
        frontier = nxt
    if len(seen) != len(cell_set):
        missing = sorted(cell_set - seen)
        raise NotConnected(f"cells not reachable from {start}: {missing}")

    hexes = tuple(sorted(cell_set))
    index = {c: i for i, c in enumerate(hexes)}
    dual = []
    for c in hexes:
        for n in axial_neighbors(c):
            if n in cell_set and c < n:
                a, b = index[c], index[n]
                dual.append((min(a, b), max(a, b)))
    dual.sort()
    # Connected graph on n nodes is a tree iff it has n - 1 edges.
    if len(dual) != len(hexes) - 1:
        raise NotCatacondensed(
            f"{len(hexes)} cells with {len(dual)} adjacencies; the cell "
            "adjacency graph must be a tree"
        )

    vertex_set = {p for c in hexes for p in hex_corners(c)}
    vertices = tuple(sorted(vertex_set))
    vindex = {p: i for i, p in enumerate(vertices)}

    edge_owners: dict[tuple[int, int], int] = {}
    for c in hexes:
        corners = [vindex[p] for p in hex_corners(c)]
        for a, b in zip(corners, corners[1:] + corners[:1]):
            e = (min(a, b), max(a, b))
            edge_owners[e] = edge_owners.get(e, 0) + 1
    edges = tuple(sorted(edge_owners))
    kinds = tuple("shared" if edge_owners[e] == 2 else "boundary" for e in edges)

    return HexSystem(hexes=hexes, vertices=vertices, edges=edges,
                     edge_kinds=kinds, dual_edges=tuple(dual))


def classify_hexagons(system: HexSystem) -> dict[Cell, HexClass]:
    """Assign each hexagon its terminal/kink/linear/branched role.

    A two-neighbour hexagon is a kink exactly when it keeps two adjacent
    degree-2 vertices; in a straight run the two free vertices sit on
    opposite sides.  Raises SingleHexagon for a one-cell system, where the
    distinction is undefined.
    """
    if system.n_hexes == 1:
        raise SingleHexagon("classification needs at least two hexagons")
    degree = [len(v) for v in system.vertex_edges]
    out: dict[Cell, HexClass] = {}
    for i, cell in enumerate(system.hexes):
        n = len(system.dual_neighbors[i])
        if n == 1:
            out[cell] = HexClass.TERMINAL
        elif n == 3:
            out[cell] = HexClass.BRANCHED
        else:
            corners = [system.vertex_index[p] for p in hex_corners(cell)]
            kink = any(
                degree[a] == 2 and degree[b] == 2
                for a, b in zip(corners, corners[1:] + corners[:1])
            )
            out[cell] = HexClass.KINK if kink else HexClass.LINEAR
    return out


def _cross(d: Point, v: Point) -> int:
    return d[0] * v[1] - d[1] * v[0]


def _chain_cut_edges(system: HexSystem, chain_cells: tuple[Cell, ...], axis: Cell) -> frozenset[int]:
    d = _AXIS_VECTOR[axis]
    px, py = hex_center(chain_cells[0])
    cut = set()
    for cell in chain_cells:
        h = system.hex_index[cell]
        for e in system.hex_edges[h]:
            a, b = system.edges[e]
            ax, ay = system.vertices[a]
            bx, by = system.vertices[b]
            sa = _cross(d, (ax - px, ay - py))
            sb = _cross(d, (bx - px, by - py))
            # Corners are never on the line, so strict opposite signs suffice.
            if (sa > 0) != (sb > 0):
                cut.add(e)
    return frozenset(cut)


def maximal_linear_chains(system: HexSystem) -> list[LinearChain]:
    """All maximal runs of consecutive collinear hexagons, per axis.

    Each of the three axes contributes its own runs, including runs of a
    single hexagon that cannot be extended along that axis.  Order is
    deterministic: by axis, then by line, then by starting cell.
    """
    cell_set = set(system.hexes)
    chains: list[LinearChain] = []
    for axis in CHAIN_AXES:
        # Project onto (line key, position along axis).
        if axis == (1, 0):
            key = lambda c: (c[1], c[0])  # noqa: E731 - tiny local projections
            unkey = lambda line, pos: (pos, line)  # noqa: E731
        elif axis == (0, 1):
            key = lambda c: (c[0], c[1])  # noqa: E731
            unkey = lambda line, pos: (line, pos)  # noqa: E731
        else:
            key = lambda c: (c[0] + c[1], c[0])  # noqa: E731
            unkey = lambda line, pos: (pos, line - pos)  # noqa: E731
        lines: dict[int, list[int]] = {}
        for c in cell_set:
            line, pos = key(c)
            lines.setdefault(line, []).append(pos)
        for line in sorted(lines):
            positions = sorted(lines[line])
            run_start = positions[0]
            prev = positions[0]
            for pos in positions[1:] + [None]:
                if pos is not None and pos == prev + 1:
                    prev = pos
                    continue
                cells = tuple(unkey(line, p) for p in range(run_start, prev + 1))
                chains.append(LinearChain(
                    hexes=cells, axis=axis,
                    cut_edges=_chain_cut_edges(system, cells, axis)))
                if pos is not None:
                    run_start = prev = pos
    return chains


def cut_edge_set(system: HexSystem, chain: LinearChain) -> frozenset[int]:
    """Edges crossed by the center line of a maximal chain.

    Recomputes the cut from scratch and refuses chains that are not
    maximal runs of the system (NotMaximal).
    """
    if not chain.hexes:
        raise NotMaximal("empty chain")
    for cell in chain.hexes:
        if cell not in system.hex_index:
            raise NotMaximal(f"cell {cell} is not part of the system")
    if chain.axis not in CHAIN_AXES:
        raise NotMaximal(f"unknown axis {chain.axis}")
    dq, dr = chain.axis
    for a, b in zip(chain.hexes, chain.hexes[1:]):
        if (b[0] - a[0], b[1] - a[1]) != (dq, dr):
            raise NotMaximal("cells are not consecutive along the axis")
    cell_set = set(system.hexes)
    before = (chain.hexes[0][0] - dq, chain.hexes[0][1] - dr)
    after = (chain.hexes[-1][0] + dq, chain.hexes[-1][1] + dr)
    if before in cell_set or after in cell_set:
        raise NotMaximal("chain extends further along its axis")
    return _chain_cut_edges(system, chain.hexes, chain.axis)


# -- serialization ------------------------------------------------------


def system_from_dict(obj: object) -> HexSystem:
    """Build a system from a parsed ``{"hexes": [[q, r], ...]}`` object."""
    if not isinstance(obj, dict) or "hexes" not in obj:
        raise ParseError('expected an object with a "hexes" key')
    raw = obj["hexes"]
    if not isinstance(raw, list) or not raw:
        raise ParseError('"hexes" must be a non-empty list of [q, r] pairs')
    cells = []
    for item in raw:
        if (not isinstance(item, (list, tuple)) or len(item) != 2
                or not all(isinstance(x, int) for x in item)):
            raise ParseError(f"bad cell {item!r}; expected [q, r] with integers")
        cells.append((item[0], item[1]))
    return build_hex_system(cells)


def system_to_dict(system: HexSystem) -> dict:
    """Full structural description, fit for JSON output."""
    out: dict = {
        "hexes": [list(c) for c in system.hexes],
        "vertices": [list(p) for p in system.vertices],
        "edges": [list(e) for e in system.edges],
        "edge_kinds": list(system.edge_kinds),
        "dual_edges": [list(e) for e in system.dual_edges],
        "chains": [
            {"hexes": [list(c) for c in ch.hexes], "axis": list(ch.axis),
             "cut_edges": sorted(ch.cut_edges)}
            for ch in maximal_linear_chains(system)
        ],
    }
    if system.n_hexes > 1:
        classes = classify_hexagons(system)
        out["classes"] = {f"{q},{r}": cls.value for (q, r), cls in sorted(classes.items())}
    return out
