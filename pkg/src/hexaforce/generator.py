"""Exhaustive and random generation of cata-condensed systems.

Congruence classes are identified by a canonical code: among the twelve
lattice symmetries (six rotations, with and without reflection) each
cell set is translated so its componentwise minimum is the origin, and
the least serialized form wins.  Two systems are congruent exactly when
their codes are equal.

Exhaustive generation grows patches one cell at a time.  A new cell must
touch exactly one existing cell: touching none loses connectivity and
touching two or more closes a cycle of cells, which is precisely what
cata-condensed systems exclude.  Since every system with n + 1 cells has
a removable leaf cell, this reaches every congruence class.
"""

from __future__ import annotations

import hashlib
import json
import random
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .errors import GrowthStuck, ParseError
from .hexcore import Cell, HexSystem, axial_neighbors, build_hex_system, system_from_dict


def rotate_cell(cell: Cell) -> Cell:
    """Rotate one sixth of a turn counterclockwise about the origin."""
    q, r = cell
    return (-r, q + r)


def reflect_cell(cell: Cell) -> Cell:
    """Reflect across the diagonal axis; with rotations this generates
    all twelve lattice symmetries."""
    q, r = cell
    return (r, q)


def transform_cells(cells: Iterable[Cell], rotations: int, reflect: bool) -> list[Cell]:
    out = []
    for cell in cells:
        if reflect:
            cell = reflect_cell(cell)
        for _ in range(rotations % 6):
            cell = rotate_cell(cell)
        out.append(cell)
    return out


def _normalize(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    pts = sorted(cells)
    min_q = min(q for q, _ in pts)
    min_r = min(r for _, r in pts)
    return tuple((q - min_q, r - min_r) for q, r in pts)


def canonical_cells(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    """The least normalized form over all twelve symmetries."""
    cells = list(cells)
    return min(
        _normalize(transform_cells(cells, rot, ref))
        for ref in (False, True)
        for rot in range(6)
    )


def _serialize(form: Iterable[Cell]) -> str:
    return ";".join(f"{q},{r}" for q, r in form)


@dataclass(frozen=True)
class CanonicalCode:
    """Serialized canonical form; equal codes mean congruent systems."""

    code: bytes

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.code).hexdigest()


def canonical_code(system: HexSystem | Iterable[Cell]) -> CanonicalCode:
    cells = system.hexes if isinstance(system, HexSystem) else system
    return CanonicalCode(code=_serialize(canonical_cells(cells)).encode("ascii"))


def _growth_sites(cells: set[Cell]) -> list[Cell]:
    """Free cells touching exactly one occupied cell, sorted."""
    counts: dict[Cell, int] = {}
    for c in cells:
        for n in axial_neighbors(c):
            if n not in cells:
                counts[n] = counts.get(n, 0) + 1
    return sorted(site for site, k in counts.items() if k == 1)


def enumerate_catacondensed(n: int) -> Iterator[HexSystem]:
    """Every cata-condensed system with exactly n hexagons, one per
    congruence class, in ascending canonical-code order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    level: set[tuple[Cell, ...]] = {((0, 0),)}
    for _ in range(n - 1):
        grown: set[tuple[Cell, ...]] = set()
        for form in level:
            cells = set(form)
            for site in _growth_sites(cells):
                grown.add(canonical_cells(cells | {site}))
        level = grown
    for form in sorted(level, key=_serialize):
        yield build_hex_system(form)


def random_catacondensed(n: int, seed: int = 0, max_restarts: int = 100) -> HexSystem:
    """Seeded random growth to exactly n hexagons, canonically placed.

    The same (n, seed) always returns the same system.  If growth runs
    out of legal cells repeatedly, raises GrowthStuck.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(seed)
    for _ in range(max_restarts):
        cells = {(0, 0)}
        while len(cells) < n:
            sites = _growth_sites(cells)
            if not sites:
                break
            cells.add(rng.choice(sites))
        if len(cells) == n:
            return build_hex_system(canonical_cells(cells))
    raise GrowthStuck(f"no growth to {n} cells after {max_restarts} attempts")


# -- corpus files -------------------------------------------------------------


def corpus_line(system: HexSystem) -> str:
    """One JSONL record: canonical id plus the cell list."""
    return json.dumps(
        {"id": canonical_code(system).digest,
         "hexes": [list(c) for c in system.hexes]},
        sort_keys=True, separators=(",", ":"))


def write_corpus(out: IO[str], systems: Iterable[HexSystem]) -> int:
    count = 0
    for s in systems:
        out.write(corpus_line(s) + "\n")
        count += 1
    return count


def read_corpus(lines: Iterable[str]) -> list[tuple[str, HexSystem]]:
    """Parse JSONL corpus lines into (id, system) pairs.

    Lines holding only a manifest object are skipped.  Records without
    an id get the canonical digest.  Malformed lines raise ParseError
    with their 1-based line number.
    """
    out = []
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text:
            continue
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"line {lineno}: invalid JSON: {exc.msg}", line=lineno)
        if isinstance(obj, dict) and set(obj) == {"manifest"}:
            continue
        try:
            system = system_from_dict(obj)
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", line=lineno)
        sid = obj.get("id") if isinstance(obj, dict) else None
        if not isinstance(sid, str):
            sid = canonical_code(system).digest
        out.append((sid, system))
    return out
