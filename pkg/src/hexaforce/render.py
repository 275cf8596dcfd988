"""Deterministic SVG drawings of systems, matchings, and witnesses.

Byte-for-byte reproducibility is part of the contract: elements are
emitted in edge-index order with fixed two-decimal coordinates, so the
same inputs always produce the same file.
"""

from __future__ import annotations

from typing import Iterable

from .hexcore import HexSystem
from .matchings import PerfectMatching

_SQRT3_2 = 0.8660254037844386


def _fmt(v: float) -> str:
    # Normalize negative zero so formatting is platform-stable.
    s = f"{v:.2f}"
    return "0.00" if s == "-0.00" else s


def render_svg(
    system: HexSystem,
    matching: PerfectMatching | None = None,
    witness: Iterable[int] = (),
    scale: int = 24,
    comment: str | None = None,
) -> str:
    """Draw the system; matched edges bold, witness edges dashed."""
    xs = [p[0] * _SQRT3_2 * scale for p in system.vertices]
    ys = [-p[1] * 0.5 * scale for p in system.vertices]
    margin = scale * 0.8
    x0, y0 = min(xs) - margin, min(ys) - margin
    width = max(xs) - min(xs) + 2 * margin
    height = max(ys) - min(ys) + 2 * margin

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'viewBox="{_fmt(x0)} {_fmt(y0)} {_fmt(width)} {_fmt(height)}">',
    ]
    if comment is not None:
        lines.append(f"<!-- {comment} -->")

    def emit(indices: Iterable[int], style: str) -> None:
        for e in indices:
            a, b = system.edges[e]
            lines.append(
                f'<line x1="{_fmt(xs[a])}" y1="{_fmt(ys[a])}" '
                f'x2="{_fmt(xs[b])}" y2="{_fmt(ys[b])}" {style}/>'
            )

    emit(range(system.n_edges),
         f'stroke="#999999" stroke-width="{_fmt(scale * 0.06)}"')
    if matching is not None:
        emit(matching.edge_indices(),
             f'stroke="#111111" stroke-width="{_fmt(scale * 0.16)}" '
             'stroke-linecap="round"')
    witness_style = (
        f'stroke="#cc2200" stroke-width="{_fmt(scale * 0.10)}" '
        f'stroke-dasharray="{_fmt(scale * 0.25)} {_fmt(scale * 0.15)}"'
    )
    emit(sorted(witness), witness_style)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
