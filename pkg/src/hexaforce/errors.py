"""Exception types raised by the hexaforce library."""

from __future__ import annotations


class HexaforceError(Exception):
    """Base class for all library-specific errors."""


class OverlappingCells(HexaforceError):
    """The same axial cell was supplied more than once."""


class NotConnected(HexaforceError):
    """The cell set does not form a single edge-connected patch."""


class NotCatacondensed(HexaforceError):
    """The cell adjacency graph contains a cycle (fused ring of rings)."""


class SingleHexagon(HexaforceError):
    """The operation needs at least two hexagons to be meaningful."""


class NotMaximal(HexaforceError):
    """The given chain is not one of the system's maximal linear chains."""


class NotAlternating(HexaforceError):
    """A cycle was expected to alternate on/off the given matching.

    ``step`` is the position in a rotation sequence at which alternation
    first failed, or None for a single-cycle check.
    """

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class NotACycle(HexaforceError):
    """The edge set does not form a single simple cycle."""


class NoPerfectMatching(HexaforceError):
    """The graph admits no perfect matching."""


class CycleLimitExceeded(HexaforceError):
    """Alternating-cycle enumeration hit its configured limit."""


class MatchingLimitExceeded(HexaforceError):
    """Perfect-matching enumeration hit its configured limit."""


class GrowthStuck(HexaforceError):
    """Random growth ran out of legal cells within its retry budget."""


class IndexOutOfRange(HexaforceError):
    """A matching index lies outside the enumeration order."""


class ParseError(HexaforceError):
    """An input file could not be parsed.

    ``line`` is the 1-based line number at fault when known.
    """

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line
