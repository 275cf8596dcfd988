"""Exact combinatorics of cata-condensed hexagonal systems.

Build a system from axial cells, enumerate its perfect matchings and
their alternating cycles, compute forcing and anti-forcing numbers with
verifiable witnesses, take spectra over all matchings, and cross-check
the classical identities tying them to the Fries number.
"""

from .altcycles import (
    AlternatingCycle,
    CompatibleSet,
    alternating_cycles,
    alternating_hexagons,
    interior_hexagons,
    is_compatible,
    is_crossing,
    max_compatible_set,
)
from .errors import (
    CycleLimitExceeded,
    GrowthStuck,
    HexaforceError,
    IndexOutOfRange,
    MatchingLimitExceeded,
    NoPerfectMatching,
    NotACycle,
    NotAlternating,
    NotCatacondensed,
    NotConnected,
    NotMaximal,
    OverlappingCells,
    ParseError,
    SingleHexagon,
)
from .forcing import (
    CSV_HEADER,
    ForcingReport,
    MatchingRecord,
    Spectrum,
    anti_forcing_number,
    anti_forcing_spectrum,
    audit_report,
    forcing_number,
    forcing_spectrum,
    fries_number,
    verify_theorems,
)
from .generator import (
    CanonicalCode,
    axial_neighbors,
    canonical_cells,
    canonical_code,
    corpus_line,
    enumerate_catacondensed,
    random_catacondensed,
    read_corpus,
    reflect_cell,
    rotate_cell,
    transform_cells,
    write_corpus,
)
from .hexcore import (
    HexClass,
    HexSystem,
    LinearChain,
    build_hex_system,
    classify_hexagons,
    cut_edge_set,
    maximal_linear_chains,
    system_from_dict,
    system_to_dict,
)
from .matchings import (
    PerfectMatching,
    enumerate_perfect_matchings,
    is_perfect_matching,
    matching_by_index,
    rotate_along_chain,
    symmetric_difference,
)
from .render import render_svg

__version__ = "0.1.0"

__all__ = [
    "AlternatingCycle",
    "CSV_HEADER",
    "CanonicalCode",
    "CompatibleSet",
    "CycleLimitExceeded",
    "ForcingReport",
    "GrowthStuck",
    "HexClass",
    "HexSystem",
    "HexaforceError",
    "IndexOutOfRange",
    "LinearChain",
    "MatchingLimitExceeded",
    "MatchingRecord",
    "NoPerfectMatching",
    "NotACycle",
    "NotAlternating",
    "NotCatacondensed",
    "NotConnected",
    "NotMaximal",
    "OverlappingCells",
    "ParseError",
    "PerfectMatching",
    "SingleHexagon",
    "Spectrum",
    "alternating_cycles",
    "alternating_hexagons",
    "anti_forcing_number",
    "anti_forcing_spectrum",
    "audit_report",
    "axial_neighbors",
    "build_hex_system",
    "canonical_cells",
    "canonical_code",
    "classify_hexagons",
    "corpus_line",
    "cut_edge_set",
    "enumerate_catacondensed",
    "enumerate_perfect_matchings",
    "forcing_number",
    "forcing_spectrum",
    "fries_number",
    "interior_hexagons",
    "is_compatible",
    "is_crossing",
    "is_perfect_matching",
    "matching_by_index",
    "max_compatible_set",
    "maximal_linear_chains",
    "random_catacondensed",
    "read_corpus",
    "reflect_cell",
    "render_svg",
    "rotate_along_chain",
    "rotate_cell",
    "symmetric_difference",
    "system_from_dict",
    "system_to_dict",
    "transform_cells",
    "verify_theorems",
    "write_corpus",
]
