"""Forcing and anti-forcing numbers, spectra, and identity checks.

The anti-forcing number of a matching is the fewest *unmatched* edges
whose removal leaves that matching as the unique perfect matching; the
forcing number is the fewest *matched* edges whose presence pins it
down.  Both reduce to exact minimum hitting sets over the alternating
cycles: delete one unmatched edge of every cycle, or keep one matched
edge of every cycle.

``verify_theorems`` cross-checks the library against itself.  The
hitting-set route for the anti-forcing number and the clique route for
the maximum compatible family are kept fully independent so that their
agreement on every matching is meaningful evidence, not an identity by
construction.  The aggregate checks tie the extremes of the anti-forcing
spectrum to the Fries number and confirm the spectrum has no gaps.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .altcycles import alternating_cycles, alternating_hexagons, max_compatible_set
from .errors import NoPerfectMatching
from .exactsearch import min_hitting_set
from .hexcore import HexSystem, maximal_linear_chains
from .matchings import PerfectMatching, enumerate_perfect_matchings

#: Column order of the per-system CSV summary.
CSV_HEADER = (
    "system_id,n_hexagons,n_matchings,af,Af,fries,spectrum,"
    "thm1_ok,thm2_ok,lemma3_ok,thm4_ok"
)


@dataclass(frozen=True)
class Spectrum:
    """The set of values a matching invariant takes over all matchings.

    ``values`` is sorted and duplicate-free; ``histogram`` counts how
    many matchings attain each value.
    """

    values: tuple[int, ...]
    histogram: Mapping[int, int]

    @classmethod
    def from_values(cls, raw: Iterable[int]) -> "Spectrum":
        hist = Counter(raw)
        if not hist:
            raise ValueError("a spectrum needs at least one value")
        return cls(values=tuple(sorted(hist)), histogram=dict(sorted(hist.items())))

    @property
    def min_value(self) -> int:
        return self.values[0]

    @property
    def max_value(self) -> int:
        return self.values[-1]

    @property
    def is_interval(self) -> bool:
        return self.values == tuple(range(self.min_value, self.max_value + 1))

    @property
    def gaps(self) -> tuple[int, ...]:
        present = set(self.values)
        return tuple(v for v in range(self.min_value, self.max_value + 1)
                     if v not in present)


def anti_forcing_number(
    system: HexSystem, matching: PerfectMatching
) -> tuple[int, frozenset[int]]:
    """Minimum number of unmatched edges killing every alternating cycle,
    with the lexicographically least such edge set."""
    cycles = alternating_cycles(system, matching)
    sets = [c.edge_bits & ~matching.bits for c in cycles]
    return min_hitting_set(sets)


def forcing_number(
    system: HexSystem, matching: PerfectMatching
) -> tuple[int, frozenset[int]]:
    """Minimum number of matched edges meeting every alternating cycle,
    with the lexicographically least witness."""
    cycles = alternating_cycles(system, matching)
    return min_hitting_set([c.m_edge_bits for c in cycles])


def _spectrum_of(system: HexSystem, value) -> Spectrum:
    vals = []
    for m in enumerate_perfect_matchings(system):
        vals.append(value(m))
    if not vals:
        raise NoPerfectMatching("the system has no perfect matching")
    return Spectrum.from_values(vals)


def anti_forcing_spectrum(system: HexSystem) -> Spectrum:
    return _spectrum_of(system, lambda m: anti_forcing_number(system, m)[0])


def forcing_spectrum(system: HexSystem) -> Spectrum:
    return _spectrum_of(system, lambda m: forcing_number(system, m)[0])


def fries_number(system: HexSystem) -> int:
    """Most hexagons that alternate simultaneously on one matching."""
    best = -1
    for m in enumerate_perfect_matchings(system):
        best = max(best, len(alternating_hexagons(system, m)))
    if best < 0:
        raise NoPerfectMatching("the system has no perfect matching")
    return best


# -- verification reports ----------------------------------------------------


@dataclass(frozen=True)
class MatchingRecord:
    """Per-matching outcome of the two independent computations."""

    index: int
    af: int
    c_prime: int
    witness: tuple[int, ...]
    n_alternating_hexagons: int

    @property
    def ok(self) -> bool:
        return self.af == self.c_prime


@dataclass(frozen=True)
class ForcingReport:
    """Everything ``verify_theorems`` measured on one system.

    Check flags are True/False when decided and None when the mode could
    not decide them (sampling leaves the aggregate checks open).
    """

    n_hexagons: int
    n_matchings: int
    mode: str
    seed: int | None
    records: tuple[MatchingRecord, ...]
    fries: int
    af: int
    Af: int
    spectrum_af: Spectrum | None
    checks: Mapping[str, bool | None]
    counterexamples: tuple[dict, ...] = field(default_factory=tuple)

    @property
    def all_ok(self) -> bool:
        return all(v is not False for v in self.checks.values())

    def to_dict(self, system_id: str | None = None, hexes=None) -> dict:
        out: dict = {
            "schema": 1,
            "n_hexagons": self.n_hexagons,
            "n_matchings": self.n_matchings,
            "mode": self.mode,
            "records": [
                {
                    "matching_index": r.index,
                    "af": r.af,
                    "c_prime": r.c_prime,
                    "witness": list(r.witness),
                    "n_alternating_hexagons": r.n_alternating_hexagons,
                }
                for r in self.records
            ],
            "fries": self.fries,
            "af": self.af,
            "Af": self.Af,
            "checks": dict(self.checks),
            "counterexamples": list(self.counterexamples),
        }
        if self.seed is not None:
            out["seed"] = self.seed
        if self.spectrum_af is not None:
            out["spectrum_af"] = list(self.spectrum_af.values)
            out["histogram_af"] = {str(k): v for k, v in self.spectrum_af.histogram.items()}
        if system_id is not None:
            out["system_id"] = system_id
        if hexes is not None:
            out["hexes"] = [list(c) for c in hexes]
        return out

    def csv_row(self, system_id: str) -> str:
        def flag(name: str) -> str:
            v = self.checks.get(name)
            return "skip" if v is None else str(v).lower()

        spectrum = "|".join(str(v) for v in self.spectrum_af.values) \
            if self.spectrum_af is not None else ""
        cells = [
            system_id, str(self.n_hexagons), str(self.n_matchings),
            str(self.af), str(self.Af), str(self.fries), spectrum,
            flag("thm1_ok"), flag("thm2_ok"), flag("lemma3_ok"), flag("thm4_ok"),
        ]
        return ",".join(cells)


def verify_theorems(
    system: HexSystem, sample: int | None = None, seed: int = 0
) -> ForcingReport:
    """Run the identity checks on one system.

    With ``sample=None`` every matching is checked and all aggregate
    flags are decided.  Otherwise ``sample`` matchings are drawn without
    replacement from the enumeration order using ``seed``; only the
    per-matching check and the cut-edge count check are decided, the
    aggregate flags stay None.

    Checks:
      thm1_ok    anti-forcing number equals the maximum compatible
                 family size, matching by matching
      thm2_ok    the anti-forcing spectrum peaks at the Fries number
      lemma3_ok  its minimum stays strictly below the Fries number
                 (systems with at least two hexagons)
      thm4_ok    the spectrum is the full integer interval between them
      lemma1_ok  every matching uses exactly one cut edge of every
                 maximal linear chain of two or more hexagons
      lemma1_len1_ok  the same count for the degenerate one-hexagon
                 chains, kept as its own flag because the claim is
                 usually stated for proper chains
    """
    all_matchings = list(enumerate_perfect_matchings(system))
    if not all_matchings:
        raise NoPerfectMatching("the system has no perfect matching")
    n_matchings = len(all_matchings)
    counterexamples: list[dict] = []

    fries = max(len(alternating_hexagons(system, m)) for m in all_matchings)

    lemma1 = {True: True, False: True}  # keyed by "proper chain?"
    for ch in maximal_linear_chains(system):
        proper = len(ch) >= 2
        mask = 0
        for e in ch.cut_edges:
            mask |= 1 << e
        for i, m in enumerate(all_matchings):
            hits = (m.bits & mask).bit_count()
            if hits != 1:
                lemma1[proper] = False
                counterexamples.append({
                    "check": "lemma1_ok" if proper else "lemma1_len1_ok",
                    "chain": [list(c) for c in ch.hexes],
                    "axis": list(ch.axis),
                    "matching_index": i,
                    "cut_edges_matched": hits,
                })

    full = sample is None or sample >= n_matchings
    if full:
        indices = list(range(n_matchings))
        mode = "full"
        used_seed = None
    else:
        rng = random.Random(seed)
        indices = sorted(rng.sample(range(n_matchings), sample))
        mode = f"sampled:{sample}"
        used_seed = seed

    records = []
    for i in indices:
        m = all_matchings[i]
        af, witness = anti_forcing_number(system, m)
        family = max_compatible_set(system, m)
        rec = MatchingRecord(
            index=i, af=af, c_prime=family.cardinality,
            witness=tuple(sorted(witness)),
            n_alternating_hexagons=len(alternating_hexagons(system, m)),
        )
        records.append(rec)
        if not rec.ok:
            counterexamples.append({
                "check": "thm1_ok", "matching_index": i,
                "af": af, "c_prime": family.cardinality,
            })

    af_values = [r.af for r in records]
    af_min, af_max = min(af_values), max(af_values)
    checks: dict[str, bool | None] = {
        "thm1_ok": all(r.ok for r in records),
        "thm2_ok": None,
        "lemma3_ok": None,
        "thm4_ok": None,
        "lemma1_ok": lemma1[True],
        "lemma1_len1_ok": lemma1[False],
    }
    spectrum = None
    if full:
        spectrum = Spectrum.from_values(af_values)
        checks["thm2_ok"] = af_max == fries
        if not checks["thm2_ok"]:
            counterexamples.append({"check": "thm2_ok", "Af": af_max, "fries": fries})
        if system.n_hexes >= 2:
            checks["lemma3_ok"] = af_min < fries
            if not checks["lemma3_ok"]:
                counterexamples.append(
                    {"check": "lemma3_ok", "af": af_min, "fries": fries})
        checks["thm4_ok"] = (
            spectrum.is_interval
            and spectrum.min_value == af_min
            and spectrum.max_value == fries
        )
        if not checks["thm4_ok"]:
            counterexamples.append({
                "check": "thm4_ok", "spectrum": list(spectrum.values),
                "gaps": list(spectrum.gaps), "af": af_min, "fries": fries,
            })

    return ForcingReport(
        n_hexagons=system.n_hexes,
        n_matchings=n_matchings,
        mode=mode,
        seed=used_seed,
        records=tuple(records),
        fries=fries,
        af=af_min,
        Af=af_max,
        spectrum_af=spectrum,
        checks=checks,
        counterexamples=tuple(counterexamples),
    )


def audit_report(report: dict) -> list[str]:
    """Re-derive the internal consistency of a serialized report.

    Returns human-readable complaints; an intact report yields none.
    Used as a self-test: any tampering with numbers, flags, or spectra
    shows up as at least one complaint.
    """
    problems = []
    records = report.get("records", [])
    if not records:
        problems.append("report has no matching records")
        return problems
    af_values = [r["af"] for r in records]
    if report.get("af") != min(af_values):
        problems.append("af field does not match the minimum over records")
    if report.get("Af") != max(af_values):
        problems.append("Af field does not match the maximum over records")
    thm1 = all(r["af"] == r["c_prime"] for r in records)
    checks = report.get("checks", {})
    if checks.get("thm1_ok") != thm1:
        problems.append("thm1_ok flag disagrees with the records")
    if "spectrum_af" in report:
        spec = report["spectrum_af"]
        if spec != sorted(set(af_values)):
            problems.append("spectrum_af does not match the record values")
        hist = report.get("histogram_af", {})
        if sum(hist.values()) != len(records):
            problems.append("histogram_af total does not match record count")
        if {int(k) for k in hist} != set(spec):
            problems.append("histogram_af keys do not match spectrum_af")
        fries = report.get("fries")
        expect_thm2 = max(af_values) == fries
        if checks.get("thm2_ok") != expect_thm2:
            problems.append("thm2_ok flag disagrees with Af and fries")
        expect_thm4 = (spec == list(range(min(af_values), fries + 1)))
        if checks.get("thm4_ok") != expect_thm4:
            problems.append("thm4_ok flag disagrees with the spectrum")
        if report.get("n_hexagons", 0) >= 2:
            if checks.get("lemma3_ok") != (min(af_values) < fries):
                problems.append("lemma3_ok flag disagrees with af and fries")
        if report.get("n_matchings") != len(records):
            problems.append("full report does not cover all matchings")
    return problems
