"""End-to-end acceptance sweep.

Each test prints one live PASS/FAIL line for its criterion and enforces
the stated tolerance: exact equality, zero failures over the swept
corpora, and the time budgets attached to the larger runs.
"""

import itertools
import random
import time

from hexaforce import (
    anti_forcing_number,
    anti_forcing_spectrum,
    build_hex_system,
    canonical_code,
    enumerate_catacondensed,
    enumerate_perfect_matchings,
    forcing_spectrum,
    fries_number,
    matching_by_index,
    max_compatible_set,
    maximal_linear_chains,
    random_catacondensed,
    transform_cells,
)

from oracles import census, forcing_by_definition, matching_count


def announce(capsys, ok, label, elapsed=None):
    tail = f"  ({elapsed:.2f}s)" if elapsed is not None else ""
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'} {label}{tail}")
    assert ok, label


def test_criterion_1_single_hexagon(capsys):
    started = time.perf_counter()
    system = build_hex_system([(0, 0)])
    spec = anti_forcing_spectrum(system)
    ok = (
        list(spec.values) == [1]
        and spec.min_value == 1
        and spec.max_value == 1
        and fries_number(system) == 1
    )
    elapsed = time.perf_counter() - started
    announce(capsys, ok and elapsed < 1.0,
             "criterion 1: single hexagon has spectrum {1} and af=Af=Fries=1",
             elapsed)


def test_criterion_2_linear_chains(capsys):
    failures = []
    worst = 0.0
    for n in range(2, 7):
        started = time.perf_counter()
        system = build_hex_system([(q, 0) for q in range(n)])
        spec = anti_forcing_spectrum(system)
        count = sum(1 for _ in enumerate_perfect_matchings(system))
        elapsed = time.perf_counter() - started
        worst = max(worst, elapsed)
        if list(spec.values) != [1, 2]:
            failures.append((n, "spectrum", list(spec.values)))
        if fries_number(system) != 2:
            failures.append((n, "fries"))
        if count != n + 1:
            failures.append((n, "matchings", count))
        if elapsed >= 1.0:
            failures.append((n, "slow", elapsed))
    announce(capsys, not failures,
             "criterion 2: L2..L6 have spectrum [1,2], Fries 2, n+1 matchings",
             worst)


def test_criterion_3_both_routes_agree(capsys):
    mismatches = []
    started = time.perf_counter()
    full_pairs = 0
    for n in range(1, 6):
        for system in enumerate_catacondensed(n):
            for m in enumerate_perfect_matchings(system):
                af, _ = anti_forcing_number(system, m)
                family = max_compatible_set(system, m)
                if af != family.cardinality:
                    mismatches.append((system.hexes, af, family.cardinality))
                full_pairs += 1
    full_elapsed = time.perf_counter() - started

    started = time.perf_counter()
    sampled_pairs = 0
    for n in (6, 7):
        for index, system in enumerate(enumerate_catacondensed(n)):
            matchings = list(enumerate_perfect_matchings(system))
            if len(matchings) > 100:
                rng = random.Random(1000 * n + index)
                keep = sorted(rng.sample(range(len(matchings)), 100))
                matchings = [matchings[i] for i in keep]
            for m in matchings:
                af, _ = anti_forcing_number(system, m)
                family = max_compatible_set(system, m)
                if af != family.cardinality:
                    mismatches.append((system.hexes, af, family.cardinality))
                sampled_pairs += 1
    sampled_elapsed = time.perf_counter() - started

    ok = (not mismatches and full_pairs == 188
          and full_elapsed < 120.0 and sampled_elapsed < 900.0)
    announce(capsys, ok,
             f"criterion 3: hitting-set af equals max compatible family on "
             f"{full_pairs} exhaustive + {sampled_pairs} sampled matchings",
             full_elapsed + sampled_elapsed)


def test_criterion_4_spectrum_is_the_interval_up_to_fries(capsys):
    failures = []
    started = time.perf_counter()
    for n in range(1, 7):
        for system in enumerate_catacondensed(n):
            spec = anti_forcing_spectrum(system)
            fries = fries_number(system)
            if spec.max_value != fries:
                failures.append((system.hexes, "peak", spec.max_value, fries))
            if n >= 2 and not spec.min_value < fries:
                failures.append((system.hexes, "floor", spec.min_value, fries))
            if list(spec.values) != list(range(spec.min_value, fries + 1)):
                failures.append((system.hexes, "gap", list(spec.values)))
    announce(capsys, not failures,
             "criterion 4: Af=Fries, af<Fries (n>=2), spectrum gap-free over "
             "all systems with at most 6 hexagons",
             time.perf_counter() - started)


def test_criterion_5_every_matching_uses_one_cut_edge_per_chain(capsys):
    failures = []
    started = time.perf_counter()
    checked = 0
    for n in range(1, 7):
        for system in enumerate_catacondensed(n):
            chains = maximal_linear_chains(system)
            masks = []
            for chain in chains:
                mask = 0
                for e in chain.cut_edges:
                    mask |= 1 << e
                masks.append(mask)
            for m in enumerate_perfect_matchings(system):
                for chain, mask in zip(chains, masks):
                    if (m.bits & mask).bit_count() != 1:
                        failures.append((system.hexes, chain.hexes))
                    checked += 1
    announce(capsys, not failures,
             f"criterion 5: |M ∩ cut edges| = 1 on {checked} "
             "(chain, matching) pairs over systems with at most 6 hexagons",
             time.perf_counter() - started)


def test_criterion_6_witnesses_are_sound_and_minimal(capsys):
    started = time.perf_counter()
    systems = []
    pool = []
    for n in range(1, 8):
        for system in enumerate_catacondensed(n):
            count = sum(1 for _ in enumerate_perfect_matchings(system))
            pool.extend((len(systems), i) for i in range(count))
            systems.append(system)
    rng = random.Random(20260814)
    chosen = sorted(rng.sample(range(len(pool)), 1000))
    by_system: dict[int, list[int]] = {}
    for idx in chosen:
        si, mi = pool[idx]
        by_system.setdefault(si, []).append(mi)

    failures = []
    for si, indices in by_system.items():
        system = systems[si]
        matchings = list(enumerate_perfect_matchings(system))
        for mi in indices:
            af, witness = anti_forcing_number(system, matchings[mi])
            if len(witness) != af:
                failures.append((system.hexes, mi, "size"))
            if matching_count(system, banned=frozenset(witness)) != 1:
                failures.append((system.hexes, mi, "not unique"))
            for r in range(len(witness)):
                for sub in itertools.combinations(sorted(witness), r):
                    if matching_count(system, banned=frozenset(sub)) < 2:
                        failures.append((system.hexes, mi, "not minimal", sub))
    announce(capsys, not failures,
             "criterion 6: 1000 sampled anti-forcing witnesses isolate their "
             "matching and no proper subset does",
             time.perf_counter() - started)


def test_criterion_7_generator_matches_oracle_and_canonical_form(capsys):
    started = time.perf_counter()
    failures = []
    for n in range(1, 6):
        ours = list(enumerate_catacondensed(n))
        naive = census(n)
        if len(ours) != len(naive):
            failures.append((n, len(ours), len(naive)))

    for i in range(100):
        system = random_catacondensed(4 + i % 5, seed=i)
        base = canonical_code(system).digest
        dq, dr = i % 7 - 3, i % 5 - 2
        for reflect in (False, True):
            for rotations in range(6):
                moved = [
                    (q + dq, r + dr)
                    for q, r in transform_cells(system.hexes, rotations, reflect)
                ]
                if canonical_code(moved).digest != base:
                    failures.append((system.hexes, rotations, reflect))
    announce(capsys, not failures,
             "criterion 7: exhaustive counts n=1..5 match the naive oracle; "
             "canonical code invariant under all 12 symmetries x 100 systems",
             time.perf_counter() - started)


def test_criterion_8_forcing_spectrum_survey(capsys):
    started = time.perf_counter()
    gapped = []
    total = 0
    for n in range(1, 9):
        for system in enumerate_catacondensed(n):
            spec = forcing_spectrum(system)
            total += 1
            if spec.gaps:
                gapped.append((system, tuple(spec.values)))

    failures = []
    for system, values in gapped:
        matchings = [frozenset(m.edge_indices())
                     for m in enumerate_perfect_matchings(system)]
        brute = sorted({forcing_by_definition(system, m, matchings)[0]
                        for m in matchings})
        if tuple(brute) != values:
            failures.append((system.hexes, values, brute))
    announce(capsys, not failures and total == 586,
             f"criterion 8: forcing spectra over all {total} systems with at "
             f"most 8 hexagons; {len(gapped)} gapped spectra confirmed by the "
             "brute-force oracle",
             time.perf_counter() - started)
