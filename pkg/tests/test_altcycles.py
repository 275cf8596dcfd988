import itertools

import pytest

from hexaforce import (
    AlternatingCycle,
    alternating_cycles,
    alternating_hexagons,
    build_hex_system,
    enumerate_perfect_matchings,
    interior_hexagons,
    is_compatible,
    is_crossing,
    matching_by_index,
    max_compatible_set,
)
from hexaforce.errors import CycleLimitExceeded, NotACycle

from oracles import (
    alternating_cycles_by_filter,
    alternating_hexagons_by_walk,
    crossing_by_rotation,
    interior_count_by_path,
)


def cycle_sets(cycles):
    return sorted(frozenset(c.edge_indices()) for c in cycles)


# -- enumeration ------------------------------------------------------------


def test_benzene_has_one_cycle(benzene):
    for m in enumerate_perfect_matchings(benzene):
        cycles = alternating_cycles(benzene, m)
        assert len(cycles) == 1
        assert cycles[0].edge_indices() == tuple(range(6))
        assert cycles[0].m_edge_bits == m.bits
        assert cycles[0].interior_hex_count == 1


def test_naphthalene_cycles_per_matching(naphthalene):
    got = [cycle_sets(alternating_cycles(naphthalene, m))
           for m in enumerate_perfect_matchings(naphthalene)]
    hex0 = frozenset(range(6))
    hex1 = frozenset(range(5, 11))
    boundary = frozenset(range(11)) - {5}
    assert got == [
        sorted([hex0, boundary]),   # shared edge free: one ring and the rim
        sorted([hex0, hex1]),       # shared edge matched: both rings
        sorted([hex1, boundary]),
    ]


def test_cycles_match_filter_oracle(corpus4):
    for system in corpus4:
        for m in enumerate_perfect_matchings(system):
            got = cycle_sets(alternating_cycles(system, m))
            want = alternating_cycles_by_filter(system, frozenset(m.edge_indices()))
            assert got == sorted(want)


def test_cycles_are_sorted_and_well_formed(corpus4):
    for system in corpus4:
        for m in enumerate_perfect_matchings(system):
            cycles = alternating_cycles(system, m)
            keys = [(len(c), c.edge_indices()) for c in cycles]
            assert keys == sorted(keys)
            for c in cycles:
                assert len(c) % 2 == 0
                assert c.m_edge_bits == c.edge_bits & m.bits
                assert c.m_edge_bits.bit_count() == len(c) // 2
                assert c.interior_hex_count >= 1


def test_cycle_limit_guard(star):
    m = matching_by_index(star, 0)
    assert len(alternating_cycles(star, m)) > 1
    with pytest.raises(CycleLimitExceeded):
        alternating_cycles(star, m, limit=1)


# -- alternating hexagons -----------------------------------------------------


def test_alternating_hexagon_counts(benzene, naphthalene):
    for m in enumerate_perfect_matchings(benzene):
        assert alternating_hexagons(benzene, m) == frozenset({(0, 0)})
    counts = [len(alternating_hexagons(naphthalene, m))
              for m in enumerate_perfect_matchings(naphthalene)]
    assert counts == [1, 2, 1]


def test_alternating_hexagons_match_walk_oracle(corpus4):
    for system in corpus4:
        for m in enumerate_perfect_matchings(system):
            got = alternating_hexagons(system, m)
            want = alternating_hexagons_by_walk(system, frozenset(m.edge_indices()))
            assert got == frozenset(want)


# -- interior counts ----------------------------------------------------------


def test_interior_counts_match_float_oracle(corpus4):
    for system in corpus4:
        for m in enumerate_perfect_matchings(system):
            for c in alternating_cycles(system, m):
                want = interior_count_by_path(system, frozenset(c.edge_indices()))
                assert c.interior_hex_count == want
                assert interior_hexagons(system, c) == want


def test_interior_of_boundary_is_everything(naphthalene, star):
    rim = [e for e in range(naphthalene.n_edges)
           if naphthalene.edge_kinds[e] == "boundary"]
    assert interior_hexagons(naphthalene, rim) == 2
    rim = [e for e in range(star.n_edges) if star.edge_kinds[e] == "boundary"]
    assert len(rim) == 18
    assert interior_hexagons(star, rim) == 4


def test_interior_accepts_bit_mask(benzene):
    assert interior_hexagons(benzene, 0b111111) == 1


def test_interior_rejects_non_cycles(naphthalene):
    with pytest.raises(NotACycle):
        interior_hexagons(naphthalene, 0)
    with pytest.raises(NotACycle):
        interior_hexagons(naphthalene, [0, 1])  # open path
    two_rings = build_hex_system([(0, 0), (1, 0), (2, 0)])
    with pytest.raises(NotACycle):
        interior_hexagons(two_rings, set(range(6)) | set(range(10, 16)))


# -- compatibility ------------------------------------------------------------


def test_disjoint_hexagons_are_compatible(star):
    best = max(enumerate_perfect_matchings(star),
               key=lambda m: len(alternating_hexagons(star, m)))
    assert len(alternating_hexagons(star, best)) == 4
    cycles = alternating_cycles(star, best)
    outer = [c for c in cycles
             if c.edge_bits in star.hex_edge_bits and
             c.edge_bits != star.hex_edge_bits[star.hex_index[(0, 0)]]]
    assert len(outer) == 3
    for c1, c2 in itertools.combinations(outer, 2):
        assert c1.edge_bits & c2.edge_bits == 0
        assert is_compatible(c1, c2)
        assert not is_crossing(star, c1, c2)


def test_adjacent_rings_sharing_matched_edge_are_compatible(naphthalene):
    fries = matching_by_index(naphthalene, 1)
    ring0, ring1 = alternating_cycles(naphthalene, fries)
    assert ring0.edge_bits & ring1.edge_bits == 1 << 5
    assert is_compatible(ring0, ring1)
    assert not is_crossing(naphthalene, ring0, ring1)


def test_ring_against_rim_is_incompatible(naphthalene):
    perimeter = matching_by_index(naphthalene, 0)
    ring, rim = alternating_cycles(naphthalene, perimeter)
    assert len(ring) == 6 and len(rim) == 10
    # They share the five non-central edges of the first ring; edges 1
    # and 2 of those are unmatched, so the pair conflicts.
    shared = ring.edge_bits & rim.edge_bits
    assert shared & ~perimeter.bits != 0
    assert not is_compatible(ring, rim)


# -- crossing ------------------------------------------------------------------


def test_smallest_crossing_pair():
    bent = build_hex_system([(0, 0), (0, 1), (1, 1)])
    m = matching_by_index(bent, 0)
    assert sorted(m.edge_indices()) == [0, 3, 4, 8, 9, 13, 14]
    cycles = alternating_cycles(bent, m)
    c1, c2 = cycles[1], cycles[2]
    assert sorted(c1.edge_indices()) == [0, 1, 2, 3, 4, 6, 7, 8, 9, 10]
    assert sorted(c2.edge_indices()) == [4, 5, 6, 8, 9, 11, 12, 13, 14, 15]
    assert is_crossing(bent, c1, c2)
    assert is_crossing(bent, c2, c1)


def test_crossing_pair_on_branched_system(star):
    m = matching_by_index(star, 0)
    cycles = alternating_cycles(star, m)
    c1, c2 = cycles[1], cycles[2]
    assert len(c1) == 10 and len(c2) == 10
    assert is_crossing(star, c1, c2)


def test_crossing_needs_a_shared_matched_edge(naphthalene):
    # Cycles with disjoint matched halves never cross, whatever else
    # they share.
    c1 = AlternatingCycle(edge_bits=0b000111, m_edge_bits=0b000001, interior_hex_count=1)
    c2 = AlternatingCycle(edge_bits=0b111010, m_edge_bits=0b001000, interior_hex_count=1)
    assert not is_crossing(naphthalene, c1, c2)


def test_crossing_matches_rotation_oracle(corpus4):
    pairs = crossings = 0
    for system in corpus4:
        for m in enumerate_perfect_matchings(system):
            mset = frozenset(m.edge_indices())
            cycles = alternating_cycles(system, m)
            for c1, c2 in itertools.combinations(cycles, 2):
                pairs += 1
                got = is_crossing(system, c1, c2)
                want = crossing_by_rotation(
                    system, frozenset(c1.edge_indices()),
                    frozenset(c2.edge_indices()), mset)
                assert got == want
                crossings += got
    assert pairs == 318
    assert crossings == 20


# -- maximum compatible families ------------------------------------------------


def test_benzene_family_is_the_ring(benzene):
    for m in enumerate_perfect_matchings(benzene):
        family = max_compatible_set(benzene, m)
        assert family.cardinality == 1
        assert family.h_index == 1


def test_naphthalene_family_sizes(naphthalene):
    got = [max_compatible_set(naphthalene, m).cardinality
           for m in enumerate_perfect_matchings(naphthalene)]
    assert got == [1, 2, 1]


def test_family_is_deterministic(star):
    m = matching_by_index(star, 0)
    a = max_compatible_set(star, m)
    b = max_compatible_set(star, m)
    assert a == b


def test_family_members_are_pairwise_compatible(corpus4):
    for system in corpus4:
        for m in enumerate_perfect_matchings(system):
            family = max_compatible_set(system, m)
            for c1, c2 in itertools.combinations(family.cycles, 2):
                assert is_compatible(c1, c2)
            assert family.h_index == sum(c.interior_hex_count for c in family.cycles)


def test_family_at_least_alternating_hexagons(corpus5):
    # All simultaneously alternating hexagons are pairwise compatible,
    # so they bound the family size from below.
    for system in corpus5:
        for m in enumerate_perfect_matchings(system):
            family = max_compatible_set(system, m)
            assert family.cardinality >= len(alternating_hexagons(system, m))


def test_non_crossing_refinement_keeps_cardinality(corpus5):
    for system in corpus5:
        for m in enumerate_perfect_matchings(system):
            plain = max_compatible_set(system, m)
            strict = max_compatible_set(system, m, non_crossing=True)
            assert strict.cardinality == plain.cardinality
            for c1, c2 in itertools.combinations(strict.cycles, 2):
                assert not is_crossing(system, c1, c2)


def test_minimize_h_index_keeps_cardinality(corpus4):
    for system in corpus4:
        for m in enumerate_perfect_matchings(system):
            plain = max_compatible_set(system, m)
            lean = max_compatible_set(system, m, minimize_h_index=True)
            assert lean.cardinality == plain.cardinality
            assert lean.h_index <= plain.h_index


def test_lean_non_crossing_pairs_share_at_most_one_matched_edge(corpus5):
    # Non-hexagon members of a frugal non-crossing maximum family
    # overlap in at most one matched edge.
    for system in corpus5:
        for m in enumerate_perfect_matchings(system):
            family = max_compatible_set(
                system, m, non_crossing=True, minimize_h_index=True)
            big = [c for c in family.cycles if len(c) > 6]
            for c1, c2 in itertools.combinations(big, 2):
                assert (c1.m_edge_bits & c2.m_edge_bits).bit_count() <= 1
