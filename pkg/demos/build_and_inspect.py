"""Build a few small systems and poke at their structure.

Shows the construction API, hexagon classification, maximal linear
chains with their cut edges, and the matching enumeration order.
"""

from hexaforce import (
    build_hex_system,
    classify_hexagons,
    enumerate_perfect_matchings,
    maximal_linear_chains,
)

SHAPES = {
    "benzene": [(0, 0)],
    "naphthalene": [(0, 0), (1, 0)],
    "phenanthrene": [(0, 0), (1, 0), (1, 1)],
    "triphenylene core": [(0, 0), (1, 0), (-1, 1), (0, -1)],
}


def inspect(name, cells):
    system = build_hex_system(cells)
    print(f"{name}: {system.n_hexes} hexagons, "
          f"{system.n_vertices} vertices, {system.n_edges} edges")
    if system.n_hexes >= 2:  # classification is undefined for a lone hexagon
        for hexagon, kind in classify_hexagons(system).items():
            print(f"  {hexagon} is {kind.name.lower()}")
    for chain in maximal_linear_chains(system):
        print(f"  chain {list(chain.hexes)} along {chain.axis}, "
              f"cut edges {sorted(chain.cut_edges)}")
    matchings = list(enumerate_perfect_matchings(system))
    print(f"  {len(matchings)} perfect matchings; first is "
          f"{matchings[0].edge_indices()}")
    print()


def main():
    for name, cells in SHAPES.items():
        inspect(name, cells)


if __name__ == "__main__":
    main()
