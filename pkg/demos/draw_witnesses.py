"""Render every matching of one system with its anti-forcing witness.

Writes one SVG per matching: thin grey skeleton, bold matched edges,
dashed red witness edges.  Deleting the dashed edges from the graph
leaves the bold matching as the only one.
"""

import argparse
import pathlib

from hexaforce import (
    anti_forcing_number,
    build_hex_system,
    enumerate_perfect_matchings,
    render_svg,
)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out-dir", default="witness_svgs")
    args = parser.parse_args()

    system = build_hex_system([(0, 0), (1, 0), (1, 1)])
    out_dir = pathlib.Path(args.out_dir)
    out_dir.mkdir(exist_ok=True)

    for i, matching in enumerate(enumerate_perfect_matchings(system)):
        af, witness = anti_forcing_number(system, matching)
        svg = render_svg(system, matching=matching, witness=witness,
                         comment=f"matching {i}, witness size {af}")
        path = out_dir / f"matching_{i}.svg"
        path.write_text(svg, encoding="utf-8")
        print(f"{path}: af={af}, witness edges {sorted(witness)}")


if __name__ == "__main__":
    main()
