"""Anti-forcing and forcing spectra across a few shape families.

Linear chains keep the anti-forcing spectrum pinned at [1, 2] no matter
how long they grow, while branched shapes push the top of the interval
up to their Fries number.  Forcing spectra are not intervals in
general: the triphenylene core already skips a value.
"""

import argparse

from hexaforce import (
    anti_forcing_spectrum,
    build_hex_system,
    forcing_spectrum,
    fries_number,
)


def linear(n):
    return [(q, 0) for q in range(n)]


def star(arm):
    cells = [(0, 0), (1, 0), (-1, 1), (0, -1)]
    for k in range(2, arm + 1):
        cells.append((k, 0))
    return cells


def row(label, cells):
    system = build_hex_system(cells)
    af = anti_forcing_spectrum(system)
    f = forcing_spectrum(system)
    gaps = list(f.gaps) or "-"
    print(f"{label:<18} af {list(af.values)!s:<16} "
          f"forcing {list(f.values)!s:<13} gaps {gaps!s:<8} "
          f"Fries {fries_number(system)}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-chain", type=int, default=8)
    args = parser.parse_args()

    for n in range(1, args.max_chain + 1):
        row(f"linear L{n}", linear(n))
    print()
    for arm in range(1, 4):
        row(f"star, arm {arm}", star(arm))


if __name__ == "__main__":
    main()
