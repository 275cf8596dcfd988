"""Command line front end.

Four subcommands: ``gen`` writes corpora, ``spectrum`` computes spectra,
``verify`` runs the identity checks with a pass/fail exit code, and
``render`` draws a matching as SVG.  All randomness flows from ``--seed``
(default 0); worker counts come from ``--jobs`` or the HEXAFORCE_JOBS
environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent import futures
from typing import Iterable

from . import __version__
from .errors import HexaforceError, ParseError
from .forcing import (
    CSV_HEADER,
    anti_forcing_number,
    anti_forcing_spectrum,
    audit_report,
    forcing_spectrum,
    fries_number,
    verify_theorems,
)
from .generator import (
    canonical_code,
    corpus_line,
    enumerate_catacondensed,
    random_catacondensed,
    read_corpus,
)
from .hexcore import HexSystem, build_hex_system, system_from_dict
from .matchings import enumerate_perfect_matchings, matching_by_index
from .render import render_svg

SPECTRUM_CSV_HEADER = (
    "system_id,n_hexagons,n_matchings,af,Af,fries,spectrum_af,spectrum_forcing"
)


def _default_jobs() -> int:
    raw = os.environ.get("HEXAFORCE_JOBS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _manifest(command: str, inputs: list[str], seed: int | None = None,
              limits: dict | None = None, wall_time_s: float | None = None) -> dict:
    out: dict = {"command": command, "inputs": inputs,
                 "version": __version__, "schema": 1}
    if seed is not None:
        out["seed"] = seed
    if limits:
        out["limits"] = limits
    if wall_time_s is not None:
        out["wall_time_s"] = round(wall_time_s, 3)
    return out


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_systems(path: str) -> list[tuple[str, HexSystem]]:
    """Accept a single JSON object, a JSON list, or JSONL corpus lines."""
    text = _read_text(path)
    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        return read_corpus(text.splitlines())
    if isinstance(obj, dict):
        objs = [obj]
    elif isinstance(obj, list):
        objs = obj
    else:
        raise ParseError("input is neither an object, a list, nor JSONL")
    out = []
    for o in objs:
        system = system_from_dict(o)
        sid = o.get("id") if isinstance(o, dict) else None
        if not isinstance(sid, str):
            sid = canonical_code(system).digest
        out.append((sid, system))
    return out


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _map_jobs(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with futures.ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# -- gen ----------------------------------------------------------------


def cmd_gen(args: argparse.Namespace) -> int:
    if args.random:
        systems: Iterable[HexSystem] = (
            random_catacondensed(args.n, seed=args.seed + i)
            for i in range(args.count)
        )
    else:
        systems = enumerate_catacondensed(args.n)
    lines = [corpus_line(s) for s in systems]
    _write_text(args.out, "".join(line + "\n" for line in lines))
    return 0


# -- spectrum -----------------------------------------------------------


def _spectrum_payload(item: tuple[str, list[tuple[int, int]]]) -> dict:
    sid, cells = item
    system = build_hex_system(cells)
    spec_af = anti_forcing_spectrum(system)
    spec_f = forcing_spectrum(system)
    n_matchings = sum(1 for _ in enumerate_perfect_matchings(system))
    return {
        "system_id": sid,
        "hexes": [list(c) for c in system.hexes],
        "n_hexagons": system.n_hexes,
        "n_matchings": n_matchings,
        "af": spec_af.min_value,
        "Af": spec_af.max_value,
        "fries": fries_number(system),
        "spectrum_af": list(spec_af.values),
        "histogram_af": {str(k): v for k, v in spec_af.histogram.items()},
        "spectrum_forcing": list(spec_f.values),
        "histogram_forcing": {str(k): v for k, v in spec_f.histogram.items()},
    }


def cmd_spectrum(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    systems = _read_systems(args.input)
    items = [(sid, [list(c) for c in s.hexes]) for sid, s in systems]
    rows = _map_jobs(_spectrum_payload, items, args.jobs)
    manifest = _manifest("spectrum", [args.input],
                         wall_time_s=time.perf_counter() - started)
    if args.csv:
        out = ["# manifest: " + json.dumps(manifest, sort_keys=True),
               SPECTRUM_CSV_HEADER]
        for r in rows:
            out.append(",".join([
                r["system_id"], str(r["n_hexagons"]), str(r["n_matchings"]),
                str(r["af"]), str(r["Af"]), str(r["fries"]),
                "|".join(str(v) for v in r["spectrum_af"]),
                "|".join(str(v) for v in r["spectrum_forcing"]),
            ]))
        _write_text(args.out, "\n".join(out) + "\n")
    else:
        doc = {"schema": 1, "manifest": manifest, "systems": rows}
        _write_text(args.out, json.dumps(doc, indent=2) + "\n")
    return 0


# -- verify -------------------------------------------------------------


def _parse_mode(text: str) -> tuple[int | None, int]:
    if text == "full":
        return None, 0
    parts = text.split(":")
    if parts[0] == "sampled" and len(parts) in (2, 3):
        try:
            sample = int(parts[1])
            seed = int(parts[2]) if len(parts) == 3 else 0
            if sample > 0:
                return sample, seed
        except ValueError:
            pass
    raise ParseError(f"bad --mode {text!r}; expected full or sampled:N[:SEED]")


def _verify_payload(item: tuple[str, list[tuple[int, int]], int | None, int]) -> dict:
    sid, cells, sample, seed = item
    system = build_hex_system(cells)
    report = verify_theorems(system, sample=sample, seed=seed)
    return report.to_dict(system_id=sid, hexes=system.hexes)


def cmd_verify(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    sample, seed = _parse_mode(args.mode)
    systems = _read_systems(args.corpus)
    if args.max_hexes is not None:
        systems = [(sid, s) for sid, s in systems if s.n_hexes <= args.max_hexes]
    items = [(sid, [list(c) for c in s.hexes], sample, seed) for sid, s in systems]
    reports = _map_jobs(_verify_payload, items, args.jobs)

    problems: list[str] = []
    for rep in reports:
        problems.extend(f"{rep['system_id']}: {p}" for p in audit_report(rep))
    failures = [rep for rep in reports
                if any(v is False for v in rep["checks"].values())]
    all_ok = not failures and not problems

    manifest = _manifest(
        "verify", [args.corpus], seed=seed,
        limits={"max_hexes": args.max_hexes} if args.max_hexes is not None else None,
        wall_time_s=time.perf_counter() - started)
    if args.csv:
        out = ["# manifest: " + json.dumps(manifest, sort_keys=True), CSV_HEADER]
        for rep in reports:
            out.append(_csv_row(rep))
        _write_text(args.out, "\n".join(out) + "\n")
    else:
        doc = {"schema": 1, "manifest": manifest, "mode": args.mode,
               "n_systems": len(reports), "all_ok": all_ok, "systems": reports}
        _write_text(args.out, json.dumps(doc, indent=2) + "\n")

    if not all_ok:
        first = None
        for rep in failures:
            if rep["counterexamples"]:
                first = {"system_id": rep["system_id"],
                         "hexes": rep["hexes"],
                         "counterexample": rep["counterexamples"][0]}
                break
        print("verify: FAILED", file=sys.stderr)
        if first is not None:
            print(json.dumps(first, indent=2), file=sys.stderr)
        for p in problems:
            print(f"verify: report audit: {p}", file=sys.stderr)
        return 1
    return 0


def _csv_row(rep: dict) -> str:
    def flag(name: str) -> str:
        v = rep["checks"].get(name)
        return "skip" if v is None else str(v).lower()

    spectrum = "|".join(str(v) for v in rep.get("spectrum_af", []))
    return ",".join([
        rep["system_id"], str(rep["n_hexagons"]), str(rep["n_matchings"]),
        str(rep["af"]), str(rep["Af"]), str(rep["fries"]), spectrum,
        flag("thm1_ok"), flag("thm2_ok"), flag("lemma3_ok"), flag("thm4_ok"),
    ])


# -- render -------------------------------------------------------------


def cmd_render(args: argparse.Namespace) -> int:
    systems = _read_systems(args.input)
    if not systems:
        raise ParseError("no systems in input")
    sid, system = systems[0]
    matching = matching_by_index(system, args.matching)
    witness: frozenset[int] = frozenset()
    if args.witness:
        _, witness = anti_forcing_number(system, matching)
    # No wall time here: renders must be byte-identical across runs.
    manifest = _manifest("render", [args.input],
                         limits={"matching": args.matching})
    svg = render_svg(system, matching=matching, witness=witness,
                     comment=json.dumps(manifest, sort_keys=True))
    _write_text(args.out, svg)
    return 0


# -- entry point --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexaforce",
        description="Exact anti-forcing and Fries combinatorics on "
                    "cata-condensed hexagonal systems.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a corpus of systems")
    p.add_argument("n", type=int, help="number of hexagons per system")
    p.add_argument("--out", default="-", help="output path (default stdout)")
    p.add_argument("--random", action="store_true",
                   help="random growth instead of exhaustive enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1,
                   help="number of random systems (with --random)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("spectrum", help="anti-forcing and forcing spectra")
    p.add_argument("input", help="system JSON or corpus JSONL ('-' for stdin)")
    p.add_argument("--out", default="-")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="JSON (the default)")
    fmt.add_argument("--csv", action="store_true", help="CSV instead of JSON")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", help="run the identity checks over a corpus")
    p.add_argument("corpus", help="corpus JSONL ('-' for stdin)")
    p.add_argument("--mode", default="full", help="full or sampled:N[:SEED]")
    p.add_argument("--max-hexes", type=int, default=None,
                   help="skip systems with more hexagons")
    p.add_argument("--out", default="-")
    p.add_argument("--csv", action="store_true", help="CSV instead of JSON")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="draw a matching as SVG")
    p.add_argument("input", help="system JSON or corpus JSONL")
    p.add_argument("--matching", type=int, default=0,
                   help="matching index in enumeration order")
    p.add_argument("--witness", action="store_true",
                   help="overlay the anti-forcing witness, dashed")
    p.add_argument("--out", required=True, help="output SVG path")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HexaforceError as exc:
        print(f"hexaforce: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
