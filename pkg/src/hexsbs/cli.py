"""Command-line interface.

Machine-readable results go to stdout as JSON (JSONL for enumeration);
human diagnostics go to stderr.  Exit codes: 0 success, 1 for computed
negative answers (obstructed region, no tiling, rejected sequence), 2 for
usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures, svg
from .cyclo import PMClass
from .hexgrid import Region, RegionError, region_from_ascii, region_from_json
from .search import (SearchConfig, enumerate_identity_words,
                     group_closure_probe, identity_endpoint_lattice,
                     identity_word_census, reduce_relation_list,
                     verify_reduction_table)
from .tiling import (KINDS, SignedTiling, boundary_obstruction_check,
                     constructible_sequence_check,
                     construction_step_from_json, min_stone_probe,
                     signed_tiling_solve, standard_tiling_solve, tile_catalog)
from .words import (STEP_MATRICES, Word, WordError, classify_pm,
                    eval_letters, parse_word)


class InputError(Exception):
    pass


def load_region(path: str, allow_empty: bool = False) -> Region:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e}") from e
    try:
        if path.endswith((".txt", ".ascii")):
            return region_from_ascii(text)
        return region_from_json(text, allow_empty)
    except (RegionError, json.JSONDecodeError, ValueError) as e:
        raise InputError(f"{path}: {e}") from e


def load_word(path_or_literal: str, alphabet: str = "step") -> Word:
    p = Path(path_or_literal)
    text = path_or_literal
    if p.is_file():
        text = p.read_text().strip()
    try:
        return parse_word(text, alphabet)
    except WordError as e:
        raise InputError(f"bad word {text!r}: {e}") from e


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, sort_keys=True)
    sys.stdout.write("\n")


def _kinds(arg: str):
    kinds = tuple(k.strip() for k in arg.split(",") if k.strip())
    for k in kinds:
        if k not in KINDS:
            raise InputError(f"unknown tile kind {k!r}")
    return kinds


def cmd_verify_tiles(args) -> int:
    rows = []
    ok = True
    for shape in tile_catalog():
        expect = ("MinusIdentity" if shape.kind == "stone"
                  else "PlusIdentity")
        step_class = classify_pm(eval_letters(shape.boundary_word.letters))
        edge_class = classify_pm(eval_letters(
            fixtures.TILE_EDGE_WORDS[shape.name], "edge"))
        good = step_class.value == edge_class.value == expect
        ok &= good
        rows.append({"tile": shape.name, "kind": shape.kind,
                     "step_class": step_class.value,
                     "edge_class": edge_class.value, "ok": good})
    _emit({"tiles": rows, "count": len(rows), "all_ok": ok})
    return 0 if ok else 1


def cmd_check_region(args) -> int:
    region = load_region(args.infile)
    klass = boundary_obstruction_check(region)
    _emit({"class": klass.value, "cells": len(region)})
    return 0 if klass is not PMClass.OTHER else 1


def cmd_solve_signed(args) -> int:
    region = load_region(args.infile, allow_empty=True)
    tiling = signed_tiling_solve(region, _kinds(args.kinds), args.padding)
    if tiling is None:
        _emit({"result": "NoSolutionInWindow", "padding": args.padding})
        return 1
    _emit({"result": "Solvable", "certificate": tiling.to_json()})
    return 0


def cmd_solve_exact(args) -> int:
    region = load_region(args.infile)
    kinds = _kinds(args.kinds)
    if args.count:
        result = standard_tiling_solve(region, kinds, "count", cap=args.cap)
        _emit({"count": result.count, "cap_exceeded": result.cap_exceeded})
        return 0
    placements = standard_tiling_solve(region, kinds, "first")
    if placements is None:
        _emit({"result": "NoTiling"})
        return 1
    _emit({"result": "Tiling",
           "placements": [p.to_json() for p in placements]})
    return 0


def cmd_check_sequence(args) -> int:
    try:
        data = json.loads(Path(args.infile).read_text())
        steps = [construction_step_from_json(obj) for obj in data]
    except (OSError, ValueError, KeyError) as e:
        raise InputError(f"{args.infile}: {e}") from e
    report = constructible_sequence_check(steps)
    _emit(report.to_json())
    return 0 if report.valid else 1


def cmd_probe_stones(args) -> int:
    region = load_region(args.infile)
    probe = min_stone_probe(region, args.padding)
    _emit(probe.to_json())
    return 0


def cmd_enumerate(args) -> int:
    if args.census:
        _emit(identity_word_census(args.max_length).to_json())
        return 0
    cfg = SearchConfig(args.max_length, args.partitions)
    records = enumerate_identity_words(cfg)
    for record in records:
        sys.stdout.write(record.jsonl() + "\n")
    print(f"{len(records)} closure classes at max length {cfg.max_word_length}",
          file=sys.stderr)
    return 0


def cmd_reduce(args) -> int:
    cfg = SearchConfig(args.max_length, args.partitions)
    records = enumerate_identity_words(cfg)
    reduction = reduce_relation_list(records)
    from .words import canonical_representative
    survivor_reps = {r.representative for r in reduction.survivors}
    raw_reps = {r.representative for r in records}
    comparison = []
    for letters, label in fixtures.TABLE_WORDS:
        rep = canonical_representative(letters)
        comparison.append({"word": letters, "label": label,
                           "in_raw": rep in raw_reps,
                           "survived": rep in survivor_reps})
    _emit({"raw_count": len(records),
           "survivor_count": len(reduction.survivors),
           "survivors": [r.to_json() for r in reduction.survivors],
           "casualty_count": len(reduction.casualties),
           "table_comparison": comparison})
    return 0


def cmd_verify_reductions(args) -> int:
    rows = verify_reduction_table()
    ok = all(r["holds"] for r in rows)
    _emit({"identities": rows, "all_hold": ok})
    return 0 if ok else 1


def cmd_group_probe(args) -> int:
    generators = []
    for ch in args.generators:
        if ch not in STEP_MATRICES:
            raise InputError(f"unknown generator letter {ch!r}")
        generators.append(STEP_MATRICES[ch])
    result = group_closure_probe(generators, args.bound)
    _emit({"generators": args.generators, **result.to_json()})
    return 0


def cmd_endpoints(args) -> int:
    points = identity_endpoint_lattice(args.max_length, args.sign)
    _emit({"max_length": args.max_length, "sign": args.sign,
           "points": [list(p) for p in points]})
    return 0


def cmd_render(args) -> int:
    if args.subject == "region":
        doc = svg.render_region(load_region(args.infile), args.scale)
    elif args.subject == "tiling":
        try:
            data = json.loads(Path(args.infile).read_text())
        except (OSError, ValueError) as e:
            raise InputError(f"{args.infile}: {e}") from e
        region = None
        entries = data
        if isinstance(data, dict):
            entries = data["certificate"]
            if "region" in data:
                region = region_from_json(json.dumps(data["region"]))
        try:
            tiling = SignedTiling.from_json(entries)
        except (KeyError, ValueError) as e:
            raise InputError(f"{args.infile}: {e}") from e
        doc = svg.render_tiling(tiling, args.scale, region)
    else:
        doc = svg.render_path(load_word(args.infile), scale=args.scale)
    try:
        Path(args.out).write_text(doc)
    except OSError as e:
        raise InputError(f"cannot write {args.out}: {e}") from e
    print(f"wrote {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexsbs",
        description="Boundary-word invariants and stone/bone/snake tilings "
                    "of hexagonal-grid regions, in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-tiles",
                       help="evaluate all 11 tile boundary words")
    p.set_defaults(func=cmd_verify_tiles)

    p = sub.add_parser("check-region", help="boundary obstruction class")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_check_region)

    p = sub.add_parser("solve-signed", help="signed tiling in padded window")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--kinds", default="bone,stone,snake")
    p.add_argument("--padding", type=int, default=2)
    p.set_defaults(func=cmd_solve_signed)

    p = sub.add_parser("solve-exact", help="standard (exact cover) tiling")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--kinds", default="bone,stone,snake")
    p.add_argument("--count", action="store_true")
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_solve_exact)

    p = sub.add_parser("check-sequence",
                       help="validate a boundary-constructible sequence")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_check_sequence)

    p = sub.add_parser("probe-stones", help="minimum-stone probe (0/1/?)")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--padding", type=int, default=2)
    p.set_defaults(func=cmd_probe_stones)

    p = sub.add_parser("enumerate", help="identity-word search (JSONL)")
    p.add_argument("--max-length", type=int, default=10)
    p.add_argument("--partitions", type=int, default=1)
    p.add_argument("--census", action="store_true",
                   help="meet-in-the-middle word census instead of JSONL")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("reduce", help="enumerate then reduce relations")
    p.add_argument("--max-length", type=int, default=9)
    p.add_argument("--partitions", type=int, default=1)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify-reductions",
                       help="check the seven reduction identities")
    p.set_defaults(func=cmd_verify_reductions)

    p = sub.add_parser("group-probe", help="BFS group closure order")
    p.add_argument("--generators", default="XYZ")
    p.add_argument("--bound", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_group_probe)

    p = sub.add_parser("endpoints", help="endpoint lattice of identity words")
    p.add_argument("--max-length", type=int, default=8)
    p.add_argument("--sign", choices=["+I", "-I", "both"], default="both")
    p.set_defaults(func=cmd_endpoints)

    p = sub.add_parser("render", help="render region/tiling/path as SVG")
    p.add_argument("--subject", choices=["region", "tiling", "path"],
                   required=True)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--scale", type=float, default=24.0)
    p.set_defaults(func=cmd_render)

    return parser


def run(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
