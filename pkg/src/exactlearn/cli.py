"""Command-line experiment runner.

Subcommands: gen, analyze, solve, sweep, verify.  Exit status is 0 on
success, 1 when a solve or bound check fails and 2 on usage or I/O errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import io
from .families import FAMILIES, Caps, family_table, indicator_estimate
from .learners import LEARNERS
from .oracle import exact_depth
from .table import (ConceptTable, EmptyTableError, GateExceeded, i_reduction_number,
                    rank, reduction_number, sauer_bound_holds, vc_dimension)
from .tree import ALL_MODES, MalformedTree, QueryMode, depth, is_admissible, verify_solves

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2
GATED, NA = "gated", "n/a"
MODE_NAMES = [m.value for m in ALL_MODES]
EPS = 1e-9


class UsageError(Exception):
    pass


def sweep_columns() -> list[str]:
    cols = ["family", "n", "size", "vc", "rank", "reduction", "i_reduction", "sauer"]
    cols += [f"h_{m}" for m in MODE_NAMES]
    for name in LEARNERS:
        cols += [f"{name}_depth", f"{name}_bound"]
    return cols + ["ok"]


def _parse_range(text: str) -> list[int]:
    for sep in ("..", "-", ":"):
        if sep in text:
            lo, hi = text.split(sep, 1)
            try:
                lo, hi = int(lo), int(hi)
            except ValueError:
                break
            if lo > hi:
                raise UsageError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError:
        raise UsageError(f"cannot parse n range {text!r}; use e.g. 3..7") from None


def _parse_blocks(text: str | None):
    if text is None:
        return None
    try:
        return tuple(int(b) for b in text.split(",") if b.strip())
    except ValueError:
        raise UsageError(f"cannot parse blocks {text!r}; use e.g. 2,3") from None


def _generate(family: str, n: int, blocks=None, open_: bool = False) -> ConceptTable:
    kwargs = {"closed": not open_}
    if blocks is not None:
        kwargs["blocks"] = blocks
    try:
        return family_table(family, n, **kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_gen(args) -> int:
    t = _generate(args.family, args.n, _parse_blocks(args.blocks), args.open)
    _emit(io.dumps_table(t), args.out)
    return EXIT_OK


def cmd_analyze(args) -> int:
    t = io.read_table(args.table)
    caps = Caps(rank=args.cap_rank) if args.cap_rank is not None else Caps()
    profile = indicator_estimate(t, caps)
    data = profile.as_dict()
    data["sauer_bound_holds"] = sauer_bound_holds(t)
    for key in ("n", "size", "vc", "rank", "reduction_number", "i_reduction_number"):
        print(f"{key:>20}: {data[key]}", file=sys.stderr)
    _emit(json.dumps(data, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    t = io.read_table(args.table)
    if not args.learner and not args.oracle:
        raise UsageError("solve needs --learner NAME, --oracle, or both")
    mode = QueryMode(args.mode) if args.mode else None
    result: dict = {"size": len(t)}
    status = EXIT_OK
    if args.learner:
        if args.learner not in LEARNERS:
            raise UsageError(f"unknown learner {args.learner!r}; expected one of {sorted(LEARNERS)}")
        info = LEARNERS[args.learner]
        tree = info.build(t)
        mode = mode or info.mode
        bound = float(info.bound(t))
        solves = verify_solves(tree, t)
        admissible = is_admissible(tree, t, mode)
        d = depth(tree)
        result.update(learner=info.name, depth=d, bound=bound, solves=solves, admissible=admissible)
        if not (solves and admissible and d <= bound + EPS):
            status = EXIT_FAILED
        if args.out:
            io.write_tree(tree, args.out)
    mode = mode or QueryMode.M
    result["mode"] = mode.value
    if args.oracle:
        h = exact_depth(t, mode, gate_override=args.gate_override)
        result["exact_depth"] = h
        if args.learner:
            result["learner_ge_oracle"] = result["depth"] >= h
            if result["depth"] < h:
                status = EXIT_FAILED
    print(json.dumps(result, sort_keys=True))
    return status


def cmd_verify(args) -> int:
    t = io.read_table(args.table)
    tree = io.read_tree(args.tree)
    if tree.n != t.n:
        raise UsageError(f"tree dimension {tree.n} does not match table dimension {t.n}")
    solves = verify_solves(tree, t)
    result = {"solves": solves, "depth": depth(tree)}
    ok = solves
    if args.mode:
        result["admissible"] = is_admissible(tree, t, args.mode)
        ok = ok and result["admissible"]
    print(json.dumps(result, sort_keys=True))
    return EXIT_OK if ok else EXIT_FAILED


def _try(fn, *a, **kw):
    try:
        return fn(*a, **kw)
    except GateExceeded:
        return GATED


def _chain_ok(h: dict, n: int) -> bool:
    """The ordering between the five minimum depths, over whichever were computed."""
    pairs = [("ME", "E"), ("E", "P"), ("ME", "M"), ("ME", "MP"), ("MP", "P")]
    for lo, hi in pairs:
        if isinstance(h.get(lo), int) and isinstance(h.get(hi), int) and h[lo] > h[hi]:
            return False
    return all(v <= n for v in h.values() if isinstance(v, int))


def sweep_row(family: str, t: ConceptTable, modes: Sequence[QueryMode],
              gate_override: bool = False) -> dict:
    row: dict = {"family": family, "n": t.n, "size": len(t)}
    vc = _try(vc_dimension, t)
    row["vc"] = vc
    row["rank"] = rank(t)
    row["reduction"] = _try(reduction_number, t)
    row["i_reduction"] = _try(i_reduction_number, t)
    row["sauer"] = GATED if vc == GATED else len(t) <= (4 * t.n) ** vc
    ok = row["sauer"] is not False
    h = {}
    for m in ALL_MODES:
        h[m.value] = _try(exact_depth, t, m, gate_override=gate_override) if m in modes else NA
        row[f"h_{m.value}"] = h[m.value]
    ok = ok and _chain_ok(h, t.n)
    if isinstance(h["M"], int):
        ok = ok and 2 ** h["M"] >= len(t)
    if isinstance(h["E"], int):
        ok = ok and h["E"] <= row["rank"]
    for name, info in LEARNERS.items():
        try:
            bound = info.bound(t)
        except GateExceeded:
            row[f"{name}_depth"] = row[f"{name}_bound"] = GATED
            continue
        tree = info.build(t)
        d = depth(tree)
        row[f"{name}_depth"] = d
        row[f"{name}_bound"] = round(float(bound), 4)
        ok = ok and verify_solves(tree, t) and is_admissible(tree, t, info.mode)
        ok = ok and d <= bound + EPS
        oracle = h[info.mode.value]
        if isinstance(oracle, int):
            ok = ok and d >= oracle
    row["ok"] = bool(ok)
    return row


def cmd_sweep(args) -> int:
    ns = _parse_range(args.n)
    modes = [QueryMode(m) for m in args.mode] if args.mode else list(ALL_MODES)
    blocks = _parse_blocks(args.blocks)
    rows = []
    for n in sorted(ns):
        t = _generate(args.family, n, blocks, args.open)
        rows.append(sweep_row(args.family, t, modes, args.gate_override))
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(fh, fieldnames=sweep_columns(), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="exactlearn", description="Exact learning with membership and equivalence queries.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family truncation as a table file")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True, help="size parameter of the truncation")
    p.add_argument("--blocks", help="F5 only: comma-separated block indices")
    p.add_argument("--open", action="store_true",
                   help="drop the rows of concepts indexed past the truncation")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("analyze", help="structural measures of a table")
    p.add_argument("table")
    p.add_argument("--cap-rank", type=int, help="report rank above this as exceeding the cap")
    p.add_argument("--out", help="write the JSON profile here (default stdout)")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("solve", help="run a learner and/or the exact oracle")
    p.add_argument("table")
    p.add_argument("--mode", choices=MODE_NAMES)
    p.add_argument("--learner", help=f"one of {', '.join(LEARNERS)}")
    p.add_argument("--oracle", action="store_true", help="compute the exact minimum depth")
    p.add_argument("--out", help="write the learner's tree here")
    p.add_argument("--gate-override", action="store_true",
                   help="raise the oracle search gates up to their hard limits")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="CSV of measures, depths and checks over a range of n")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--n", required=True, help="range such as 3..7")
    p.add_argument("--mode", action="append", choices=MODE_NAMES,
                   help="oracle modes to run (repeatable; default all)")
    p.add_argument("--blocks", help="F5 only: comma-separated block indices")
    p.add_argument("--open", action="store_true")
    p.add_argument("--gate-override", action="store_true")
    p.add_argument("--out", help="CSV path (default stdout)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="check that a tree file solves a table file")
    p.add_argument("table")
    p.add_argument("tree")
    p.add_argument("--mode", choices=MODE_NAMES, help="also check admissibility in this mode")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, GateExceeded, EmptyTableError, MalformedTree,
            ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
