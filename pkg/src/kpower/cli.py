"""Command-line front end.

Subcommands:
  analyze  full report for one (group, k) pair, as JSON or text
  export   the graph itself, as DOT or JSON
  verify   theorem sweeps over group families; exits 1 on any counterexample
  chair    the shifting-chair riddle for one n
  sweep    CSV matrix of one report parameter across k

Exit codes: 0 success, 1 verification counterexample, 2 usage or parse
error.  Output is deterministic; ``analyze`` adds a timestamp field unless
--no-meta is given.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone

import numpy as np

from . import verify as verify_mod
from .analysis import analyze
from .chair import render_trace, solve_chairs
from .graphs import build_undirected, to_dot, to_json_dict
from .groups import build_group, parse_group_spec

_PARAM_CHOICES = (
    "edges",
    "components",
    "chromatic",
    "clique",
    "connected",
    "forest",
    "star",
    "empty",
    "perfect",
)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    except OSError as exc:
        raise SystemExit(f"error: cannot write {out}: {exc}") from exc


def _json_text(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _text_report(doc: dict, prefix: str = "") -> str:
    # Text mirrors the JSON field order so both stay greppable.
    lines = []
    for key, value in doc.items():
        if isinstance(value, dict):
            lines.append(f"{prefix}{key}:")
            lines.append(_text_report(value, prefix + "  "))
        else:
            lines.append(f"{prefix}{key}: {value}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    try:
        group = build_group(parse_group_spec(args.group))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.k < 2:
        print("error: k must be at least 2", file=sys.stderr)
        return 2
    report = analyze(group, args.k)
    doc = report.to_json_dict()
    if not args.no_meta:
        doc["meta"] = {"generated_at": datetime.now(timezone.utc).isoformat()}
    if args.format == "json":
        _write_output(_json_text(doc), args.out)
    else:
        _write_output(_text_report(doc) + "\n", args.out)
    return 0


def cmd_export(args) -> int:
    try:
        group = build_group(parse_group_spec(args.group))
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.k < 2:
        print("error: k must be at least 2", file=sys.stderr)
        return 2
    gr = build_undirected(group, args.k)
    if args.format == "dot":
        _write_output(to_dot(group, gr), args.out)
    else:
        _write_output(_json_text(to_json_dict(group, gr)), args.out)
    return 0


def cmd_verify(args) -> int:
    theorems = tuple(args.theorem) if args.theorem else verify_mod.THEOREMS
    try:
        spec = verify_mod.SweepSpec(
            families=tuple(args.family),
            max_n=args.max_n,
            min_n=args.min_n,
            k_max=args.k_max,
            theorems=theorems,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    checks = verify_mod.run_verification(spec)
    failed = False
    for check in checks:
        if check.passed:
            print(f"theorem {check.name}: {check.cells} cells, all pass")
        else:
            failed = True
            print(f"theorem {check.name}: {check.cells} cells, FAIL")
            for failure in check.failures:
                print(f"  counterexample: {failure}")
    return 1 if failed else 0


def cmd_chair(args) -> int:
    if args.n < 1:
        print("error: n must be at least 1", file=sys.stderr)
        return 2
    solution = solve_chairs(args.n)
    doc = {
        "n": solution.n,
        "minimal_k": solution.minimal_k,
        "seating": solution.seating,
        "rejected": {
            str(k): {"chair": chair, "occupancy": occ}
            for k, (chair, occ) in sorted(solution.collision_trace.items())
        },
    }
    pieces = []
    if args.trace:
        pieces.append(render_trace(solution))
    if args.format == "json":
        pieces.append(_json_text(doc))
    else:
        pieces.append(_text_report(doc) + "\n")
    _write_output("".join(pieces), args.out)
    return 0


def cmd_sweep(args) -> int:
    try:
        spec = verify_mod.SweepSpec(
            families=tuple(args.family),
            max_n=args.max_n,
            min_n=args.min_n,
            k_max=args.k_max,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    rows = []
    k_top = 0
    for gspec in verify_mod.sweep_group_specs(spec):
        group = build_group(gspec)
        ks = verify_mod.exponents_for(group, spec.k_max)
        if len(ks) == 0:
            continue
        batch = verify_mod.GroupBatch.build(group, ks)
        values = _sweep_values(batch, args.param)
        rows.append((str(gspec), {int(k): int(v) for k, v in zip(ks, values)}))
        k_top = max(k_top, int(ks[-1]))
    lines = ["group," + ",".join(f"k={k}" for k in range(2, k_top + 1))]
    for name, values in rows:
        cells = [str(values.get(k, "")) for k in range(2, k_top + 1)]
        lines.append(name + "," + ",".join(cells))
    _write_output("\n".join(lines) + "\n", args.out)
    return 0


def _sweep_values(batch, param: str) -> np.ndarray:
    m = batch.metrics
    if param == "edges":
        return m.edge_count
    if param == "components":
        return m.comp_count
    if param == "chromatic":
        return m.chi
    if param == "clique":
        return np.where(m.edge_count == 0, 1, np.where(m.has_triangle, 3, 2))
    if param == "connected":
        return m.connected.astype(np.int64)
    if param == "forest":
        return (~m.has_cycle).astype(np.int64)
    if param == "star":
        return m.star_shape.astype(np.int64)
    if param == "empty":
        return (m.edge_count == 0).astype(np.int64)
    if param == "perfect":
        return (~m.has_long_odd_cycle).astype(np.int64)
    raise ValueError(f"unknown sweep parameter {param!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kpower",
        description="Build, analyse and cross-verify k-power graphs of finite groups.",
    )
    parser.add_argument(
        "--config",
        help="JSON file of defaults for the chosen subcommand (flags win)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="full report for one (group, k)")
    p_analyze.add_argument("--group", required=True, help="e.g. cyclic:31, sym:3, dihedral:5, quaternion:2, product:2x3x4")
    p_analyze.add_argument("--k", type=int, required=True)
    p_analyze.add_argument("--format", choices=("json", "text"), default="json")
    p_analyze.add_argument("--no-meta", action="store_true", help="omit the timestamp field")
    p_analyze.add_argument("--out", "-o", default=None)
    p_analyze.set_defaults(func=cmd_analyze)

    p_export = sub.add_parser("export", help="export the graph as DOT or JSON")
    p_export.add_argument("--group", required=True)
    p_export.add_argument("--k", type=int, required=True)
    p_export.add_argument("--format", choices=("dot", "json"), default="dot")
    p_export.add_argument("--out", "-o", default=None)
    p_export.set_defaults(func=cmd_export)

    p_verify = sub.add_parser("verify", help="sweep theorem checks over families")
    p_verify.add_argument("--family", action="append", required=True,
                          choices=("cyclic", "sym", "dihedral", "quaternion", "product"))
    p_verify.add_argument("--max-n", type=int, required=True, help="family parameter cap")
    p_verify.add_argument("--min-n", type=int, default=1)
    k_group = p_verify.add_mutually_exclusive_group()
    k_group.add_argument("--k-all", action="store_true",
                         help="sweep all k in 2..o(G)+1 (the default)")
    k_group.add_argument("--k-max", type=int, default=None, help="cap on k")
    p_verify.add_argument("--theorem", action="append", choices=verify_mod.THEOREMS,
                          help="repeatable; default runs the whole catalog")
    p_verify.set_defaults(func=cmd_verify)

    p_chair = sub.add_parser("chair", help="solve the shifting-chair riddle")
    p_chair.add_argument("--n", type=int, required=True)
    p_chair.add_argument("--trace", action="store_true", help="emit the whistle-by-whistle trace")
    p_chair.add_argument("--format", choices=("json", "text"), default="text")
    p_chair.add_argument("--out", "-o", default=None)
    p_chair.set_defaults(func=cmd_chair)

    p_sweep = sub.add_parser("sweep", help="CSV matrix of one parameter across k")
    p_sweep.add_argument("--family", action="append", required=True,
                         choices=("cyclic", "sym", "dihedral", "quaternion", "product"))
    p_sweep.add_argument("--max-n", type=int, required=True)
    p_sweep.add_argument("--min-n", type=int, default=1)
    k_group_sweep = p_sweep.add_mutually_exclusive_group()
    k_group_sweep.add_argument("--k-all", action="store_true",
                               help="sweep all k in 2..o(G)+1 (the default)")
    k_group_sweep.add_argument("--k-max", type=int, default=None)
    p_sweep.add_argument("--param", choices=_PARAM_CHOICES, default="edges")
    p_sweep.add_argument("--out", "-o", default=None)
    p_sweep.set_defaults(func=cmd_sweep)

    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: list[str]) -> list[str]:
    """Fold --config file values in as subparser defaults; explicit flags win."""
    if "--config" not in argv:
        return argv
    at = argv.index("--config")
    path = argv[at + 1]
    rest = argv[:at] + argv[at + 2 :]
    with open(path, encoding="utf-8") as handle:
        defaults = json.load(handle)
    for action in parser._subparsers._group_actions:
        for sub_parser in action.choices.values():
            known = {a.dest for a in sub_parser._actions}
            sub_parser.set_defaults(**{k: v for k, v in defaults.items() if k in known})
            for sub_action in sub_parser._actions:
                if sub_action.dest in defaults:
                    sub_action.required = False
    return rest


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _apply_config(parser, argv)
    except (OSError, json.JSONDecodeError, IndexError) as exc:
        print(f"error: bad config: {exc}", file=sys.stderr)
        return 2
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
