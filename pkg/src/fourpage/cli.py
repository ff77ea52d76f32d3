"""``fourpage`` command line: analyze | verify | render | batch | oracle."""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import List, Optional

from .analysis import Report, analyze
from .binding import verify
from .diagram import Diagram, loads
from .exceptions import FourPageError
from .fixtures import fixture_from_json, get_fixture, load_fixtures
from .oracle import run_oracle
from .ribbon import ribbon_schematic
from .svg import presentation_svg, schematic_svg

INPUT_SUFFIXES = (".json", ".pd", ".txt")


class InputError(FourPageError):
    category = "InputError"
    exit_code = 2


def _read_input(path: str):
    """(Diagram, known invariants) from a file or a bundled fixture name."""
    p = Path(path)
    if not p.exists():
        try:
            fx = get_fixture(path)
        except KeyError:
            raise InputError("no such file or bundled fixture: %s" % path) from None
        return fx.diagram, fx.known
    text = p.read_text()
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if "known" in obj:
            fx = fixture_from_json(obj)
            return fx.diagram, fx.known
    d = loads(text, name=p.stem)
    if d.name is None:
        d = Diagram(d.crossings, name=p.stem)
    return d, {}


def _tree_option(value: str):
    env_seed = os.environ.get("FOURPAGE_TREE_SEED")
    if value.startswith("random"):
        _, _, seed = value.partition(":")
        seed = seed or env_seed or "0"
        return "random", int(seed)
    if value not in ("auto", "default", "strict"):
        raise argparse.ArgumentTypeError("--tree must be auto|default|strict|random[:seed]")
    return value, None


def _dump_json(obj, path: str):
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _run(args, d: Diagram, known: dict) -> Report:
    tree, seed = args.tree
    return analyze(
        d,
        tree=tree,
        seed=seed,
        epsilon=args.epsilon,
        componentwise=args.componentwise,
        unshaded_face=args.outer_face,
        known=known,
    )


def _print_report(r: Report, stream=sys.stdout):
    s = r.summary()
    print("diagram        %s" % s["name"], file=stream)
    print("crossings      %d (2c = %d)" % (s["crossings"], s["two_c"]), file=stream)
    print(
        "predicates     "
        + " ".join("%s=%s" % kv for kv in sorted(r.predicates.items())),
        file=stream,
    )
    for k, part in enumerate(r.parts):
        b = part.bound
        v = verify(b.presentation)
        print(
            "part %d         tree=%s %s  binding %d -> %d"
            % (k, b.tree.strategy, sorted(b.tree.edges), b.unrepaired.n_binding, b.arcs),
            file=stream,
        )
        print(
            "  checks       "
            + " ".join(
                "%s=%s" % (name, getattr(v, name))
                for name in ("condition1", "condition2", "condition3",
                             "sides_nonempty", "noncrossing_per_page")
            ),
            file=stream,
        )
    print("arcs           %d%s" % (s["arcs"], "  (strict)" if s["strict"] else ""), file=stream)
    print("rib_bound      %d" % s["rib_bound"], file=stream)
    if s["arc_index"] is not None:
        print("arc index      %d (table)" % s["arc_index"], file=stream)
    print(
        "timings        "
        + " ".join("%s=%.2fms" % kv for kv in sorted(r.timings.items())),
        file=stream,
    )
    print("verified       %s" % s["verified"], file=stream)


def _svg_paths(base: str):
    b = Path(base)
    stem = b.with_suffix("") if b.suffix == ".svg" else b
    return Path("%s.svg" % stem), Path("%s-ribbon.svg" % stem)


def _write_svgs(r: Report, base: str) -> List[Path]:
    written = []
    for k, part in enumerate(r.parts):
        circle, ribbon = _svg_paths(base if len(r.parts) == 1 else "%s-part%d" % (base, k))
        circle.write_text(presentation_svg(part.bound.presentation))
        ribbon.write_text(schematic_svg(ribbon_schematic(part.plan)))
        written += [circle, ribbon]
    return written


def cmd_analyze(args) -> int:
    d, known = _read_input(args.path)
    r = _run(args, d, known)
    _print_report(r, sys.stderr if args.json == "-" else sys.stdout)
    if args.json:
        _dump_json(r.to_dict(), args.json)
    if args.svg:
        _write_svgs(r, args.svg)
    return 0 if r.verified else 1


def cmd_verify(args) -> int:
    d, known = _read_input(args.path)
    r = _run(args, d, known)
    ok = True
    for k, part in enumerate(r.parts):
        v = verify(part.bound.presentation)
        for name, val in v.to_dict().items():
            if name == "problems":
                continue
            print("part%d %-22s %s" % (k, name, "PASS" if val else "FAIL"))
        for msg in v.problems:
            print("part%d problem: %s" % (k, msg))
        ok = ok and v.valid
    return 0 if ok else 1


def cmd_render(args) -> int:
    d, known = _read_input(args.path)
    r = _run(args, d, known)
    out = args.out or str(Path(args.path).stem if Path(args.path).exists() else args.path)
    for p in _write_svgs(r, out):
        print(p)
    return 0 if r.verified else 1


def _batch_row(path: str, tree, epsilon: float, componentwise: bool) -> dict:
    name = Path(path).stem
    try:
        d, known = _read_input(path)
        name = d.name or name
        r = analyze(d, tree=tree[0], seed=tree[1], epsilon=epsilon,
                    componentwise=componentwise, known=known)
        row = r.summary()
        row["name"] = name
        row["error"] = None
        return row
    except FourPageError as exc:
        return {"name": name, "error": exc.category, "message": str(exc)}


def batch_rows(paths, tree=("auto", None), epsilon=1e-3, componentwise=False, jobs=1) -> List[dict]:
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_batch_row, paths, [tree] * len(paths),
                                 [epsilon] * len(paths), [componentwise] * len(paths)))
    else:
        rows = [_batch_row(p, tree, epsilon, componentwise) for p in paths]
    return sorted(rows, key=lambda r: str(r["name"]))


def batch_summary(rows: List[dict]) -> dict:
    ok = [r for r in rows if r.get("error") is None]
    margins = [r["two_c"] - r["arcs"] for r in ok]
    strict_rows = [r for r in ok if not r["alternating"] and r["strictness_forced"]]
    return {
        "rows": len(rows),
        "errors": len(rows) - len(ok),
        "min_margin": min(margins) if margins else None,
        "bound_holds": all(m >= 0 for m in margins),
        "strict_holds": all(r["arcs"] < r["two_c"] for r in strict_rows),
        "arc_index_holds": all(
            r["arcs"] >= r["arc_index"] for r in ok if r["arc_index"] is not None
        ),
        "all_verified": all(r["verified"] for r in ok),
    }


def _fmt_cell(v):
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def cmd_batch(args) -> int:
    if args.dir is None:
        paths = [f.name for f in load_fixtures()]
    else:
        root = Path(args.dir)
        if not root.is_dir():
            raise InputError("not a directory: %s" % args.dir)
        paths = sorted(str(p) for p in root.iterdir() if p.suffix in INPUT_SUFFIXES)
    rows = batch_rows(paths, args.tree, args.epsilon, args.componentwise, args.jobs)
    cols = ("name", "crossings", "alternating", "arcs", "two_c", "strict",
            "arc_index", "rib_bound", "verified")
    print("  ".join("%-9s" % c for c in cols))
    for r in rows:
        if r.get("error"):
            print("%-9s  ERROR %s: %s" % (r["name"], r["error"], r["message"]))
        else:
            print("  ".join("%-9s" % _fmt_cell(r[c]) for c in cols))
    summary = batch_summary(rows)
    print("summary: " + " ".join("%s=%s" % (k, _fmt_cell(v)) for k, v in summary.items()))
    if args.json:
        _dump_json({"rows": rows, "summary": summary}, args.json)
    good = (summary["bound_holds"] and summary["strict_holds"]
            and summary["arc_index_holds"] and summary["all_verified"])
    return 0 if good and summary["errors"] == 0 else 1


def cmd_oracle(args) -> int:
    d, _ = _read_input(args.path)
    rep = run_oracle(d, mode=args.mode, cap=args.cap, unshaded_face=args.outer_face)
    info = rep.to_dict()
    print("%s: %d/%d spanning trees pass (matrix-tree count %d)"
          % (info["name"], info["trees_passed"], rep.tree_count, rep.matrix_tree))
    if args.mode == "states":
        print("states traced %d, single-circle %d, single-circle == tree states: %s"
              % (rep.states_traced, rep.single_circle_states, rep.single_iff_tree))
    print("smoothing semantics: %s" % rep.smoothing_semantics)
    if args.json:
        _dump_json(info, args.json)
    return 0 if rep.passed else 1


def _common(p: argparse.ArgumentParser):
    p.add_argument("--tree", type=_tree_option, default=("auto", None),
                   help="auto|default|strict|random[:seed] (seed falls back to FOURPAGE_TREE_SEED)")
    p.add_argument("--epsilon", type=float, default=1e-3, help="ribbon connection slack")
    p.add_argument("--componentwise", action="store_true",
                   help="process each connected component of a split diagram separately")
    p.add_argument("--outer-face", type=int, default=None,
                   help="face id forced to be unshaded")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fourpage", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="run the full pipeline and report bounds")
    p.add_argument("path", help="PD/JSON file or bundled fixture name")
    _common(p)
    p.add_argument("--json", metavar="OUT", help="write the JSON report ('-' for stdout)")
    p.add_argument("--svg", metavar="OUT", help="write presentation and ribbon SVGs")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check the binding-circle conditions")
    p.add_argument("path")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="emit SVG figures")
    p.add_argument("path")
    _common(p)
    p.add_argument("--out", metavar="BASE", help="output base name")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("batch", help="tabulate a directory of fixtures")
    p.add_argument("dir", nargs="?", default=None,
                   help="directory of .json/.pd/.txt files (default: bundled fixtures)")
    _common(p)
    p.add_argument("--json", metavar="OUT")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("oracle", help="exhaustive spanning-tree / state certification")
    p.add_argument("path")
    p.add_argument("--mode", choices=("all-trees", "states"), default="all-trees")
    p.add_argument("--cap", type=int, default=10000)
    p.add_argument("--outer-face", type=int, default=None)
    p.add_argument("--json", metavar="OUT")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FourPageError as exc:
        err = {"error": exc.category, "message": str(exc)}
        crossings = getattr(exc, "crossings", None)
        if crossings:
            err["crossings"] = list(crossings)
        print(json.dumps(err), file=sys.stderr)
        return exc.exit_code
    except json.JSONDecodeError as exc:
        print(json.dumps({"error": "ParseError", "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
