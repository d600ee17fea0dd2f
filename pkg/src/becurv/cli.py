"""Command-line interface.

Exit codes: 0 success / condition holds, 1 definite negative answer,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import classify, families, formats, graph
from .curvature import CD_TOL, as_dimension, check_cd, curvature
from .graph import GraphError


class UsageError(Exception):
    pass


def _real(x: float) -> str:
    return f"{x:.12g}"


def _json_real(x: float):
    return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")


def _dim_label(n: float) -> str:
    return "inf" if math.isinf(n) else _real(n)


def _load(path: str, preset: str) -> graph.WeightedGraph:
    try:
        return formats.read_graph(path, preset)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    try:
        g = families.generate(args.family, args.params)
    except (GraphError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    text = formats.to_graph6(g) + "\n" if args.format == "graph6" else formats.format_edgelist(g)
    _emit(text, args.output)
    return 0


def _witness_dict(w) -> dict:
    return {k: w(k) for k in sorted(w, key=graph.vertex_key)} if w is not None else None


def cmd_curvature(args) -> int:
    g = _load(args.file, args.laplacian)
    dims = [as_dimension(d) for d in (args.dimension or ["inf"])]
    vertices = [args.vertex] if args.vertex else list(g.vertices)
    for v in vertices:
        if v not in g.index:
            raise UsageError(f"unknown vertex {v!r}")
    records = []
    for v in vertices:
        for n in dims:
            res = curvature(g, v, n)
            rec = {"vertex": v, "N": _json_real(n), "K": _json_real(res.k), "preset": g.preset}
            if args.witness:
                rec["witness"] = _witness_dict(res.witness)
            records.append(rec)
    if args.json:
        print(json.dumps({"preset": g.preset, "tolerance": CD_TOL, "results": records}, indent=2))
        return 0
    print(f"# preset={g.preset} dimensions={','.join(_dim_label(n) for n in dims)}")
    print(f"{'vertex':<10} {'N':>8} {'K':>20}")
    for rec in records:
        k = rec["K"]
        n = rec["N"]
        print(f"{rec['vertex']:<10} {n if isinstance(n, str) else _real(n):>8} {k if isinstance(k, str) else _real(k):>20}")
        if args.witness and rec["witness"] is not None:
            print("    witness: " + " ".join(f"{u}={_real(x)}" for u, x in rec["witness"].items()))
    return 0


def cmd_check_cd(args) -> int:
    g = _load(args.file, args.laplacian)
    n = as_dimension(args.N)
    res = check_cd(g, args.K, n, args.tol)
    header = f"# preset={g.preset} K={_real(args.K)} N={_dim_label(n)} tol={args.tol:g}"
    if args.json:
        print(
            json.dumps(
                {
                    "preset": g.preset,
                    "K": args.K,
                    "N": _json_real(n),
                    "tol": args.tol,
                    "holds": res.holds,
                    "violating_vertex": res.violating_vertex,
                    "min_curvature": _json_real(res.k),
                    "witness": _witness_dict(res.witness),
                },
                indent=2,
            )
        )
    else:
        print(header)
        if res.holds:
            print("HOLDS")
        else:
            print(f"FAILS at vertex {res.violating_vertex}: K(x;N) = {_real(res.k)}")
            print("witness: " + " ".join(f"{u}={_real(x)}" for u, x in _witness_dict(res.witness).items()))
    return 0 if res.holds else 1


def cmd_structure(args) -> int:
    g = _load(args.file, args.laplacian)
    vertices = [args.vertex] if args.vertex else list(g.vertices)
    for v in vertices:
        if v not in g.index:
            raise UsageError(f"unknown vertex {v!r}")

    def inf_or(x):
        return "inf" if math.isinf(x) else int(x)

    data = {
        "n": len(g),
        "edges": g.num_edges(),
        "girth": inf_or(graph.girth(g)),
        "c4_free": graph.is_c4_free(g),
        "triangle_free": graph.is_triangle_free(g),
        "vertices": [
            {
                "vertex": v,
                "degree": graph.degree(g, v),
                "girth_at": inf_or(graph.girth_at(g, v)),
                "components": [[c.r, c.s] for c in graph.punctured_ball_components(g, v)],
            }
            for v in vertices
        ],
    }
    if args.json:
        print(json.dumps(data, indent=2))
        return 0
    print(f"girth {data['girth']}")
    print(f"c4_free {str(data['c4_free']).lower()}")
    print(f"triangle_free {str(data['triangle_free']).lower()}")
    print(f"{'vertex':<10} {'deg':>4} {'girth_at':>9}  components (r,s)")
    for rec in data["vertices"]:
        comps = " ".join(f"({r},{s})" for r, s in rec["components"])
        print(f"{rec['vertex']:<10} {rec['degree']:>4} {str(rec['girth_at']):>9}  {comps}")
    return 0


def cmd_scan(args) -> int:
    if args.max_n > classify.MAX_ENUM_N:
        raise UsageError(f"--max-n is capped at {classify.MAX_ENUM_N}")
    if args.conjecture:
        presets = (args.laplacian,) if args.laplacian else ("normalized", "non-normalized")
        entries = classify.conjecture_scan(args.max_n, presets)
        if args.json:
            print(json.dumps(classify.conjecture_report(entries, args.max_n), indent=2))
            return 0
        print(f"# conjecture scan: connected triangle-free graphs, n <= {args.max_n}, CD(0,inf), tol={CD_TOL:g}")
        print(f"{'graph6':<12} {'preset':<15} {'n':>2} {'minK':>18}  induced>=5  note")
        for e in entries:
            note = "cycle" if e.is_cycle else ("candidate exception" if e.candidate_exception else "")
            lengths = ",".join(map(str, e.induced_lengths)) or "-"
            print(f"{e.graph6:<12} {e.preset:<15} {e.n:>2} {_real(e.min_curvature):>18}  {lengths:<10}  {note}")
        return 0
    if args.verify_theorem:
        try:
            report = classify.verify_theorem(args.verify_theorem, args.max_n)
        except GraphError as exc:
            raise UsageError(str(exc)) from None
        cfg, _ = classify.theorem_setup(args.verify_theorem, args.max_n)
        given = {
            "preset": args.laplacian,
            "c4_free": args.c4_free or None,
            "triangle_free": args.triangle_free or None,
            "min_degree": args.min_degree,
        }
        for key, val in given.items():
            if val is not None and val != cfg[key]:
                print(f"# note: theorem {args.verify_theorem} scans with {key}={cfg[key]}", file=sys.stderr)
    else:
        report = classify.scan_classification(
            args.max_n,
            args.laplacian or "non-normalized",
            c4_free=args.c4_free,
            triangle_free=args.triangle_free,
            min_degree=args.min_degree or 0,
        )
    sys.stdout.write(report.to_json() + "\n" if args.json else report.to_table())
    if args.verify_theorem:
        return 0 if report.passed else 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="becurv", description="Bakry-Emery curvature of graphs")
    sub = p.add_subparsers(dest="command", required=True)
    presets = list(graph.PRESETS)

    q = sub.add_parser("generate", help="write a named graph family")
    q.add_argument("family", help=", ".join(families.FAMILIES))
    q.add_argument("params", nargs="*", type=int)
    q.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist")
    q.add_argument("-o", "--output")
    q.set_defaults(func=cmd_generate)

    q = sub.add_parser("curvature", help="K(G,x;N) per vertex")
    q.add_argument("file")
    q.add_argument("--laplacian", choices=presets, default="non-normalized")
    q.add_argument("--dimension", action="append", metavar="N|inf")
    q.add_argument("--vertex")
    q.add_argument("--json", action="store_true")
    q.add_argument("--witness", action="store_true")
    q.set_defaults(func=cmd_curvature)

    q = sub.add_parser("check-cd", help="test the CD(K,N) condition")
    q.add_argument("file")
    q.add_argument("--K", type=float, required=True)
    q.add_argument("--N", default="inf")
    q.add_argument("--tol", type=float, default=CD_TOL)
    q.add_argument("--laplacian", choices=presets, default="non-normalized")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_check_cd)

    q = sub.add_parser("structure", help="girth, C4/triangle-freeness, punctured 2-balls")
    q.add_argument("file")
    q.add_argument("--vertex")
    q.add_argument("--laplacian", choices=presets, default="non-normalized")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_structure)

    q = sub.add_parser("scan", help="exhaustive CD(0,inf) scans of small connected graphs")
    q.add_argument("--max-n", type=int, default=7)
    q.add_argument("--c4-free", action="store_true")
    q.add_argument("--triangle-free", action="store_true")
    q.add_argument("--min-degree", type=int)
    q.add_argument("--laplacian", choices=["normalized", "non-normalized"])
    q.add_argument("--verify-theorem", choices=["2.1", "2.2", "2.3", "2.4", "2.5", "2.6"])
    q.add_argument("--conjecture", action="store_true")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_scan)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"becurv: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"becurv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
