"""Exhaustive small-graph scans for the CD(0, inf) classification results.

Graphs are enumerated up to isomorphism by growing canonical graphs one
vertex at a time: every connected graph on ``n`` vertices has a vertex whose
removal leaves it connected, so attaching a new vertex to every non-empty
subset of every connected graph on ``n - 1`` vertices reaches all of them.
C4-freeness and triangle-freeness are inherited by induced subgraphs, so
they prune the growth; the minimum-degree filter is applied at the end.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator

from . import _backend, families
from .curvature import CD_TOL, min_curvature
from .formats import decode_graph6, graph6_from_masks
from .graph import GraphError, WeightedGraph, induced_cycle_lengths

MAX_ENUM_N = 8
INFINITE_EXCLUSIONS = {
    "2.1": ["P_Z"],
    "2.2": ["P_Z", "P_N"],
    "2.3": ["P_Z"],
    "2.4": ["P_Z", "P_N"],
    "2.5": ["P_Z", "P_N"],
    "2.6": ["P_Z"],
}


def canonical_masks(adj: list[int]) -> str:
    n = len(adj)
    colors = _backend.refine_colors(n, adj)
    return graph6_from_masks(adj, _backend.canon_order(n, adj, colors))


def canonical_form(g: WeightedGraph) -> str:
    """graph6 string that is equal for two unweighted graphs iff they are isomorphic.

    The string is the lexicographically smallest graph6 encoding over all
    vertex orders that list colour-refinement classes in their canonical
    order.
    """
    if len(g) > 10:
        raise GraphError("canonical_form is limited to 10 vertices")
    if not g.is_unweighted():
        raise GraphError("canonical_form needs an unweighted graph")
    return canonical_masks(g.masks())


def _extensions(adj: list[int], c4_free: bool, triangle_free: bool, allow_isolated: bool):
    n = len(adj)
    for sub in range(0 if allow_isolated else 1, 1 << n):
        bits = [v for v in range(n) if sub >> v & 1]
        if triangle_free and any(adj[v] & sub for v in bits):
            continue
        if c4_free and any(adj[a] & adj[b] for k, a in enumerate(bits) for b in bits[k + 1 :]):
            continue
        child = [m | ((sub >> v & 1) << n) for v, m in enumerate(adj)]
        child.append(sub)
        yield child


def enumerate_graph6(
    n_max: int,
    connected: bool = True,
    c4_free: bool = False,
    triangle_free: bool = False,
    min_degree: int = 0,
) -> Iterator[str]:
    """Canonical graph6 strings, ordered by vertex count then string."""
    if n_max > MAX_ENUM_N:
        raise GraphError(f"enumeration is capped at {MAX_ENUM_N} vertices, got {n_max}")
    if n_max < 1:
        return
    level = {canonical_masks([0]): [0]}
    for n in range(1, n_max + 1):
        if n > 1:
            nxt: dict[str, list[int]] = {}
            for parent in level.values():
                for child in _extensions(parent, c4_free, triangle_free, not connected):
                    key = canonical_masks(child)
                    if key not in nxt:
                        nxt[key] = decode_graph6(key)
            level = nxt
        for key in sorted(level):
            adj = level[key]
            if min(bin(m).count("1") for m in adj) >= min_degree:
                yield key


def enumerate_graphs(n_max: int, preset: str = "non-normalized", **predicates) -> Iterator[WeightedGraph]:
    for key in enumerate_graph6(n_max, **predicates):
        yield WeightedGraph.from_masks(decode_graph6(key), preset)


def _min_k(args) -> tuple[str, float, str | None]:
    key, preset = args
    res = min_curvature(WeightedGraph.from_masks(decode_graph6(key), preset))
    return key, res.k, res.vertex


def _workers(workers: int | None, jobs: int) -> int:
    if workers is not None:
        return max(1, workers)
    # process start-up outweighs the work for small scans
    if jobs < 200:
        return 1
    return max(1, int(os.environ.get("THREADS", 0) or os.cpu_count() or 1))


def _min_curvatures(keys: list[str], preset: str, workers: int | None) -> dict[str, float]:
    jobs = [(k, preset) for k in keys]
    nw = _workers(workers, len(jobs))
    if nw == 1:
        out = map(_min_k, jobs)
        return {k: v for k, v, _ in out}
    with ProcessPoolExecutor(nw) as pool:
        return {k: v for k, v, _ in pool.map(_min_k, jobs, chunksize=16)}


@dataclass
class ScanReport:
    n_max: int
    preset: str
    c4_free: bool
    triangle_free: bool
    min_degree: int
    tolerance: float
    enumerated: list[str]
    satisfying: list[str]
    min_curvature: dict[str, float]
    expected: list[str] | None = None
    missing: list[str] = field(default_factory=list)
    unexpected: list[str] = field(default_factory=list)
    theorem: str | None = None
    expected_names: dict[str, str] = field(default_factory=dict)
    excluded_infinite: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.expected is not None and not self.missing and not self.unexpected

    def to_dict(self) -> dict:
        d = asdict(self)
        d["constraints"] = {
            "n_max": d.pop("n_max"),
            "preset": d.pop("preset"),
            "connected": True,
            "c4_free": d.pop("c4_free"),
            "triangle_free": d.pop("triangle_free"),
            "min_degree": d.pop("min_degree"),
            "cd": {"K": 0.0, "N": "inf", "tolerance": d.pop("tolerance")},
        }
        d["counts"] = {"enumerated": len(self.enumerated), "satisfying": len(self.satisfying)}
        d["min_curvature"] = {k: _json_real(v) for k, v in self.min_curvature.items()}
        d["passed"] = self.passed if self.expected is not None else None
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_table(self) -> str:
        lines = [
            f"# scan n_max={self.n_max} preset={self.preset} c4_free={self.c4_free} "
            f"triangle_free={self.triangle_free} min_degree={self.min_degree} "
            f"K=0 N=inf tol={self.tolerance:g}",
            f"# enumerated {len(self.enumerated)} connected graphs, {len(self.satisfying)} satisfy CD(0,inf)",
        ]
        for key in self.satisfying:
            name = self.expected_names.get(key, "")
            lines.append(f"{key:<12} n={len(decode_graph6(key)):<2} minK={_fmt12(self.min_curvature[key])}  {name}")
        if self.expected is not None:
            lines.append(f"# theorem {self.theorem}: {'PASS' if self.passed else 'FAIL'}")
            for key in self.missing:
                lines.append(f"# missing    {key} {self.expected_names.get(key, '')}")
            for key in self.unexpected:
                lines.append(f"# unexpected {key}")
            if self.excluded_infinite:
                lines.append(f"# infinite members not scanned: {', '.join(self.excluded_infinite)}")
        return "\n".join(lines) + "\n"


def _json_real(x: float):
    return x if math.isfinite(x) else ("inf" if x > 0 else "-inf")


def _fmt12(x: float) -> str:
    return f"{x:.12g}"


def scan_classification(
    n_max: int,
    preset: str = "non-normalized",
    c4_free: bool = False,
    triangle_free: bool = False,
    min_degree: int = 0,
    expected: dict[str, str] | None = None,
    tol: float = CD_TOL,
    workers: int | None = None,
) -> ScanReport:
    """CD(0, inf) over every connected graph meeting the constraints.

    ``expected`` maps canonical graph6 strings to display names.
    """
    keys = list(
        enumerate_graph6(n_max, c4_free=c4_free, triangle_free=triangle_free, min_degree=min_degree)
    )
    mins = _min_curvatures(keys, preset, workers)
    sat = [k for k in keys if mins[k] >= -tol]
    report = ScanReport(n_max, preset, c4_free, triangle_free, min_degree, tol, keys, sat, mins)
    if expected is not None:
        exp = set(expected)
        report.expected = sorted(exp, key=_order_key)
        report.expected_names = dict(expected)
        report.missing = sorted(exp - set(sat), key=_order_key)
        report.unexpected = sorted(set(sat) - exp, key=_order_key)
    return report


def _order_key(key: str):
    return (len(decode_graph6(key)), key)


def _named(graphs) -> dict[str, str]:
    out: dict[str, str] = {}
    for name, g in graphs:
        out.setdefault(canonical_form(g), name)
    return out


def theorem_setup(theorem: str, n_max: int) -> tuple[dict, dict[str, str]]:
    """Scan constraints and expected finite members for a classification theorem."""
    paths = [(f"P{k}", families.path(k)) for k in range(1, n_max + 1)]
    cycles = [(f"C{n}", families.cycle(n)) for n in range(5, n_max + 1)]
    claw = [("Star3=K1,3", families.star(4))] if n_max >= 4 else []
    if theorem in ("2.1", "2.3"):
        preset = "normalized" if theorem == "2.1" else "non-normalized"
        cfg = dict(preset=preset, c4_free=True, triangle_free=True, min_degree=2)
        expected = cycles
    elif theorem == "2.2":
        cfg = dict(preset="normalized", c4_free=True, triangle_free=True, min_degree=0)
        stars = [(f"Star{n}", families.star(n)) for n in range(3, n_max + 1)]
        expected = paths + cycles + stars
    elif theorem == "2.4":
        cfg = dict(preset="non-normalized", c4_free=True, triangle_free=True, min_degree=0)
        expected = paths + cycles + claw
    elif theorem == "2.5":
        cfg = dict(preset="non-normalized", c4_free=True, triangle_free=False, min_degree=0)
        small = [("C3", families.cycle(3))] if n_max >= 3 else []
        small += [("C3'=paw", families.paw())] if n_max >= 4 else []
        expected = paths + cycles + claw + small
    elif theorem == "2.6":
        cfg = dict(preset="normalized", c4_free=True, triangle_free=False, min_degree=2)
        friends = [(f"F{k}", families.friendship(k)) for k in range(1, 8) if 2 * k + 1 <= n_max]
        expected = cycles + friends
    else:
        raise GraphError(f"unknown theorem {theorem!r}; choose from 2.1, 2.2, 2.3, 2.4, 2.5, 2.6")
    return cfg, _named(expected)


def verify_theorem(theorem: str, n_max: int, workers: int | None = None) -> ScanReport:
    cfg, expected = theorem_setup(theorem, n_max)
    report = scan_classification(n_max, expected=expected, workers=workers, **cfg)
    report.theorem = theorem
    report.excluded_infinite = list(INFINITE_EXCLUSIONS[theorem])
    return report


@dataclass(frozen=True)
class ConjectureEntry:
    graph6: str
    preset: str
    n: int
    min_curvature: float
    induced_lengths: tuple[int, ...]
    is_cycle: bool

    @property
    def candidate_exception(self) -> bool:
        return bool(self.induced_lengths) and not self.is_cycle


def conjecture_entry(g: WeightedGraph) -> ConjectureEntry | None:
    """Entry for a triangle-free graph satisfying CD(0, inf), else ``None``."""
    res = min_curvature(g)
    if res is not None and res.k < -CD_TOL:
        return None
    n = len(g)
    is_cycle = n >= 3 and g.is_connected() and all(len(nb) == 2 for nb in g.nbrs)
    return ConjectureEntry(
        canonical_form(g),
        g.preset,
        n,
        res.k if res is not None else math.inf,
        tuple(sorted(induced_cycle_lengths(g, 5))),
        is_cycle,
    )


def conjecture_scan(n_max: int, presets=("normalized", "non-normalized")) -> list[ConjectureEntry]:
    """Triangle-free connected graphs satisfying CD(0, inf) with their induced long cycles.

    Exploratory only: entries flagged ``candidate_exception`` are graphs with
    an induced cycle of length at least 5 that are not themselves cycles.
    """
    keys = list(enumerate_graph6(n_max, triangle_free=True))
    out = []
    for preset in presets:
        for key in keys:
            entry = conjecture_entry(WeightedGraph.from_masks(decode_graph6(key), preset))
            if entry is not None:
                out.append(entry)
    return out


def conjecture_report(entries: list[ConjectureEntry], n_max: int) -> dict:
    return {
        "n_max": n_max,
        "tolerance": CD_TOL,
        "entries": [
            {
                "graph6": e.graph6,
                "preset": e.preset,
                "n": e.n,
                "min_curvature": _json_real(e.min_curvature),
                "induced_cycle_lengths_ge5": list(e.induced_lengths),
                "is_cycle": e.is_cycle,
                "candidate_exception": e.candidate_exception,
            }
            for e in entries
        ],
    }
