"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL  <detail>`` line (visible
even under captured output) and then asserts.  The module can also be run as
a script: ``python tests/test_acceptance.py``.
"""

import math
import os
import sys
import time

import numpy as np
import pytest

from becurv import classify as K
from becurv import curvature as C
from becurv import families as F
from becurv import formats
from becurv import graph as G
from becurv.cli import main as cli_main
from becurv.operators import gamma2_bochner, gamma2_direct

sys.path.insert(0, os.path.dirname(__file__))
from oracles import random_function, random_graph  # noqa: E402

TOL = 1e-9
SCAN_BUDGET = 300.0  # seconds


@pytest.fixture
def report(capsys):
    def _report(number, ok, detail=""):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
        assert ok, f"criterion {number}: {detail}"

    return _report


def _scan_cli(argv, monkeypatch, capsys):
    monkeypatch.setenv("THREADS", "1")
    t0 = time.perf_counter()
    code = cli_main(argv)
    elapsed = time.perf_counter() - t0
    out = capsys.readouterr().out
    return code, out, elapsed


def test_criterion_01_theorem_2_5(report, monkeypatch, capsys):
    argv = ["scan", "--max-n", "7", "--c4-free", "--laplacian", "non-normalized", "--verify-theorem", "2.5", "--json"]
    code, out, elapsed = _scan_cli(argv, monkeypatch, capsys)
    rep = K.verify_theorem("2.5", 7, workers=1)
    expected = {K.canonical_form(g) for g in
                [F.path(k) for k in range(1, 8)] + [F.cycle(3), F.paw(), F.star(4), F.cycle(5), F.cycle(6), F.cycle(7)]}
    ok = code == 0 and set(rep.satisfying) == expected and elapsed < SCAN_BUDGET
    report(1, ok, f"exit={code} satisfying={len(rep.satisfying)} expected={len(expected)} time={elapsed:.2f}s")


def test_criterion_02_theorem_2_6(report, monkeypatch, capsys):
    argv = ["scan", "--max-n", "7", "--c4-free", "--min-degree", "2", "--laplacian", "normalized",
            "--verify-theorem", "2.6", "--json"]
    code, out, elapsed = _scan_cli(argv, monkeypatch, capsys)
    rep = K.verify_theorem("2.6", 7, workers=1)
    expected = {K.canonical_form(g) for g in
                [F.cycle(5), F.cycle(6), F.cycle(7), F.friendship(1), F.friendship(2), F.friendship(3)]}
    ok = code == 0 and set(rep.satisfying) == expected and elapsed < SCAN_BUDGET
    report(2, ok, f"exit={code} satisfying={len(rep.satisfying)} expected={len(expected)} time={elapsed:.2f}s")


def test_criterion_03_friendship_threshold(report):
    mins = {}
    for k in range(1, 11):
        res = C.min_curvature(F.friendship(k, "normalized"))
        mins[k] = res
    good = all(mins[k].k >= -TOL for k in range(1, 8))
    bad = all(mins[k].k < -TOL for k in range(8, 11))
    v8 = mins[8].vertex
    deg_ok = G.degree(F.friendship(8), v8) == 2
    detail = " ".join(f"F{k}={mins[k].k:.6g}" for k in range(1, 11)) + f" violator(F8)={v8}"
    report(3, good and bad and deg_ok, detail)


def test_criterion_04_theorem_2_2_membership(report):
    graphs = ([("P", k, F.path(k, "normalized")) for k in range(1, 9)]
              + [("C", n, F.cycle(n, "normalized")) for n in range(5, 11)]
              + [("Star", n, F.star(n, "normalized")) for n in range(3, 11)]
              + [("Star3+", i, F.star3_plus(i, "normalized")) for i in (1, 2, 3)])
    failures = [f"{name}{p}" for name, p, g in graphs if not C.check_cd(g, 0.0, math.inf).holds]
    report(4, not failures, f"{len(graphs)} graphs, failures={failures}")


def test_criterion_05_dense_centre_spot_checks(report):
    ks = {k: C.curvature(F.friendship(k), "0").k for k in (2, 3)}
    comps = {k: [(c.r, c.s) for c in G.punctured_ball_components(F.friendship(k), "0")] for k in (2, 3)}
    shape_ok = all(set(comps[k]) == {(2, 0)} for k in (2, 3))
    ok = all(v < -TOL for v in ks.values()) and shape_ok
    report(5, ok, f"K(F2 centre)={ks[2]:.6g} K(F3 centre)={ks[3]:.6g} components={comps}")


def test_criterion_06_p2_closed_form(report):
    errs = []
    for preset in ("normalized", "non-normalized"):
        g = F.path(2, preset)
        for n in (1, 1.5, 2, 5, 100, math.inf):
            expected = 2.0 if math.isinf(n) else 2.0 - 2.0 / n
            for x in g.vertices:
                errs.append(abs(C.curvature(g, x, n).k - expected))
    report(6, max(errs) <= TOL, f"max error {max(errs):.3g} over {len(errs)} evaluations")


def test_criterion_07_bochner_identity(report):
    rng = np.random.default_rng(20240707)
    failures = 0
    worst = 0.0
    for _ in range(200):
        g = random_graph(rng, 10, weighted=True)
        f = random_function(rng, g)
        x = g.vertices[int(rng.integers(len(g)))]
        d, b = gamma2_direct(g, f, x), gamma2_bochner(g, f, x)
        rel = abs(d - b) / max(1.0, abs(d))
        worst = max(worst, rel)
        failures += rel > TOL
    report(7, failures == 0, f"200 graphs, failures={failures}, worst relative gap {worst:.3g}")


def test_criterion_08_monotone_in_dimension(report):
    rng = np.random.default_rng(808)
    grid = (2.0, 3.0, 5.0, 10.0, math.inf)
    failures = 0
    checked = 0
    for _ in range(100):
        g = random_graph(rng, 10)
        for x in g.vertices:
            ks = [r.k for r in C.curvature_profile(g, x, grid)]
            checked += 1
            failures += any(a > b + TOL for a, b in zip(ks, ks[1:]))
    report(8, failures == 0, f"{checked} vertices, failures={failures}")


def test_criterion_09_oracle_equivalence(report):
    rng = np.random.default_rng(909)
    dims = (1.0, 2.0, 5.0, math.inf)
    failures = []
    gaps = []
    done = 0
    while done < 100:
        g = random_graph(rng, 8)
        n = dims[done % len(dims)]
        x = g.vertices[int(rng.integers(len(g)))]
        res = C.curvature(g, x, n)
        if res.witness is None:
            continue
        done += 1
        ub = C.curvature_upper_bound_by_sampling(g, x, n, trials=200, seed=done, passes=10)
        gap = ub - res.k
        gaps.append(gap)
        injected = C.curvature_upper_bound_by_sampling(g, x, n, trials=0, extra=[res.witness], passes=0)
        if not (-TOL <= gap <= 0.5) or abs(injected - res.k) > 1e-8:
            failures.append((done, gap, injected - res.k))
    report(9, not failures, f"100 graphs, gap range [{min(gaps):.3g}, {max(gaps):.3g}], failures={failures}")


def test_criterion_10_reduced_fast_path(report):
    disagreements = []
    vertices = 0
    for g in K.enumerate_graphs(7, "normalized", c4_free=True):
        for x in g.vertices:
            vertices += 1
            full = C.curvature(g, x).k >= -C.CD_TOL
            fast = C.reduced_c4free_check(g, x).holds
            if full != fast:
                disagreements.append((formats.to_graph6(g), x))
    report(10, not disagreements, f"{vertices} vertices, disagreements={disagreements}")


def test_criterion_11_regular_correspondence(report):
    graphs = {"C5": F.cycle(5), "C6": F.cycle(6), "K4": F.complete(4), "K5": F.complete(5),
              "Q3": F.hypercube(3), "Petersen": F.petersen()}
    worst = 0.0
    for g in graphs.values():
        gn = g.with_preset("normalized")
        for x in g.vertices:
            d = G.degree(g, x)
            worst = max(worst, abs(C.curvature(gn, x).k * d - C.curvature(g, x).k))
    report(11, worst <= TOL, f"{len(graphs)} graphs, worst gap {worst:.3g}")


def test_criterion_12_format_fidelity(report):
    failures = []
    count = 0
    for key in K.enumerate_graph6(7, connected=False):
        count += 1
        g = formats.from_graph6(key)
        if formats.to_graph6(g) != key:
            failures.append(("graph6", key))
        h = formats.parse_edgelist(formats.format_edgelist(g))
        if h != g or K.canonical_form(h) != key:
            failures.append(("edgelist", key))
    rng = np.random.default_rng(1212)
    for _ in range(200):
        g = random_graph(rng, 10)
        text = formats.format_edgelist(g)
        h = formats.parse_edgelist(text, g.preset)
        if h != g or formats.format_edgelist(h) != text:
            failures.append(("weighted edgelist", text))
    report(12, not failures, f"{count} enumerated graphs + 200 weighted edge lists, failures={len(failures)}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
