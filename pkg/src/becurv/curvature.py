"""Bakry-Emery curvature at a vertex.

At a vertex ``x`` the iterated form ``Gamma_2(f)(x)`` is a quadratic form in
the values of ``f`` on the 2-ball, and since all three operators ignore
constant shifts we may fix ``f(x) = 0``.  The curvature ``K(G, x; N)`` is the
smallest value of

    (Gamma_2(f)(x) - (Delta f(x))^2 / N) / Gamma(f)(x)

over ``f`` with ``Gamma(f)(x) > 0``.  ``Gamma(f)(x)`` only sees the first
sphere S1, and the second-sphere block of the form is a positive diagonal,
so the S2 coordinates are eliminated exactly by a Schur complement.  What
remains is an ordinary symmetric eigenproblem after a diagonal congruence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .graph import BallDecomposition, WeightedGraph, _spheres, _wdeg, is_c4_free
from .operators import VertexFunction, _gam, _gamma2_direct, _lap

#: sign threshold for "satisfies CD(K, N)" decisions on computed values
CD_TOL = 1e-9

INF = math.inf


class IsolatedVertex(Exception):
    """The vertex has no neighbours; every CD(K, N) condition is vacuous."""


def as_dimension(n) -> float:
    """Parse a dimension parameter: a positive real or ``inf``."""
    if isinstance(n, str):
        n = math.inf if n.strip().lower() in ("inf", "infinity", "∞") else float(n)
    n = float(n)
    if not n > 0.0:
        raise ValueError(f"dimension must be positive or inf, got {n!r}")
    return n


@dataclass(frozen=True)
class LocalForms:
    decomposition: BallDecomposition
    q2: np.ndarray
    gamma1: np.ndarray
    delta_vec: np.ndarray

    @property
    def n1(self) -> int:
        return len(self.decomposition.s1)


@dataclass(frozen=True)
class CurvatureResult:
    k: float
    witness: VertexFunction | None
    n_used: float
    vertex: str
    laplacian_preset: str


@dataclass(frozen=True)
class CDCheck:
    holds: bool
    violating_vertex: str | None = None
    witness: VertexFunction | None = None
    k: float = INF
    curvatures: dict = field(default_factory=dict, compare=False, repr=False)


@dataclass(frozen=True)
class ReducedCheck:
    holds: bool
    min_eigenvalue: float


def assemble_local_forms(g: WeightedGraph, x) -> LocalForms:
    """Matrices of Gamma_2, Gamma and Delta at ``x`` on the punctured 2-ball."""
    x = str(x)
    i = g.index[x]
    s1, s2 = _spheres(g, i)
    if not s1:
        raise IsolatedVertex(x)
    coords = s1 + s2
    pos = {v: k for k, v in enumerate(coords)}
    n = len(coords)
    r = len(s1)
    mx = g.m[i]
    dx = _wdeg(g, i)

    q2 = np.zeros((n, n))
    gamma1 = np.empty(r)
    delta = np.zeros(n)
    for a, y in enumerate(s1):
        mu_xy = g.w(i, y)
        base = mu_xy / (4.0 * mx * g.m[y])
        for z in g.nbrs[y]:
            c = base * g.w(y, z)
            # term c * (f(z) - 2 f(y))^2 with f(x) = 0
            q2[a, a] += 4.0 * c
            if z != i:
                b = pos[z]
                q2[b, b] += c
                q2[a, b] -= 2.0 * c
                q2[b, a] -= 2.0 * c
        delta[a] = mu_xy / mx
        gamma1[a] = mu_xy / (2.0 * mx)
        q2[a, a] -= 0.25 * (mu_xy / mx) * (dx + _wdeg(g, y))
    q2 += 0.5 * np.outer(delta, delta)
    bd = BallDecomposition(x, tuple(g.vertices[v] for v in s1), tuple(g.vertices[v] for v in s2))
    return LocalForms(bd, linalg.as_sym(q2), gamma1, delta[:r].copy())


def _reduce(forms: LocalForms, n_dim: float) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    r = forms.n1
    m = forms.q2.copy()
    if not math.isinf(n_dim):
        m[:r, :r] -= np.outer(forms.delta_vec, forms.delta_vec) / n_dim
    a, b = m[:r, :r], m[:r, r:]
    d = np.diag(m[r:, r:]).copy()
    off = m[r:, r:] - np.diag(d)
    if off.size and np.any(off != 0.0):
        raise AssertionError("second-sphere block of the local form is not diagonal")
    if d.size == 0:
        return a, b, d
    return linalg.schur_reduce(a, b, d), b, d


def curvature(g: WeightedGraph, x, n_dim=INF) -> CurvatureResult:
    """``K(G, x; N)`` with a minimizing function normalized to ``Gamma(f)(x) = 1``."""
    x = str(x)
    n_dim = as_dimension(n_dim)
    try:
        forms = assemble_local_forms(g, x)
    except IsolatedVertex:
        return CurvatureResult(INF, None, n_dim, x, g.preset)
    s, b, d = _reduce(forms, n_dim)
    w, v = linalg.eigen_sym(linalg.congruence_diag(s, forms.gamma1))
    vec = v[:, 0]
    lead = np.flatnonzero(np.abs(vec) > 1e-12)
    if lead.size and vec[lead[0]] < 0:
        vec = -vec
    u = vec / np.sqrt(forms.gamma1)
    f2 = -(b.T @ u) / d if d.size else np.zeros(0)
    bd = forms.decomposition
    values = {x: 0.0}
    values.update(zip(bd.s1, u.tolist()))
    values.update(zip(bd.s2, f2.tolist()))
    return CurvatureResult(float(w[0]), VertexFunction(values), n_dim, x, g.preset)


def curvature_profile(g: WeightedGraph, x, dims) -> list[CurvatureResult]:
    return [curvature(g, x, n) for n in dims]


def all_curvatures(g: WeightedGraph, n_dim=INF) -> dict[str, CurvatureResult]:
    return {v: curvature(g, v, n_dim) for v in g.vertices}


def min_curvature(g: WeightedGraph, n_dim=INF) -> CurvatureResult | None:
    """Result at a vertex of smallest curvature (first in vertex order on ties)."""
    best = None
    for v in g.vertices:
        res = curvature(g, v, n_dim)
        if best is None or res.k < best.k:
            best = res
    return best


def check_cd(g: WeightedGraph, k: float, n_dim=INF, tol: float = CD_TOL) -> CDCheck:
    """Whether every vertex satisfies CD(k, N), up to ``tol``."""
    results = all_curvatures(g, n_dim)
    worst = None
    for v in g.vertices:
        if worst is None or results[v].k < worst.k:
            worst = results[v]
    values = {v: r.k for v, r in results.items()}
    if worst is None or worst.k >= k - tol:
        return CDCheck(True, k=worst.k if worst else INF, curvatures=values)
    return CDCheck(False, worst.vertex, worst.witness, worst.k, values)


def reduced_c4free_matrix(g: WeightedGraph, x) -> np.ndarray:
    """S1-only form whose non-negativity is CD(0, inf) at ``x``.

    For an unweighted normalized C4-free graph every S2 vertex has a single
    S1 neighbour ``y``; choosing ``f(z) = 2 f(y)`` there kills the S2 terms.
    The form is ``4 d_x^2`` times ``Gamma_2`` restricted to that slice.
    """
    i = g.index[str(x)]
    s1 = list(g.nbrs[i])
    pos = {v: k for k, v in enumerate(s1)}
    r = len(s1)
    dx = len(s1)
    m = np.zeros((r, r))
    for a, y in enumerate(s1):
        ratio = dx / len(g.nbrs[y])
        for z in g.nbrs[y]:
            b = pos.get(z)
            if b is None:
                continue
            # ratio * (2 f(y) - f(z))^2
            m[a, a] += 4.0 * ratio
            m[b, b] += ratio
            m[a, b] -= 2.0 * ratio
            m[b, a] -= 2.0 * ratio
        m[a, a] += 4.0 * ratio - 2.0 * dx
    m += 2.0
    return m


def reduced_c4free_check(g: WeightedGraph, x, tol: float = CD_TOL) -> ReducedCheck:
    if g.preset != "normalized" or not g.is_unweighted():
        raise linalg.PreconditionError("reduced check needs an unweighted graph with the normalized preset")
    if not is_c4_free(g):
        raise linalg.PreconditionError("reduced check needs a C4-free graph")
    if not g.nbrs[g.index[str(x)]]:
        return ReducedCheck(True, INF)
    lam = linalg.min_eigenvalue(reduced_c4free_matrix(g, x))
    return ReducedCheck(lam >= -tol, lam)


def _ratio(g, fv, i, n_dim):
    den = _gam(g, fv, fv, i)
    if den < 1e-12:
        return INF
    num = _gamma2_direct(g, fv, i)
    if not math.isinf(n_dim):
        num -= _lap(g, fv, i) ** 2 / n_dim
    return num / den


def _line_quadratics(g, fv, i, c, n_dim):
    def parts(t):
        old = fv[c]
        fv[c] = t
        den = _gam(g, fv, fv, i)
        num = _gamma2_direct(g, fv, i)
        if not math.isinf(n_dim):
            num -= _lap(g, fv, i) ** 2 / n_dim
        fv[c] = old
        return num, den

    (n0, d0), (np1, dp1), (nm1, dm1) = parts(0.0), parts(1.0), parts(-1.0)
    num = ((np1 + nm1) / 2 - n0, (np1 - nm1) / 2, n0)
    den = ((dp1 + dm1) / 2 - d0, (dp1 - dm1) / 2, d0)
    return num, den


def _line_candidates(num, den):
    a, b, c = num
    d, e, h = den
    # stationary points of (a t^2 + b t + c) / (d t^2 + e t + h)
    qa, qb, qc = a * e - b * d, 2.0 * (a * h - c * d), b * h - c * e
    if abs(qa) < 1e-300:
        return [-qc / qb] if abs(qb) > 1e-300 else []
    disc = qb * qb - 4.0 * qa * qc
    if disc < 0:
        return []
    sq = math.sqrt(disc)
    return [(-qb + sq) / (2 * qa), (-qb - sq) / (2 * qa)]


def curvature_upper_bound_by_sampling(
    g: WeightedGraph, x, n_dim=INF, trials: int = 1000, seed=0, extra=(), passes: int = 20
) -> float:
    """Upper bound on ``K(G, x; N)`` from explicit test functions.

    Evaluates the curvature ratio through the operator definitions only:
    uniform samples on ``[-1, 1]`` per 2-ball coordinate, any ``extra``
    functions supplied by the caller, then coordinate descent from the best
    point.  Deterministic for a fixed seed.
    """
    x = str(x)
    n_dim = as_dimension(n_dim)
    i = g.index[x]
    s1, s2 = _spheres(g, i)
    coords = s1 + s2
    if not s1:
        return INF
    rng = np.random.default_rng(seed)
    nv = len(g)
    best, best_fv = INF, None
    for f in extra:
        fv = [f(v) - f(x) for v in g.vertices]
        val = _ratio(g, fv, i, n_dim)
        if val < best:
            best, best_fv = val, fv
    samples = rng.uniform(-1.0, 1.0, size=(trials, len(coords)))
    for row in samples:
        fv = [0.0] * nv
        for c, t in zip(coords, row):
            fv[c] = float(t)
        val = _ratio(g, fv, i, n_dim)
        if val < best:
            best, best_fv = val, fv
    if best_fv is None:
        return best
    fv = list(best_fv)
    for _ in range(passes):
        for c in coords:
            num, den = _line_quadratics(g, fv, i, c, n_dim)
            for t in _line_candidates(num, den):
                if not math.isfinite(t):
                    continue
                old = fv[c]
                fv[c] = t
                val = _ratio(g, fv, i, n_dim)
                if val < best:
                    best = val
                else:
                    fv[c] = old
    return best
