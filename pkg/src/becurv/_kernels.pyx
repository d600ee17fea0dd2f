# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport sqrt, fabs

cnp.import_array()

ctypedef unsigned long long mask_t

DEF MAXN = 64


def jacobi_eigh(a, double tol=1e-14, int max_sweeps=100):
    cdef cnp.ndarray[cnp.float64_t, ndim=2] A = np.array(a, dtype=np.float64, order="C", copy=True)
    cdef Py_ssize_t n = A.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=2] V = np.eye(n)
    cdef double[:, ::1] am = A
    cdef double[:, ::1] vm = V
    cdef Py_ssize_t p, q, r
    cdef int sweep, sweeps = -1
    cdef double fro = 0.0, off, apq, theta, t, c, s, x, y, threshold

    for p in range(n):
        for q in range(n):
            fro += am[p, q] * am[p, q]
    threshold = tol * (1.0 + sqrt(fro))

    for sweep in range(max_sweeps + 1):
        off = 0.0
        for p in range(n):
            for q in range(n):
                if p != q:
                    off += am[p, q] * am[p, q]
        if sqrt(off) < threshold:
            sweeps = sweep
            break
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = am[p, q]
                if apq == 0.0:
                    continue
                theta = (am[q, q] - am[p, p]) / (2.0 * apq)
                if fabs(theta) > 1e150:
                    t = 0.5 / fabs(theta)
                else:
                    t = 1.0 / (fabs(theta) + sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    x = am[r, p]
                    y = am[r, q]
                    am[r, p] = c * x - s * y
                    am[r, q] = s * x + c * y
                for r in range(n):
                    x = am[p, r]
                    y = am[q, r]
                    am[p, r] = c * x - s * y
                    am[q, r] = s * x + c * y
                am[p, q] = 0.0
                am[q, p] = 0.0
                for r in range(n):
                    x = vm[r, p]
                    y = vm[r, q]
                    vm[r, p] = c * x - s * y
                    vm[r, q] = s * x + c * y

    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order], sweeps


cdef struct CanonState:
    int n
    mask_t adj[MAXN]
    int colors[MAXN]
    int slot_color[MAXN]
    int order[MAXN]
    int best_order[MAXN]
    mask_t cur[MAXN]
    mask_t best[MAXN]
    mask_t used


cdef bint _search(CanonState* st, int p, bint tied):
    cdef bint updated = False, child_tied, twin
    cdef int want = st.slot_color[p]
    cdef int tried[MAXN]
    cdef int ntried = 0
    cdef int v, u, i, k
    cdef mask_t col, av, one = 1
    for v in range(st.n):
        if st.colors[v] != want or (st.used >> v) & one:
            continue
        twin = False
        for k in range(ntried):
            u = tried[k]
            if (st.adj[u] & ~(one << v)) == (st.adj[v] & ~(one << u)):
                twin = True
                break
        if twin:
            continue
        tried[ntried] = v
        ntried += 1
        av = st.adj[v]
        col = 0
        for i in range(p):
            col = (col << one) | ((av >> st.order[i]) & one)
        if tied:
            if col > st.best[p]:
                continue
            child_tied = col == st.best[p]
        else:
            child_tied = False
        st.order[p] = v
        st.cur[p] = col
        if p == st.n - 1:
            if not child_tied:
                for i in range(st.n):
                    st.best[i] = st.cur[i]
                    st.best_order[i] = st.order[i]
                updated = True
                tied = True
            continue
        st.used |= one << v
        if _search(st, p + 1, child_tied):
            updated = True
            tied = True
        st.used &= ~(one << v)
    return updated


def canon_order(int n, adj, colors):
    if n <= 1:
        return list(range(n))
    if n > MAXN:
        raise ValueError("canon_order supports at most %d vertices" % MAXN)
    cdef CanonState st
    cdef int v, c, k, pos = 0
    st.n = n
    st.used = 0
    for v in range(n):
        st.adj[v] = <mask_t>adj[v]
        st.colors[v] = <int>colors[v]
        st.best_order[v] = v
        st.best[v] = 0
        st.cur[v] = 0
    ncol = max(colors) + 1
    for c in range(ncol):
        for v in range(n):
            if st.colors[v] == c:
                st.slot_color[pos] = c
                pos += 1
    _search(&st, 0, False)
    return [st.best_order[k] for k in range(n)]


cdef int _sig_cmp(int v, int w, int* colors, int* sig, int* deg, int stride):
    cdef int k, m
    if colors[v] != colors[w]:
        return -1 if colors[v] < colors[w] else 1
    m = deg[v] if deg[v] < deg[w] else deg[w]
    for k in range(m):
        if sig[v * stride + k] != sig[w * stride + k]:
            return -1 if sig[v * stride + k] < sig[w * stride + k] else 1
    if deg[v] != deg[w]:
        return -1 if deg[v] < deg[w] else 1
    return 0


def refine_colors(int n, adj):
    if n > MAXN:
        raise ValueError("refine_colors supports at most %d vertices" % MAXN)
    cdef mask_t masks[MAXN]
    cdef int colors[MAXN]
    cdef int deg[MAXN]
    cdef int sig[MAXN * MAXN]
    cdef int order[MAXN]
    cdef int newc[MAXN]
    cdef int v, u, k, j, t, ncolors = -1, count
    cdef mask_t one = 1
    for v in range(n):
        masks[v] = <mask_t>adj[v]
        deg[v] = 0
        for u in range(n):
            if (masks[v] >> u) & one:
                deg[v] += 1
        colors[v] = deg[v]
    while True:
        for v in range(n):
            k = 0
            for u in range(n):
                if (masks[v] >> u) & one:
                    # insertion into the sorted neighbour-colour row
                    j = k
                    while j > 0 and sig[v * MAXN + j - 1] > colors[u]:
                        sig[v * MAXN + j] = sig[v * MAXN + j - 1]
                        j -= 1
                    sig[v * MAXN + j] = colors[u]
                    k += 1
        for v in range(n):
            order[v] = v
        for k in range(1, n):
            t = order[k]
            j = k
            while j > 0 and _sig_cmp(order[j - 1], t, colors, sig, deg, MAXN) > 0:
                order[j] = order[j - 1]
                j -= 1
            order[j] = t
        count = 0
        for k in range(n):
            if k > 0 and _sig_cmp(order[k - 1], order[k], colors, sig, deg, MAXN) != 0:
                count += 1
            newc[order[k]] = count
        count += 1
        for v in range(n):
            colors[v] = newc[v]
        if count == ncolors:
            return [colors[v] for v in range(n)]
        ncolors = count
