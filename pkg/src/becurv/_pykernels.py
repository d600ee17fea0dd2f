"""Pure-Python implementations of the hot kernels.

These are the fallback used when the compiled ``_kernels`` extension is not
available, and they define the behaviour the extension must reproduce.
"""

from __future__ import annotations

import math

import numpy as np

MAX_SWEEPS = 100


def jacobi_eigh(a, tol=1e-14, max_sweeps=MAX_SWEEPS):
    """Cyclic Jacobi eigensolver for a dense symmetric matrix.

    Returns ``(w, v, sweeps)`` with eigenvalues ``w`` ascending and the
    eigenvectors in the columns of ``v``.  ``sweeps`` is ``-1`` when the
    off-diagonal mass did not fall below ``tol * (1 + ||a||_F)`` within
    ``max_sweeps`` sweeps.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    v = np.eye(n)
    threshold = tol * (1.0 + math.sqrt(float(np.sum(a * a))))
    offmask = 1.0 - np.eye(n)
    sweeps = -1
    for sweep in range(max_sweeps + 1):
        off = math.sqrt(float(np.sum((a * offmask) ** 2)))
        if off < threshold:
            sweeps = sweep
            break
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / abs(theta)
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # rows/columns p and q of a, then columns p and q of v
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order], sweeps


def refine_colors(n, adj):
    """Colour refinement seeded by degree.

    ``adj`` holds one neighbour bitmask per vertex.  The returned colour of
    each vertex is an isomorphism-invariant integer; colours are dense and
    ranked by the signature ``(colour, sorted neighbour colours)``.
    """
    nbrs = [[u for u in range(n) if adj[v] >> u & 1] for v in range(n)]
    colors = [len(nb) for nb in nbrs]
    ncolors = -1
    while True:
        sigs = [(colors[v], tuple(sorted([colors[u] for u in nbrs[v]]))) for v in range(n)]
        ranks = {sg: i for i, sg in enumerate(sorted(set(sigs)))}
        colors = [ranks[sg] for sg in sigs]
        if len(ranks) == ncolors:
            # signatures extend the previous colour, so an unchanged count
            # means the partition is stable
            return colors
        ncolors = len(ranks)


def canon_order(n, adj, colors):
    """Vertex order giving the lexicographically smallest graph6 bit string.

    Position ``p`` may only be filled from the colour class covering ``p``
    when classes are laid out in increasing colour order.  The search
    prunes on column prefixes and skips twins of already-tried vertices.
    """
    if n <= 1:
        return list(range(n))
    counts = [0] * (max(colors) + 1)
    for c in colors:
        counts[c] += 1
    slot_color = []
    for c, k in enumerate(counts):
        slot_color.extend([c] * k)

    order = [0] * n
    cur = [0] * n
    best = [0] * n
    best_order = list(range(n))
    used = [False] * n

    def search(p, tied):
        # tied: cur[:p] equals best[:p] and a best exists
        updated = False
        want = slot_color[p]
        tried = []
        for v in range(n):
            if colors[v] != want or used[v]:
                continue
            if any((adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)) for u in tried):
                continue
            tried.append(v)
            av = adj[v]
            col = 0
            for i in range(p):
                col = (col << 1) | (av >> order[i] & 1)
            if tied:
                if col > best[p]:
                    continue
                child_tied = col == best[p]
            else:
                child_tied = False
            order[p] = v
            cur[p] = col
            if p == n - 1:
                if not child_tied:
                    best[:] = cur
                    best_order[:] = order
                    updated = tied = True
                continue
            used[v] = True
            if search(p + 1, child_tied):
                updated = tied = True
            used[v] = False
        return updated

    search(0, False)
    return best_order
