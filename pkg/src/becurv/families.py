"""Generators for the named graph families.

All generators return unweighted graphs on vertices ``"0" .. "n-1"``.
``star(n)`` has ``n`` vertices in total (centre ``"0"`` plus ``n - 1``
leaves); the four-vertex claw K_{1,3} is ``star(4)``.
"""

from __future__ import annotations

from .graph import GraphError, WeightedGraph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def path(k: int, preset: str = "non-normalized") -> WeightedGraph:
    _need(k >= 1, f"path needs k >= 1, got {k}")
    return WeightedGraph(range(k), [(i, i + 1) for i in range(k - 1)], preset)


def cycle(n: int, preset: str = "non-normalized") -> WeightedGraph:
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return WeightedGraph(range(n), [(i, (i + 1) % n) for i in range(n)], preset)


def star(n: int, preset: str = "non-normalized") -> WeightedGraph:
    _need(n >= 2, f"star needs n >= 2 vertices, got {n}")
    return WeightedGraph(range(n), [(0, i) for i in range(1, n)], preset)


def complete(n: int, preset: str = "non-normalized") -> WeightedGraph:
    _need(n >= 1, f"complete graph needs n >= 1, got {n}")
    return WeightedGraph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)], preset)


def hypercube(d: int, preset: str = "non-normalized") -> WeightedGraph:
    _need(d >= 1, f"hypercube needs d >= 1, got {d}")
    n = 1 << d
    edges = [(i, i ^ (1 << b)) for i in range(n) for b in range(d) if i < i ^ (1 << b)]
    return WeightedGraph(range(n), edges, preset)


# leaf pairs joined by star3_plus, in order: a-b, b-d, a-d
_STAR3_EXTRA = [(1, 2), (2, 3), (1, 3)]


def star3_plus(i: int, preset: str = "non-normalized") -> WeightedGraph:
    """K_{1,3} (centre 0, leaves 1, 2, 3) with ``i`` leaf-leaf edges added."""
    _need(1 <= i <= 3, f"star3_plus needs 1 <= i <= 3, got {i}")
    return WeightedGraph(range(4), [(0, 1), (0, 2), (0, 3)] + _STAR3_EXTRA[:i], preset)


def paw(preset: str = "non-normalized") -> WeightedGraph:
    """Triangle 0-1-2 with pendant vertex 3 attached to 0."""
    return WeightedGraph(range(4), [(0, 1), (0, 2), (1, 2), (0, 3)], preset)


def friendship(k: int, preset: str = "non-normalized") -> WeightedGraph:
    """``k`` triangles sharing vertex 0; triangle t uses leaves 2t+1, 2t+2."""
    _need(k >= 1, f"friendship needs k >= 1, got {k}")
    edges = []
    for t in range(k):
        a, b = 2 * t + 1, 2 * t + 2
        edges += [(0, a), (0, b), (a, b)]
    return WeightedGraph(range(2 * k + 1), edges, preset)


def petersen(preset: str = "non-normalized") -> WeightedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return WeightedGraph(range(10), outer + spokes + inner, preset)


# name -> (constructor, number of integer parameters)
FAMILIES = {
    "path": (path, 1),
    "cycle": (cycle, 1),
    "star": (star, 1),
    "star3-plus": (star3_plus, 1),
    "paw": (paw, 0),
    "friendship": (friendship, 1),
    "complete": (complete, 1),
    "hypercube": (hypercube, 1),
    "petersen": (petersen, 0),
}


def generate(name: str, params=(), preset: str = "non-normalized") -> WeightedGraph:
    try:
        fn, arity = FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}") from None
    if len(params) != arity:
        raise GraphError(f"family {name!r} takes {arity} integer parameter(s), got {len(params)}")
    return fn(*[int(p) for p in params], preset=preset)
