"""Weighted graphs and the structural queries used by the curvature code."""

from __future__ import annotations

import math
import re
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping

PRESETS = ("normalized", "non-normalized", "custom")

_CHUNK = re.compile(r"(\d+)")


def vertex_key(label: str):
    """Numeric-aware ordering key: ``"2" < "10"``, ``"a2" < "a10"``."""
    return tuple((0, int(t), "") if t.isdigit() else (1, 0, t) for t in _CHUNK.split(label) if t)


class GraphError(ValueError):
    pass


class WeightedGraph:
    """Finite simple undirected graph with edge weights and vertex measure.

    Vertices are strings kept in :func:`vertex_key` order.  The vertex measure
    follows the Laplacian preset: ``m_x = sum of incident weights`` for
    ``normalized``, ``m_x = 1`` for ``non-normalized``, and explicit values
    for ``custom``.  Instances are treated as immutable.
    """

    __slots__ = ("vertices", "index", "nbrs", "_w", "m", "preset")

    def __init__(
        self,
        vertices: Iterable = (),
        edges: Iterable = (),
        preset: str = "non-normalized",
        measure: Mapping | None = None,
    ):
        if preset not in PRESETS:
            raise GraphError(f"unknown Laplacian preset {preset!r}")
        labels = {str(v) for v in vertices}
        w: dict[tuple[str, str], float] = {}
        for e in edges:
            if len(e) == 2:
                u, v, wt = e[0], e[1], 1.0
            else:
                u, v, wt = e
            u, v, wt = str(u), str(v), float(wt)
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if not wt > 0.0 or math.isinf(wt):
                raise GraphError(f"edge {u}-{v} has non-positive or infinite weight {wt!r}")
            key = (u, v) if vertex_key(u) <= vertex_key(v) else (v, u)
            if key in w:
                raise GraphError(f"parallel edge {u}-{v}")
            w[key] = wt
            labels.update(key)
        if measure is not None:
            labels.update(str(v) for v in measure)

        self.vertices: tuple[str, ...] = tuple(sorted(labels, key=vertex_key))
        self.index = {v: i for i, v in enumerate(self.vertices)}
        nb: list[list[int]] = [[] for _ in self.vertices]
        self._w: dict[tuple[int, int], float] = {}
        for (u, v), wt in w.items():
            i, j = self.index[u], self.index[v]
            nb[i].append(j)
            nb[j].append(i)
            self._w[i, j] = self._w[j, i] = wt
        self.nbrs: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(x)) for x in nb)

        if preset == "custom":
            if measure is None:
                raise GraphError("custom preset requires a vertex measure")
            missing = [v for v in self.vertices if v not in {str(k) for k in measure}]
            if missing:
                raise GraphError(f"custom preset: no measure for vertices {missing}")
            mm = {str(k): float(x) for k, x in measure.items()}
            m = [mm[v] for v in self.vertices]
        else:
            if measure is not None:
                raise GraphError(f"vertex measure only allowed with the custom preset, not {preset!r}")
            if preset == "normalized":
                m = [sum(self._w[i, j] for j in self.nbrs[i]) or 1.0 for i in range(len(self.vertices))]
            else:
                m = [1.0] * len(self.vertices)
        for v, x in zip(self.vertices, m):
            if not x > 0.0 or math.isinf(x):
                raise GraphError(f"vertex {v!r} has non-positive measure {x!r}")
        self.m: tuple[float, ...] = tuple(m)
        self.preset = preset

    # construction helpers -------------------------------------------------

    @classmethod
    def from_masks(cls, adj: list[int], preset: str = "non-normalized") -> "WeightedGraph":
        n = len(adj)
        edges = [(i, j) for j in range(n) for i in range(j) if adj[i] >> j & 1]
        return cls(range(n), edges, preset)

    def with_preset(self, preset: str, measure: Mapping | None = None) -> "WeightedGraph":
        return WeightedGraph(self.vertices, self.edges(), preset, measure)

    def scaled(self, c: float) -> "WeightedGraph":
        """Same graph with every edge weight multiplied by ``c``."""
        measure = None
        if self.preset == "custom":
            measure = dict(zip(self.vertices, self.m))
        return WeightedGraph(self.vertices, [(u, v, c * w) for u, v, w in self.edges()], self.preset, measure)

    # queries --------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f"WeightedGraph(n={len(self)}, m={self.num_edges()}, preset={self.preset!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.edges() == other.edges()
            and self.m == other.m
            and self.preset == other.preset
        )

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self.edges()), self.preset))

    def num_edges(self) -> int:
        return len(self._w) // 2

    def edges(self) -> list[tuple[str, str, float]]:
        """Edges ``(u, v, w)`` with ``u`` before ``v``, in vertex order."""
        out = []
        for i, nb in enumerate(self.nbrs):
            for j in nb:
                if i < j:
                    out.append((self.vertices[i], self.vertices[j], self._w[i, j]))
        return out

    def neighbors(self, x: str) -> list[str]:
        return [self.vertices[j] for j in self.nbrs[self.index[str(x)]]]

    def has_edge(self, u: str, v: str) -> bool:
        return (self.index[str(u)], self.index[str(v)]) in self._w

    def weight(self, u: str, v: str) -> float:
        return self._w[self.index[str(u)], self.index[str(v)]]

    def w(self, i: int, j: int) -> float:
        return self._w[i, j]

    def measure(self, x: str) -> float:
        return self.m[self.index[str(x)]]

    def is_unweighted(self) -> bool:
        return all(w == 1.0 for w in self._w.values())

    def masks(self) -> list[int]:
        return [sum(1 << j for j in nb) for nb in self.nbrs]

    def is_connected(self) -> bool:
        n = len(self)
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for j in self.nbrs[stack.pop()]:
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == n


def degree(g: WeightedGraph, x) -> int:
    return len(g.nbrs[g.index[str(x)]])


def weighted_degree(g: WeightedGraph, x) -> float:
    """``D_x = (1/m_x) * sum_{y~x} mu_xy``; 0 at an isolated vertex."""
    i = g.index[str(x)]
    return _wdeg(g, i)


def _wdeg(g: WeightedGraph, i: int) -> float:
    return sum(g.w(i, j) for j in g.nbrs[i]) / g.m[i]


def max_degree(g: WeightedGraph) -> int:
    return max((len(nb) for nb in g.nbrs), default=0)


def min_degree(g: WeightedGraph) -> int:
    return min((len(nb) for nb in g.nbrs), default=0)


@dataclass(frozen=True)
class BallDecomposition:
    """Spheres of radius 1 and 2 around ``center``.

    Coordinates are indexed S1 first, then S2, each in vertex order.
    """

    center: str
    s1: tuple[str, ...]
    s2: tuple[str, ...]

    @property
    def coords(self) -> tuple[str, ...]:
        return self.s1 + self.s2

    @property
    def index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.coords)}


def _spheres(g: WeightedGraph, i: int) -> tuple[list[int], list[int]]:
    s1 = list(g.nbrs[i])
    inner = set(s1)
    inner.add(i)
    s2 = sorted({z for y in s1 for z in g.nbrs[y] if z not in inner})
    return s1, s2


def ball_decomposition(g: WeightedGraph, x) -> BallDecomposition:
    x = str(x)
    if x not in g.index:
        raise KeyError(f"unknown vertex {x!r}")
    s1, s2 = _spheres(g, g.index[x])
    return BallDecomposition(x, tuple(g.vertices[j] for j in s1), tuple(g.vertices[j] for j in s2))


def _bfs_dist(g: WeightedGraph, src: int, dst: int, skip: tuple[int, int]) -> float:
    a, b = skip
    dist = {src: 0}
    q = deque([src])
    while q:
        u = q.popleft()
        for v in g.nbrs[u]:
            if (u == a and v == b) or (u == b and v == a) or v in dist:
                continue
            dist[v] = dist[u] + 1
            if v == dst:
                return dist[v]
            q.append(v)
    return math.inf


def girth_at(g: WeightedGraph, x) -> float:
    """Length of the shortest cycle through ``x``; ``math.inf`` if none."""
    i = g.index[str(x)]
    best = math.inf
    for j in g.nbrs[i]:
        best = min(best, 1 + _bfs_dist(g, i, j, (i, j)))
    return best


def girth(g: WeightedGraph) -> float:
    return min((girth_at(g, v) for v in g.vertices), default=math.inf)


def is_c4_free(g: WeightedGraph) -> bool:
    """No two distinct vertices share two or more common neighbours."""
    seen: set[tuple[int, int]] = set()
    for nb in g.nbrs:
        for pair in combinations(nb, 2):
            if pair in seen:
                return False
            seen.add(pair)
    return True


def has_triangle_through(g: WeightedGraph, x) -> bool:
    i = g.index[str(x)]
    nb = set(g.nbrs[i])
    return any(nb.intersection(g.nbrs[j]) for j in g.nbrs[i])


def is_triangle_free(g: WeightedGraph) -> bool:
    return not any(has_triangle_through(g, v) for v in g.vertices)


@dataclass(frozen=True)
class BallComponent:
    vertices_in_s1: int
    vertices_in_s2: int
    members: tuple[str, ...]

    @property
    def r(self) -> int:
        return self.vertices_in_s1

    @property
    def s(self) -> int:
        return self.vertices_in_s2


def punctured_ball_components(g: WeightedGraph, x) -> list[BallComponent]:
    """Components of the punctured 2-ball around ``x``.

    Only edges inside S1 and edges between S1 and S2 are used; edges inside
    S2 are ignored.  Components are ordered by their first member.
    """
    i = g.index[str(x)]
    s1, s2 = _spheres(g, i)
    in1, in2 = set(s1), set(s2)
    parent = {v: v for v in s1 + s2}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for y in s1:
        for z in g.nbrs[y]:
            if z in in1 or z in in2:
                a, b = find(y), find(z)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in sorted(parent):
        groups.setdefault(find(v), []).append(v)
    out = []
    for root in sorted(groups):
        mem = groups[root]
        out.append(
            BallComponent(
                sum(1 for v in mem if v in in1),
                sum(1 for v in mem if v in in2),
                tuple(g.vertices[v] for v in mem),
            )
        )
    return out


def induced_cycle_lengths(g: WeightedGraph, k_min: int = 3) -> set[int]:
    """Lengths ``k >= k_min`` of induced cycles, by exhaustive subset search."""
    n = len(g)
    if n > 12:
        raise GraphError("induced cycle search is limited to 12 vertices")
    adj = g.masks()
    found = set()
    for k in range(max(k_min, 3), n + 1):
        for sub in combinations(range(n), k):
            mask = sum(1 << v for v in sub)
            if all(bin(adj[v] & mask).count("1") == 2 for v in sub) and _mask_connected(adj, mask, sub[0]):
                found.add(k)
                break
    return found


def _mask_connected(adj: list[int], mask: int, start: int) -> bool:
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask
