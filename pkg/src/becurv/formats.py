"""Edge-list text format and graph6.

Edge-list lines::

    e U V [W]   edge with optional weight (default 1)
    m U X       vertex measure (custom preset only)
    v U         vertex, possibly isolated
    # ...       comment

graph6 carries unweighted graphs only; decoded vertices are labelled
``"0" .. "n-1"``.
"""

from __future__ import annotations

from .graph import GraphError, WeightedGraph

MAX_GRAPH6_N = 68719476735


class FormatError(GraphError):
    pass


def _fmt_real(x: float) -> str:
    if x == int(x) and abs(x) < 1e15:
        return str(int(x))
    return repr(x)


def parse_edgelist(text: str, preset: str = "non-normalized") -> WeightedGraph:
    vertices: list[str] = []
    edges: list[tuple[str, str, float]] = []
    measure: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        kind, args = tok[0], tok[1:]
        try:
            if kind == "e" and len(args) in (2, 3):
                w = float(args[2]) if len(args) == 3 else 1.0
                edges.append((args[0], args[1], w))
            elif kind == "v" and len(args) == 1:
                vertices.append(args[0])
            elif kind == "m" and len(args) == 2:
                if preset != "custom":
                    raise FormatError(f"line {lineno}: 'm' lines require the custom preset")
                if args[0] in measure:
                    raise FormatError(f"line {lineno}: duplicate measure for {args[0]!r}")
                measure[args[0]] = float(args[1])
            else:
                raise FormatError(f"line {lineno}: cannot parse {raw.strip()!r}")
        except ValueError as exc:
            if isinstance(exc, FormatError):
                raise
            raise FormatError(f"line {lineno}: {exc}") from None
    if preset == "custom" and not measure:
        raise FormatError("custom preset needs 'm' lines")
    try:
        return WeightedGraph(vertices, edges, preset, measure if preset == "custom" else None)
    except FormatError:
        raise
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def format_edgelist(g: WeightedGraph) -> str:
    """Canonical edge-list text: isolated ``v`` lines, ``e`` lines, ``m`` lines."""
    lines = [f"v {v}" for v, nb in zip(g.vertices, g.nbrs) if not nb]
    for u, v, w in g.edges():
        lines.append(f"e {u} {v}" if w == 1.0 else f"e {u} {v} {_fmt_real(w)}")
    if g.preset == "custom":
        lines.extend(f"m {v} {_fmt_real(x)}" for v, x in zip(g.vertices, g.m))
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= MAX_GRAPH6_N:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise FormatError(f"graph6 cannot encode {n} vertices")


def _bits_to_chars(bits: list[int]) -> str:
    bits = bits + [0] * (-len(bits) % 6)
    out = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def graph6_from_masks(adj: list[int], order: list[int] | None = None) -> str:
    n = len(adj)
    if order is None:
        order = list(range(n))
    bits = [adj[order[i]] >> order[j] & 1 for j in range(1, n) for i in range(j)]
    return _encode_n(n) + _bits_to_chars(bits)


def to_graph6(g: WeightedGraph) -> str:
    if not g.is_unweighted():
        raise FormatError("graph6 only represents unweighted graphs")
    return graph6_from_masks(g.masks())


def decode_graph6(s: str) -> list[int]:
    """Adjacency bitmasks of a graph6 string (optional ``>>graph6<<`` header)."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise FormatError(f"invalid graph6 string {s!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) >= 4 and data[1] < 63:
        n, pos = (data[1] << 12) | (data[2] << 6) | data[3], 4
    elif len(data) >= 8 and data[1] == 63:
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
        if n > MAX_GRAPH6_N:
            raise FormatError("graph6 header exceeds the maximum vertex count")
    else:
        raise FormatError(f"truncated graph6 header in {s!r}")
    nbits = n * (n - 1) // 2
    body = data[pos:]
    if len(body) != -(-nbits // 6):
        raise FormatError(f"graph6 body has {len(body)} characters, expected {-(-nbits // 6)}")
    bits = [(c >> (5 - k)) & 1 for c in body for k in range(6)]
    if any(bits[nbits:]):
        raise FormatError("graph6 padding bits are not zero")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return adj


def from_graph6(s: str, preset: str = "non-normalized") -> WeightedGraph:
    return WeightedGraph.from_masks(decode_graph6(s), preset)


def read_graph(path: str, preset: str = "non-normalized") -> WeightedGraph:
    """Read an edge-list file, or a graph6 file if the name ends in ``.g6``."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if path.endswith(".g6"):
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise FormatError(f"{path}: expected exactly one graph6 line")
        if preset == "custom":
            raise FormatError("graph6 input cannot carry a custom measure")
        return from_graph6(lines[0], preset)
    return parse_edgelist(text, preset)
