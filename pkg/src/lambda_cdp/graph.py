"""Simple undirected graphs: construction, parsing, traversal, coalescence.

Vertices are 1-indexed everywhere in the public interface. Graphs are
immutable after construction and safe to share between concurrent analyses;
connectivity is *not* a construction invariant — parsing accepts any simple
graph, and the analysis entry points check connectivity themselves.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from lambda_cdp.errors import DisconnectedGraphError, GraphParseError


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 1..n.

    ``edges`` holds sorted ``(u, v)`` pairs with ``u < v`` in lexicographic
    order; ``adj[v]`` lists the neighbours of vertex ``v`` in increasing
    order (``adj[0]`` is an unused placeholder).
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """Build a graph, rejecting loops, duplicates and bad indices."""
        if n < 1:
            raise ValueError(f"vertex count must be positive, got {n}")
        seen: set[tuple[int, int]] = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"loop edge at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
        ordered = tuple(sorted(seen))
        lists: list[list[int]] = [[] for _ in range(n + 1)]
        for u, v in ordered:
            lists[u].append(v)
            lists[v].append(u)
        return cls(n=n, edges=ordered, adj=tuple(tuple(sorted(a)) for a in lists))

    @cached_property
    def adjacency_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(a) for a in self.adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency_sets[u]


# ---------------------------------------------------------------------------
# Parsing and serialization
# ---------------------------------------------------------------------------

def parse_graph(text: str, fmt: str | None = None) -> Graph:
    """Parse a graph from edge-list or JSON text.

    ``fmt`` is ``"edge-list"``, ``"json"``, or None to sniff: input whose
    first non-blank character is ``{`` is treated as JSON.

    Edge-list format: ``#`` starts a comment line, the first significant
    line is ``n <count>``, every following significant line is ``e <u> <v>``.
    JSON format: an object with an integer ``n`` and an ``edges`` array of
    2-element integer arrays.
    """
    if fmt is None:
        fmt = "json" if text.lstrip().startswith("{") else "edge-list"
    if fmt == "json":
        return _parse_json(text)
    if fmt == "edge-list":
        return _parse_edge_list(text)
    raise ValueError(f"unknown graph format {fmt!r}")


def _parse_edge_list(text: str) -> Graph:
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise GraphParseError(
                    f"expected 'n <count>' header, got {line!r}", line_no)
            try:
                n = int(parts[1])
            except ValueError:
                raise GraphParseError(
                    f"vertex count {parts[1]!r} is not an integer", line_no) from None
            if n < 1:
                raise GraphParseError("vertex count must be positive", line_no)
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise GraphParseError(
                f"malformed line {line!r}, expected 'e <u> <v>'", line_no)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphParseError(
                f"edge endpoints in {line!r} are not integers", line_no) from None
        if not (1 <= u <= n) or not (1 <= v <= n):
            raise GraphParseError(
                f"vertex index out of range 1..{n} in {line!r}", line_no)
        if u == v:
            raise GraphParseError(f"loop edge at vertex {u}", line_no)
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise GraphParseError(f"duplicate edge {pair}", line_no)
        seen.add(pair)
        edges.append(pair)
    if n is None:
        raise GraphParseError("missing 'n <count>' header")
    return Graph.from_edges(n, edges)


def _parse_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise GraphParseError("top-level JSON value must be an object")
    n = obj.get("n")
    edges = obj.get("edges")
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphParseError("field 'n' must be an integer")
    if not isinstance(edges, list):
        raise GraphParseError("field 'edges' must be an array")
    pairs = []
    for e in edges:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise GraphParseError(f"edge {e!r} is not a 2-element integer array")
        pairs.append((e[0], e[1]))
    try:
        return Graph.from_edges(n, pairs)
    except ValueError as exc:
        raise GraphParseError(str(exc)) from exc


def serialize_graph(g: Graph) -> str:
    """Edge-list text for ``g``; edges emitted in lexicographic order."""
    lines = [f"n {g.n}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Traversal
# ---------------------------------------------------------------------------

def bfs_distances(g: Graph, source: int) -> list[int]:
    """Shortest-path lengths from ``source``; -1 marks unreachable vertices.

    The returned list is indexed by vertex (slot 0 is unused).
    """
    return _bfs(g, (source,))


def multi_source_distances(g: Graph, sources: Iterable[int]) -> list[int]:
    """Distance from each vertex to the nearest member of ``sources``.

    The returned list is indexed by vertex (slot 0 is unused); every source
    has distance 0. Raises ValueError on an empty source set and
    DisconnectedGraphError if some vertex cannot reach the sources.
    """
    src = sorted(set(sources))
    if not src:
        raise ValueError("source set is empty")
    for s in src:
        if not (1 <= s <= g.n):
            raise ValueError(f"source vertex {s} out of range 1..{g.n}")
    dist = _bfs(g, src)
    if any(dist[v] < 0 for v in g.vertices()):
        raise DisconnectedGraphError(
            "graph is disconnected: some vertex has no path to the source set")
    return dist


def _bfs(g: Graph, sources: Sequence[int]) -> list[int]:
    dist = [-1] * (g.n + 1)
    queue = deque()
    for s in sources:
        dist[s] = 0
        queue.append(s)
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for w in g.adj[v]:
            if dist[w] < 0:
                dist[w] = d
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    dist = _bfs(g, (1,))
    return all(dist[v] >= 0 for v in g.vertices())


def require_connected(g: Graph) -> None:
    """Raise DisconnectedGraphError unless ``g`` is connected."""
    if not is_connected(g):
        raise DisconnectedGraphError("graph is disconnected")


def is_bipartite(g: Graph) -> bool:
    """BFS 2-colorability; works for disconnected graphs as well."""
    color = [0] * (g.n + 1)
    for start in g.vertices():
        if color[start]:
            continue
        color[start] = 1
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if not color[w]:
                    color[w] = -color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def is_cut_vertex(g: Graph, v: int) -> bool:
    """True iff deleting ``v`` disconnects the remaining vertices."""
    if not (1 <= v <= g.n):
        raise ValueError(f"vertex {v} out of range 1..{g.n}")
    if g.n <= 2:
        return False
    start = 1 if v != 1 else 2
    dist = [-1] * (g.n + 1)
    dist[v] = -2  # barrier
    dist[start] = 0
    queue = deque([start])
    reached = 1
    while queue:
        x = queue.popleft()
        for w in g.adj[x]:
            if dist[w] == -1:
                dist[w] = dist[x] + 1
                reached += 1
                queue.append(w)
    return reached != g.n - 1


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def coalesce(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Glue ``g2`` onto ``g1`` by identifying vertex ``v2`` with ``v1``.

    ``g1`` keeps its labels; the remaining vertices of ``g2`` are relabelled
    n1+1 .. n1+n2-1 in increasing original order. Both inputs must be
    connected, so the result is connected with |E1| + |E2| edges.
    """
    if not (1 <= v1 <= g1.n):
        raise ValueError(f"vertex {v1} out of range 1..{g1.n}")
    if not (1 <= v2 <= g2.n):
        raise ValueError(f"vertex {v2} out of range 1..{g2.n}")
    require_connected(g1)
    require_connected(g2)
    relabel = {}
    nxt = g1.n
    for w in range(1, g2.n + 1):
        if w == v2:
            relabel[w] = v1
        else:
            nxt += 1
            relabel[w] = nxt
    edges = list(g1.edges)
    edges.extend((relabel[a], relabel[b]) for a, b in g2.edges)
    return Graph.from_edges(g1.n + g2.n - 1, edges)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced on ``vertices``, relabelled 1..m in sorted order."""
    verts = sorted(set(vertices))
    if not verts:
        raise ValueError("cannot induce a subgraph on an empty vertex set")
    index = {v: i + 1 for i, v in enumerate(verts)}
    keep = set(verts)
    edges = [(index[u], index[v]) for u, v in g.edges if u in keep and v in keep]
    return Graph.from_edges(len(verts), edges)


def make_path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def make_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs at least 1 vertex, got {n}")
    return Graph.from_edges(
        n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


# ---------------------------------------------------------------------------
# Partition helpers and the bundled example
# ---------------------------------------------------------------------------

def require_partition(blocks: Sequence[Iterable[int]], n: int) -> None:
    """Validate that ``blocks`` are disjoint and cover {1..n} exactly."""
    seen: set[int] = set()
    for b in blocks:
        for v in b:
            if not (1 <= v <= n):
                raise ValueError(f"vertex {v} out of range 1..{n}")
            if v in seen:
                raise ValueError(f"vertex {v} appears in more than one block")
            seen.add(v)
    if len(seen) != n:
        missing = sorted(set(range(1, n + 1)) - seen)
        raise ValueError(f"blocks do not cover vertices {missing}")


_CUBIC_EXAMPLE_EDGES = (
    (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1),
    (1, 7), (6, 7), (2, 8), (5, 8), (3, 9), (4, 9),
    (7, 10), (8, 11), (9, 12), (10, 11), (11, 12), (10, 12),
)


def cubic_example() -> Graph:
    """12-vertex cubic graph used throughout the docs and tests.

    A hexagon (1..6) carries three outer vertices: 7 caps the edge {1,6},
    9 caps {3,4}, and 8 bridges the opposite pair {2,5}; each outer vertex
    then hangs off one corner of the triangle 10-11-12. Its adjacency
    spectrum mixes simple eigenvalues with a triple eigenvalue -1, which
    makes it a compact exercise ground for core-vertex and distance
    partition analyses.
    """
    return Graph.from_edges(12, _CUBIC_EXAMPLE_EDGES)
