"""Simple undirected graphs and the BFS distance machinery built on them.

Every metric here is exact: total distances are integers and averaged
quantities are returned as :class:`fractions.Fraction`.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

log = logging.getLogger(__name__)

UNREACHABLE = -1

# Thresholds of the relatedness predicate; fixed, not configurable.
RELATED_DEPTH = 9
RELATED_RADIUS = 4


class GraphError(ValueError):
    """Invalid graph data or an operation whose precondition fails."""


class DisconnectedGraphError(GraphError):
    pass


class EdgeListParseError(GraphError):
    def __init__(self, lineno: int, line: str, reason: str):
        super().__init__(f"line {lineno}: {reason}: {line.strip()!r}")
        self.lineno = lineno


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0 .. vertex_count-1``."""

    vertex_count: int
    edges: frozenset = frozenset()
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge ({u}, {v}) out of range")
            norm.add((min(u, v), max(u, v)))
        nbrs = [[] for _ in range(self.vertex_count)]
        for u, v in norm:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(tuple(sorted(a)) for a in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
        return cls(n, frozenset(seen))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def remove_vertex(self, z: int) -> tuple["Graph", list[int]]:
        """Delete ``z``; returns the new graph and the old->new id map (-1 for z)."""
        relabel = [i if i < z else i - 1 for i in range(self.n)]
        relabel[z] = -1
        edges = [(relabel[u], relabel[v]) for u, v in self.edges if z not in (u, v)]
        return Graph.from_edges(self.n - 1, edges), relabel


# -- constructors for small named graphs ---------------------------------


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


# -- edge-list format ------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` comments and an optional ``n <count>`` header."""
    n_header: Optional[int] = None
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise EdgeListParseError(lineno, line, "malformed header")
            if n_header is not None or pairs:
                raise EdgeListParseError(lineno, line, "header must come first")
            n_header = int(parts[1])
            continue
        if len(parts) != 2:
            raise EdgeListParseError(lineno, line, "expected two vertex ids")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, line, "non-integer vertex id") from None
        if u < 0 or v < 0:
            raise EdgeListParseError(lineno, line, "negative vertex id")
        if u == v:
            raise EdgeListParseError(lineno, line, "self-loop")
        if n_header is not None and max(u, v) >= n_header:
            raise EdgeListParseError(lineno, line, "vertex id exceeds header count")
        pairs.append((lineno, line, u, v))
    seen = set()
    for lineno, line, u, v in pairs:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise EdgeListParseError(lineno, line, "duplicate edge")
        seen.add(key)
    if n_header is None:
        n_header = 1 + max((max(k) for k in seen), default=-1)
    return Graph(n_header, frozenset(seen))


def read_edge_list(path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def format_edge_list(graph: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"n {graph.n}")
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"


# -- BFS and distances -----------------------------------------------------


def bfs(graph: Graph, source: int) -> list[int]:
    """Shortest-path distances from ``source``; ``UNREACHABLE`` where none."""
    if not 0 <= source < graph.n:
        raise GraphError(f"invalid source vertex {source}")
    dist = [UNREACHABLE] * graph.n
    dist[source] = 0
    queue = deque([source])
    adj = graph.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du
                queue.append(w)
    return dist


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return UNREACHABLE not in bfs(graph, 0)


def _require_connected(graph: Graph, dist: Optional[list[int]] = None) -> None:
    if dist is None:
        dist = bfs(graph, 0) if graph.n else []
    if UNREACHABLE in dist:
        raise DisconnectedGraphError("graph is disconnected")


def distance_degree(graph: Graph, v: int) -> list[int]:
    """Counts ``(n_0, ..., n_d)`` of vertices at each distance from ``v``."""
    dist = bfs(graph, v)
    _require_connected(graph, dist)
    counts = [0] * (max(dist) + 1)
    for d in dist:
        counts[d] += 1
    return counts


def total_distance(graph: Graph, v: int) -> int:
    if graph.n < 2:
        raise GraphError("need at least 2 vertices")
    dist = bfs(graph, v)
    _require_connected(graph, dist)
    return sum(dist)


def avg_distance(graph: Graph, v: int) -> Fraction:
    return Fraction(total_distance(graph, v), graph.n - 1)


def eccentricity(graph: Graph, v: int) -> int:
    dist = bfs(graph, v)
    _require_connected(graph, dist)
    return max(dist)


class DistanceTable:
    """All-pairs BFS, computed once and shared by the invariant queries."""

    def __init__(self, graph: Graph):
        if graph.n < 2:
            raise GraphError("need at least 2 vertices")
        self.graph = graph
        self.rows = [bfs(graph, v) for v in range(graph.n)]
        _require_connected(graph, self.rows[0])
        self.totals = [sum(r) for r in self.rows]
        self.ecc = [max(r) for r in self.rows]

    def proximity(self) -> Fraction:
        return Fraction(min(self.totals), self.graph.n - 1)

    def remoteness(self) -> Fraction:
        return Fraction(max(self.totals), self.graph.n - 1)

    def radius(self) -> int:
        return min(self.ecc)

    def diameter(self) -> int:
        return max(self.ecc)

    def centers(self) -> list[int]:
        r = self.radius()
        return [v for v, e in enumerate(self.ecc) if e == r]

    def distance_degree(self, v: int) -> list[int]:
        counts = [0] * (self.ecc[v] + 1)
        for d in self.rows[v]:
            counts[d] += 1
        return counts


def proximity(graph: Graph) -> Fraction:
    return DistanceTable(graph).proximity()


def remoteness(graph: Graph) -> Fraction:
    return DistanceTable(graph).remoteness()


def radius(graph: Graph) -> int:
    return DistanceTable(graph).radius()


def diameter(graph: Graph) -> int:
    return DistanceTable(graph).diameter()


def center_vertices(graph: Graph) -> list[int]:
    return DistanceTable(graph).centers()


# -- local structure -------------------------------------------------------


def min_degree(graph: Graph) -> int:
    return min((len(a) for a in graph.adj), default=0)


def is_triangle_free(graph: Graph) -> bool:
    adj_sets = [set(a) for a in graph.adj]
    return all(adj_sets[u].isdisjoint(adj_sets[v]) for u, v in graph.edges)


def is_c4_free(graph: Graph) -> bool:
    """No pair of distinct vertices has two common neighbours."""
    seen = set()
    for w in range(graph.n):
        nb = graph.adj[w]
        for i, a in enumerate(nb):
            for b in nb[i + 1:]:
                if (a, b) in seen:
                    return False
                seen.add((a, b))
    return True


def ball2_size(graph: Graph, v: int) -> int:
    ball = {v}
    for w in graph.adj[v]:
        ball.add(w)
        ball.update(graph.adj[w])
    return len(ball)


# -- distance-preserving spanning trees and relatedness ----------------------


@dataclass(frozen=True)
class SpanningTree:
    root: int
    parent: tuple  # parent[root] is None
    depth: tuple

    def path_to_root(self, v: int) -> list[int]:
        out = [v]
        while self.parent[v] is not None:
            v = self.parent[v]
            out.append(v)
        return out


def bfs_tree(graph: Graph, root: int) -> SpanningTree:
    """BFS tree; each vertex hangs off its lowest-id neighbour one layer up."""
    dist = bfs(graph, root)
    _require_connected(graph, dist)
    parent: list[Optional[int]] = [None] * graph.n
    for v in range(graph.n):
        if v == root:
            continue
        parent[v] = min(w for w in graph.adj[v] if dist[w] == dist[v] - 1)
    tree = SpanningTree(root, tuple(parent), tuple(dist))
    _check_tree(graph, tree, dist)
    return tree


def _check_tree(graph: Graph, tree: SpanningTree, dist: list[int]) -> None:
    links = sum(p is not None for p in tree.parent)
    if links != graph.n - 1:
        raise AssertionError("spanning tree has wrong number of links")
    for v in range(graph.n):
        if len(tree.path_to_root(v)) - 1 != dist[v]:
            raise AssertionError(f"tree distance to {v} differs from graph distance")


def _deep_path(tree: SpanningTree, v: int) -> list[int]:
    return [x for x in tree.path_to_root(v) if tree.depth[x] >= RELATED_DEPTH]


def _within(graph: Graph, sources: Iterable[int], radius: int) -> set[int]:
    """Vertices at distance <= radius from any source (multi-source BFS)."""
    dist = {s: 0 for s in sources}
    queue = deque(dist)
    while queue:
        u = queue.popleft()
        if dist[u] == radius:
            continue
        for w in graph.adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return set(dist)


def related(graph: Graph, tree: SpanningTree, v: int, w: int) -> bool:
    """Deep parts of the tree paths to ``v`` and ``w`` come within distance 4."""
    xs = _deep_path(tree, v)
    ys = _deep_path(tree, w)
    if not xs or not ys:
        return False
    near = _within(graph, xs, RELATED_RADIUS)
    return any(y in near for y in ys)


def unrelated_witness(graph: Graph, v0: int) -> Optional[int]:
    """Lowest-id vertex of ``N_{>=r-9}(v0)`` not related to ``v_r``.

    ``v_r`` is the lowest-id vertex at distance ``r = ecc(v0)``. ``None``
    means the search failed, which contradicts the relatedness lemma for
    this instance; that is logged as an error.
    """
    tree = bfs_tree(graph, v0)
    r = max(tree.depth)
    v_r = min(v for v in range(graph.n) if tree.depth[v] == r)
    near = _within(graph, _deep_path(tree, v_r), RELATED_RADIUS) if r >= RELATED_DEPTH else set()
    for w in range(graph.n):
        if tree.depth[w] < r - RELATED_DEPTH:
            continue
        if not any(y in near for y in _deep_path(tree, w)):
            return w
    log.error("no vertex unrelated to v_r=%d found (root %d, r=%d)", v_r, v0, r)
    return None
