"""Extremal and near-extremal graph constructions.

* layered joins of edgeless graphs, realising a distance-degree sequence;
* the palindromic layered join used as a proximity lower-bound example;
* polarity graphs over GF(q), their pruned form H_q' and chains of H_q'.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .gf import GF, field
from .graph import (Graph, bfs, diameter, is_c4_free, is_connected, min_degree)


class ConstructionError(ValueError):
    """Bad parameters, or a construction that failed its own validation."""


def layered_join(seq) -> Graph:
    """Join of edgeless layers of the given sizes; only consecutive layers touch."""
    seq = list(seq)
    if not seq or any(x < 1 for x in seq):
        raise ConstructionError("layered_join needs a nonempty sequence of positive sizes")
    starts = [0]
    for x in seq:
        starts.append(starts[-1] + x)
    edges = []
    for i in range(len(seq) - 1):
        for a in range(starts[i], starts[i + 1]):
            for b in range(starts[i + 1], starts[i + 2]):
                edges.append((a, b))
    return Graph.from_edges(starts[-1], edges)


def layer_of(seq) -> list[int]:
    """Layer index of every vertex of ``layered_join(seq)``."""
    return [i for i, x in enumerate(seq) for _ in range(x)]


def palindrome_sequence(k: int, delta: int) -> list[int]:
    if k < 2 or k % 2:
        raise ConstructionError("k must be even and >= 2")
    if delta < 3:
        raise ConstructionError("delta must be >= 3")
    return ([1, delta, delta - 1, 1]
            + [1, delta - 1, delta - 1, 1] * (k - 2)
            + [1, delta - 1, delta, 1])


def palindrome_graph(k: int, delta: int) -> Graph:
    return layered_join(palindrome_sequence(k, delta))


# -- projective plane over GF(q) -------------------------------------------


def projective_points(F: GF) -> list[tuple[int, int, int]]:
    """Canonical representatives (first nonzero coordinate 1), sorted."""
    pts = []
    for v in product(F.elements, repeat=3):
        nz = next((c for c in v if c), None)
        if nz == 1:
            pts.append(v)
    return pts


def normalize(F: GF, v) -> tuple[int, int, int]:
    nz = next((c for c in v if c), None)
    if nz is None:
        raise ConstructionError("zero vector is not a projective point")
    s = F.inv(nz)
    return tuple(F.mul(s, c) for c in v)


def self_orthogonal(F: GF, v) -> bool:
    return F.dot(v, v) == 0


def polarity_graph(q: int) -> Graph:
    """Points of PG(2, q), adjacent when orthogonal (no loops at absolute points)."""
    F = field(q)
    pts = projective_points(F)
    edges = [(i, j) for i in range(len(pts)) for j in range(i + 1, len(pts))
             if F.dot(pts[i], pts[j]) == 0]
    return Graph.from_edges(len(pts), edges)


@dataclass(frozen=True)
class PrunedPolarity:
    graph: Graph
    u: int
    v: int
    q: int
    z_point: tuple  # the deleted absolute point
    matching: tuple  # removed edges, in new vertex ids

    def annotations(self) -> list[str]:
        return [f"u {self.u}", f"v {self.v}"]


def pruned_polarity_graph(q: int, validate: bool = True) -> PrunedPolarity:
    """H_q minus an absolute point z and the matching between N(u)-z and N(v)-z."""
    if q < 2:
        raise ConstructionError("q must be >= 2")
    F = field(q)
    pts = projective_points(F)
    H = polarity_graph(q)
    z = next(i for i, p in enumerate(pts) if self_orthogonal(F, p))
    u, v = H.adj[z][:2]
    if self_orthogonal(F, pts[u]) or self_orthogonal(F, pts[v]) or H.has_edge(u, v):
        raise ConstructionError(f"neighbours of z in H_{q} are not as expected")
    Nu = set(H.adj[u]) - {z}
    Nv = set(H.adj[v]) - {z}
    M = sorted((min(a, b), max(a, b)) for a in Nu for b in H.adj[a] if b in Nv)
    G, relabel = H.remove_vertex(z)
    keep = G.edges - {(relabel[a], relabel[b]) for a, b in M}
    G = Graph(G.n, keep)
    res = PrunedPolarity(G, relabel[u], relabel[v], q, pts[z],
                         tuple((relabel[a], relabel[b]) for a, b in M))
    # q = 2 lies outside the theorem range; H_2' is not even connected
    if validate and q > 2:
        _validate_pruned(res, Nu, Nv, M)
    return res


def _validate_pruned(res: PrunedPolarity, Nu, Nv, M) -> None:
    q, G = res.q, res.graph
    problems = []
    left = [a for a, _ in M] if all(a in Nu for a, _ in M) else None
    ends = {x for e in M for x in e}
    if len(M) != len(Nu) or len(Nu) != len(Nv) or ends != (Nu | Nv):
        problems.append(f"M is not a perfect matching between N(u)-z and N(v)-z (|M|={len(M)})")
    if left is not None and len(set(left)) != len(left):
        problems.append("M repeats a vertex")
    if G.n != q * q + q:
        problems.append(f"order {G.n} != q^2+q")
    if min_degree(G) != q - 1:
        problems.append(f"min degree {min_degree(G)} != q-1")
    if not is_connected(G):
        problems.append("disconnected")
    else:
        if diameter(G) != 4:
            problems.append(f"diameter {diameter(G)} != 4")
        if bfs(G, res.u)[res.v] != 4:
            problems.append("d(u, v) != 4")
    if not is_c4_free(G):
        problems.append("contains C4")
    if problems:
        raise ConstructionError(f"H_{q}' validation failed: " + "; ".join(problems))


def chain_graph(k: int, q: int) -> Graph:
    """k copies of H_q' joined in series by the edges v_i u_{i+1}."""
    if k < 2:
        raise ConstructionError("k must be >= 2")
    base = pruned_polarity_graph(q)
    size = base.graph.n
    edges = []
    for i in range(k):
        off = i * size
        edges.extend((a + off, b + off) for a, b in base.graph.edges)
        if i + 1 < k:
            edges.append((base.v + off, base.u + off + size))
    return Graph.from_edges(k * size, edges)


def chain_terminals(k: int, q: int) -> list[tuple[int, int]]:
    base = pruned_polarity_graph(q)
    size = base.graph.n
    return [(base.u + i * size, base.v + i * size) for i in range(k)]
