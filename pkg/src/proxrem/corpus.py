"""Test corpora: named constructions plus seeded random samples."""

from __future__ import annotations

import random
from typing import Iterator

from .constructions import (chain_graph, layered_join, palindrome_graph,
                            polarity_graph, pruned_polarity_graph)
from .graph import (Graph, complete_bipartite_graph, cycle_graph, is_connected,
                    min_degree, path_graph)
from .sequences import construct_x, construct_y, construct_z


def constructed_graphs() -> Iterator[tuple[str, Graph]]:
    for n in (2, 5, 10, 17):
        yield f"path-{n}", path_graph(n)
    for n in (5, 6, 9, 12):
        yield f"cycle-{n}", cycle_graph(n)
    yield "k33", complete_bipartite_graph(3, 3)
    yield "k44", complete_bipartite_graph(4, 4)
    for n in range(18, 27):
        yield f"gx-{n}-3", layered_join(construct_x(n, 3))
    for n in (24, 30):
        yield f"gx-{n}-4", layered_join(construct_x(n, 4))
    for n in range(16, 25):
        yield f"gz-{n}-3", layered_join(construct_z(n, 3))
    for n in (52, 60, 70):
        yield f"gy-{n}-3", layered_join(construct_y(n, 3))
    for k in range(2, 13, 2):
        yield f"palindrome-{k}-3", palindrome_graph(k, 3)
    for q in (2, 3, 4, 5, 7):
        yield f"polarity-{q}", polarity_graph(q)
    for q in (3, 4, 5, 7):
        yield f"pruned-{q}", pruned_polarity_graph(q).graph
    for k in range(2, 9):
        yield f"chain-{k}-5", chain_graph(k, 5)
    yield "chain-3-4", chain_graph(3, 4)


def random_bipartite(rng: random.Random, left: int, right: int, min_deg: int = 3,
                     extra: float = 0.05, tries: int = 100) -> Graph:
    """Connected bipartite graph with every degree >= min_deg."""
    if min_deg > min(left, right):
        raise ValueError("min_deg exceeds a side")
    n = left + right
    for _ in range(tries):
        edges = set()
        for a in range(left):
            for b in rng.sample(range(right), min_deg):
                edges.add((a, left + b))
        for b in range(right):
            deg = sum(1 for e in edges if e[1] == left + b)
            if deg < min_deg:
                have = {e[0] for e in edges if e[1] == left + b}
                for a in rng.sample([a for a in range(left) if a not in have], min_deg - deg):
                    edges.add((a, left + b))
        for a in range(left):
            for b in range(right):
                if rng.random() < extra:
                    edges.add((a, left + b))
        G = Graph(n, frozenset(edges))
        if is_connected(G) and min_degree(G) >= min_deg:
            return G
    raise RuntimeError("could not sample a connected bipartite graph")


def random_polarity_subgraph(rng: random.Random, q: int, drop: float = 0.15,
                             tries: int = 200) -> Graph:
    """H_q with each edge dropped independently, resampled until connected."""
    H = polarity_graph(q)
    for _ in range(tries):
        keep = frozenset(e for e in H.edges if rng.random() >= drop)
        G = Graph(H.n, keep)
        if is_connected(G):
            return G
    raise RuntimeError("could not sample a connected subgraph")


def sampled_graphs(seed: int = 20261015, bipartite: int = 100,
                   polarity: int = 80) -> Iterator[tuple[str, Graph]]:
    rng = random.Random(seed)
    for i in range(bipartite):
        left, right = rng.randint(4, 20), rng.randint(4, 20)
        yield f"bip-{i}", random_bipartite(rng, left, right, 3, extra=rng.choice((0.0, 0.05, 0.15)))
    qs = (3, 4, 5, 7)
    for i in range(polarity):
        q = qs[i % len(qs)]
        yield f"polsub-{q}-{i}", random_polarity_subgraph(rng, q, drop=rng.choice((0.05, 0.1, 0.2)))


def full_corpus(seed: int = 20261015) -> list[tuple[str, Graph]]:
    return list(constructed_graphs()) + list(sampled_graphs(seed))
