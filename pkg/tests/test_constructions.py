from fractions import Fraction

import pytest

from proxrem.constructions import (ConstructionError, chain_graph, chain_terminals,
                                   layer_of, layered_join, palindrome_graph,
                                   palindrome_sequence, projective_points,
                                   pruned_polarity_graph, polarity_graph, self_orthogonal)
from proxrem.gf import field
from proxrem.graph import (DistanceTable, bfs, complete_graph, diameter, distance_degree,
                           is_c4_free, is_connected, is_triangle_free, min_degree,
                           path_graph, remoteness)
from proxrem.sequences import construct_x

# remoteness of G_{k,5} for k = 2..8, frozen from BFS
CHAIN5_RHO = {2: Fraction(276, 59), 3: Fraction(639, 89), 4: Fraction(1152, 119),
              5: Fraction(1815, 149), 6: Fraction(2628, 179), 7: Fraction(189, 11),
              8: Fraction(4704, 239)}
CHAIN5_RADIUS = {2: 5, 3: 7, 4: 10, 5: 12, 6: 15, 7: 17, 8: 20}


def test_layered_join_small():
    assert layered_join([1, 1, 1]) == path_graph(3)
    star = layered_join([1, 2])
    assert star.m == 2 and star.degree(0) == 2
    assert layer_of([1, 2]) == [0, 1, 1]
    with pytest.raises(ConstructionError):
        layered_join([1, 0, 2])


def test_layered_join_of_x18():
    G = layered_join(construct_x(18, 3))
    assert G.n == 18 and min_degree(G) == 3 and is_triangle_free(G)
    assert remoteness(G) == Fraction(85, 17)
    assert DistanceTable(G).totals[0] == 85


@pytest.mark.parametrize("seq", [[1, 3, 2, 4, 1], [1, 1, 1, 1], [1, 5, 2, 2, 7, 1]])
def test_layered_join_degree_and_distance_degree(seq):
    G = layered_join(seq)
    ext = [0] + list(seq) + [0]
    assert min_degree(G) == min(ext[i] + ext[i + 2] for i in range(len(seq)))
    assert is_triangle_free(G)
    assert distance_degree(G, 0) == seq


def test_palindrome_sequence():
    assert palindrome_sequence(2, 3) == [1, 3, 2, 1, 1, 2, 3, 1]
    for k in (2, 4, 6):
        s = palindrome_sequence(k, 3)
        assert s == s[::-1] and len(s) == 4 * k and sum(s) == 2 * (3 * k + 1)
    with pytest.raises(ConstructionError):
        palindrome_sequence(3, 3)


def test_palindrome_total_distance_formula():
    # sigma at the best vertex is exactly 2*delta*k^2 + 4k - 3
    for k in (2, 4, 6, 8):
        G = palindrome_graph(k, 3)
        assert min(DistanceTable(G).totals) == 6 * k * k + 4 * k - 3


def test_polarity_q2():
    F = field(2)
    pts = projective_points(F)
    H = polarity_graph(2)
    assert H.n == 7
    assert sorted(H.degree(v) for v in range(7)) == [2, 2, 2, 3, 3, 3, 3]
    absolute = {p for p in pts if self_orthogonal(F, p)}
    assert absolute == {(0, 1, 1), (1, 0, 1), (1, 1, 0)}
    assert all(H.degree(pts.index(p)) == 2 for p in absolute)
    i111 = pts.index((1, 1, 1))
    assert {pts[w] for w in H.adj[i111]} == absolute


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_polarity_structure(q):
    F = field(q)
    H = polarity_graph(q)
    assert H.n == q * q + q + 1
    assert set(H.degree(v) for v in range(H.n)) == {q, q + 1}
    assert is_c4_free(H)
    absolute = sum(self_orthogonal(F, p) for p in projective_points(F))
    assert absolute == q + 1
    assert sum(H.degree(v) == q for v in range(H.n)) == absolute


@pytest.mark.parametrize("q", [3, 4, 5, 7, 8, 9])
def test_pruned_polarity(q):
    res = pruned_polarity_graph(q)
    G = res.graph
    assert G.n == q * q + q
    assert min_degree(G) == q - 1
    assert diameter(G) == 4
    assert bfs(G, res.u)[res.v] == 4
    assert is_c4_free(G)
    # N(u)-z has q points, each matched to exactly one point of N(v)-z
    assert len(res.matching) == q
    ends = [x for e in res.matching for x in e]
    assert len(set(ends)) == 2 * q


def test_pruned_q2_is_relaxed():
    res = pruned_polarity_graph(2)
    assert res.graph.n == 6 and len(res.matching) == 2
    assert not is_connected(res.graph)


def test_pruned_annotations():
    res = pruned_polarity_graph(4)
    assert res.annotations() == [f"u {res.u}", f"v {res.v}"]


def test_chain_small():
    G = chain_graph(2, 3)
    assert G.n == 24 and is_connected(G) and is_c4_free(G)
    assert chain_graph(2, 2).n == 12
    with pytest.raises(ConstructionError):
        chain_graph(1, 3)


def test_chain_terminals_are_linked():
    G = chain_graph(3, 4)
    t = chain_terminals(3, 4)
    assert G.has_edge(t[0][1], t[1][0]) and G.has_edge(t[1][1], t[2][0])


def test_chain_q5_trend():
    prev_rho = prev_pi = 0
    for k in range(2, 9):
        G = chain_graph(k, 5)
        dt = DistanceTable(G)
        assert G.n == 30 * k and min_degree(G) == 4 and is_c4_free(G)
        assert dt.remoteness() == CHAIN5_RHO[k]
        assert dt.radius() == CHAIN5_RADIUS[k]
        assert dt.remoteness() >= prev_rho and dt.proximity() >= prev_pi
        prev_rho, prev_pi = dt.remoteness(), dt.proximity()


def test_chain_5_5():
    G = chain_graph(5, 5)
    assert G.n == 150 and min_degree(G) == 4


def test_complete_graph_has_triangles():
    assert not is_triangle_free(complete_graph(3))
