import json
import random
from fractions import Fraction

import pytest

from proxrem.audit import (EXIT_CERTIFIED_VIOLATION, EXIT_DISCREPANCY, EXIT_OK, audit,
                           check_propositions, discrepancy_probe, is_reportable,
                           probe_rho_trianglefree)
from proxrem.constructions import chain_graph, layered_join, polarity_graph
from proxrem.corpus import (constructed_graphs, full_corpus, random_bipartite,
                            random_polarity_subgraph)
from proxrem.graph import (DisconnectedGraphError, DistanceTable, Graph,
                           complete_bipartite_graph, cycle_graph, path_graph,
                           unrelated_witness)
from proxrem.sequences import construct_x

K33 = complete_bipartite_graph(3, 3)


def test_props_k33_all_vertices():
    rep = check_propositions(K33, "all")
    a_rows = [r for r in rep.rows if r.check == "A"]
    assert len(a_rows) == 6 and all(r.passed for r in a_rows)
    assert rep.ok


def test_props_c5_family_b_not_applicable():
    rep = check_propositions(cycle_graph(5), "center")
    b_rows = [r for r in rep.rows if r.check == "B"]
    assert b_rows and all(not r.applicable for r in b_rows)
    assert rep.ok


def test_props_polarity_4():
    rep = check_propositions(polarity_graph(4), "all")
    assert rep.c4_free and rep.delta == 4
    assert {r.check for r in rep.rows} == {"C", "D", "ball2"}
    assert rep.ok


def test_props_single_vertex():
    rep = check_propositions(path_graph(5), "vertex", 0)
    assert {r.vertex for r in rep.rows} == {0}


def test_props_reject_disconnected():
    with pytest.raises(DisconnectedGraphError):
        check_propositions(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_audit_path_order_bound_tight():
    rep = audit(path_graph(10), "p10")
    assert rep.rho == 5
    assert rep.bound("rho_order").margin == 0
    assert rep.exit_code == EXIT_OK


def test_audit_gx18():
    rep = audit(layered_join(construct_x(18, 3)), "gx18")
    assert rep.triangle_free and rep.rho == Fraction(85, 17)
    row = rep.bound("rho_trianglefree_seq")
    assert row.applicable and row.margin == 0 and not row.violated
    assert not rep.certified_violations
    # the stated proximity theorem has no order restriction and is exceeded here
    assert [b.name for b in rep.discrepancies] == ["pi_trianglefree"]
    assert rep.exit_code == EXIT_DISCREPANCY


def test_audit_chain_3_5():
    rep = audit(chain_graph(3, 5), "chain35")
    assert rep.c4_free and rep.delta == 4
    for name in ("rho_c4free", "rho_c4free_seq", "pi_c4free"):
        row = rep.bound(name)
        assert row.applicable and row.margin > 0
    assert rep.exit_code == EXIT_OK


def test_audit_json_is_exact_and_ordered():
    rep = audit(cycle_graph(6), "c6")
    out = rep.to_json()
    assert list(out)[:4] == ["graph_id", "n", "m", "delta"]
    assert out["proximity"] == {"num": 9, "den": 5}
    text = json.dumps(out)
    assert json.loads(text) == out
    assert "." not in json.dumps([b["value"] for b in out["bounds"]])


def test_exit_code_on_certified_violation():
    rep = audit(path_graph(4), "p4")
    fake = type(rep.bounds[0])("fake", "rho", "sequence-certified", True, "",
                               Fraction(1), Fraction(-1))
    broken = type(rep)(**{**rep.__dict__, "bounds": rep.bounds + (fake,)})
    assert broken.exit_code == EXIT_CERTIFIED_VIOLATION


def test_rho_trianglefree_probe():
    assert probe_rho_trianglefree(33, 5)[0].probe == "rho_trianglefree_equality"
    d = probe_rho_trianglefree(21, 3)[0]
    assert d.probe == "rho_trianglefree_closed_form"
    assert d.direct == Fraction(121, 20) and d.stated == Fraction(117, 20)
    assert probe_rho_trianglefree(18, 3)[0].probe == "rho_trianglefree_slack"


def test_discrepancy_probe_contents():
    found = discrepancy_probe((3, 4))
    keys = {(d.probe, d.n, d.delta) for d in found if is_reportable(d)}
    assert ("pi_trianglefree_closed_form", 68, 4) in keys
    assert ("g_w_polynomial", 104, 4) in keys
    assert not any(p == "g_y_polynomial" for p, _, _ in keys)


def test_random_builders_respect_contracts():
    rng = random.Random(7)
    G = random_bipartite(rng, 6, 9, 3)
    assert min(G.degree(v) for v in range(G.n)) >= 3
    H = random_polarity_subgraph(rng, 4)
    assert H.n == 21 and H.m < polarity_graph(4).m


def test_constructed_corpus_ids_unique():
    ids = [gid for gid, _ in constructed_graphs()]
    assert len(ids) == len(set(ids))


def test_unrelated_witness_across_corpus():
    for gid, G in full_corpus():
        v0 = DistanceTable(G).centers()[0]
        assert unrelated_witness(G, v0) is not None, gid
