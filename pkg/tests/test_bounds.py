from fractions import Fraction

import pytest

from proxrem.bounds import (CATALOG, CERTIFIED, CLOSED_FORM, GraphFacts, bound_pi_c4free,
                            bound_pi_mindeg, bound_pi_order, bound_pi_trianglefree,
                            bound_rho_c4free, bound_rho_mindeg, bound_rho_order,
                            bound_rho_trianglefree, catalog_entry, certified_pi_c4free,
                            certified_pi_trianglefree, certified_rho_c4free,
                            certified_rho_trianglefree, delta_star, oracle_bound,
                            stated_g_w, stated_g_y, stated_g_z)
from proxrem.sequences import construct_w, construct_y, construct_z, g


def test_order_bounds():
    assert bound_rho_order(5) == Fraction(5, 2)
    assert bound_pi_order(5) == Fraction(3, 2)
    assert bound_pi_order(6) == Fraction(9, 5)
    assert bound_rho_order(2) == 1
    with pytest.raises(ValueError):
        bound_rho_order(1)


def test_mindeg_bounds():
    assert bound_rho_mindeg(6, 3) == Fraction(23, 4)
    assert bound_rho_mindeg(8, 2) == Fraction(15, 2)
    assert bound_pi_mindeg(8, 2) == 5
    with pytest.raises(ValueError):
        bound_pi_mindeg(8, 1)


def test_rho_trianglefree():
    assert bound_rho_trianglefree(18, 3) == Fraction(99, 17)
    assert certified_rho_trianglefree(18, 3) == Fraction(85, 17)
    assert bound_rho_trianglefree(24, 3) == 8 - Fraction(3, 23)
    for d in (3, 4, 5):
        vals = [bound_rho_trianglefree(n, d) + Fraction(d, n - 1) for n in range(6 * d, 12 * d)]
        assert vals == sorted(vals)


def test_pi_trianglefree():
    cf = bound_pi_trianglefree(68, 4)
    assert cf == Fraction(17, 2) + 2 - Fraction(5, 8) - Fraction(301, 536)
    assert round(float(cf), 4) == 9.3134
    assert certified_pi_trianglefree(68, 4) == Fraction(905, 67)
    assert bound_pi_trianglefree(52, 3) == (Fraction(52, 6) + 2 - Fraction(5, 6)
                                            - Fraction(189 - 24 - 3, 6 * 51))


def test_c4free_bounds():
    assert bound_rho_c4free(16, 3) == 7
    assert certified_rho_c4free(16, 3) == Fraction(59, 15)
    assert bound_rho_c4free(150, 4) == Fraction(59, 2)
    assert bound_pi_c4free(104, 4) == Fraction(467, 32)
    assert certified_pi_c4free(104, 4) == Fraction(1450, 103)
    assert bound_pi_c4free(16, 3) == Fraction(227, 32)


def test_published_g_expressions():
    # the g(Y) polynomial agrees with the direct sum wherever it applies
    for n in range(64, 140):
        assert stated_g_y(n, 4) == g(construct_y(n, 4))
    assert stated_g_y(68, 4) == 905
    # the g(W) polynomial does not
    assert stated_g_w(104, 4) == 1170 and g(construct_w(104, 4)) == 1450
    # the g(Z) expression agrees only when n mod delta* is 0 or 1
    for n in range(16, 80):
        agree = stated_g_z(n, 3) == g(construct_z(n, 3))
        assert agree == (n % delta_star(3) in (0, 1))


def test_certified_z_stays_below_closed_form():
    for d in (3, 4, 5):
        ds = delta_star(d)
        for n in range(2 * ds, 2 * ds + 80):
            assert certified_rho_c4free(n, d) <= bound_rho_c4free(n, d)


def test_oracle_bound():
    assert oracle_bound("A", 18, 3) == Fraction(85, 17)
    assert oracle_bound("B", 60, 3, node_budget=10) is None


def test_catalog_levels_and_gates():
    names = [e.name for e in CATALOG]
    assert len(names) == len(set(names)) == 12
    assert all(e.level == CERTIFIED for e in CATALOG if e.name.endswith("_seq"))
    assert all(e.level == CLOSED_FORM for e in CATALOG if not e.name.endswith("_seq"))
    facts = GraphFacts(18, 3, True, True, False)
    assert catalog_entry("rho_trianglefree_seq").applicable(facts) is None
    assert catalog_entry("pi_trianglefree_seq").applicable(facts) == "needs n > 15*delta+3"
    assert catalog_entry("rho_c4free").applicable(facts) == "not C4-free"
    small = GraphFacts(17, 3, True, True, False)
    assert catalog_entry("rho_trianglefree").applicable(small) == "needs n >= 6*delta"
    w = GraphFacts(104, 3, True, False, True)
    assert catalog_entry("pi_c4free_seq").applicable(w) == "needs delta >= 4"
    assert catalog_entry("rho_order").applicable(GraphFacts(5, 1, False, True, True)) \
        == "graph is disconnected"
