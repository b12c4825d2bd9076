"""Closed-form bounds on proximity and remoteness, their sequence-certified
companions, and the catalog the audit evaluates.

Every value is an exact ``Fraction``. A *sequence-certified* value is
``g(S)/(n-1)`` for the canonical extremal sequence ``S``; a
*closed-form-as-stated* value is the stated formula, evaluated literally.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .families import ConstraintFamily
from .search import maximize_g
from .sequences import (SequenceError, construct_w, construct_x, construct_y,
                        construct_z, delta_star, g, w_params, y_params)

CLOSED_FORM = "closed-form-as-stated"
CERTIFIED = "sequence-certified"

__all__ = [
    "CLOSED_FORM", "CERTIFIED", "delta_star", "BoundCatalogEntry", "GraphFacts", "CATALOG",
    "bound_rho_order", "bound_pi_order", "bound_rho_mindeg", "bound_pi_mindeg",
    "bound_rho_trianglefree", "bound_pi_trianglefree", "bound_rho_c4free", "bound_pi_c4free",
    "certified_rho_trianglefree", "certified_pi_trianglefree", "certified_rho_c4free",
    "certified_pi_c4free", "stated_g_y", "stated_g_z", "stated_g_w", "oracle_bound",
]


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


# -- classical bounds ------------------------------------------------------


def bound_rho_order(n: int) -> Fraction:
    if n < 2:
        raise ValueError("n must be >= 2")
    return Fraction(n, 2)


def bound_pi_order(n: int) -> Fraction:
    if n < 2:
        raise ValueError("n must be >= 2")
    if n % 2:
        return Fraction(n + 1, 4)
    return Fraction(n + 1, 4) + Fraction(1, 4 * (n - 1))


def bound_rho_mindeg(n: int, delta: int) -> Fraction:
    if delta < 2:
        raise ValueError("delta must be >= 2")
    return Fraction(3 * n, 2 * (delta + 1)) + Fraction(7, 2)


def bound_pi_mindeg(n: int, delta: int) -> Fraction:
    if delta < 2:
        raise ValueError("delta must be >= 2")
    return Fraction(3 * n, 4 * (delta + 1)) + 3


# -- triangle-free ---------------------------------------------------------


def bound_rho_trianglefree(n: int, delta: int) -> Fraction:
    return 2 * _ceil_div(n - 3 * delta, 2 * delta) + 2 - Fraction(delta, n - 1)


def certified_rho_trianglefree(n: int, delta: int) -> Fraction:
    return Fraction(g(construct_x(n, delta)), n - 1)


def bound_pi_trianglefree(n: int, delta: int) -> Fraction:
    return (Fraction(n, 2 * delta) + 2 - Fraction(5, 2 * delta)
            - Fraction(21 * delta * delta - 8 * delta - 3, 2 * delta * (n - 1)))


def certified_pi_trianglefree(n: int, delta: int) -> Fraction:
    return Fraction(g(construct_y(n, delta)), n - 1)


def stated_g_y(n: int, delta: int) -> int:
    """The stated polynomial for g(Y) (stated for delta >= 4)."""
    prm = y_params(n, delta)
    p, r, d = prm.p, prm.n_r, delta
    return 8 * d * p * p + 52 * d * p + 4 * p + 4 * p * r + 72 * d + 21 + 18 * r


# -- C4-free ---------------------------------------------------------------


def bound_rho_c4free(n: int, delta: int) -> Fraction:
    return Fraction(5, 2) * (n // delta_star(delta)) + 2


def certified_rho_c4free(n: int, delta: int) -> Fraction:
    return Fraction(g(construct_z(n, delta)), n - 1)


def stated_g_z(n: int, delta: int) -> Fraction:
    """The stated piecewise expression for g(Z)."""
    ds = delta_star(delta)
    p, q = divmod(n, ds)
    slope = Fraction(5, 2) * p - Fraction(1, 2)
    if q == 0:
        return (p * ds - 1) * slope - Fraction(15, 2) * p + Fraction(13, 2)
    if q == 1:
        return p * ds * slope - 5 * p + 5
    return ((p * ds + q - 1) * slope + Fraction(5, 2) * p * q - Fraction(11, 2) * q
            - Fraction(15, 2) * p + Fraction(19, 2))


def bound_pi_c4free(n: int, delta: int) -> Fraction:
    return Fraction(5, 4) * (n // delta_star(delta)) + Fraction(147, 32)


def certified_pi_c4free(n: int, delta: int) -> Fraction:
    return Fraction(g(construct_w(n, delta)), n - 1)


def stated_g_w(n: int, delta: int) -> int:
    """The stated polynomial for g(W)."""
    prm = w_params(n, delta)
    ds, p, r = delta_star(delta), prm.p, prm.n_r
    return 5 * p * p * ds + 29 * p * ds + 28 * ds - 20 * p - 84 + 5 * p * r + 13 * r


def oracle_bound(kind: str, n: int, delta: int, **budget) -> Optional[Fraction]:
    """``max g / (n-1)`` over the family by exhaustive search, or None if the
    search was cut short. Certifies bounds where no canonical sequence exists."""
    res = maximize_g(ConstraintFamily(kind, n, delta), **budget)
    if not res.exhaustive or res.best_g is None:
        return None
    return Fraction(res.best_g, n - 1)


# -- catalog ---------------------------------------------------------------


@dataclass(frozen=True)
class GraphFacts:
    """What the applicability gates look at."""
    n: int
    delta: int
    connected: bool
    triangle_free: bool
    c4_free: bool


@dataclass(frozen=True)
class BoundCatalogEntry:
    name: str
    invariant: str  # "rho" | "pi"
    level: str
    gate: Callable[[GraphFacts], Optional[str]]  # None when applicable, else the reason
    formula: Callable[[int, int], Fraction]

    def applicable(self, facts: GraphFacts) -> Optional[str]:
        if not facts.connected:
            return "graph is disconnected"
        if facts.n < 2:
            return "n < 2"
        return self.gate(facts)

    def value(self, facts: GraphFacts) -> Fraction:
        return self.formula(facts.n, facts.delta)


def _always(f: GraphFacts):
    return None


def _mindeg(f: GraphFacts):
    return None if f.delta >= 2 else "needs delta >= 2"


def _tf(extra: Callable[[GraphFacts], Optional[str]]):
    def gate(f: GraphFacts):
        if not f.triangle_free:
            return "not triangle-free"
        if f.delta < 3:
            return "needs delta >= 3"
        return extra(f)
    return gate


def _c4(extra: Callable[[GraphFacts], Optional[str]]):
    def gate(f: GraphFacts):
        if not f.c4_free:
            return "not C4-free"
        if f.delta < 3:
            return "needs delta >= 3"
        return extra(f)
    return gate


def _n_ge_6delta(f: GraphFacts):
    return None if f.n >= 6 * f.delta else "needs n >= 6*delta"


def _y_range(f: GraphFacts):
    if f.n <= 15 * f.delta + 3:
        return "needs n > 15*delta+3"
    try:
        y_params(f.n, f.delta)
    except SequenceError as exc:
        return str(exc)
    return None


def _z_range(f: GraphFacts):
    return None if f.n >= 2 * delta_star(f.delta) else "needs n >= 2*delta*"


def _w_range(f: GraphFacts):
    if f.delta < 4:
        return "needs delta >= 4"
    try:
        w_params(f.n, f.delta)
    except SequenceError as exc:
        return str(exc)
    return None


CATALOG: tuple[BoundCatalogEntry, ...] = (
    BoundCatalogEntry("rho_order", "rho", CLOSED_FORM, _always, lambda n, d: bound_rho_order(n)),
    BoundCatalogEntry("pi_order", "pi", CLOSED_FORM, _always, lambda n, d: bound_pi_order(n)),
    BoundCatalogEntry("rho_mindeg", "rho", CLOSED_FORM, _mindeg, bound_rho_mindeg),
    BoundCatalogEntry("pi_mindeg", "pi", CLOSED_FORM, _mindeg, bound_pi_mindeg),
    BoundCatalogEntry("rho_trianglefree", "rho", CLOSED_FORM, _tf(_n_ge_6delta), bound_rho_trianglefree),
    BoundCatalogEntry("rho_trianglefree_seq", "rho", CERTIFIED, _tf(_n_ge_6delta),
                      certified_rho_trianglefree),
    BoundCatalogEntry("pi_trianglefree", "pi", CLOSED_FORM, _tf(_always), bound_pi_trianglefree),
    BoundCatalogEntry("pi_trianglefree_seq", "pi", CERTIFIED, _tf(_y_range), certified_pi_trianglefree),
    BoundCatalogEntry("rho_c4free", "rho", CLOSED_FORM, _c4(_always), bound_rho_c4free),
    BoundCatalogEntry("rho_c4free_seq", "rho", CERTIFIED, _c4(_z_range), certified_rho_c4free),
    BoundCatalogEntry("pi_c4free", "pi", CLOSED_FORM, _c4(_always), bound_pi_c4free),
    BoundCatalogEntry("pi_c4free_seq", "pi", CERTIFIED, _c4(_w_range), certified_pi_c4free),
)


def catalog_entry(name: str) -> BoundCatalogEntry:
    for e in CATALOG:
        if e.name == name:
            return e
    raise KeyError(name)
