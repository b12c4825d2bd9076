"""Proposition checks and bound audits for concrete graphs, plus the
discrepancy probe that compares the stated closed forms with direct
evaluation of the sequences they were derived from.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .bounds import (CATALOG, CERTIFIED, CLOSED_FORM, GraphFacts,
                     bound_pi_c4free, bound_pi_trianglefree, bound_rho_c4free,
                     bound_rho_trianglefree, stated_g_w, stated_g_y, stated_g_z)
from .constructions import layered_join
from .families import ConstraintFamily, check_family
from .graph import (DistanceTable, Graph, GraphError, ball2_size, is_c4_free,
                    is_connected, is_triangle_free, min_degree)
from .sequences import (SequenceError, construct_w, construct_x, construct_y,
                        construct_z, delta_star, g)

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CERTIFIED_VIOLATION = 1
EXIT_IO = 2
EXIT_DISCREPANCY = 3


def rat(x) -> dict:
    """Exact JSON form of an integer or Fraction."""
    x = Fraction(x)
    return {"num": x.numerator, "den": x.denominator}


# -- propositions ----------------------------------------------------------


@dataclass(frozen=True)
class PropRow:
    vertex: int
    check: str  # family letter or "ball2"
    applicable: bool
    passed: bool
    failures: tuple = ()  # (condition, index) pairs
    note: str = ""

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "check": self.check,
            "applicable": self.applicable,
            "passed": self.passed,
            "failures": [{"condition": c, "index": i} for c, i in self.failures],
            "note": self.note,
        }


@dataclass(frozen=True)
class PropositionReport:
    n: int
    delta: int
    triangle_free: bool
    c4_free: bool
    centers: tuple
    rows: tuple

    @property
    def violations(self) -> list[PropRow]:
        return [r for r in self.rows if r.applicable and not r.passed]

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "triangle_free": self.triangle_free,
            "c4_free": self.c4_free,
            "centers": list(self.centers),
            "violations": len(self.violations),
            "rows": [r.to_json() for r in self.rows],
        }


def _family_row(dist: DistanceTable, v: int, kind: str, delta: int) -> PropRow:
    seq = dist.distance_degree(v)
    rep = check_family(seq, ConstraintFamily(kind, dist.graph.n, delta))
    return PropRow(v, kind, True, rep.ok, tuple((r.name, r.index) for r in rep.failures()))


def check_propositions(graph: Graph, mode: str = "all", vertex: Optional[int] = None,
                       dist: Optional[DistanceTable] = None) -> PropositionReport:
    """Check the distance-degree propositions that apply to ``graph``.

    ``mode`` is "vertex" (only ``vertex``), "center" (center vertices) or
    "all" (every vertex). The any-vertex families (A for triangle-free, C for
    C4-free, plus the radius-2 ball size) run on every selected vertex; the
    center families (B, D) run on the selected vertices that are centers.
    """
    if dist is None:
        dist = DistanceTable(graph)  # raises on disconnected input
    n, delta = graph.n, min_degree(graph)
    tf, c4 = is_triangle_free(graph), is_c4_free(graph)
    centers = dist.centers()
    center_set = set(centers)
    if mode == "vertex":
        if vertex is None or not 0 <= vertex < n:
            raise GraphError(f"vertex {vertex} is not in the graph")
        chosen = [vertex]
    elif mode == "center":
        chosen = centers
    elif mode == "all":
        chosen = list(range(n))
    else:
        raise ValueError(f"unknown mode {mode!r}")

    ds = delta_star(delta) if delta >= 1 else 1
    rows = []
    for v in chosen:
        is_center = v in center_set
        if tf:
            rows.append(_family_row(dist, v, "A", max(delta, 1)))
            if is_center:
                if delta >= 3 and n >= 3:
                    rows.append(_family_row(dist, v, "B", delta))
                else:
                    rows.append(PropRow(v, "B", False, True, note="not applicable: needs delta >= 3"))
        if c4:
            rows.append(_family_row(dist, v, "C", max(delta, 1)))
            if is_center:
                if n >= 3:
                    rows.append(_family_row(dist, v, "D", max(delta, 1)))
                else:
                    rows.append(PropRow(v, "D", False, True, note="not applicable: needs n >= 3"))
            size = ball2_size(graph, v)
            rows.append(PropRow(v, "ball2", True, size >= ds,
                                () if size >= ds else (("ball2", size),)))
    rep = PropositionReport(n, delta, tf, c4, tuple(centers), tuple(rows))
    for r in rep.violations:
        log.error("proposition violated at vertex %d: %s %s", r.vertex, r.check, r.failures)
    return rep


# -- audit -----------------------------------------------------------------


@dataclass(frozen=True)
class BoundRow:
    name: str
    invariant: str
    level: str
    applicable: bool
    reason: str
    value: Optional[Fraction]
    margin: Optional[Fraction]

    @property
    def violated(self) -> bool:
        return self.margin is not None and self.margin < 0

    @property
    def paper_discrepancy(self) -> bool:
        return self.violated and self.level == CLOSED_FORM

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "invariant": self.invariant,
            "level": self.level,
            "applicable": self.applicable,
            "reason": self.reason,
            "value": None if self.value is None else rat(self.value),
            "margin": None if self.margin is None else rat(self.margin),
            "violated": self.violated,
            "paper_discrepancy": self.paper_discrepancy,
        }


@dataclass(frozen=True)
class AuditReport:
    graph_id: str
    n: int
    m: int
    delta: int
    triangle_free: bool
    c4_free: bool
    pi: Fraction
    rho: Fraction
    radius: int
    diameter: int
    bounds: tuple
    propositions: PropositionReport

    def bound(self, name: str) -> BoundRow:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)

    @property
    def certified_violations(self) -> list[BoundRow]:
        return [b for b in self.bounds if b.violated and b.level == CERTIFIED]

    @property
    def discrepancies(self) -> list[BoundRow]:
        return [b for b in self.bounds if b.paper_discrepancy]

    @property
    def exit_code(self) -> int:
        if self.certified_violations or not self.propositions.ok:
            return EXIT_CERTIFIED_VIOLATION
        if self.discrepancies:
            return EXIT_DISCREPANCY
        return EXIT_OK

    @property
    def status(self) -> str:
        return {EXIT_OK: "ok", EXIT_CERTIFIED_VIOLATION: "certified-violation",
                EXIT_DISCREPANCY: "paper-discrepancy"}[self.exit_code]

    def to_json(self) -> dict:
        return {
            "graph_id": self.graph_id,
            "n": self.n,
            "m": self.m,
            "delta": self.delta,
            "triangle_free": self.triangle_free,
            "c4_free": self.c4_free,
            "proximity": rat(self.pi),
            "remoteness": rat(self.rho),
            "radius": self.radius,
            "diameter": self.diameter,
            "bounds": [b.to_json() for b in self.bounds],
            "proposition_violations": [r.to_json() for r in self.propositions.violations],
            "status": self.status,
            "exit_code": self.exit_code,
        }


def audit(graph: Graph, graph_id: str = "graph", propositions: bool = True) -> AuditReport:
    """Evaluate every catalog bound that applies to ``graph``; delta is measured."""
    dist = DistanceTable(graph)
    delta = min_degree(graph)
    facts = GraphFacts(graph.n, delta, True, is_triangle_free(graph), is_c4_free(graph))
    inv = {"rho": dist.remoteness(), "pi": dist.proximity()}
    rows = []
    for entry in CATALOG:
        reason = entry.applicable(facts)
        if reason is not None:
            rows.append(BoundRow(entry.name, entry.invariant, entry.level, False, reason, None, None))
            continue
        value = entry.value(facts)
        rows.append(BoundRow(entry.name, entry.invariant, entry.level, True, "",
                             value, value - inv[entry.invariant]))
    if propositions:
        props = check_propositions(graph, "all", dist=dist)
    else:
        props = PropositionReport(graph.n, delta, facts.triangle_free, facts.c4_free,
                                  tuple(dist.centers()), ())
    rep = AuditReport(graph_id, graph.n, graph.m, delta, facts.triangle_free, facts.c4_free,
                      inv["pi"], inv["rho"], dist.radius(), dist.diameter(), tuple(rows), props)
    for b in rep.certified_violations:
        log.error("%s: certified bound %s violated (margin %s)", graph_id, b.name, b.margin)
    return rep


# -- discrepancy probe -----------------------------------------------------


@dataclass(frozen=True)
class Discrepancy:
    probe: str
    n: int
    delta: int
    direct: Fraction
    stated: Fraction
    note: str

    def to_json(self) -> dict:
        return {"probe": self.probe, "n": self.n, "delta": self.delta,
                "direct": rat(self.direct), "stated": rat(self.stated), "note": self.note}


def probe_pi_trianglefree(n: int, delta: int) -> list[Discrepancy]:
    """g(Y) against (n-1) times the closed form, and against the stated g(Y) polynomial."""
    out = []
    gy = g(construct_y(n, delta))
    stated = (n - 1) * bound_pi_trianglefree(n, delta)
    if gy > stated:
        out.append(Discrepancy("pi_trianglefree_closed_form", n, delta, Fraction(gy), stated,
                               "g(Y) exceeds (n-1) * closed form"))
    if delta >= 4:
        pg = stated_g_y(n, delta)
        if pg != gy:
            out.append(Discrepancy("g_y_polynomial", n, delta, Fraction(gy), Fraction(pg),
                                   "stated g(Y) polynomial differs from direct sum"))
    return out


def probe_pi_c4free(n: int, delta: int) -> list[Discrepancy]:
    out = []
    gw = g(construct_w(n, delta))
    pg = stated_g_w(n, delta)
    if pg != gw:
        out.append(Discrepancy("g_w_polynomial", n, delta, Fraction(gw), Fraction(pg),
                               "stated g(W) polynomial differs from direct sum"))
    stated = (n - 1) * bound_pi_c4free(n, delta)
    if gw > stated:
        out.append(Discrepancy("pi_c4free_closed_form", n, delta, Fraction(gw), stated,
                               "g(W) exceeds (n-1) * closed form"))
    return out


def probe_rho_c4free(n: int, delta: int) -> list[Discrepancy]:
    out = []
    gz = g(construct_z(n, delta))
    pz = stated_g_z(n, delta)
    if pz != gz:
        out.append(Discrepancy("g_z_expression", n, delta, Fraction(gz), pz,
                               "stated g(Z) expression differs from direct sum"))
    stated = (n - 1) * bound_rho_c4free(n, delta)
    if gz > stated:
        out.append(Discrepancy("rho_c4free_closed_form", n, delta, Fraction(gz), stated,
                               "g(Z) exceeds (n-1) * closed form"))
    return out


def probe_rho_trianglefree(n: int, delta: int) -> list[Discrepancy]:
    """Remoteness of G(X) against the closed form it is claimed to equal."""
    rho = DistanceTable(layered_join(construct_x(n, delta))).remoteness()
    stated = bound_rho_trianglefree(n, delta)
    if rho == stated:
        return [Discrepancy("rho_trianglefree_equality", n, delta, rho, stated,
                            "closed form attained by G(X)")]
    if rho > stated:
        return [Discrepancy("rho_trianglefree_closed_form", n, delta, rho, stated,
                            "rho(G(X)) exceeds the closed form")]
    return [Discrepancy("rho_trianglefree_slack", n, delta, rho, stated,
                        "closed form strictly above rho(G(X))")]


def discrepancy_probe(deltas: Iterable[int] = (3, 4, 5), span: int = 40) -> list[Discrepancy]:
    """Run every probe over ``span`` consecutive admissible n per delta.

    The result includes informational ``*_equality`` and ``*_slack`` rows for the
    triangle-free remoteness corollary so its equality set can be read off.
    """
    out: list[Discrepancy] = []
    for d in deltas:
        for n in range(6 * d, 6 * d + span):
            out += probe_rho_trianglefree(n, d)
        for n in range(15 * d + 4, 15 * d + 4 + span):
            try:
                out += probe_pi_trianglefree(n, d)
            except SequenceError as exc:
                log.warning("Y skipped at n=%d delta=%d: %s", n, d, exc)
        ds = delta_star(d)
        for n in range(2 * ds, 2 * ds + span):
            out += probe_rho_c4free(n, d)
        if d >= 4:
            lo = (32 * ds + 20) // 5 + 1
            for n in range(lo, lo + span):
                out += probe_pi_c4free(n, d)
    return out


def is_reportable(d: Discrepancy) -> bool:
    """True for rows that are genuine disagreements (not equality/slack notes)."""
    return not d.probe.endswith(("_equality", "_slack"))


# -- sweep rows ------------------------------------------------------------

CSV_COLUMNS = ("kind", "params", "n", "delta", "invariant", "bound_name",
               "bound_num", "bound_den", "margin_sign", "level",
               "invariant_num", "invariant_den")


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def csv_rows_for_report(kind: str, params: str, rep: AuditReport) -> list[dict]:
    inv = {"rho": rep.rho, "pi": rep.pi}
    rows = []
    for b in rep.bounds:
        if not b.applicable:
            continue
        rows.append({
            "kind": kind, "params": params, "n": rep.n, "delta": rep.delta,
            "invariant": b.invariant, "bound_name": b.name,
            "bound_num": b.value.numerator, "bound_den": b.value.denominator,
            "margin_sign": _sign(b.margin), "level": b.level,
            "invariant_num": inv[b.invariant].numerator,
            "invariant_den": inv[b.invariant].denominator,
        })
    return rows


_SEQ_CLOSED = {
    "x": ("rho", "rho_trianglefree", construct_x, bound_rho_trianglefree),
    "y": ("pi", "pi_trianglefree", construct_y, bound_pi_trianglefree),
    "z": ("rho", "rho_c4free", construct_z, bound_rho_c4free),
    "w": ("pi", "pi_c4free", construct_w, bound_pi_c4free),
}


def csv_row_for_sequence(kind: str, n: int, delta: int) -> dict:
    """Certified value g(S)/(n-1) of a canonical sequence against its closed form."""
    invariant, name, build, closed = _SEQ_CLOSED[kind]
    val = Fraction(g(build(n, delta)), n - 1)
    b = closed(n, delta)
    return {
        "kind": kind, "params": "", "n": n, "delta": delta, "invariant": invariant,
        "bound_name": name, "bound_num": b.numerator, "bound_den": b.denominator,
        "margin_sign": _sign(b - val), "level": CLOSED_FORM,
        "invariant_num": val.numerator, "invariant_den": val.denominator,
    }


def rows_exit_code(rows: list[dict]) -> int:
    if any(r["margin_sign"] < 0 and r["level"] == CERTIFIED for r in rows):
        return EXIT_CERTIFIED_VIOLATION
    if any(r["margin_sign"] < 0 for r in rows):
        return EXIT_DISCREPANCY
    return EXIT_OK


def require_connected(graph: Graph) -> None:
    if not is_connected(graph):
        raise GraphError("graph is disconnected")
