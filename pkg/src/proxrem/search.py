"""Branch-and-bound maximisation of ``g`` over a constraint family, and the
single-unit exchange check used to probe local optimality.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .families import ConstraintFamily, satisfies
from .sequences import entry, g, s3, s4, s5, trim


@dataclass
class SearchResult:
    best_seq: Optional[list[int]]
    best_g: Optional[int]
    nodes: int
    exhaustive: bool
    optima_count: int
    status: str  # "optimal" | "infeasible" | "truncated"

    @property
    def infeasible(self) -> bool:
        return self.status == "infeasible"

    def to_json(self) -> dict:
        return {
            "best_seq": self.best_seq,
            "best_g": self.best_g,
            "nodes": self.nodes,
            "exhaustive": self.exhaustive,
            "optima_count": self.optima_count,
            "status": self.status,
        }


class _BudgetExhausted(Exception):
    pass


# -- admissible completion bound ------------------------------------------


def _min_mass(kind: str, delta: int, ds: int, k: int, t: int) -> int:
    """Lower bound on the mass needed to fill indices k+1..k+t as the tail.

    Only windows lying entirely inside the new indices are used, and they
    are pairwise disjoint, so the bound is a valid relaxation.
    """
    d = k + t
    if kind == "A":
        return max(t + (2 * delta - 4) * (t // 4), t + (delta - 2) * (t // 3))
    if kind == "C":
        mass = t
        for i in range(k + 3 + (-(k + 3)) % 5, d + 1, 5):
            width = min(i + 2, d) - (i - 2) + 1
            mass += max(0, ds - width)
        return mass
    # B and D: interior entries >= 2, the last entry >= 1
    mass = 2 * t - 1
    if kind == "B":
        start = k + 2
        for i in range(start + (1 - start) % 4, d, 4):
            if i + 2 > d:
                break
            need = 4 * delta if 9 <= i <= d - 10 else 2 * delta
            floor = 8 if i + 2 < d else 7
            mass += max(0, need - floor)
        return mass
    for i in range(k + 3 + (-(k + 3)) % 5, d + 1, 5):
        hi = min(i + 2, d)
        floor = 2 * (hi - (i - 2) + 1) - (1 if hi == d else 0)
        need = 2 * ds if 10 <= i <= d - 9 else ds
        mass += max(0, need - floor)
    return mass


@lru_cache(maxsize=None)
def _completion_bound(kind: str, delta: int, ds: int, k: int, m: int) -> int:
    """Max possible ``sum j*c_j`` over tails of mass m starting at index k+1."""
    e = 2 if kind in "BD" else 1
    t = 1
    while e * t + 1 <= m and _min_mass(kind, delta, ds, k, t + 1) <= m:
        t += 1
    interior = e * sum(range(k + 1, k + t))
    return interior + (m - e * (t - 1)) * (k + t)


# -- prefix feasibility ----------------------------------------------------


def _prefix_ok(kind: str, delta: int, ds: int, pre: list[int]) -> bool:
    """Conditions that become decidable once index k is placed and the
    sequence is known to continue past k."""
    k = len(pre) - 1
    x = pre[k]
    if kind == "A":
        if x < 1:
            return False
        if k >= 1 and s3(pre, k - 1) < delta + 1:
            return False
        if k >= 2 and s4(pre, k - 2) < 2 * delta:
            return False
        return True
    if kind == "C":
        if x < 1:
            return False
        i = k - 2
        return not (i >= 0 and i % 5 == 0 and s5(pre, i) < ds)
    if kind == "B":
        if k >= 1 and x < 2:
            return False
        i = k - 2
        if i >= 1 and i % 4 == 1 and s4(pre, i) < 2 * delta:
            return False
        i = k - 9
        if i >= 9 and i % 4 == 1 and s4(pre, i) < 4 * delta:
            return False
        return True
    # D
    if k >= 1 and x < 2:
        return False
    i = k - 2
    if i >= 0 and i % 5 == 0 and s5(pre, i) < ds:
        return False
    i = k - 8
    if i >= 10 and i % 5 == 0 and s5(pre, i) < 2 * ds:
        return False
    return True


# -- search ----------------------------------------------------------------


@dataclass
class _State:
    best_seq: Optional[list[int]] = None
    best_g: int = -1
    optima: int = 0
    nodes: int = 0
    truncated: bool = False
    deadline: Optional[float] = None
    node_budget: Optional[int] = None
    pre: list[int] = field(default_factory=list)


def maximize_g(family: ConstraintFamily, node_budget: Optional[int] = None,
               time_budget: Optional[float] = None, cap: Optional[int] = None,
               prune: bool = True) -> SearchResult:
    """Depth-first branch and bound over sequences with sum ``family.n``.

    Prefixes are extended left to right with ascending entries, so the first
    maximiser found is the lexicographically smallest. ``prune=False``
    disables both the prefix checks and the bound and enumerates every
    composition of n; it exists to cross-check the pruned search.
    """
    kind, delta, ds, n = family.kind, family.delta, family.delta_star, family.n
    st = _State(node_budget=node_budget,
                deadline=None if time_budget is None else time.monotonic() + time_budget)

    def visit(s: int, gv: int) -> None:
        st.nodes += 1
        if st.node_budget is not None and st.nodes > st.node_budget:
            raise _BudgetExhausted
        if st.deadline is not None and st.nodes % 4096 == 0 and time.monotonic() > st.deadline:
            raise _BudgetExhausted
        pre = st.pre
        k = len(pre)
        m = n - s
        if m == 0:
            if satisfies(pre, family):
                if gv > st.best_g:
                    st.best_g, st.best_seq, st.optima = gv, list(pre), 1
                elif gv == st.best_g:
                    st.optima += 1
            return
        if prune:
            if k == 0:
                choices = [1]
            else:
                if gv + _completion_bound(kind, delta, ds, k - 1, m) < st.best_g:
                    return
                choices = range(1, m + 1)
        else:
            choices = range(1, m + 1)
        top = m
        if cap is not None and m > cap:
            top = cap
            st.truncated = True
        for x in choices:
            if x > top:
                break
            pre.append(x)
            if not prune or x == m or _prefix_ok(kind, delta, ds, pre):
                visit(s + x, gv + k * x)
            pre.pop()

    exhausted = False
    try:
        visit(0, 0)
    except _BudgetExhausted:
        exhausted = True
    exhaustive = not exhausted and not st.truncated
    if st.best_seq is None:
        status = "infeasible" if exhaustive else "truncated"
        return SearchResult(None, None, st.nodes, exhaustive, 0, status)
    return SearchResult(st.best_seq, st.best_g, st.nodes, exhaustive, st.optima,
                        "optimal" if exhaustive else "truncated")


# -- single-unit exchanges -------------------------------------------------


@dataclass(frozen=True)
class Move:
    source: int
    target: int
    gain: int
    result: tuple


@dataclass(frozen=True)
class LocalOptReport:
    seq: tuple
    family: ConstraintFamily
    input_feasible: bool
    feasible_moves: tuple
    beating_moves: tuple

    @property
    def locally_optimal(self) -> bool:
        return self.input_feasible and not self.beating_moves

    def to_json(self) -> dict:
        return {
            "seq": list(self.seq),
            "family": self.family.kind.lower(),
            "n": self.family.n,
            "delta": self.family.delta,
            "input_feasible": self.input_feasible,
            "feasible_moves": len(self.feasible_moves),
            "beating_moves": [
                {"from": mv.source, "to": mv.target, "gain": mv.gain, "result": list(mv.result)}
                for mv in self.beating_moves
            ],
            "locally_optimal": self.locally_optimal,
        }


def apply_move(seq: Sequence[int], i: int, j: int) -> list[int]:
    """``n_i <- -1`` then ``n_j <- +1``; trailing zeros are dropped."""
    out = list(seq) + [0] * max(0, j + 1 - len(seq))
    out[i] -= 1
    out[j] += 1
    return trim(out)


def shift_local_opt(seq: Sequence[int], family: ConstraintFamily) -> LocalOptReport:
    seq = trim(seq)
    base = g(seq)
    d = len(seq) - 1
    feasible, beating = [], []
    for i in range(d + 1):
        if entry(seq, i) < 1:
            continue
        for j in range(d + 2):
            if j == i:
                continue
            cand = apply_move(seq, i, j)
            if not satisfies(cand, family):
                continue
            mv = Move(i, j, g(cand) - base, tuple(cand))
            feasible.append(mv)
            if mv.gain > 0:
                beating.append(mv)
    return LocalOptReport(tuple(seq), family, satisfies(seq, family),
                          tuple(feasible), tuple(beating))
