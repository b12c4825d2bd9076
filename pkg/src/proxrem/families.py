"""The four constraint families A/B/C/D on distance-degree sequences.

A and C constrain the distance degree of any vertex of a triangle-free
(resp. C4-free) graph; B and D constrain that of a center vertex.
Every condition is evaluated separately so a report can name the first
failing index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .sequences import delta_star, entry, s3, s4, s5

CONDITIONS = {
    "A": ("A1", "A2", "A3", "A4", "A5", "A6"),
    "B": ("B1", "B2", "B3", "B4", "B5"),
    "C": ("C1", "C2", "C3", "C4"),
    "D": ("D1", "D2", "D3", "D4", "D5"),
}


@dataclass(frozen=True)
class ConstraintFamily:
    kind: str
    n: int
    delta: int

    def __post_init__(self):
        kind = self.kind.upper()
        if kind not in CONDITIONS:
            raise ValueError(f"unknown family {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if self.delta < 1:
            raise ValueError("delta must be >= 1")

    @property
    def delta_star(self) -> int:
        return delta_star(self.delta)

    @property
    def conditions(self) -> tuple[str, ...]:
        return CONDITIONS[self.kind]

    @property
    def interior_min(self) -> int:
        """Smallest admissible entry strictly between index 0 and the last index."""
        return 2 if self.kind in "BD" else 1


@dataclass(frozen=True)
class ConditionResult:
    name: str
    passed: bool
    index: Optional[int] = None  # first violating index


@dataclass(frozen=True)
class FamilyReport:
    family: ConstraintFamily
    seq: tuple
    results: tuple

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list[ConditionResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> ConditionResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)


def _first(indices, pred: Callable[[int], bool]) -> Optional[int]:
    for i in indices:
        if not pred(i):
            return i
    return None


def _last_index(seq: Sequence[int]) -> int:
    d = len(seq) - 1
    while d > 0 and seq[d] == 0:
        d -= 1
    return d


def _no_gaps(seq, d, lo):
    # entries 1..d-1 (and d itself, by choice of d) must reach ``lo``
    return _first(range(1, d), lambda i: seq[i] >= lo)


def _check_a(seq, fam, d):
    delta = fam.delta
    yield "A1", _first([0], lambda i: entry(seq, 0) == 1)
    yield "A2", None if sum(seq) == fam.n else -1
    yield "A3", _no_gaps(seq, d, 1)
    yield "A4", _first(
        (i for i in range(0, d) if entry(seq, i) >= 1 and entry(seq, i + 1) >= 1),
        lambda i: s4(seq, i) >= 2 * delta)
    yield "A5", _first((i for i in range(0, d + 1) if entry(seq, i) > 0),
                       lambda i: s3(seq, i) >= delta + 1)
    a6 = None
    if entry(seq, d - 1) <= delta - 1 and entry(seq, d - 1) + entry(seq, d) < 2 * delta:
        a6 = d - 1
    yield "A6", a6


def _check_b(seq, fam, d):
    delta = fam.delta
    yield "B1", _first([0], lambda i: entry(seq, 0) == 1)
    yield "B2", None if sum(seq) == fam.n else -1
    yield "B3", _no_gaps(seq, d, 2)
    yield "B4", _first((i for i in range(1, d) if i % 4 == 1),
                       lambda i: s4(seq, i) >= 2 * delta)
    yield "B5", _first((i for i in range(9, d - 9) if i % 4 == 1),
                       lambda i: s4(seq, i) >= 4 * delta)


def _check_c(seq, fam, d):
    ds = fam.delta_star
    yield "C1", _first([0], lambda i: entry(seq, 0) == 1)
    yield "C2", None if sum(seq) == fam.n else -1
    yield "C3", _no_gaps(seq, d, 1)
    yield "C4", _first((i for i in range(0, d + 1) if i % 5 == 0),
                       lambda i: s5(seq, i) >= ds)


def _check_d(seq, fam, d):
    ds = fam.delta_star
    yield "D1", _first([0], lambda i: entry(seq, 0) == 1)
    yield "D2", None if sum(seq) == fam.n else -1
    yield "D3", _no_gaps(seq, d, 2)
    yield "D4", _first((i for i in range(0, d + 1) if i % 5 == 0),
                       lambda i: s5(seq, i) >= ds)
    yield "D5", _first((i for i in range(10, d - 8) if i % 5 == 0),
                       lambda i: s5(seq, i) >= 2 * ds)


_CHECKERS = {"A": _check_a, "B": _check_b, "C": _check_c, "D": _check_d}


def check_family(seq: Sequence[int], family: ConstraintFamily) -> FamilyReport:
    """Per-condition pass/fail; index -1 marks a whole-sequence failure (the sum)."""
    seq = list(seq)
    d = _last_index(seq) if seq else 0
    results = tuple(
        ConditionResult(name, idx is None, idx)
        for name, idx in _CHECKERS[family.kind](seq, family, d)
    )
    return FamilyReport(family, tuple(seq), results)


def satisfies(seq: Sequence[int], family: ConstraintFamily) -> bool:
    seq = list(seq)
    if not seq:
        return False
    d = _last_index(seq)
    return all(idx is None for _, idx in _CHECKERS[family.kind](seq, family, d))
