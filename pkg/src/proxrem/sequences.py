"""Finite distance-degree sequences, window sums and the canonical extremal sequences.

A sequence is a plain list ``[n_0, ..., n_d]``; indices outside ``0..d``
read as zero everywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class SequenceError(ValueError):
    """Constructor parameters outside the supported range."""


def g(seq: Sequence[int]) -> int:
    return sum(i * x for i, x in enumerate(seq))


def beats(a: Sequence[int], b: Sequence[int]) -> bool:
    return g(a) > g(b)


def entry(seq: Sequence[int], i: int) -> int:
    return seq[i] if 0 <= i < len(seq) else 0


def s3(seq: Sequence[int], i: int) -> int:
    return entry(seq, i - 1) + entry(seq, i) + entry(seq, i + 1)


def s4(seq: Sequence[int], i: int) -> int:
    return entry(seq, i - 1) + entry(seq, i) + entry(seq, i + 1) + entry(seq, i + 2)


def s5(seq: Sequence[int], i: int) -> int:
    return sum(entry(seq, j) for j in range(i - 2, i + 3))


def trim(seq: Sequence[int]) -> list[int]:
    """Drop trailing zeros."""
    out = list(seq)
    while out and out[-1] == 0:
        out.pop()
    return out


def format_seq(seq: Sequence[int]) -> str:
    return ",".join(str(x) for x in seq)


def parse_seq(text: str) -> list[int]:
    try:
        out = [int(tok) for tok in text.strip().split(",") if tok.strip()]
    except ValueError:
        raise SequenceError(f"not a comma-separated integer list: {text!r}") from None
    if any(x < 0 for x in out):
        raise SequenceError("sequence entries must be nonnegative")
    return out


def delta_star(delta: int) -> int:
    """Guaranteed size of a radius-2 ball in a C4-free graph of min degree delta."""
    if delta < 1:
        raise SequenceError("delta must be >= 1")
    return delta * delta - 2 * (delta // 2) + 1


# -- the repeating (1, 1, delta-1, delta-1) pattern ------------------------


@dataclass(frozen=True)
class PatternSeq:
    delta: int

    @property
    def period(self) -> tuple[int, int, int, int]:
        return (1, 1, self.delta - 1, self.delta - 1)

    def term(self, k: int) -> int:
        """``a_k`` with 1-based ``k``."""
        return self.period[(k - 1) % 4]

    def prefix(self, k: int) -> list[int]:
        return [self.term(i) for i in range(1, k + 1)]

    def ell(self, p: int) -> int:
        """Smallest ``k`` whose prefix sum exceeds ``p``."""
        if p < 0:
            raise SequenceError("p must be nonnegative")
        total, k = 0, 0
        while total <= p:
            k += 1
            total += self.term(k)
        return k


def ell(pattern: PatternSeq, p: int) -> int:
    return pattern.ell(p)


# -- canonical sequences ---------------------------------------------------


def construct_x(n: int, delta: int) -> list[int]:
    """Remoteness-extremal sequence for triangle-free graphs."""
    if delta < 3:
        raise SequenceError("construct_x needs delta >= 3")
    if n < 6 * delta:
        raise SequenceError(f"construct_x needs n >= 6*delta = {6 * delta}")
    pat = PatternSeq(delta)
    body = pat.prefix(pat.ell(n - 4 * delta))
    r = n - 3 * delta - sum(body)
    seq = [1, delta, delta - 1, *body, delta, r]
    assert sum(seq) == n and r >= 1
    return seq


@dataclass(frozen=True)
class YParams:
    p: int
    n_r: int
    formula_p: int
    adjustment: int  # p - formula_p


def y_window(delta: int) -> tuple[int, int]:
    return (4, 16) if delta == 3 else (3 * delta - 1, 7 * delta - 1)


def _y_layout(delta: int, p: int, n_r: int) -> list[int]:
    if delta == 3:
        head, mid, tail = [1, 2, 2, 2, 2, 2, 2, 2], [2, 2, 2, 6], [2, 2, 2, 2] * 2
    else:
        head = [1, 2, 2, 2 * delta - 5, 2, 2, 2, 2 * delta - 6]
        mid = [2, 2, 2, 4 * delta - 6]
        tail = [2, 2, 2, 2 * delta - 6] * 2
    return head + mid * p + tail + [2, 2, n_r]


def _y_fixed_mass(delta: int, p: int) -> int:
    return sum(_y_layout(delta, p, 0))


def y_params(n: int, delta: int) -> YParams:
    if delta < 3:
        raise SequenceError("construct_y needs delta >= 3")
    if n <= 15 * delta + 3:
        raise SequenceError(f"construct_y needs n > 15*delta+3 = {15 * delta + 3}")
    p0 = -((-(n - 15 * delta - 3)) // (4 * delta))
    lo, hi = y_window(delta)
    for adj in (0, -1, 1):
        p = p0 + adj
        if p < 0:
            continue
        n_r = n - _y_fixed_mass(delta, p)
        if lo <= n_r <= hi:
            return YParams(p, n_r, p0, adj)
    raise SequenceError(f"no p near {p0} puts n_r in [{lo}, {hi}] for n={n}, delta={delta}")


def construct_y(n: int, delta: int) -> list[int]:
    """Proximity-extremal sequence for triangle-free graphs (center vertices)."""
    prm = y_params(n, delta)
    seq = _y_layout(delta, prm.p, prm.n_r)
    assert sum(seq) == n
    return seq


def construct_z(n: int, delta: int) -> list[int]:
    """Remoteness-extremal sequence for C4-free graphs."""
    if delta < 3:
        raise SequenceError("construct_z needs delta >= 3")
    ds = delta_star(delta)
    if n < 2 * ds:
        raise SequenceError(f"construct_z needs n >= 2*delta* = {2 * ds}")
    p, q = divmod(n, ds)
    seq = [1, 1, ds - 2] + [1, 1, 1, 1, ds - 4] * (p - 1)
    if q == 1:
        seq.append(1)
    elif q >= 2:
        seq += [1, q - 1]
    assert sum(seq) == n
    return seq


@dataclass(frozen=True)
class WParams:
    p: int
    n_r: int
    formula_p: int
    adjustment: int


def w_window(delta: int) -> tuple[Fraction, Fraction]:
    ds = delta_star(delta)
    return Fraction(2 * ds, 5) + 4, Fraction(12 * ds, 5) + 4


def w_params(n: int, delta: int) -> WParams:
    if delta < 4:
        raise SequenceError("construct_w needs delta >= 4 (delta*-8 >= 2)")
    ds = delta_star(delta)
    if 5 * n <= 32 * ds + 20:
        raise SequenceError(f"construct_w needs n > (32*delta*+20)/5 = {Fraction(32 * ds + 20, 5)}")
    p0 = -((-(5 * n - 32 * ds - 20)) // (10 * ds))
    lo, hi = w_window(delta)
    for adj in (0, -1, 1):
        p = p0 + adj
        if p < 0:
            continue
        n_r = n - (2 * p + 4) * ds
        if lo <= n_r <= hi:
            return WParams(p, n_r, p0, adj)
    raise SequenceError(f"no p near {p0} puts n_r in [{lo}, {hi}] for n={n}, delta={delta}")


def construct_w(n: int, delta: int) -> list[int]:
    """Proximity-extremal sequence for C4-free graphs (center vertices)."""
    prm = w_params(n, delta)
    ds = delta_star(delta)
    seq = ([1, 2, ds - 3, 2, 2, 2, 2, ds - 8]
           + [2, 2, 2, 2, 2 * ds - 8] * prm.p
           + [2, 2, 2, 2, ds - 8] * 2
           + [prm.n_r])
    assert sum(seq) == n
    return seq
