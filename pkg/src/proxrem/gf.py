"""Small finite fields GF(q): any prime q, plus q in {4, 8, 9}.

Elements are ints ``0..q-1``. For prime powers an int encodes the
coefficient vector of a polynomial in ``t`` written in base p, reduced
modulo a fixed irreducible polynomial.
"""

from __future__ import annotations

from functools import lru_cache

# monic irreducible, low-to-high coefficients without the leading 1
IRREDUCIBLE = {
    4: (2, (1, 1)),      # t^2 + t + 1 over GF(2)
    8: (2, (1, 1, 0)),   # t^3 + t + 1 over GF(2)
    9: (3, (2, 1)),      # t^2 + t + 2 over GF(3)
}


class UnsupportedFieldError(ValueError):
    pass


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def _to_coeffs(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        x, c = divmod(x, p)
        out.append(c)
    return out


def _from_coeffs(cs, p: int) -> int:
    x = 0
    for c in reversed(cs):
        x = x * p + c
    return x


def _poly_mul(a: int, b: int, p: int, k: int, tail: tuple) -> int:
    ca, cb = _to_coeffs(a, p, k), _to_coeffs(b, p, k)
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(ca):
        for j, y in enumerate(cb):
            prod[i + j] = (prod[i + j] + x * y) % p
    # t^k = -(tail)
    for deg in range(2 * k - 2, k - 1, -1):
        c = prod[deg]
        if c:
            prod[deg] = 0
            for i, t in enumerate(tail):
                prod[deg - k + i] = (prod[deg - k + i] - c * t) % p
    return _from_coeffs(prod[:k], p)


class GF:
    """Arithmetic tables for GF(q)."""

    def __init__(self, q: int):
        if is_prime(q):
            p, k, tail = q, 1, ()
        elif q in IRREDUCIBLE:
            p, tail = IRREDUCIBLE[q]
            k = len(tail)
        else:
            raise UnsupportedFieldError(f"GF({q}) unsupported: use a prime or one of 4, 8, 9")
        self.q, self.p, self.k = q, p, k
        if k == 1:
            self._add = [[(a + b) % q for b in range(q)] for a in range(q)]
            self._mul = [[(a * b) % q for b in range(q)] for a in range(q)]
        else:
            self._add = [[_from_coeffs([(x + y) % p for x, y in zip(_to_coeffs(a, p, k), _to_coeffs(b, p, k))], p)
                          for b in range(q)] for a in range(q)]
            self._mul = [[_poly_mul(a, b, p, k, tail) for b in range(q)] for a in range(q)]
        self._neg = [self._add[a].index(0) for a in range(q)]
        self._inv = [None] + [self._mul[a].index(1) for a in range(1, q)]

    @property
    def elements(self) -> range:
        return range(self.q)

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self._add[a][self._neg[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def dot(self, u, v) -> int:
        acc = 0
        for a, b in zip(u, v):
            acc = self._add[acc][self._mul[a][b]]
        return acc

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
