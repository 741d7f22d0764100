"""Small finite fields GF(p^k) with table arithmetic.

Elements are integers 0..q-1 read as base-p coefficient vectors, the units
digit being the constant term.  The modulus is the least monic irreducible
polynomial of degree k in that integer encoding.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .numtheory import isprime, prime_power_base, valuation

__all__ = ["FiniteField", "field"]

MAX_ORDER = 1 << 10


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic m (coefficient lists, low degree first)."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, c in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * c) % p
        a.pop()
    return a


def _monic(k, p):
    """Monic polynomials of degree k in increasing encoding order."""
    for code in range(p**k):
        coeffs = [(code // p**i) % p for i in range(k)]
        yield coeffs + [1]


def _is_irreducible(m, p):
    k = len(m) - 1
    for d in range(1, k // 2 + 1):
        for f in _monic(d, p):
            if not any(_poly_mod(m, f, p)):
                return False
    return True


class FiniteField:
    def __init__(self, p, k=1):
        if not isprime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if k < 1 or p**k > MAX_ORDER:
            raise ValueError(f"unsupported field size {p}^{k}")
        self.p = p
        self.k = k
        self.q = q = p**k
        self.modulus = next(m for m in _monic(k, p) if _is_irreducible(m, p))
        assert _is_irreducible(self.modulus, p)
        digits = np.array([[(v // p**i) % p for i in range(k)] for v in range(q)], dtype=np.int64)
        weights = p ** np.arange(k, dtype=np.int64)
        self.add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.neg = ((-digits) % p) @ weights
        self.mul_table = np.array(
            [[self._mul_slow(a, b) for b in range(q)] for a in range(q)], dtype=np.int64
        )
        self.inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            self.inv[a] = int(np.flatnonzero(self.mul_table[a] == 1)[0])
        self._gen = None
        self._check()

    def _digits(self, a):
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def _encode(self, coeffs):
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    def _mul_slow(self, a, b):
        x, y = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, u in enumerate(x):
            for j, v in enumerate(y):
                prod[i + j] = (prod[i + j] + u * v) % self.p
        return self._encode(_poly_mod(prod, self.modulus, self.p))

    def add(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.add_table[a, self.neg[b]])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def power(self, a, e):
        r = 1
        for _ in range(e):
            r = self.mul(r, a)
        return r

    def mult_order(self, a):
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        k, cur = 1, a
        while cur != 1:
            cur = self.mul(cur, a)
            k += 1
        return k

    @property
    def generator(self):
        """Least element generating the multiplicative group."""
        if self._gen is None:
            self._gen = next(a for a in range(1, self.q) if self.mult_order(a) == self.q - 1)
        return self._gen

    def _check(self):
        # every nonzero x satisfies x^(q-1) = 1, and inverses are two-sided
        cur = np.arange(self.q, dtype=np.int64)
        for _ in range(self.q - 2):
            cur = self.mul_table[cur, np.arange(self.q)]
        assert (cur[1:] == 1).all(), "multiplicative group order"
        assert (self.mul_table[np.arange(1, self.q), self.inv[1:]] == 1).all()

    def __repr__(self):
        return f"GF({self.p}^{self.k})"


@lru_cache(maxsize=None)
def field(q):
    """GF(q) for a prime power q."""
    p = prime_power_base(q)
    if p is None:
        raise ValueError(f"{q} is not a prime power")
    return FiniteField(p, valuation(q, p))
