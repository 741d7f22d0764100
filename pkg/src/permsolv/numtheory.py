"""Integer helpers: prime-power tests, p-parts, primitive prime divisors,
cyclotomic values and a 2-adic valuation identity."""

from __future__ import annotations

from sympy import divisors, factorint, isprime, primerange

__all__ = [
    "isprime",
    "primes_between",
    "prime_divisors",
    "prime_power_base",
    "p_part",
    "valuation",
    "is_prime_power",
    "ppd",
    "cyclotomic_value",
    "two_adic_identity_check",
    "primitive_root",
]


def primes_between(lo, hi):
    """Primes p with lo <= p <= hi."""
    return list(primerange(lo, hi + 1))


def prime_divisors(n):
    return sorted(factorint(n)) if n > 1 else []


def prime_power_base(n):
    """The prime p with n = p^k (k >= 1), or None."""
    if n < 2:
        return None
    f = factorint(n)
    return next(iter(f)) if len(f) == 1 else None


def is_prime_power(n):
    return prime_power_base(n) is not None


def valuation(n, p):
    if n == 0:
        raise ValueError("valuation of zero")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def p_part(n, p):
    return p ** valuation(n, p)


def _mobius(n):
    f = factorint(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def cyclotomic_value(n, q):
    """Phi_n(q) as the Moebius product of (q^d - 1)^mu(n/d)."""
    if n < 1:
        raise ValueError("n must be positive")
    num = den = 1
    for d in divisors(n):
        mu = _mobius(n // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    value, rem = divmod(num, den)
    assert rem == 0
    return value


def ppd(q, n):
    """Smallest primitive prime divisor of q^n - 1, or None.

    Every primitive prime divisor divides Phi_n(q); the other primes dividing
    Phi_n(q) divide n, so the ppds are exactly the prime factors of Phi_n(q)
    that do not divide n.
    """
    if q < 2 or n < 2:
        raise ValueError("need q >= 2 and n >= 2")
    value = cyclotomic_value(n, q)
    cands = [ell for ell in factorint(value) if n % ell]
    return min(cands) if cands else None


def two_adic_identity_check(q, n):
    """Whether (q^n - 1)_2 == (q^2 - 1)_2 * (n/2)_2 for q = 3 mod 4, n even."""
    if q % 4 != 3 or n % 2:
        raise ValueError("identity applies to q = 3 (mod 4) and even n")
    return p_part(q**n - 1, 2) == p_part(q**2 - 1, 2) * p_part(n // 2, 2)


def primitive_root(p):
    """Smallest primitive root modulo the prime p (exhaustive search)."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    factors = prime_divisors(p - 1)
    for a in range(2, p):
        if all(pow(a, (p - 1) // f, p) != 1 for f in factors):
            return a
    raise AssertionError("unreachable")
