"""Cycle-type combinatorics in symmetric and alternating groups.

Everything here is closed-form: centralizer orders, class splitting and
realness in A_n are computed from the cycle type alone, and the explicit
element constructions are checked by direct permutation arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial, prod

from .errors import DegreeTooSmall, NoSuitablePrime, NotApplicable, OddPermutation
from .numtheory import (
    cyclotomic_value,
    isprime,
    ppd,
    primes_between,
    primitive_root,
    two_adic_identity_check,
    valuation,
)
from .perm import CycleType, Permutation

__all__ = [
    "CycleType",
    "RealElementFinding",
    "SupportObstruction",
    "DEFAULT_SEARCH_BOUND",
    "centralizer_order_sym",
    "splits_in_alt",
    "centralizer_order_alt",
    "is_real_in_alt",
    "even_cycle_types",
    "search_odd_centralizer_real",
    "construct_inverting_pair",
    "construct_support_obstruction_pair",
    "ppd",
    "cyclotomic_value",
    "two_adic_identity_check",
]

DEFAULT_SEARCH_BOUND = 64


def _ct(ct):
    return ct if isinstance(ct, CycleType) else CycleType(ct)


def centralizer_order_sym(ct):
    """Product over lengths l with multiplicity m of l^m * m!."""
    ct = _ct(ct)
    return prod(l**m * factorial(m) for l, m in ct.parts.items())


def _require_even(ct):
    if not ct.is_even:
        raise OddPermutation(f"cycle type {ct} is odd")


def splits_in_alt(ct):
    """An S_n class of even type splits in A_n iff its lengths are odd and distinct."""
    ct = _ct(ct)
    _require_even(ct)
    return all(l % 2 == 1 and m == 1 for l, m in ct.parts.items())


def centralizer_order_alt(ct):
    ct = _ct(ct)
    full = centralizer_order_sym(ct)
    return full if splits_in_alt(ct) else full // 2


def is_real_in_alt(ct):
    """Realness in A_n.

    Non-split classes are real since the S_n class is real and is a single
    A_n class.  In the split case the centralizer lies in A_n, so every
    inverting element has the parity of the standard one, which reverses
    each l-cycle with (l - 1)/2 transpositions.
    """
    ct = _ct(ct)
    if not splits_in_alt(ct):
        return True
    return sum((l - 1) // 2 for l in ct.parts) % 2 == 0


def _partitions(n, largest=None):
    """Partitions of n as non-increasing tuples."""
    if largest is None or largest > n:
        largest = n
    if n == 0:
        yield ()
        return
    for first in range(largest, 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def even_cycle_types(n):
    for parts in _partitions(n):
        ct = CycleType(list(parts))
        if ct.is_even:
            yield ct


def _power_partitions(total, powers):
    """Partitions of ``total`` into the given parts (descending), as lists."""
    if total == 0:
        yield []
        return
    for i, part in enumerate(powers):
        if part <= total:
            for rest in _power_partitions(total - part, powers[i:]):
                yield [part] + rest


@dataclass(frozen=True)
class RealElementFinding:
    n: int
    order: int
    cycle_type: CycleType
    centralizer_order_alt: int
    class_label_hint: str | None = None

    def as_dict(self):
        return {
            "n": self.n,
            "order": self.order,
            "cycle_type": {str(k): v for k, v in self.cycle_type.parts.items()},
            "centralizer": self.centralizer_order_alt,
            "label_hint": self.class_label_hint,
        }


def search_odd_centralizer_real(n, bound=DEFAULT_SEARCH_BOUND):
    """All real classes of A_n of odd prime-power order with odd centralizer.

    The cycle lengths of such an element are powers of a single odd prime, so
    the search runs over primes p and partitions of the moved points into
    powers of p; the remaining points are fixed.
    """
    if not 5 <= n <= bound:
        raise ValueError(f"n must lie in 5..{bound}")
    found = []
    for p in primes_between(3, n):
        powers = []
        pk = p
        while pk <= n:
            powers.append(pk)
            pk *= p
        powers.reverse()
        for moved in range(p, n + 1):
            for parts in _power_partitions(moved, powers):
                ct = CycleType(parts + [1] * (n - moved))
                if not ct.is_even:
                    continue
                c = centralizer_order_alt(ct)
                if c % 2 == 0 or not is_real_in_alt(ct):
                    continue
                order = ct.element_order
                found.append(RealElementFinding(n, order, ct, c, f"{order}?"))
    found.sort(key=lambda f: (-f.order, f.centralizer_order_alt, f.cycle_type.lengths))
    return found


# ------------------------------------------------------------ constructions


def _cycle_perm(points, n):
    return Permutation.from_cycles([points], n)


def construct_inverting_pair(n):
    """Real element x of odd order with odd A_n-centralizer and an even t with x^t = x^-1.

    For odd n, x is an (n-2)-cycle with centralizer order n-2; for even n, x
    is an (n-3)-cycle with centralizer order 3(n-3).  The identities are
    checked before returning.
    """
    if n < 5:
        raise DegreeTooSmall(f"need n >= 5, got {n}")
    length = n - 2 if n % 2 else n - 3
    k = (length - 1) // 2
    x = _cycle_perm(list(range(1, length + 1)), n)
    cycles = [[i, 2 * k + 2 - i] for i in range(1, k + 1)]
    if k % 2:
        cycles.append([2 * k + 2, 2 * k + 3])
    t = Permutation.from_cycles(cycles, n)
    assert t.is_even(), "inverting element must be even"
    assert x**t == ~x, "t must invert x"
    ct = x.cycle_type()
    expected = length if n % 2 else 3 * length
    assert centralizer_order_alt(ct) == expected, "centralizer order formula"
    return x, t


@dataclass
class SupportObstruction:
    """Data and checked claims for the 2-element y normalizing <x>."""

    n: int
    p: int
    alpha: int
    a: int
    m: int
    y_order: int
    moved: int
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.checks.values())

    def as_dict(self):
        return {
            "n": self.n,
            "p": self.p,
            "alpha": self.alpha,
            "a": self.a,
            "m": self.m,
            "y_order": self.y_order,
            "moved": self.moved,
            "checks": dict(self.checks),
        }


def _smallest_prime_at_least_half(n):
    lo = (n + 1) // 2
    ps = primes_between(lo, n - 2)
    if not ps:
        raise NoSuitablePrime(f"no prime in [{n}/2, {n - 2}]")
    return ps[0]


def _partition_types(k):
    for parts in _partitions(k):
        yield CycleType(list(parts)) if parts else None


def construct_support_obstruction_pair(n, p=None, direct_limit=20):
    """A p-cycle x and a 2-element y in A_n normalizing but not centralizing <x>.

    Every S_n-conjugate of y moves p + 1 points while C_{S_n}(x) is
    <x> x Sym(n - p), whose p-free elements move at most n - p < p + 1
    points; so no conjugate of y commutes with x.  Used for n = 24 (p = 19)
    and for n >= 42.
    """
    if n != 24 and n < 42:
        raise NotApplicable(f"construction applies to n = 24 or n >= 42, got {n}")
    if p is None:
        p = 19 if n == 24 else _smallest_prime_at_least_half(n)
    if not isprime(p) or not (2 * p >= n and p <= n - 2):
        raise NoSuitablePrime(f"{p} is not a prime in [{n}/2, {n - 2}]")
    alpha = primitive_root(p)
    a = valuation(p - 1, 2)
    m = (p - 1) >> a

    x = _cycle_perm(list(range(1, p + 1)), n)
    # t: i -> alpha*i mod p on residues, point p standing for residue 0
    imgs = list(range(1, n + 1))
    for i in range(1, p):
        imgs[i - 1] = (alpha * i) % p or p
    t = Permutation(imgs)
    s = t * Permutation.from_cycles([[p + 1, p + 2]], n)
    y = s**m

    checks = {
        "t_conjugates_x_to_power": x**t == x**alpha,
        "y_even": y.is_even(),
        "y_order_is_2_power": y.order() == 2**a,
        "y_normalizes_x": x**y == x ** pow(alpha, m, p),
        "y_not_centralizing": x**y != x,
        "y_moves_p_plus_1": len(y.support()) == p + 1,
        "support_bound": n - p < p + 1,
    }
    if n - p <= direct_limit:
        # C_{S_n}(x) = <x> x Sym(rest): its elements have type {p:1} + T or {1:p} + T
        target = y.cycle_type()
        hit = False
        for rest in _partition_types(n - p):
            base = dict(rest.parts) if rest else {}
            for head in ({p: 1}, {1: p}):
                merged = dict(base)
                for l, mult in head.items():
                    merged[l] = merged.get(l, 0) + mult
                if CycleType(merged) == target:
                    hit = True
        checks["no_conjugate_in_centralizer"] = not hit
    verdict = SupportObstruction(n, p, alpha, a, m, y.order(), len(y.support()), checks)
    return x, y, verdict


