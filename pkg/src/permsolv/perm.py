"""Permutations on the points 1..n.

Composition is a right action: ``a * b`` applies ``a`` first and then ``b``,
so ``(a * b)(i) == b(a(i))``.  Conjugation follows ``x ** g == ~g * x * g``.
Internally images are stored 0-based in a tuple; the public ``images``
property and cycle notation are 1-based.
"""

from __future__ import annotations

import re
from collections import Counter
from math import lcm

from .errors import DegreeMismatch, MalformedCycle, PointOutOfRange, PointRepeated

__all__ = [
    "Permutation",
    "CycleType",
    "parse_perm",
    "format_perm",
    "compose",
    "inverse",
    "order_of",
    "cycle_type_of",
    "identity",
]

_TOKEN_RE = re.compile(r"\s*(\(|\)|,|\d+|\S)")


class Permutation:
    __slots__ = ("_img", "_hash")

    def __init__(self, images, *, zero_based=False):
        img = tuple(int(i) for i in images)
        if not zero_based:
            img = tuple(i - 1 for i in img)
        n = len(img)
        if n == 0:
            raise ValueError("degree must be positive")
        if sorted(img) != list(range(n)):
            raise ValueError("images are not a bijection of 1..n")
        self._img = img
        self._hash = None

    @classmethod
    def _raw(cls, img):
        # trusted constructor for 0-based tuples produced internally
        p = object.__new__(cls)
        p._img = img
        p._hash = None
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree):
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls._raw(tuple(img))

    @property
    def degree(self):
        return len(self._img)

    @property
    def images(self):
        return tuple(i + 1 for i in self._img)

    @property
    def raw(self):
        """0-based image tuple."""
        return self._img

    def __call__(self, point):
        return self._img[point - 1] + 1

    def __mul__(self, other):
        return compose(self, other)

    def __invert__(self):
        return inverse(self)

    def __pow__(self, k):
        if isinstance(k, Permutation):
            return compose(compose(inverse(k), self), k)
        if k < 0:
            return inverse(self) ** (-k)
        result = tuple(range(len(self._img)))
        base = self._img
        while k:
            if k & 1:
                result = tuple(map(base.__getitem__, result))
            base = tuple(map(base.__getitem__, base))
            k >>= 1
        return Permutation._raw(result)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self._img == other._img

    def __lt__(self, other):
        return self._img < other._img

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._img)
        return self._hash

    def is_identity(self):
        return all(i == v for i, v in enumerate(self._img))

    def cycles(self):
        """Non-trivial cycles, each starting at its smallest point (1-based)."""
        seen = [False] * len(self._img)
        out = []
        for start in range(len(self._img)):
            if seen[start] or self._img[start] == start:
                continue
            cyc = [start + 1]
            seen[start] = True
            j = self._img[start]
            while j != start:
                seen[j] = True
                cyc.append(j + 1)
                j = self._img[j]
            out.append(tuple(cyc))
        return out

    def support(self):
        return [i + 1 for i, v in enumerate(self._img) if i != v]

    def order(self):
        return order_of(self)

    def cycle_type(self):
        return cycle_type_of(self)

    def is_even(self):
        return sum(len(c) - 1 for c in self.cycles()) % 2 == 0

    def __str__(self):
        return format_perm(self)

    def __repr__(self):
        return f"Permutation({format_perm(self)!r}, degree={self.degree})"


class CycleType:
    """Multiset of cycle lengths, fixed points counted as 1-cycles."""

    __slots__ = ("parts", "n")

    def __init__(self, parts):
        if isinstance(parts, dict):
            counts = Counter({int(k): int(v) for k, v in parts.items() if v})
        else:
            counts = Counter(int(p) for p in parts)
        if any(k < 1 for k in counts):
            raise ValueError("cycle lengths must be positive")
        self.parts = dict(sorted(counts.items(), reverse=True))
        self.n = sum(k * m for k, m in self.parts.items())
        if self.n < 1:
            raise ValueError("empty cycle type")

    @property
    def lengths(self):
        return tuple(k for k, m in self.parts.items() for _ in range(m))

    @property
    def is_even(self):
        return sum((k - 1) * m for k, m in self.parts.items()) % 2 == 0

    @property
    def element_order(self):
        return lcm(*self.parts)

    def __eq__(self, other):
        if isinstance(other, dict):
            other = CycleType(other)
        return isinstance(other, CycleType) and self.parts == other.parts

    def __hash__(self):
        return hash(tuple(self.parts.items()))

    def __repr__(self):
        inner = ", ".join(f"{k}:{m}" for k, m in self.parts.items())
        return "{" + inner + "}"

    def as_dict(self):
        return dict(self.parts)


def identity(degree):
    return Permutation.identity(degree)


def parse_perm(text, degree):
    """Parse cycle notation such as ``"(1,2,3)(4 5)"`` into a permutation."""
    if degree < 1:
        raise PointOutOfRange(f"degree must be positive, got {degree}")
    tokens = _TOKEN_RE.findall(text)
    if not tokens and text.strip():
        raise MalformedCycle(f"cannot parse {text!r}")
    if not tokens:
        raise MalformedCycle("empty permutation text; use '()' for the identity")
    cycles = []
    used = set()
    i = 0
    while i < len(tokens):
        if tokens[i] != "(":
            raise MalformedCycle(f"expected '(' in {text!r}, got {tokens[i]!r}")
        i += 1
        cyc = []
        expect_point = True
        while True:
            if i >= len(tokens):
                raise MalformedCycle(f"unbalanced parentheses in {text!r}")
            tok = tokens[i]
            i += 1
            if tok == ")":
                if cyc and expect_point:
                    raise MalformedCycle(f"dangling separator in {text!r}")
                break
            if tok == ",":
                if expect_point:
                    raise MalformedCycle(f"misplaced ',' in {text!r}")
                expect_point = True
                continue
            if not tok.isdigit():
                raise MalformedCycle(f"non-numeric token {tok!r} in {text!r}")
            pt = int(tok)
            if pt < 1 or pt > degree:
                raise PointOutOfRange(f"point {pt} outside 1..{degree}")
            if pt in used:
                raise PointRepeated(f"point {pt} occurs twice in {text!r}")
            used.add(pt)
            cyc.append(pt)
            expect_point = False
        if cyc:
            cycles.append(cyc)
        elif len(tokens) != 2:
            raise MalformedCycle(f"'()' may only stand alone, got {text!r}")
    return Permutation.from_cycles(cycles, degree)


def format_perm(p):
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(map(str, c)) + ")" for c in cycles)


def compose(a, b):
    """Apply ``a`` then ``b``."""
    if len(a._img) != len(b._img):
        raise DegreeMismatch(f"degrees {a.degree} and {b.degree} differ")
    return Permutation._raw(tuple(map(b._img.__getitem__, a._img)))


def inverse(p):
    inv = [0] * len(p._img)
    for i, v in enumerate(p._img):
        inv[v] = i
    return Permutation._raw(tuple(inv))


def cycle_type_of(p):
    counts = Counter(len(c) for c in p.cycles())
    moved = sum(k * m for k, m in counts.items())
    if p.degree - moved:
        counts[1] = p.degree - moved
    return CycleType(counts)


def order_of(p):
    return lcm(*(len(c) for c in p.cycles())) if not p.is_identity() else 1
