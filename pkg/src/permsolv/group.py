"""Permutation groups given by generators, backed by a lazily built chain."""

from __future__ import annotations

import threading

from . import chain as _chain
from .errors import CapExceeded, DegreeMismatch, NotInAmbient, PointOutOfRange
from .perm import Permutation, parse_perm

__all__ = [
    "DEFAULT_CAP",
    "PermGroup",
    "SubgroupHandle",
    "build_chain",
    "group_order",
    "contains",
    "enumerate_elements",
    "orbit",
]

DEFAULT_CAP = 1_000_000


def _coerce(gens, degree):
    out = []
    for g in gens:
        if isinstance(g, str):
            if degree is None:
                raise ValueError("degree is required for cycle-string generators")
            g = parse_perm(g, degree)
        out.append(g)
    return out


class PermGroup:
    """Group generated by permutations of a common degree."""

    def __init__(self, generators, degree=None, name=None):
        gens = _coerce(list(generators), degree)
        if not gens:
            raise ValueError("at least one generator is required")
        deg = gens[0].degree if degree is None else degree
        for g in gens:
            if g.degree != deg:
                raise DegreeMismatch(f"generator of degree {g.degree} in degree-{deg} group")
        self.degree = deg
        self.generators = tuple(gens)
        self.name = name
        self._lock = threading.Lock()
        self._chain = None
        self._enum = None

    # chain is built once under a lock; readers afterwards need no locking
    @property
    def chain(self):
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = _chain.build([g.raw for g in self.generators], self.degree)
        return self._chain

    def order(self):
        return self.chain.order()

    def contains(self, p):
        if p.degree != self.degree:
            raise DegreeMismatch(f"degree {p.degree} element tested in degree-{self.degree} group")
        return self.chain.contains(p.raw)

    def __contains__(self, p):
        return self.contains(p)

    def __len__(self):
        return self.order()

    def identity(self):
        return Permutation.identity(self.degree)

    def is_trivial(self):
        return self.order() == 1

    def orbit(self, point):
        if not 1 <= point <= self.degree:
            raise PointOutOfRange(f"point {point} outside 1..{self.degree}")
        seen = {point - 1}
        queue = [point - 1]
        raws = [g.raw for g in self.generators]
        for pt in queue:
            for g in raws:
                img = g[pt]
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        return {p + 1 for p in seen}

    def is_transitive(self):
        return len(self.orbit(1)) == self.degree

    def enumeration(self, cap=DEFAULT_CAP):
        """Enumerated form (element arrays, indices, classes); cached."""
        order = self.order()
        if order > cap:
            raise CapExceeded(order, cap)
        if self._enum is None:
            from .enumeration import Enumerated

            with self._lock:
                if self._enum is None:
                    self._enum = Enumerated(self)
        return self._enum

    def elements(self, cap=DEFAULT_CAP):
        return self.enumeration(cap).permutations()

    def subgroup(self, elems):
        return SubgroupHandle(self, elems)

    def __repr__(self):
        label = self.name or f"degree {self.degree}, {len(self.generators)} generators"
        return f"<PermGroup {label}>"


class SubgroupHandle(PermGroup):
    """Subgroup of a known ambient group with its own chain."""

    def __init__(self, ambient, generators, name=None, check=True):
        gens = _coerce(list(generators), ambient.degree)
        if not gens:
            gens = [ambient.identity()]
        if check:
            for g in gens:
                if not ambient.contains(g):
                    raise NotInAmbient(f"{g} is not in the ambient group")
        super().__init__(gens, ambient.degree, name=name)
        self.ambient = ambient

    def index(self):
        return self.ambient.order() // self.order()


def build_chain(G):
    return G.chain


def group_order(G):
    return G.order()


def contains(G, p):
    return G.contains(p)


def enumerate_elements(G, cap=DEFAULT_CAP):
    return G.elements(cap)


def orbit(G, point):
    return G.orbit(point)


def small_generating_set(ambient, candidates, target_order=None):
    """Greedy generating set for the subgroup spanned by ``candidates``.

    Keeps a candidate only when it enlarges the group built so far; stops
    early once ``target_order`` is reached.
    """
    chosen = []
    sub = _chain.StabilizerChain(ambient.degree)
    for c in candidates:
        raw = c.raw if isinstance(c, Permutation) else c
        if sub.extend(raw):
            chosen.append(Permutation._raw(tuple(raw)))
            if target_order is not None and sub.order() >= target_order:
                break
    return chosen, sub
