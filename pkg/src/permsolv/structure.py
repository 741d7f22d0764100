"""Structural algorithms on permutation groups.

Series and normal closures work on generators and stabilizer chains only.
Centralizers, classes, radicals, Sylow subgroups and coset actions filter an
enumerated group, so they take an enumeration cap and raise ``CapExceeded``
beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import chain as _chain
from . import kernels
from .errors import (
    IndexTooLarge,
    NotInAmbient,
    PrimeDoesNotDivide,
    RadicalNotSubgroup,
    SeriesTooLong,
)
from .group import DEFAULT_CAP, PermGroup, SubgroupHandle, small_generating_set
from .numtheory import isprime, p_part, prime_divisors, prime_power_base
from .perm import Permutation, compose, inverse

__all__ = [
    "SeriesResult",
    "ConjugacyClass",
    "commutator",
    "generated_subgroup",
    "normal_closure",
    "derived_series",
    "is_solvable",
    "lower_central_series",
    "is_nilpotent",
    "is_abelian",
    "is_p_group",
    "centralizer",
    "normalizer_mask",
    "conjugacy_classes",
    "is_real",
    "solvable_radical",
    "p_core",
    "sylow_subgroup",
    "coset_action",
    "is_minimal_non_nilpotent",
    "is_simple",
    "DEFAULT_SERIES_LEN",
    "DEFAULT_DEGREE_CAP",
]

DEFAULT_SERIES_LEN = 64
DEFAULT_DEGREE_CAP = 10_000


@dataclass
class SeriesResult:
    terms: list
    terminated: bool

    @property
    def orders(self):
        return [t.order() for t in self.terms]

    @property
    def reaches_trivial(self):
        return self.terms[-1].order() == 1


@dataclass
class ConjugacyClass:
    group: PermGroup = field(repr=False)
    class_id: int
    representative: Permutation
    size: int
    element_order: int

    def members(self):
        E = self.group.enumeration()
        return [E.perm(i) for i in E.members(self.class_id)]

    def __contains__(self, p):
        E = self.group.enumeration()
        try:
            return E.class_of(E.index_of(p)) == self.class_id
        except NotInAmbient:
            return False

    def centralizer_order(self):
        return self.group.order() // self.size


def commutator(a, b):
    """[a, b] = a^-1 b^-1 a b."""
    return compose(compose(inverse(a), inverse(b)), compose(a, b))


def _raw_comm(a, b):
    m = _chain.mul
    return m(m(_chain.inv(a), _chain.inv(b)), m(a, b))


def generated_subgroup(ambient, elems):
    elems = list(elems)
    if not elems:
        raise ValueError("elems must be non-empty")
    return SubgroupHandle(ambient, elems)


def _closure_under(chain, gens, conjugators):
    """Extend ``chain`` until it is closed under conjugation by ``conjugators``."""
    queue = list(gens)
    cinv = [_chain.inv(c) for c in conjugators]
    k = 0
    while k < len(queue):
        s = queue[k]
        k += 1
        for c, ci in zip(conjugators, cinv):
            conj = _chain.mul(_chain.mul(ci, s), c)
            if chain.extend(conj):
                gens.append(conj)
                queue.append(conj)
    return gens


def _normal_closure_raw(degree, raw_gens, raw_ambient):
    chain = _chain.StabilizerChain(degree)
    gens = []
    for s in raw_gens:
        if chain.extend(s):
            gens.append(s)
    _closure_under(chain, gens, raw_ambient)
    return gens, chain


def _handle(ambient, raw_gens, chain, name=None):
    perms = [Permutation._raw(g) for g in raw_gens] or [ambient.identity()]
    h = SubgroupHandle(ambient, perms, name=name, check=False)
    if raw_gens:
        h._chain = chain
    return h


def normal_closure(G, S):
    """Smallest normal subgroup of ``G`` containing every element of ``S``."""
    raws = []
    for s in S:
        if not G.contains(s):
            raise NotInAmbient(f"{s} is not in the group")
        raws.append(s.raw)
    gens, chain = _normal_closure_raw(G.degree, raws, [g.raw for g in G.generators])
    return _handle(G, gens, chain)


def derived_series(G, max_len=DEFAULT_SERIES_LEN):
    terms = [G]
    cur = G
    while True:
        if cur.order() == 1:
            return SeriesResult(terms, True)
        if len(terms) > max_len:
            raise SeriesTooLong(f"derived series longer than {max_len}")
        gens = [g.raw for g in cur.generators]
        comms = [_raw_comm(a, b) for i, a in enumerate(gens) for b in gens[i + 1 :]]
        new_gens, chain = _normal_closure_raw(G.degree, comms, gens)
        nxt = _handle(G if not isinstance(G, SubgroupHandle) else G.ambient, new_gens, chain)
        if nxt.order() == cur.order():
            return SeriesResult(terms, True)
        terms.append(nxt)
        cur = nxt


def is_solvable(G, max_len=DEFAULT_SERIES_LEN):
    return derived_series(G, max_len).reaches_trivial


def lower_central_series(G, max_len=DEFAULT_SERIES_LEN):
    terms = [G]
    cur = G
    top = [g.raw for g in G.generators]
    while True:
        if cur.order() == 1:
            return SeriesResult(terms, True)
        if len(terms) > max_len:
            raise SeriesTooLong(f"lower central series longer than {max_len}")
        comms = [_raw_comm(a.raw, b) for a in cur.generators for b in top]
        new_gens, chain = _normal_closure_raw(G.degree, comms, top)
        nxt = _handle(G if not isinstance(G, SubgroupHandle) else G.ambient, new_gens, chain)
        if nxt.order() == cur.order():
            return SeriesResult(terms, True)
        terms.append(nxt)
        cur = nxt


def is_nilpotent(G, max_len=DEFAULT_SERIES_LEN):
    return lower_central_series(G, max_len).reaches_trivial


def is_abelian(G):
    gens = [g.raw for g in G.generators]
    return all(_chain.mul(a, b) == _chain.mul(b, a) for i, a in enumerate(gens) for b in gens[i + 1 :])


def is_p_group(G, p=None):
    n = G.order()
    if n == 1:
        return True
    base = prime_power_base(n)
    return base is not None and (p is None or base == p)


# ------------------------------------------------------------ enumeration based


def _subgroup_from_indices(G, E, idx, name=None):
    """Handle for the subgroup whose elements are ``E.elems[idx]``."""
    idx = np.asarray(idx)
    if len(idx) == G.order():
        return SubgroupHandle(G, G.generators, name=name, check=False)
    cands = (E.elems[i] for i in idx if i != E.identity)
    chosen, chain = small_generating_set(G, (tuple(int(v) for v in r) for r in cands), len(idx))
    if chain.order() != len(idx):
        raise RadicalNotSubgroup(
            f"element set of size {len(idx)} generates a group of order {chain.order()}"
        )
    return _handle(G, [c.raw for c in chosen], chain, name=name)


def centralizer(G, x, cap=DEFAULT_CAP):
    """Centralizer of ``x`` in ``G`` by filtering the enumerated elements."""
    E = G.enumeration(cap)
    i = E.index_of(x)
    idx = np.flatnonzero(E.commuting_mask(i))
    return _subgroup_from_indices(G, E, idx)


def normalizer_mask(E, sub_mask, sub_gens):
    """Elements g of an enumerated group with s^g in the subgroup for all gens s."""
    out = np.ones(E.order, dtype=bool)
    ginv = E.elems[E.inverse]
    for s in sub_gens:
        s = np.asarray(s.raw if isinstance(s, Permutation) else s, dtype=E.dtype)
        # rows are g^-1 s g for every g, via (g^-1 s g)(k) = g[s[g^-1[k]]]
        rows = np.take_along_axis(E.elems, s[ginv].astype(np.int64), axis=1)
        out &= sub_mask[E.index_rows(rows)]
    return out


def conjugacy_classes(G, cap=DEFAULT_CAP):
    E = G.enumeration(cap)
    return [
        ConjugacyClass(G, c.index, E.perm(c.rep), c.size, c.element_order) for c in E.classes
    ]


def is_real(G, x, cap=DEFAULT_CAP):
    E = G.enumeration(cap)
    i = E.index_of(x)
    return E.class_of(i) == E.class_of(int(E.inverse[i]))


def _class_subgroup(G, cap, keep, name):
    """Subgroup generated by the classes whose normal closure passes ``keep``."""
    E = G.enumeration(cap)
    gens = [g.raw for g in G.generators]
    chosen = []
    for c in E.classes:
        if c.rep == E.identity:
            continue
        raw = tuple(int(v) for v in E.elems[c.rep])
        ngens, nchain = _normal_closure_raw(G.degree, [raw], gens)
        if keep(_handle(G, ngens, nchain)):
            chosen.append(c)
    raws = [tuple(int(v) for v in E.elems[c.rep]) for c in chosen]
    rgens, rchain = _normal_closure_raw(G.degree, raws, gens)
    result = _handle(G, rgens, rchain, name=name)
    expected = 1 + sum(c.size for c in chosen)
    if result.order() != expected:
        raise RadicalNotSubgroup(
            f"{name}: selected classes cover {expected} elements but generate order {result.order()}"
        )
    return result


def solvable_radical(G, cap=DEFAULT_CAP):
    """Largest normal solvable subgroup: x lies in it iff <x^G> is solvable."""
    R = _class_subgroup(G, cap, is_solvable, "R")
    if not is_solvable(R):
        raise RadicalNotSubgroup("radical candidate is not solvable")
    return R


def p_core(G, p, cap=DEFAULT_CAP):
    """Largest normal p-subgroup: x lies in it iff <x^G> is a p-group."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    return _class_subgroup(G, cap, lambda N: is_p_group(N, p), f"O_{p}")


def sylow_subgroup(G, p, cap=DEFAULT_CAP):
    """Sylow p-subgroup grown from a cyclic p-subgroup through normalizers."""
    order = G.order()
    if not isprime(p) or order % p:
        raise PrimeDoesNotDivide(f"{p} does not divide {order}")
    target = p_part(order, p)
    E = G.enumeration(cap)
    orders = E.orders
    # start with the element of largest p-power order (least index on ties)
    p_elems = np.flatnonzero(np.array([prime_power_base(int(o)) == p for o in orders]))
    start = int(p_elems[np.argmax(orders[p_elems])])
    gens = [E.perm(start)]
    sub = SubgroupHandle(G, gens, check=False)
    while sub.order() < target:
        mask = _member_mask(E, sub)
        norm = normalizer_mask(E, mask, sub.generators)
        cand = np.flatnonzero(norm & ~mask & np.isin(orders, [p**k for k in range(1, 64)]))
        if not len(cand):
            raise RuntimeError("no p-element in normalizer; Sylow growth failed")
        gens.append(E.perm(int(cand[0])))
        sub = SubgroupHandle(G, gens, check=False)
    return sub


def _member_mask(E, H):
    """Boolean mask over an enumerated ambient of the elements of ``H``."""
    ok = np.zeros(E.order, dtype=bool)
    ranks = _chain_member(H, E.elems)
    ok[ranks] = True
    return ok


def _chain_member(H, rows):
    from .enumeration import chain_arrays

    arrs = chain_arrays(H.chain, H.degree)
    r = kernels.sift_ranks(np.ascontiguousarray(rows), *arrs)
    return np.flatnonzero(r >= 0)


def coset_action(G, H, degree_cap=DEFAULT_DEGREE_CAP, cap=DEFAULT_CAP):
    """Action of ``G`` on the right cosets of ``H`` by right multiplication."""
    index = G.order() // H.order()
    if index > degree_cap:
        raise IndexTooLarge(index, degree_cap)
    E = G.enumeration(cap)
    gens = [h.raw for h in H.generators if not h.is_identity()]
    if gens:
        # Hg is the orbit of g under left multiplication by H
        maps = np.stack([E.left_mul_map(h) for h in gens])
        roots = kernels.component_labels(maps)
    else:
        roots = np.arange(E.order, dtype=np.int64)
    reps, label = np.unique(roots, return_inverse=True)
    if len(reps) != index:
        raise RuntimeError("coset count disagrees with the index")
    images = []
    for g in G.generators:
        moved = E.right_mul_map(g)[reps]
        images.append(Permutation._raw(tuple(int(v) for v in label[moved])))
    image = PermGroup(images, index, name=f"{G.name or 'G'}/cosets")
    if H.order() * image.order() == G.order():
        pass
    elif _is_normal(G, H):
        raise RuntimeError("coset action of a normal subgroup has the wrong kernel")
    return image


def _is_normal(G, H):
    return all(H.contains(h ** g) for h in H.generators for g in G.generators)


def is_simple(G, cap=DEFAULT_CAP):
    """Nonabelian simple: nonabelian and every nontrivial class normally generates G."""
    if G.order() == 1 or is_abelian(G):
        return False
    E = G.enumeration(cap)
    gens = [g.raw for g in G.generators]
    order = G.order()
    for c in E.classes:
        if c.rep == E.identity:
            continue
        raw = tuple(int(v) for v in E.elems[c.rep])
        _, ch = _normal_closure_raw(G.degree, [raw], gens)
        if ch.order() != order:
            return False
    return True


def is_minimal_non_nilpotent(G, cap=DEFAULT_CAP):
    """Non-nilpotent with every proper subgroup nilpotent.

    A finite group is nilpotent iff each of its 2-generated subgroups is, so
    it suffices that every proper subgroup <a, b> is nilpotent; ``a`` runs
    over class representatives by conjugation invariance.
    """
    if is_nilpotent(G):
        return False
    E = G.enumeration(cap)
    order = G.order()
    for c in E.classes:
        a = tuple(int(v) for v in E.elems[c.rep])
        for j in range(E.order):
            b = tuple(int(v) for v in E.elems[j])
            ch = _chain.build([a, b], G.degree)
            n = ch.order()
            if n == order:
                continue
            if prime_power_base(n) is not None or n == 1:
                continue
            H = PermGroup([Permutation._raw(a), Permutation._raw(b)], G.degree)
            H._chain = ch
            if not is_nilpotent(H):
                return False
    return True


def sylow_orders(G):
    return {p: p_part(G.order(), p) for p in prime_divisors(G.order())}
