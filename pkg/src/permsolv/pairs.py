"""Properties of two-generated subgroups <a, b> of an enumerated group.

Two independent routes answer the same questions:

* ``table``: the subgroup is the closure of {a, b} in the Cayley table and is
  cached by its membership bitset; solvability runs the derived series on
  element sets, nilpotency counts p-elements (a group is nilpotent iff for
  every prime p its p-elements number exactly the p-part of its order).
* ``chain``: a stabilizer chain for <a, b> with the generator-based derived
  and lower central series of ``structure``.

``auto`` picks the table route when the group is small enough for a table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import chain as _chain
from . import kernels
from .enumeration import DEFAULT_TABLE_CAP
from .group import DEFAULT_CAP, PermGroup, small_generating_set
from .numtheory import p_part, prime_divisors, prime_power_base
from .perm import Permutation
from .structure import is_nilpotent, is_solvable

__all__ = ["PairOracle", "SubInfo", "ClassOrbits", "centralizer_orbit_labels"]


@dataclass
class SubInfo:
    order: int
    solvable: bool | None = None
    nilpotent: bool | None = None


class PairOracle:
    """Cached answers about <e_i, e_j> for indices into ``G.enumeration()``."""

    def __init__(self, G, cap=DEFAULT_CAP, route="auto", table_cap=DEFAULT_TABLE_CAP):
        self.G = G
        self.E = E = G.enumeration(cap)
        self.N = E.order
        if route == "auto":
            route = "table" if self.N <= table_cap else "chain"
        if route not in ("table", "chain"):
            raise ValueError(f"unknown route {route!r}")
        self.route = route
        self.G_solvable = is_solvable(G)
        self.G_nilpotent = is_nilpotent(G)
        self._raw = {}
        self._pairs = {}
        self._subs = {}
        self.evaluations = 0
        if route == "table":
            self.table = E.table(max(table_cap, self.N))
            self.inv = np.asarray(E.inverse, dtype=np.int64)
            self.orders = E.orders

    # -- element helpers --------------------------------------------------

    def raw(self, i):
        r = self._raw.get(i)
        if r is None:
            r = tuple(int(v) for v in self.E.elems[i])
            self._raw[i] = r
        return r

    def perm(self, i):
        return Permutation._raw(self.raw(i))

    def commute(self, i, j):
        x, y = self.E.elems[i], self.E.elems[j]
        return bool((x[y] == y[x]).all())

    # -- subgroup info ----------------------------------------------------

    def info(self, i, j):
        key = (i, j) if i <= j else (j, i)
        got = self._pairs.get(key)
        if got is None:
            self.evaluations += 1
            got = self._table_info(*key) if self.route == "table" else self._chain_info(*key)
            self._pairs[key] = got
        return got

    def order(self, i, j):
        return self.info(i, j).order

    def solvable(self, i, j):
        inf = self.info(i, j)
        if inf.solvable is None:
            inf.solvable = self._solvable(inf)
        return inf.solvable

    def nilpotent(self, i, j):
        inf = self.info(i, j)
        if inf.nilpotent is None:
            inf.nilpotent = self._nilpotent(inf)
        return inf.nilpotent

    def abelian(self, i, j):
        return self.commute(i, j)

    def generates(self, i, j):
        return self.order(i, j) == self.N

    def predicate(self, relation):
        return {
            "commuting": self.commute,
            "abelian": self.commute,
            "nilpotent": self.nilpotent,
            "solvable": self.solvable,
            "generating": self.generates,
        }[relation]

    # table route

    def _table_info(self, i, j):
        mask = kernels.closure_mask(self.table, np.array([i, j], dtype=np.int64), 0)
        key = np.packbits(mask).tobytes()
        inf = self._subs.get(key)
        if inf is None:
            inf = _TableSub(int(mask.sum()), mask)
            self._subs[key] = inf
        return inf

    # chain route

    def _chain_info(self, i, j):
        ch = _chain.build([self.raw(i), self.raw(j)], self.E.degree)
        inf = _ChainSub(ch.order(), ch, (i, j))
        return inf

    def _shortcut(self, order, whole):
        if order == self.N:
            return whole
        if order == 1 or prime_power_base(order) is not None:
            return True
        return None

    def _solvable(self, inf):
        s = self._shortcut(inf.order, self.G_solvable)
        if s is not None:
            return s
        if isinstance(inf, _TableSub):
            return self._mask_solvable(inf.mask)
        return is_solvable(self._chain_group(inf))

    def _nilpotent(self, inf):
        s = self._shortcut(inf.order, self.G_nilpotent)
        if s is not None:
            return s
        if isinstance(inf, _TableSub):
            return self._mask_nilpotent(inf.mask)
        return is_nilpotent(self._chain_group(inf))

    def _chain_group(self, inf):
        H = PermGroup([self.perm(inf.pair[0]), self.perm(inf.pair[1])], self.E.degree)
        H._chain = inf.chain
        return H

    def _mask_solvable(self, mask):
        cur = mask
        while True:
            members = np.flatnonzero(cur)
            if len(members) == 1:
                return True
            comm = kernels.commutator_mask(self.table, self.inv, members, members)
            nxt = kernels.closure_mask(self.table, np.flatnonzero(comm), 0)
            if nxt.sum() == len(members):
                return False
            cur = nxt

    def _mask_nilpotent(self, mask):
        members = np.flatnonzero(mask)
        n = len(members)
        orders = self.orders[members]
        for p in prime_divisors(n):
            count = sum(1 for o in orders if o == 1 or prime_power_base(int(o)) == p)
            if count != p_part(n, p):
                return False
        return True


class _TableSub(SubInfo):
    def __init__(self, order, mask):
        super().__init__(order)
        self.mask = mask


class _ChainSub(SubInfo):
    def __init__(self, order, ch, pair):
        super().__init__(order)
        self.chain = ch
        self.pair = pair


class ClassOrbits:
    """Conjugation bookkeeping for an enumerated group.

    ``maps[s][i]`` is the index of s^-1 e_i s for each generator s.  Within a
    class, a breadth-first tree from the representative gives, for every
    member v, a word w with rep^w = v.
    """

    def __init__(self, E):
        self.E = E
        gens = [g.raw for g in E.group.generators if not g.is_identity()]
        self.gens = gens
        self.maps = [np.asarray(E.conj_map(g), dtype=np.int64) for g in gens]
        self._trees = {}

    def tree(self, class_id):
        """BFS order of the class and (parent, generator) per member."""
        got = self._trees.get(class_id)
        if got is None:
            rep = self.E.classes[class_id].rep
            parent = {rep: (-1, -1)}
            order = [rep]
            for v in order:
                for k, m in enumerate(self.maps):
                    w = int(m[v])
                    if w not in parent:
                        parent[w] = (v, k)
                        order.append(w)
            got = (order, parent)
            self._trees[class_id] = got
        return got

    def conjugator(self, class_id, target):
        """g with rep^g = target (as a 0-based image tuple)."""
        _, parent = self.tree(class_id)
        word = []
        v = target
        while parent[v][0] != -1:
            v, k = parent[v]
            word.append(k)
        g = tuple(range(self.E.degree))
        for k in reversed(word):
            g = _chain.mul(g, self.gens[k])
        return g

    def conjugator_between(self, a, b):
        """g with a^g = b for a, b in the same class."""
        cid = self.E.class_of(a)
        ga = self.conjugator(cid, a)
        gb = self.conjugator(cid, b)
        return _chain.mul(_chain.inv(ga), gb)

    def propagate_rows(self, class_id, rep_row):
        """Rows for every class member from the representative's row.

        ``rep_row[y]`` is a conjugation-invariant pair predicate P(rep, y); the
        row of v = rep^w is P(v, y) = P(rep, y^(w^-1)).
        """
        order, parent = self.tree(class_id)
        rows = {order[0]: rep_row}
        for v in order[1:]:
            u, k = parent[v]
            row = np.empty_like(rep_row)
            row[self.maps[k]] = rows[u]
            rows[v] = row
        return rows


def centralizer_orbit_labels(E, x):
    """Label per element of its orbit under conjugation by C(e_x).

    Labels are the least index in the orbit, so the distinct labels within
    a conjugacy class are one representative per C(x)-orbit.
    """
    cidx = np.flatnonzero(E.commuting_mask(x))
    if len(cidx) == 1:
        return np.arange(E.order, dtype=np.int64)
    chosen, _ = small_generating_set(
        E.group, (tuple(int(v) for v in E.elems[i]) for i in cidx[1:]), len(cidx)
    )
    maps = np.stack([np.asarray(E.conj_map(c), dtype=np.int64) for c in chosen])
    return kernels.component_labels(maps)
