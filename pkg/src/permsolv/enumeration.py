"""Fully enumerated groups: every element as a row of a numpy array.

Elements are stored in lexicographic order of their image sequences, so
index 0 is the identity and "least element" means "smallest index".  An
arbitrary row is located by sifting it through the stabilizer chain (giving
its transversal coordinates) and mapping that rank to the lexicographic
index.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import CapExceeded, NotInAmbient
from .perm import Permutation

DEFAULT_TABLE_CAP = 2000


def chain_arrays(chain, degree):
    levels = chain.levels
    n_lv = len(levels)
    dtype = np.uint8 if degree <= 256 else np.uint16
    bases = np.array([lv.base for lv in levels], dtype=np.int64)
    radix = np.array([len(lv.orbit) for lv in levels], dtype=np.int64)
    posmap = np.full((n_lv, degree), -1, dtype=np.int64)
    uinv = np.tile(np.arange(degree, dtype=dtype), (n_lv, degree, 1))
    for li, lv in enumerate(levels):
        for pos, pt in enumerate(lv.orbit):
            posmap[li, pt] = pos
            uinv[li, pt] = lv.tinv[pt]
    return bases, posmap, uinv, radix


@dataclass(frozen=True)
class ClassInfo:
    """One conjugacy class of an enumerated group (indices into ``elems``)."""

    index: int
    rep: int
    size: int
    element_order: int


class Enumerated:
    def __init__(self, group):
        self.group = group
        self.degree = deg = group.degree
        chain = group.chain
        self.order = chain.order()
        self.dtype = np.uint8 if deg <= 256 else np.uint16
        self._arrays = chain_arrays(chain, deg)

        # all products u_k ... u_0 of transversal elements; row index == chain rank
        rows = np.arange(deg, dtype=self.dtype)[None, :]
        for lv in reversed(chain.levels):
            trans = np.array([lv.trans[pt] for pt in lv.orbit], dtype=self.dtype)
            rows = trans[:, rows].reshape(-1, deg)
        order = np.lexsort(rows.T[::-1])
        self.elems = np.ascontiguousarray(rows[order])
        self.lex_of_rank = np.empty(self.order, dtype=np.int64)
        self.lex_of_rank[order] = np.arange(self.order, dtype=np.int64)
        self.identity = 0
        self._inv = None
        self._orders = None
        self._labels = None
        self._classes = None
        self._members = {}
        self._table = None

    # -- indexing --------------------------------------------------------

    def ranks(self, rows):
        return kernels.sift_ranks(np.ascontiguousarray(rows, dtype=self.dtype), *self._arrays)

    def index_rows(self, rows):
        r = self.ranks(rows)
        if (r < 0).any():
            raise NotInAmbient("row is not an element of the enumerated group")
        return self.lex_of_rank[r]

    def index_of(self, p):
        raw = p.raw if isinstance(p, Permutation) else p
        return int(self.index_rows(np.asarray([raw], dtype=self.dtype))[0])

    def perm(self, i):
        return Permutation._raw(tuple(int(v) for v in self.elems[i]))

    def permutations(self):
        return [Permutation._raw(tuple(r)) for r in self.elems.tolist()]

    # -- elementwise operations -----------------------------------------

    def right_mul_map(self, g):
        """Index map i -> index(e_i * g)."""
        g = np.asarray(g.raw if isinstance(g, Permutation) else g, dtype=self.dtype)
        return self.index_rows(g[self.elems])

    def left_mul_map(self, g):
        """Index map i -> index(g * e_i)."""
        g = np.asarray(g.raw if isinstance(g, Permutation) else g, dtype=np.int64)
        return self.index_rows(self.elems[:, g])

    def conj_map(self, g, subset=None):
        """Index map i -> index(g^-1 e_i g), optionally only for ``subset``."""
        raw = g.raw if isinstance(g, Permutation) else g
        g = np.asarray(raw, dtype=self.dtype)
        ginv = np.argsort(g)
        rows = self.elems if subset is None else self.elems[subset]
        return self.index_rows(g[rows[:, ginv]])

    @property
    def inverse(self):
        if self._inv is None:
            inv_rows = np.empty_like(self.elems)
            rows = np.arange(self.order)[:, None]
            inv_rows[rows, self.elems] = np.arange(self.degree, dtype=self.dtype)[None, :]
            self._inv = self.index_rows(inv_rows)
        return self._inv

    @property
    def orders(self):
        if self._orders is None:
            out = np.zeros(self.order, dtype=np.int64)
            ident = np.arange(self.degree)
            cur = self.elems.astype(np.int64)
            k = 1
            while True:
                hit = (out == 0) & (cur == ident).all(axis=1)
                out[hit] = k
                if (out > 0).all():
                    break
                cur = np.take_along_axis(self.elems, cur, axis=1).astype(np.int64)
                k += 1
            self._orders = out
        return self._orders

    def power_index(self, i, k):
        return self.index_of(self.perm(i) ** k)

    def commuting_mask(self, i):
        x = self.elems[i]
        return (x[self.elems] == self.elems[:, x]).all(axis=1)

    def centralizer_size(self, i):
        return int(self.commuting_mask(i).sum())

    # -- conjugacy classes ----------------------------------------------

    @property
    def labels(self):
        """Class id per element; ids follow the canonical class order."""
        if self._labels is None:
            gens = [g.raw for g in self.group.generators if not g.is_identity()]
            if gens:
                maps = np.stack([self.conj_map(g) for g in gens])
                roots = kernels.component_labels(maps)
            else:
                roots = np.arange(self.order, dtype=np.int64)
            reps, inverse_idx, sizes = np.unique(roots, return_inverse=True, return_counts=True)
            orders = self.orders[reps]
            sort = np.lexsort((reps, sizes, orders))
            rank_of = np.empty(len(reps), dtype=np.int64)
            rank_of[sort] = np.arange(len(reps))
            self._labels = rank_of[inverse_idx]
            self._classes = [
                ClassInfo(k, int(reps[j]), int(sizes[j]), int(orders[j]))
                for k, j in enumerate(sort)
            ]
        return self._labels

    @property
    def classes(self):
        self.labels
        return self._classes

    def class_of(self, i):
        return int(self.labels[i])

    def members(self, class_id):
        got = self._members.get(class_id)
        if got is None:
            got = np.flatnonzero(self.labels == class_id)
            self._members[class_id] = got
        return got

    # -- multiplication table for small groups --------------------------

    def table(self, cap=DEFAULT_TABLE_CAP):
        if self.order > cap:
            raise CapExceeded(self.order, cap)
        if self._table is None:
            self._table = kernels.mul_table(self.elems, *self._arrays, self.lex_of_rank)
        return self._table
