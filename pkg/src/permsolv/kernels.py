"""Hot loops over enumerated groups.

Every kernel has a numba implementation and a pure-numpy twin with the same
signature.  The numba path is used when numba imports and the environment
variable ``PERMSOLV_PURE_NUMPY`` is unset (or "0"); setting it forces the
numpy twins, which is also what the benchmark compares against.

Array conventions: element rows are 0-based image arrays; ``posmap[l, pt]``
is the position of ``pt`` in the level-``l`` orbit or -1; ``uinv[l, pt]`` is
the inverse transversal element carrying ``pt`` back to the level-``l`` base
point; ``radix[l]`` is the orbit size; the chain rank of an element is its
mixed-radix transversal coordinate with level 0 most significant.
"""

from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("PERMSOLV_PURE_NUMPY", "").strip().lower()
_FORCE_NUMPY = _FLAG not in ("", "0", "false", "no")

try:  # pragma: no cover - import guard
    if _FORCE_NUMPY:
        raise ImportError
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

__all__ = [
    "HAVE_NUMBA",
    "backend",
    "sift_ranks",
    "component_labels",
    "closure_mask",
    "commutator_mask",
    "mul_table",
    "np_impl",
    "nb_impl",
]


def backend():
    return "numba" if HAVE_NUMBA else "numpy"


# ---------------------------------------------------------------- numpy twins


class np_impl:
    @staticmethod
    def sift_ranks(elems, bases, posmap, uinv, radix):
        cur = np.asarray(elems)
        n_rows = cur.shape[0]
        ranks = np.zeros(n_rows, dtype=np.int64)
        ok = np.ones(n_rows, dtype=bool)
        rows = np.arange(n_rows)[:, None]
        for lvl in range(len(bases)):
            pts = cur[:, bases[lvl]]
            pos = posmap[lvl][pts]
            ok &= pos >= 0
            pos = np.where(pos >= 0, pos, 0)
            ranks = ranks * radix[lvl] + pos
            cur = uinv[lvl][pts][rows, cur]
        ident = np.arange(cur.shape[1])
        ok &= (cur == ident).all(axis=1)
        return np.where(ok, ranks, -1)

    @staticmethod
    def component_labels(maps):
        """Connected components of the graph i -- maps[k][i]; label = min index."""
        maps = np.asarray(maps, dtype=np.int64)
        labels = np.arange(maps.shape[1], dtype=np.int64)
        while True:
            before = labels.copy()
            for m in maps:
                # push labels along both directions of every edge
                np.minimum.at(labels, m, labels.copy())
                labels = np.minimum(labels, labels[m])
            labels = labels[labels]
            if np.array_equal(labels, before):
                return labels

    @staticmethod
    def closure_mask(table, gens, identity):
        n_el = table.shape[0]
        mask = np.zeros(n_el, dtype=bool)
        mask[identity] = True
        frontier = np.array([identity], dtype=np.int64)
        gens = np.asarray(gens, dtype=np.int64)
        if gens.size == 0:
            return mask
        while frontier.size:
            prods = table[frontier][:, gens].ravel()
            prods = np.unique(prods)
            new = prods[~mask[prods]]
            mask[new] = True
            frontier = new
        return mask

    @staticmethod
    def commutator_mask(table, inv, left, right):
        """Mask of all commutators a^-1 b^-1 a b with a in left, b in right."""
        a = np.asarray(left, dtype=np.int64)[:, None]
        b = np.asarray(right, dtype=np.int64)[None, :]
        comm = table[table[inv[a], inv[b]], table[a, b]]
        out = np.zeros(table.shape[0], dtype=bool)
        out[comm.ravel()] = True
        return out

    @staticmethod
    def mul_table(elems, bases, posmap, uinv, radix, lex_of_rank):
        n_el, deg = elems.shape
        dtype = np.int16 if n_el < 2**15 else np.int32
        table = np.empty((n_el, n_el), dtype=dtype)
        for i in range(n_el):
            prods = elems[:, elems[i]]  # row j is elems[i] * elems[j]
            table[i] = lex_of_rank[
                np_impl.sift_ranks(prods, bases, posmap, uinv, radix)
            ]
        return table


# ---------------------------------------------------------------- numba path

if HAVE_NUMBA:

    @njit(cache=True)
    def _sift_one(row, bases, posmap, uinv, radix, buf, tmp):
        deg = row.shape[0]
        for k in range(deg):
            buf[k] = row[k]
        rank = 0
        for lvl in range(bases.shape[0]):
            pt = buf[bases[lvl]]
            pos = posmap[lvl, pt]
            if pos < 0:
                return -1
            rank = rank * radix[lvl] + pos
            for k in range(deg):
                tmp[k] = uinv[lvl, pt, buf[k]]
            for k in range(deg):
                buf[k] = tmp[k]
        for k in range(deg):
            if buf[k] != k:
                return -1
        return rank

    @njit(cache=True)
    def _nb_sift_ranks(elems, bases, posmap, uinv, radix):
        n_rows, deg = elems.shape
        out = np.empty(n_rows, dtype=np.int64)
        buf = np.empty(deg, dtype=np.int64)
        tmp = np.empty(deg, dtype=np.int64)
        for r in range(n_rows):
            out[r] = _sift_one(elems[r], bases, posmap, uinv, radix, buf, tmp)
        return out

    @njit(cache=True)
    def _find(parent, i):
        root = i
        while parent[root] != root:
            root = parent[root]
        while parent[i] != root:
            nxt = parent[i]
            parent[i] = root
            i = nxt
        return root

    @njit(cache=True)
    def _nb_component_labels(maps):
        n_el = maps.shape[1]
        parent = np.arange(n_el)
        for k in range(maps.shape[0]):
            for i in range(n_el):
                a = _find(parent, i)
                b = _find(parent, maps[k, i])
                if a < b:
                    parent[b] = a
                elif b < a:
                    parent[a] = b
        labels = np.empty(n_el, dtype=np.int64)
        for i in range(n_el):
            labels[i] = _find(parent, i)
        return labels

    @njit(cache=True)
    def _nb_closure_mask(table, gens, identity):
        n_el = table.shape[0]
        mask = np.zeros(n_el, dtype=np.bool_)
        queue = np.empty(n_el, dtype=np.int64)
        mask[identity] = True
        queue[0] = identity
        head = 0
        tail = 1
        while head < tail:
            h = queue[head]
            head += 1
            for gi in range(gens.shape[0]):
                p = table[h, gens[gi]]
                if not mask[p]:
                    mask[p] = True
                    queue[tail] = p
                    tail += 1
        return mask

    @njit(cache=True)
    def _nb_commutator_mask(table, inv, left, right):
        out = np.zeros(table.shape[0], dtype=np.bool_)
        for i in range(left.shape[0]):
            a = left[i]
            ia = inv[a]
            for j in range(right.shape[0]):
                b = right[j]
                out[table[table[ia, inv[b]], table[a, b]]] = True
        return out

    @njit(cache=True)
    def _nb_mul_table(elems, bases, posmap, uinv, radix, lex_of_rank, table):
        n_el, deg = elems.shape
        prod = np.empty(deg, dtype=np.int64)
        buf = np.empty(deg, dtype=np.int64)
        tmp = np.empty(deg, dtype=np.int64)
        for i in range(n_el):
            for j in range(n_el):
                for k in range(deg):
                    prod[k] = elems[j, elems[i, k]]
                table[i, j] = lex_of_rank[
                    _sift_one(prod, bases, posmap, uinv, radix, buf, tmp)
                ]
        return table

    class nb_impl:
        @staticmethod
        def sift_ranks(elems, bases, posmap, uinv, radix):
            return _nb_sift_ranks(np.ascontiguousarray(elems), bases, posmap, uinv, radix)

        @staticmethod
        def component_labels(maps):
            return _nb_component_labels(np.ascontiguousarray(maps, dtype=np.int64))

        @staticmethod
        def closure_mask(table, gens, identity):
            return _nb_closure_mask(table, np.asarray(gens, dtype=np.int64), identity)

        @staticmethod
        def commutator_mask(table, inv, left, right):
            return _nb_commutator_mask(
                table,
                inv,
                np.asarray(left, dtype=np.int64),
                np.asarray(right, dtype=np.int64),
            )

        @staticmethod
        def mul_table(elems, bases, posmap, uinv, radix, lex_of_rank):
            n_el = elems.shape[0]
            dtype = np.int16 if n_el < 2**15 else np.int32
            table = np.empty((n_el, n_el), dtype=dtype)
            return _nb_mul_table(
                np.ascontiguousarray(elems, dtype=np.int64),
                bases,
                posmap,
                uinv,
                radix,
                lex_of_rank,
                table,
            )

    _impl = nb_impl
else:
    nb_impl = None
    _impl = np_impl


def sift_ranks(elems, bases, posmap, uinv, radix):
    return _impl.sift_ranks(elems, bases, posmap, uinv, radix)


def component_labels(maps):
    return _impl.component_labels(maps)


def closure_mask(table, gens, identity):
    return _impl.closure_mask(table, gens, identity)


def commutator_mask(table, inv, left, right):
    return _impl.commutator_mask(table, inv, left, right)


def mul_table(elems, bases, posmap, uinv, radix, lex_of_rank):
    return _impl.mul_table(elems, bases, posmap, uinv, radix, lex_of_rank)
