"""Deterministic Schreier-Sims over 0-based image tuples.

Each level stores its base point, the strong generators that fix every
earlier base point, and an explicit transversal ``{point: u}`` with
``u[base] == point``.  Products follow the right action used throughout the
package: ``mul(a, b)`` applies ``a`` first.
"""

from __future__ import annotations

from math import prod


def mul(a, b):
    return tuple(map(b.__getitem__, a))


def inv(a):
    out = [0] * len(a)
    for i, v in enumerate(a):
        out[v] = i
    return tuple(out)


def is_id(a):
    return all(i == v for i, v in enumerate(a))


def first_moved(a):
    for i, v in enumerate(a):
        if i != v:
            return i
    return -1


class _Level:
    __slots__ = ("base", "gens", "trans", "tinv", "orbit", "done")

    def __init__(self, base, n):
        self.base = base
        self.gens = []
        ident = tuple(range(n))
        self.trans = {base: ident}
        self.tinv = {base: ident}
        self.orbit = [base]
        self.done = set()

    def add_gen(self, g):
        self.gens.append(g)
        # extend the orbit: apply every generator to every known point
        trans = self.trans
        queue = list(self.orbit)
        k = 0
        while k < len(queue):
            pt = queue[k]
            k += 1
            u = trans[pt]
            for s in self.gens:
                img = s[pt]
                if img not in trans:
                    w = mul(u, s)
                    trans[img] = w
                    self.tinv[img] = inv(w)
                    self.orbit.append(img)
                    queue.append(img)


class StabilizerChain:
    """Base and strong generating set for the group generated by ``gens``.

    Immutable once :func:`build` returns; ``extend`` is used only while a
    caller still holds the sole reference (normal closures, derived series).
    """

    def __init__(self, degree):
        self.degree = degree
        self.levels = []
        self.strong = []

    # -- queries ---------------------------------------------------------

    @property
    def base(self):
        return [lv.base for lv in self.levels]

    def order(self):
        return prod(len(lv.orbit) for lv in self.levels)

    def transversal_sizes(self):
        return [len(lv.orbit) for lv in self.levels]

    def strip(self, g, start=0):
        """Sift ``g`` from level ``start``; return (residue, level reached)."""
        levels = self.levels
        for depth in range(start, len(levels)):
            lv = levels[depth]
            beta = g[lv.base]
            u = lv.tinv.get(beta)
            if u is None:
                return g, depth
            g = mul(g, u)
        return g, len(levels)

    def contains(self, g):
        h, _ = self.strip(g)
        return is_id(h)

    # -- construction ----------------------------------------------------

    def _new_level(self, h):
        b = first_moved(h)
        # keep base points unique; a residue at the bottom cannot fix all of them
        lv = _Level(b, self.degree)
        self.levels.append(lv)
        return lv

    def _install(self, h, lo, hi):
        """Add ``h`` as strong generator on levels lo..hi (creating hi if new)."""
        self.strong.append(h)
        if hi == len(self.levels):
            self._new_level(h)
        for depth in range(lo, hi + 1):
            self.levels[depth].add_gen(h)

    def extend(self, g):
        """Add ``g`` to the generators; returns True if the group grew."""
        h, depth = self.strip(g)
        if is_id(h):
            return False
        self._install(h, 0, depth)
        self._complete(depth)
        return True

    def _complete(self, top):
        i = top
        while i >= 0:
            lv = self.levels[i]
            residue = None
            for pt in list(lv.orbit):
                u = lv.trans[pt]
                for si, s in enumerate(lv.gens):
                    key = (pt, si)
                    if key in lv.done:
                        continue
                    lv.done.add(key)
                    img = s[pt]
                    sg = mul(mul(u, s), lv.tinv[img])
                    h, depth = self.strip(sg, i + 1)
                    if not is_id(h):
                        residue = (h, depth)
                        break
                if residue is not None:
                    break
            if residue is None:
                i -= 1
                continue
            h, depth = residue
            self._install(h, i + 1, depth)
            i = depth


def build(gens, degree):
    chain = StabilizerChain(degree)
    for g in gens:
        if not is_id(g):
            chain.extend(g)
    return chain
