"""Graphs on the nontrivial elements or nontrivial classes of a group.

Element graphs compute one adjacency row per class representative and carry
it to the rest of the class by conjugation, which preserves every relation
used here.  Class graphs fix the representative of the first class and let
the second element range over the whole second class.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import VertexUniverseMismatch
from .group import DEFAULT_CAP
from .pairs import ClassOrbits, PairOracle

__all__ = [
    "GroupGraph",
    "ELEMENT_RELATIONS",
    "CLASS_RELATIONS",
    "element_graph",
    "class_graph",
    "expanded_graph",
    "graph_equal",
    "dominant_vertices",
    "export_dot",
    "export_json",
    "parse_json",
]

ELEMENT_RELATIONS = ("commuting", "nilpotent", "solvable", "generating", "invariably-generating")
CLASS_RELATIONS = ("abelian", "nilpotent", "solvable")


class GroupGraph:
    """Undirected simple graph with packed bit-set adjacency rows."""

    def __init__(self, labels, adjacency, kind, relation):
        adj = np.asarray(adjacency, dtype=bool)
        n = len(labels)
        if adj.shape != (n, n):
            raise ValueError("adjacency shape does not match the vertex count")
        adj = adj | adj.T
        np.fill_diagonal(adj, False)
        self.labels = list(labels)
        self.kind = kind
        self.relation = relation
        self.n = n
        self._bits = np.packbits(adj, axis=1)

    @property
    def adjacency(self):
        return np.unpackbits(self._bits, axis=1, count=self.n).astype(bool)

    def row(self, i):
        return np.unpackbits(self._bits[i], count=self.n).astype(bool)

    def adjacent(self, i, j):
        return bool(self._bits[i, j >> 3] & (0x80 >> (j & 7)))

    def degree(self, i):
        return int(self.row(i).sum())

    def edges(self):
        ii, jj = np.nonzero(np.triu(self.adjacency, 1))
        return list(zip(ii.tolist(), jj.tolist()))

    def edge_count(self):
        return int(np.triu(self.adjacency, 1).sum())

    def is_complete(self):
        return self.edge_count() == self.n * (self.n - 1) // 2

    def __eq__(self, other):
        return isinstance(other, GroupGraph) and graph_equal(self, other)

    def __repr__(self):
        return f"<GroupGraph {self.kind}/{self.relation}: {self.n} vertices, {self.edge_count()} edges>"


def _element_labels(E):
    return [str(E.perm(i)) for i in range(1, E.order)]


def _class_label(E, c):
    centralizer = E.order // c.size
    return f"{c.element_order}:{c.size}:{centralizer}#{c.index}"


def element_graph(G, relation, cap=DEFAULT_CAP, oracle=None):
    """Graph on nontrivial elements with x ~ y when the relation holds for (x, y)."""
    if relation not in ELEMENT_RELATIONS:
        raise ValueError(f"unknown element relation {relation!r}")
    oracle = oracle or PairOracle(G, cap)
    E = oracle.E
    N = E.order
    orbits = ClassOrbits(E)
    full = np.zeros((N, N), dtype=bool)
    if relation == "commuting":
        for i in range(N):
            full[i] = E.commuting_mask(i)
    else:
        for c in E.classes:
            if c.rep == E.identity:
                continue
            if relation == "invariably-generating":
                rep_row = _invariable_row(oracle, orbits, c.rep)
            else:
                pred = oracle.predicate(relation)
                rep_row = np.fromiter((pred(c.rep, j) for j in range(N)), dtype=bool, count=N)
            for v, row in orbits.propagate_rows(c.index, rep_row).items():
                full[v] = row
    return GroupGraph(_element_labels(E), full[1:, 1:], "element", relation)


def _invariable_row(oracle, orbits, x):
    """x ~ y iff <x, y^g> = G for every g, i.e. for every member of y's class."""
    E = oracle.E
    row = np.zeros(E.order, dtype=bool)
    for c in E.classes:
        if c.rep == E.identity:
            continue
        members = E.members(c.index)
        ok = all(oracle.generates(x, int(j)) for j in members)
        row[members] = ok
    return row


def _class_matrix(oracle, relation):
    """Boolean matrix over all classes: C ~ D iff P(rep_C, d) for some d in D."""
    E = oracle.E
    pred = oracle.predicate(relation)
    k = len(E.classes)
    M = np.zeros((k, k), dtype=bool)
    for a in E.classes:
        for b in E.classes:
            if b.index < a.index:
                M[a.index, b.index] = M[b.index, a.index]
                continue
            M[a.index, b.index] = any(pred(a.rep, int(d)) for d in E.members(b.index))
    return M


def class_graph(G, relation, cap=DEFAULT_CAP, oracle=None):
    if relation not in CLASS_RELATIONS:
        raise ValueError(f"unknown class relation {relation!r}")
    oracle = oracle or PairOracle(G, cap)
    E = oracle.E
    M = _class_matrix(oracle, relation)
    labels = [_class_label(E, c) for c in E.classes[1:]]
    return GroupGraph(labels, M[1:, 1:], "class", relation)


def expanded_graph(G, relation, cap=DEFAULT_CAP, oracle=None):
    """Element graph: same class, or classes adjacent in the class graph."""
    if relation not in CLASS_RELATIONS:
        raise ValueError(f"unknown class relation {relation!r}")
    oracle = oracle or PairOracle(G, cap)
    E = oracle.E
    M = _class_matrix(oracle, relation)
    np.fill_diagonal(M, True)
    lab = np.asarray(E.labels)[1:]
    adj = M[lab][:, lab]
    return GroupGraph(_element_labels(E), adj, "expanded", relation)


def graph_equal(g1, g2):
    if g1.labels != g2.labels:
        raise VertexUniverseMismatch("graphs are on different vertex sets")
    return bool(np.array_equal(g1._bits, g2._bits))


def dominant_vertices(g):
    """Labels of the vertices adjacent to every other vertex."""
    adj = g.adjacency
    return [g.labels[i] for i in range(g.n) if adj[i].sum() == g.n - 1]


def export_dot(g):
    lines = [f"graph G {{", f'  // kind={g.kind} relation={g.relation}']
    for i, lab in enumerate(g.labels):
        lines.append(f'  {i} [label="{lab}"];')
    for i, j in g.edges():
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g):
    payload = {
        "kind": g.kind,
        "relation": g.relation,
        "vertices": g.labels,
        "edges": [[i, j] for i, j in g.edges()],
    }
    return json.dumps(payload, indent=1) + "\n"


def parse_json(text):
    data = json.loads(text)
    n = len(data["vertices"])
    adj = np.zeros((n, n), dtype=bool)
    for i, j in data["edges"]:
        adj[i, j] = adj[j, i] = True
    return GroupGraph(data["vertices"], adj, data["kind"], data["relation"])
