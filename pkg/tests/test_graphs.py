import numpy as np
import pytest

import oracles as O
from conftest import corpus, group
from permsolv.errors import VertexUniverseMismatch
from permsolv.graphs import (
    class_graph,
    dominant_vertices,
    element_graph,
    expanded_graph,
    export_dot,
    export_json,
    graph_equal,
    parse_json,
)
from permsolv.pairs import PairOracle
from permsolv.structure import is_nilpotent, is_solvable


def _edges(g):
    return set(g.edges())


def test_commuting_graph_of_cyclic_is_complete():
    g = element_graph(group("C:4"), "commuting")
    assert g.n == 3 and g.is_complete()


def test_s3_class_graphs():
    ccc = class_graph(group("S:3"), "abelian")
    scc = class_graph(group("S:3"), "solvable")
    assert ccc.n == 2 and ccc.edge_count() == 0
    assert scc.n == 2 and scc.edge_count() == 1
    assert class_graph(group("C:6"), "nilpotent").is_complete()
    # two transpositions are adjacent in the expanded graph without commuting
    exp = expanded_graph(group("S:3"), "abelian")
    comm = element_graph(group("S:3"), "commuting")
    t1, t2 = exp.labels.index("(2,3)"), exp.labels.index("(1,2)")
    assert exp.adjacent(t1, t2) and not comm.adjacent(t1, t2)


def test_solvable_graph_of_a5():
    G = group("A:5")
    g = element_graph(G, "solvable")
    x = g.labels.index("(1,2,3,4,5)")
    non = [g.labels[j] for j in range(g.n) if j != x and not g.adjacent(x, j)]
    assert any(len(lab) == len("(1,2,3,4,5)") for lab in non)
    assert g.adjacent(x, g.labels.index("(1,5,4,3,2)"))
    assert not graph_equal(expanded_graph(G, "solvable"), g)


def test_dot_and_json_exports():
    scc = class_graph(group("S:3"), "solvable")
    dot = export_dot(scc)
    assert dot.startswith("graph G {") and dot.count(" -- ") == 1 and dot.count("[label=") == 2
    empty = class_graph(group("S:3"), "abelian")
    assert " -- " not in export_dot(empty)
    g = element_graph(group("D:5"), "nilpotent")
    back = parse_json(export_json(g))
    assert graph_equal(g, back) and back.kind == "element" and back.relation == "nilpotent"
    assert export_json(g) == export_json(element_graph(group("D:5"), "nilpotent"))


def test_universe_mismatch():
    with pytest.raises(VertexUniverseMismatch):
        graph_equal(element_graph(group("C:4"), "commuting"), element_graph(group("C:5"), "commuting"))
    with pytest.raises(ValueError):
        element_graph(group("C:4"), "abelian")
    with pytest.raises(ValueError):
        class_graph(group("C:4"), "generating")


@pytest.mark.parametrize("spec", corpus(max_order=200))
def test_inclusions_and_criteria(spec):
    G = group(spec)
    o = PairOracle(G)
    com = element_graph(G, "commuting", oracle=o)
    nil = element_graph(G, "nilpotent", oracle=o)
    sol = element_graph(G, "solvable", oracle=o)
    assert _edges(com) <= _edges(nil) <= _edges(sol)
    esol = expanded_graph(G, "solvable", oracle=o)
    enil = expanded_graph(G, "nilpotent", oracle=o)
    assert _edges(sol) <= _edges(esol) and _edges(nil) <= _edges(enil)
    assert graph_equal(esol, sol) == is_solvable(G)
    assert graph_equal(esol, enil) == is_nilpotent(G)
    if is_solvable(G):
        assert sol.is_complete()


@pytest.mark.parametrize("spec", ["S:3", "D:5", "S:4", "A:4"])
def test_invariable_generation_brute_force(spec):
    G = group(spec)
    E = G.enumeration()
    g = element_graph(G, "invariably-generating")
    rows = [tuple(int(v) for v in r) for r in E.elems]
    S = set(rows)
    cls = {r: frozenset(c) for c in O.classes(S) for r in c}
    gen = {}
    for i in range(1, E.order):
        for j in range(i + 1, E.order):
            a, b = rows[i], rows[j]
            key = (cls[a], cls[b])
            if key not in gen:
                gen[key] = all(len(O.closure([u, v], G.degree)) == E.order for u in key[0] for v in key[1])
            assert g.adjacent(i - 1, j - 1) == gen[key]


def test_generating_graph_edges():
    G = group("S:3")
    g = element_graph(G, "generating")
    E = G.enumeration()
    for i, j in g.edges():
        assert len(O.closure([tuple(int(v) for v in E.elems[i + 1]), tuple(int(v) for v in E.elems[j + 1])], 3)) == 6


@pytest.mark.parametrize("spec", ["PSL2:4", "PSL2:8"])
def test_involutions_dominant(spec):
    G = group(spec)
    g = expanded_graph(G, "solvable")
    E = G.enumeration()
    inv = {str(E.perm(i)) for i in range(1, E.order) if E.orders[i] == 2}
    dom = set(dominant_vertices(g))
    assert inv and inv <= dom


def test_dominant_vertices_complete():
    g = element_graph(group("C:6"), "commuting")
    assert len(dominant_vertices(g)) == 5
    assert np.array_equal(g.adjacency, g.adjacency.T)
