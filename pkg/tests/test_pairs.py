import numpy as np
import pytest

import oracles as O
from conftest import group
from permsolv.pairs import ClassOrbits, PairOracle, centralizer_orbit_labels

SPECS = ["S:4", "A:5", "PSL2:7", "A:6", "F:7:3", "D:6"]


def _pairs(N, k, seed):
    rng = np.random.default_rng(seed)
    return [(int(a), int(b)) for a, b in rng.integers(1, N, size=(k, 2))]


@pytest.mark.parametrize("spec", SPECS)
def test_table_and_chain_routes_agree(spec):
    G = group(spec)
    t = PairOracle(G, route="table")
    c = PairOracle(G, route="chain")
    assert t.route == "table" and c.route == "chain"
    for i, j in _pairs(t.N, 40, 7):
        assert t.order(i, j) == c.order(i, j)
        assert t.solvable(i, j) == c.solvable(i, j)
        assert t.nilpotent(i, j) == c.nilpotent(i, j)
        assert t.generates(i, j) == c.generates(i, j)
        assert t.commute(i, j) == c.commute(i, j)


@pytest.mark.parametrize("spec", ["S:4", "A:5", "D:6", "F:7:3"])
def test_predicates_against_brute_force(spec):
    G = group(spec)
    o = PairOracle(G)
    n = G.degree
    for i, j in _pairs(o.N, 25, 3):
        S = O.closure([o.raw(i), o.raw(j)], n)
        assert o.order(i, j) == len(S)
        assert o.solvable(i, j) == O.solvable(S, n)
        assert o.nilpotent(i, j) == O.nilpotent(S, n)
        assert o.commute(i, j) == (O.mul(o.raw(i), o.raw(j)) == O.mul(o.raw(j), o.raw(i)))


def test_cache_and_counter():
    o = PairOracle(group("A:5"))
    o.solvable(3, 7)
    o.nilpotent(7, 3)
    o.order(3, 7)
    assert o.evaluations == 1
    o.order(1, 2)
    assert o.evaluations == 2
    with pytest.raises(ValueError):
        PairOracle(group("A:5"), route="magic")


def test_auto_route_threshold():
    assert PairOracle(group("A:5")).route == "table"
    assert PairOracle(group("M:11")).route == "chain"


@pytest.mark.parametrize("spec", ["S:4", "PSL2:7", "A:6"])
def test_class_conjugators(spec):
    E = group(spec).enumeration()
    orbits = ClassOrbits(E)
    for c in E.classes:
        rep = tuple(int(v) for v in E.elems[c.rep])
        for v in E.members(c.index)[:: max(1, c.size // 6)]:
            g = orbits.conjugator(c.index, int(v))
            assert O.conj(rep, g) == tuple(int(k) for k in E.elems[v])
    a, b = (int(v) for v in E.members(E.classes[-1].index)[:2])
    g = orbits.conjugator_between(a, b)
    assert O.conj(tuple(int(k) for k in E.elems[a]), g) == tuple(int(k) for k in E.elems[b])


@pytest.mark.parametrize("spec", ["S:4", "A:5", "D:6"])
def test_centralizer_orbit_labels(spec):
    E = group(spec).enumeration()
    S = {tuple(int(v) for v in r) for r in E.elems}
    for c in E.classes[1:]:
        x = tuple(int(v) for v in E.elems[c.rep])
        C = O.centralizer(S, x)
        labels = centralizer_orbit_labels(E, c.rep)
        for i in range(E.order):
            y = tuple(int(v) for v in E.elems[i])
            orbit = {E.index_of(O.conj(y, g)) for g in C}
            assert labels[i] == min(orbit)


def test_propagated_rows_match_direct_rows():
    G = group("A:5")
    o = PairOracle(G)
    E = o.E
    orbits = ClassOrbits(E)
    c = E.classes[-1]
    rep_row = np.array([o.solvable(c.rep, j) for j in range(E.order)])
    rows = orbits.propagate_rows(c.index, rep_row)
    for v in list(rows)[:5]:
        assert np.array_equal(rows[v], [o.solvable(v, j) for j in range(E.order)])
