from collections import defaultdict

import pytest

import oracles as O
from conftest import group
from permsolv.errors import DegreeTooSmall, NoSuitablePrime, NotApplicable, OddPermutation
from permsolv.perm import CycleType, Permutation
from permsolv.symcomb import (
    centralizer_order_alt,
    centralizer_order_sym,
    construct_inverting_pair,
    construct_support_obstruction_pair,
    even_cycle_types,
    is_real_in_alt,
    search_odd_centralizer_real,
    splits_in_alt,
)

# (order, centralizer) per n, 5 <= n <= 41, n != 24
TABLE_B = {
    5: (5, 5), 6: (5, 5), 7: (5, 5), 8: (5, 15), 9: (7, 7), 10: (7, 21), 11: (9, 9),
    12: (9, 27), 13: (13, 13), 14: (13, 13), 15: (13, 13), 16: (13, 39), 17: (17, 17),
    18: (17, 17), 19: (17, 17), 20: (17, 51), 21: (19, 19), 22: (19, 57), 23: (11, 121),
    25: (23, 23), 26: (25, 25), 27: (25, 25), 28: (25, 75), 29: (29, 29), 30: (29, 29),
    31: (29, 29), 32: (29, 87), 33: (31, 31), 34: (31, 93), 35: (25, 625), 36: (25, 625),
    37: (37, 37), 38: (37, 37), 39: (37, 37), 40: (37, 111), 41: (41, 41),
}


def _alt_class_data(n):
    """cycle type -> list of (class size, real) over the A_n classes of that type."""
    E = group(f"A:{n}").enumeration()
    out = defaultdict(list)
    for c in E.classes:
        ct = Permutation._raw(tuple(int(v) for v in E.elems[c.rep])).cycle_type()
        real = E.class_of(int(E.inverse[c.rep])) == c.index
        out[ct].append((c.size, real))
    return E.order, out


@pytest.mark.parametrize("n", range(4, 10))
def test_formulas_match_enumerated_alt(n):
    order, data = _alt_class_data(n)
    types = list(even_cycle_types(n))
    assert set(types) == set(data)
    for ct in types:
        classes = data[ct]
        assert splits_in_alt(ct) == (len(classes) == 2)
        for size, real in classes:
            assert centralizer_order_alt(ct) == order // size
            assert is_real_in_alt(ct) == real


@pytest.mark.parametrize("n", range(4, 7))
def test_formulas_match_pure_python_oracle(n):
    S = {x for x in O.sym_elements(n) if O.is_even(x)}
    by_type = defaultdict(list)
    for cl in O.classes(S):
        rep = next(iter(cl))
        ct = Permutation._raw(rep).cycle_type()
        by_type[ct].append((len(cl), O.inv(rep) in cl))
    for ct, classes in by_type.items():
        assert splits_in_alt(ct) == (len(classes) == 2)
        for size, real in classes:
            assert centralizer_order_alt(ct) * size == len(S)
            assert is_real_in_alt(ct) == real


def test_sym_centralizer_examples():
    assert centralizer_order_sym(CycleType({13: 1, 1: 3})) == 78
    assert centralizer_order_sym(CycleType([5])) == 5
    assert centralizer_order_sym(CycleType({1: 4})) == 24
    assert centralizer_order_alt(CycleType({13: 1, 1: 3})) == 39
    assert not splits_in_alt(CycleType({13: 1, 1: 3}))
    assert splits_in_alt(CycleType([9, 3])) and centralizer_order_alt(CycleType([9, 3])) == 27


def test_realness_examples():
    assert not is_real_in_alt(CycleType([3, 1]))
    assert is_real_in_alt(CycleType([5]))
    assert is_real_in_alt(CycleType([3, 3]))
    with pytest.raises(OddPermutation):
        splits_in_alt(CycleType([2, 1]))
    with pytest.raises(OddPermutation):
        is_real_in_alt(CycleType([4]))


@pytest.mark.parametrize("n", sorted(TABLE_B))
def test_search_reproduces_alternating_rows(n):
    found = search_odd_centralizer_real(n)
    assert TABLE_B[n] in {(f.order, f.centralizer_order_alt) for f in found}
    for f in found:
        assert f.centralizer_order_alt % 2 == 1 and f.order % 2 == 1
        assert f.cycle_type.is_even and is_real_in_alt(f.cycle_type)


def test_search_empty_degrees():
    empty = [n for n in range(5, 65) if not search_odd_centralizer_real(n)]
    # 24 is the only gap up to 41; above 41 only odd degrees are guaranteed
    assert empty == [24, 60]


def test_search_bounds():
    with pytest.raises(ValueError):
        search_odd_centralizer_real(4)
    with pytest.raises(ValueError):
        search_odd_centralizer_real(65)


@pytest.mark.parametrize("n", range(5, 65))
def test_inverting_pair(n):
    x, t = construct_inverting_pair(n)
    assert t.is_even() and x**t == ~x
    length = n - 2 if n % 2 else n - 3
    assert x.order() == length
    expected = length if n % 2 else 3 * length
    assert centralizer_order_alt(x.cycle_type()) == expected


def test_inverting_pair_small_cases():
    x, _ = construct_inverting_pair(7)
    assert x.order() == 5 and centralizer_order_alt(x.cycle_type()) == 5
    x, _ = construct_inverting_pair(6)
    assert x.order() == 3 and centralizer_order_alt(x.cycle_type()) == 9
    # brute force: the A_6 centralizer of a 3-cycle has order 9
    A6 = group("A:6").enumeration()
    assert A6.order // A6.classes[A6.class_of(A6.index_of(x))].size == 9
    with pytest.raises(DegreeTooSmall):
        construct_inverting_pair(4)


@pytest.mark.parametrize("n", [24] + list(range(42, 65)))
def test_support_obstruction(n):
    x, y, v = construct_support_obstruction_pair(n)
    assert v.ok, v.checks
    assert x.order() == v.p
    assert y.order() == v.y_order == 2**v.a
    assert len(y.support()) == v.p + 1 and n - v.p < v.p + 1


def test_support_obstruction_examples():
    _, y, v = construct_support_obstruction_pair(24)
    assert v.p == 19 and y.order() == 2 and v.moved == 20
    assert "no_conjugate_in_centralizer" in v.checks
    _, y, v = construct_support_obstruction_pair(43, 23)
    assert (v.m, v.a, v.y_order, v.moved) == (11, 1, 2, 24)
    _, _, v = construct_support_obstruction_pair(42, 23)
    assert v.ok and 42 - 23 < 24
    assert v.as_dict()["checks"]["y_normalizes_x"]


def test_support_obstruction_errors():
    with pytest.raises(NotApplicable):
        construct_support_obstruction_pair(30)
    with pytest.raises(NoSuitablePrime):
        construct_support_obstruction_pair(43, 19)
    with pytest.raises(NoSuitablePrime):
        construct_support_obstruction_pair(43, 21)
