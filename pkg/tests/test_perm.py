import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as O
from permsolv.errors import DegreeMismatch, MalformedCycle, PointOutOfRange, PointRepeated
from permsolv.perm import CycleType, Permutation, format_perm, parse_perm


@st.composite
def perms(draw, max_degree=12, degree=None):
    n = degree or draw(st.integers(1, max_degree))
    img = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(img)


@st.composite
def perm_pairs(draw):
    n = draw(st.integers(1, 10))
    return draw(perms(degree=n)), draw(perms(degree=n))


def test_parse_and_cycles():
    p = parse_perm("(1,2,3)(4 5)", 6)
    assert p.images == (2, 3, 1, 5, 4, 6)
    assert str(p) == "(1,2,3)(4,5)"
    assert parse_perm("()", 4).is_identity()
    assert str(Permutation.identity(3)) == "()"


def test_right_action_convention():
    a = parse_perm("(1,2)", 3)
    b = parse_perm("(2,3)", 3)
    # a first: 1 -> 2 -> 3
    assert (a * b)(1) == 3
    assert (a * b) == parse_perm("(1,3,2)", 3)


def test_conjugation_is_inverse_first():
    x = parse_perm("(1,2,3)", 4)
    g = parse_perm("(3,4)", 4)
    assert x**g == ~g * x * g == parse_perm("(1,2,4)", 4)


@pytest.mark.parametrize(
    "text,exc",
    [
        ("(1,2", MalformedCycle),
        ("1,2)", MalformedCycle),
        ("(1,,2)", MalformedCycle),
        ("(1,a)", MalformedCycle),
        ("", MalformedCycle),
        ("(1,2)()", MalformedCycle),
        ("(1,2,1)", PointRepeated),
        ("(1,2)(2,3)", PointRepeated),
        ("(0,1)", PointOutOfRange),
        ("(1,9)", PointOutOfRange),
    ],
)
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_perm(text, 5)


def test_bad_images_and_degree_mismatch():
    with pytest.raises(ValueError):
        Permutation([1, 1, 2])
    with pytest.raises(DegreeMismatch):
        parse_perm("(1,2)", 2) * parse_perm("(1,2)", 3)


@given(perms())
def test_format_round_trip(p):
    assert parse_perm(format_perm(p), p.degree) == p


@given(perm_pairs())
def test_composition_matches_reference(pq):
    p, q = pq
    assert (p * q).raw == O.mul(p.raw, q.raw)
    assert (p**q).raw == O.conj(p.raw, q.raw)
    assert (~p).raw == O.inv(p.raw)
    assert (p * ~p).is_identity()


@given(perms(), st.integers(-7, 20))
def test_powers(p, k):
    expected = O.identity(p.degree)
    base = p.raw if k >= 0 else O.inv(p.raw)
    for _ in range(abs(k)):
        expected = O.mul(expected, base)
    assert (p**k).raw == expected


@given(perms())
def test_order_type_parity(p):
    assert p.order() == O.order(p.raw)
    assert p.is_even() == O.is_even(p.raw)
    ct = p.cycle_type()
    assert sum(ct.lengths) == p.degree
    assert ct.is_even == p.is_even()
    assert ct.element_order == p.order()


def test_cycle_type_value_semantics():
    a = CycleType([3, 1, 1])
    b = CycleType({3: 1, 1: 2})
    assert a == b and hash(a) == hash(b)
    assert a.lengths == (3, 1, 1)
    assert CycleType([2, 2]).is_even and not CycleType([2, 1]).is_even
