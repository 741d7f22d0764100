import pytest

import oracles as O
from permsolv.atlas import (
    build,
    default_manifest,
    expected_order,
    format_spec,
    load_manifest,
    parse_spec,
    psl2,
)
from permsolv.errors import BadSpec, UnsupportedParameter
from permsolv.structure import is_abelian, is_nilpotent


@pytest.mark.parametrize(
    "text",
    ["S:4", "A:5", "C:12", "D:7", "Q:8", "F:7:3", "PSL2:8", "PSL3:3", "M:11",
     "prod(A:5,C:2)", "prod(prod(C:2,C:2),S:3)", "perm:4:(1,2,3,4);(1,3)"],
)
def test_spec_round_trip(text):
    assert format_spec(parse_spec(text)) == text


@pytest.mark.parametrize(
    "text",
    ["", "X:3", "S:", "S:a", "F:5", "prod(C:2)", "prod(C:2,C:3", "perm:3", "perm:x:(1,2)",
     "perm:3:(1,4)", "perm:3:"],
)
def test_bad_specs(text):
    with pytest.raises(BadSpec):
        parse_spec(text)


@pytest.mark.parametrize(
    "text", ["Q:16", "PSL3:4", "M:13", "PSL2:6", "PSL2:3", "F:5:3", "F:6:2", "D:1"]
)
def test_unsupported_parameters(text):
    with pytest.raises((UnsupportedParameter, BadSpec, ValueError)):
        build(text)


def test_extended_gate():
    with pytest.raises(UnsupportedParameter):
        build("M:23")


@pytest.mark.parametrize("spec", default_manifest())
def test_corpus_orders(spec, grp):
    G = grp(spec)
    assert G.order() == expected_order(spec)
    assert G.name == spec


def test_families_against_brute_force():
    for spec in ["D:5", "Q:8", "F:5:4", "F:7:3", "A:4", "C:6"]:
        G = build(spec)
        S = O.closure([g.raw for g in G.generators], G.degree)
        assert len(S) == expected_order(spec)
    Q = build("Q:8")
    assert not is_abelian(Q) and is_nilpotent(Q)
    # Q8 has a unique involution
    E = Q.enumeration()
    assert sum(1 for o in E.orders if o == 2) == 1


@pytest.mark.parametrize("q", [4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 31, 32])
def test_psl2_orders_and_two_transitivity(q):
    G = psl2(q)
    assert G.degree == q + 1
    assert G.order() == q * (q * q - 1) // (2 if q % 2 else 1)
    assert G.is_transitive()


@pytest.mark.slow
def test_extended_mathieu_orders():
    assert build("M:23", extended=True).order() == 10200960
    assert build("M:24", extended=True).order() == 244823040


def test_manifest_loading(tmp_path):
    p = tmp_path / "m.txt"
    p.write_text("# comment\nS:4  # trailing\n\nA:5\n")
    assert load_manifest(p) == ["S:4", "A:5"]
    p.write_text("S:4\nnonsense\n")
    with pytest.raises(BadSpec):
        load_manifest(p)
    specs = default_manifest()
    assert len(specs) == len(set(specs)) and "M:11" in specs and "PSL3:3" in specs
