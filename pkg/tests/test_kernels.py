"""numba kernels against their numpy twins, and the pure-numpy switch end to end."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permsolv import kernels

needs_numba = pytest.mark.skipif(kernels.nb_impl is None, reason="numba backend not active")

GROUPS = ["S:4", "A:5", "PSL2:7", "prod(S:3,S:3)"]


@needs_numba
@pytest.mark.parametrize("spec", GROUPS)
def test_sift_and_labels_agree(spec, grp):
    E = grp(spec).enumeration()
    rng = np.random.default_rng(1)
    rows = E.elems.copy()
    # a few rows that are not group elements (random S_n permutations)
    junk = np.array([rng.permutation(E.degree) for _ in range(20)], dtype=E.dtype)
    rows = np.concatenate([rows, junk])
    a = kernels.np_impl.sift_ranks(rows, *E._arrays)
    b = kernels.nb_impl.sift_ranks(rows, *E._arrays)
    assert np.array_equal(a, b)
    maps = np.stack([np.asarray(E.conj_map(g.raw), dtype=np.int64) for g in E.group.generators])
    assert np.array_equal(
        kernels.np_impl.component_labels(maps), kernels.nb_impl.component_labels(maps)
    )


@needs_numba
@pytest.mark.parametrize("spec", GROUPS)
def test_table_kernels_agree(spec, grp):
    E = grp(spec).enumeration()
    t_np = kernels.np_impl.mul_table(E.elems, *E._arrays, E.lex_of_rank)
    t_nb = kernels.nb_impl.mul_table(E.elems, *E._arrays, E.lex_of_rank)
    assert np.array_equal(t_np, t_nb)
    # spot-check the table against direct composition (a then b)
    for i, j in [(1, 2), (E.order - 1, 3), (5, 5)]:
        assert t_nb[i, j] == E.index_of(tuple(int(v) for v in E.elems[j][E.elems[i]]))
    inv = np.asarray(E.inverse, dtype=np.int64)
    members = np.arange(E.order, dtype=np.int64)
    assert np.array_equal(
        kernels.np_impl.commutator_mask(t_nb, inv, members, members),
        kernels.nb_impl.commutator_mask(t_nb, inv, members, members),
    )


@needs_numba
@settings(max_examples=60, deadline=None)
@given(st.data())
def test_closure_masks_agree(data):
    from conftest import group

    E = group("PSL2:7").enumeration()
    table = E.table()
    gens = np.array(data.draw(st.lists(st.integers(0, E.order - 1), min_size=1, max_size=3)))
    a = kernels.np_impl.closure_mask(table, gens, 0)
    b = kernels.nb_impl.closure_mask(table, gens, 0)
    assert np.array_equal(a, b)
    assert a[0] and a[gens].all()


def test_backend_flag_selects_numpy():
    code = (
        "import json;from permsolv import kernels;from permsolv.atlas import build;"
        "from permsolv.structure import derived_series, solvable_radical;"
        "G=build('M:11');E=G.enumeration();"
        "print(json.dumps([kernels.backend(),[c.size for c in E.classes],"
        "derived_series(build('S:4')).orders,solvable_radical(build('prod(A:5,C:3)')).order()]))"
    )
    env = dict(os.environ, PERMSOLV_PURE_NUMPY="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    backend, sizes, series, radical = json.loads(out.stdout)
    assert backend == "numpy"
    assert sorted(sizes) == sorted([1, 165, 440, 990, 1320, 1584, 720, 720, 990, 990])
    assert series == [24, 12, 4, 1]
    assert radical == 3
