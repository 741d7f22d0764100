"""Compare the numba kernels with their pure-numpy twins.

    python benchmarks/bench_kernels.py [--repeat 5] [--group M:12] [--table-group PSL2:13]

Each kernel runs on identical inputs under both implementations; the outputs
are checked for equality and the best-of-N wall time is printed.  The numba
column includes nothing of compilation: every kernel is warmed up once.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from permsolv import kernels
from permsolv.atlas import build


def _best(fn, repeat):
    fn()  # warm-up (jit compilation, caches)
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _cases(group, table_group):
    E = build(group).enumeration()
    arrays = E._arrays
    gens = [g.raw for g in E.group.generators]
    maps = np.stack([np.asarray(E.conj_map(g), dtype=np.int64) for g in gens])

    T = build(table_group).enumeration()
    tarr = T._arrays
    table = T.table(T.order)
    inv = np.asarray(T.inverse, dtype=np.int64)
    members = np.arange(T.order, dtype=np.int64)
    rng = np.random.default_rng(0)
    pair = rng.choice(T.order, size=2, replace=False).astype(np.int64)

    yield f"sift_ranks        {group} ({E.order} rows)", lambda m: m.sift_ranks(E.elems, *arrays)
    yield f"component_labels  {group} conj maps", lambda m: m.component_labels(maps)
    yield (
        f"mul_table         {table_group} ({T.order}^2)",
        lambda m: m.mul_table(T.elems, *tarr, T.lex_of_rank),
    )
    yield f"closure_mask      {table_group} random pair", lambda m: m.closure_mask(table, pair, 0)
    yield (
        f"commutator_mask   {table_group} all x all",
        lambda m: m.commutator_mask(table, inv, members, members),
    )


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--group", default="M:12", help="group for sifting and class labelling")
    ap.add_argument("--table-group", default="PSL2:13", help="group for table kernels")
    args = ap.parse_args(argv)

    if kernels.nb_impl is None:
        print("numba unavailable (or PERMSOLV_PURE_NUMPY set): numpy timings only")
    impls = [("numpy", kernels.np_impl)]
    if kernels.nb_impl is not None:
        impls.append(("numba", kernels.nb_impl))

    header = f"{'kernel':44} " + " ".join(f"{name:>10}" for name, _ in impls)
    if len(impls) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for label, run in _cases(args.group, args.table_group):
        times, outs = [], []
        for _, impl in impls:
            t, out = _best(lambda: run(impl), args.repeat)
            times.append(t)
            outs.append(np.asarray(out))
        line = f"{label:44} " + " ".join(f"{t * 1000:9.2f}ms" for t in times)
        if len(impls) == 2:
            if not np.array_equal(outs[0], outs[1]):
                raise SystemExit(f"outputs differ for {label}")
            line += f" {times[0] / times[1]:7.1f}x"
        print(line)


if __name__ == "__main__":
    main()
