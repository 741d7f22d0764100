"""Executable checks of the group-theoretic criteria on concrete groups.

Every check returns a ``VerdictReport``.  Outcomes:

``consistent``      the criterion holds and nothing further was expected
``witness-found``   a concrete counterexample to a hypothesis or to the
                    property scanned for was found, as predicted
``inconsistent``    the criterion failed on a verified computation
``skipped``         not applicable or over a configured cap (reason given)

Pair scans take the first element from class representatives and the second
from a whole class, reduced further to one element per orbit of C(x) acting
by conjugation; every scanned predicate is invariant under simultaneous
conjugation, so nothing is lost.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .atlas import build, parse_spec
from .errors import CapExceeded, PermSolvError
from .graphs import element_graph, expanded_graph, graph_equal
from .group import DEFAULT_CAP, PermGroup
from .numtheory import p_part, prime_power_base
from .pairs import ClassOrbits, PairOracle, centralizer_orbit_labels
from .perm import Permutation
from .structure import (
    DEFAULT_DEGREE_CAP,
    coset_action,
    is_minimal_non_nilpotent,
    is_nilpotent,
    is_simple,
    normal_closure,
    p_core,
    solvable_radical,
)

__all__ = [
    "VerdictReport",
    "CheckConfig",
    "CHECKS",
    "DEFAULT_CHECKS",
    "check_property_star",
    "verify_solvability_criterion",
    "check_nilpotent_condition",
    "verify_nilpotency_criterion",
    "check_odd_real_pair",
    "real_odd_centralizer_classes",
    "check_real_centralizers",
    "check_direct_factor",
    "check_radical_membership",
    "verify_graph_criteria",
    "verify_schmidt_criterion",
    "verify_simple_quotient",
    "verify_baer_suzuki",
    "verify_op_membership",
    "verify_pair_generation",
    "check_diagonal_identity",
    "run_corpus",
    "replay_star_witness",
]

OUTCOMES = ("consistent", "witness-found", "inconsistent", "skipped")
DEFAULT_GRAPH_CAP = 2000
EXTENDED_ONLY = {"PSL2:31"}  # quotient-simplicity scan gated behind the flag

# known pair-generation rows: (p, q, allowed orders of <x, y>)
PAIR_GENERATION_ROWS = {"M:11": (2, 11, (660, 7920))}


@dataclass
class VerdictReport:
    spec: str
    check: str
    outcome: str
    witness: dict | None = None
    stats: dict = field(default_factory=lambda: {"pairs": 0, "millis": 0})
    detail: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.outcome not in OUTCOMES:
            raise ValueError(f"bad outcome {self.outcome!r}")

    @property
    def ok(self):
        return self.outcome != "inconsistent"

    def as_dict(self, timing=True):
        stats = dict(self.stats)
        if not timing:
            stats["millis"] = 0
        out = {"spec": self.spec, "check": self.check, "outcome": self.outcome}
        if self.witness is not None:
            out["witness"] = self.witness
        out["stats"] = stats
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class CheckConfig:
    cap: int = DEFAULT_CAP
    graph_cap: int = DEFAULT_GRAPH_CAP
    degree_cap: int = DEFAULT_DEGREE_CAP
    extended: bool = False
    diagonal_trials: int = 10
    seed: int = 0


# ------------------------------------------------------------------ context


class _Ctx:
    """Per-group shared state: enumeration, pair oracle, class data."""

    def __init__(self, G, cap=DEFAULT_CAP, oracle=None):
        self.G = G
        self.oracle = oracle or PairOracle(G, cap)
        self.E = self.oracle.E
        self.N = self.E.order
        self._orbits = None
        self._clabels = {}
        self.prime_of = {}
        for c in self.E.classes:
            if c.rep != self.E.identity:
                p = prime_power_base(c.element_order)
                if p is not None:
                    self.prime_of[c.index] = p

    @property
    def orbits(self):
        if self._orbits is None:
            self._orbits = ClassOrbits(self.E)
        return self._orbits

    def prime_classes(self):
        return [(c, self.prime_of[c.index]) for c in self.E.classes if c.index in self.prime_of]

    def orbit_reps(self, x, class_id):
        """One y per C(x)-orbit on the class, in increasing index order."""
        labels = self._clabels.get(x)
        if labels is None:
            labels = centralizer_orbit_labels(self.E, x)
            self._clabels[x] = labels
        return [int(v) for v in np.unique(labels[self.E.members(class_id)])]

    def commutes_with_class(self, x, class_id):
        return bool(self.E.commuting_mask(x)[self.E.members(class_id)].any())

    def s(self, i):
        return str(self.E.perm(i))

    def conj_witness(self, y1, y2):
        """g with y1^g = y2, as a cycle string."""
        g = self.orbits.conjugator_between(y1, y2)
        return str(Permutation._raw(g))


def _ctx(G, cap, oracle=None):
    return G if isinstance(G, _Ctx) else _Ctx(G, cap, oracle)


def _spec_of(G):
    G = G.G if isinstance(G, _Ctx) else G
    return G.name or f"perm:{G.degree}:" + ";".join(str(g) for g in G.generators)


class _Timer:
    def __init__(self, ctx):
        self.ctx = ctx
        self.t0 = time.perf_counter()
        self.e0 = ctx.oracle.evaluations

    def stats(self):
        return {
            "pairs": self.ctx.oracle.evaluations - self.e0,
            "millis": int(round((time.perf_counter() - self.t0) * 1000)),
        }


def _report(ctx, check, outcome, timer, witness=None, **detail):
    return VerdictReport(_spec_of(ctx), check, outcome, witness, timer.stats(), detail)


# ------------------------------------------------------------------ solvability


def _star_scan(ctx, first_only=True):
    """Witnesses (x, y1, y2) with <x,y1> solvable and <x,y2> nonsolvable, y1 ~ y2."""
    o = ctx.oracle
    found = []
    for cx, p in ctx.prime_classes():
        x = cx.rep
        for cy, q in ctx.prime_classes():
            if q == p:
                continue
            sol = non = None
            for y in ctx.orbit_reps(x, cy.index):
                if o.solvable(x, y):
                    sol = y if sol is None else sol
                else:
                    non = y if non is None else non
                if sol is not None and non is not None:
                    break
            if sol is not None and non is not None:
                found.append((x, sol, non))
                if first_only:
                    break
    return found


def _star_witness(ctx, x, y1, y2):
    o = ctx.oracle
    return {
        "x": ctx.s(x),
        "x_order": int(ctx.E.orders[x]),
        "y_solvable": ctx.s(y1),
        "y_nonsolvable": ctx.s(y2),
        "y_order": int(ctx.E.orders[y1]),
        "g": ctx.conj_witness(y1, y2),
        "order_x_y_solvable": o.order(x, y1),
        "order_x_y_nonsolvable": o.order(x, y2),
    }


def check_property_star(G, cap=DEFAULT_CAP, oracle=None):
    """Scan for <x,y> solvable but <x,y^g> not, x a p-element, y a q-element."""
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    found = _star_scan(ctx)
    if not found:
        return _report(ctx, "star", "consistent", t, holds=True)
    x, y1, y2 = found[0]
    return _report(
        ctx,
        "star",
        "witness-found",
        t,
        _star_witness(ctx, x, y1, y2),
        holds=False,
        x_orders=sorted({int(ctx.E.orders[w[0]]) for w in found}),
        witnesses=[_star_witness(ctx, *w) for w in found],
    )


def replay_star_witness(G, witness):
    """Recompute a star witness from its cycle strings; True when it reproduces."""
    from .structure import is_solvable

    deg = G.degree
    from .perm import parse_perm

    x = parse_perm(witness["x"], deg)
    y1 = parse_perm(witness["y_solvable"], deg)
    y2 = parse_perm(witness["y_nonsolvable"], deg)
    g = parse_perm(witness["g"], deg)
    if y1**g != y2 or not all(G.contains(e) for e in (x, y1, y2, g)):
        return False
    H1 = PermGroup([x, y1], deg)
    H2 = PermGroup([x, y2], deg)
    return (
        is_solvable(H1)
        and not is_solvable(H2)
        and H1.order() == witness["order_x_y_solvable"]
        and H2.order() == witness["order_x_y_nonsolvable"]
    )


def verify_solvability_criterion(G, cap=DEFAULT_CAP, oracle=None):
    """G solvable iff the star property holds."""
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    star = check_property_star(ctx)
    holds = star.outcome == "consistent"
    solvable = ctx.oracle.G_solvable
    if solvable != holds:
        outcome = "inconsistent"
    else:
        outcome = "consistent" if solvable else "witness-found"
    return _report(
        ctx,
        "solvable-criterion",
        outcome,
        t,
        star.witness,
        solvable=solvable,
        star_holds=holds,
        **{k: v for k, v in star.detail.items() if k != "holds"},
    )


# ------------------------------------------------------------------ nilpotency


def _nilpotent_condition_scan(ctx):
    """First (x, y) with <x,y> solvable and no conjugate of y commuting with x."""
    o = ctx.oracle
    for cx, p in ctx.prime_classes():
        x = cx.rep
        for cy, q in ctx.prime_classes():
            if q == p or ctx.commutes_with_class(x, cy.index):
                continue
            for y in ctx.orbit_reps(x, cy.index):
                if o.solvable(x, y):
                    return x, y
    return None


def check_nilpotent_condition(G, cap=DEFAULT_CAP, oracle=None):
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    hit = _nilpotent_condition_scan(ctx)
    if hit is None:
        return _report(ctx, "nilpotent-condition", "consistent", t, holds=True)
    x, y = hit
    w = {
        "x": ctx.s(x),
        "x_order": int(ctx.E.orders[x]),
        "y": ctx.s(y),
        "y_order": int(ctx.E.orders[y]),
        "order_x_y": ctx.oracle.order(x, y),
        "commuting_conjugates": 0,
    }
    return _report(ctx, "nilpotent-condition", "witness-found", t, w, holds=False)


def verify_nilpotency_criterion(G, cap=DEFAULT_CAP, oracle=None):
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    cond = check_nilpotent_condition(ctx)
    holds = cond.outcome == "consistent"
    nil = ctx.oracle.G_nilpotent
    if nil != holds:
        outcome = "inconsistent"
    else:
        outcome = "consistent" if nil else "witness-found"
    return _report(
        ctx, "nilpotent-criterion", outcome, t, cond.witness, nilpotent=nil, condition_holds=holds
    )


# ------------------------------------------------------------------ real elements


def _cycle_type_key(row):
    seen = np.zeros(len(row), dtype=bool)
    lengths = []
    for s in range(len(row)):
        if not seen[s]:
            k, cur = 0, s
            while not seen[cur]:
                seen[cur] = True
                cur = row[cur]
                k += 1
            lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def check_odd_real_pair(G, cap=DEFAULT_CAP, oracle=None, symmetric_ambient=None):
    """Find x of odd prime-power order and a 2-element y normalizing <x> with
    no conjugate of y in C(x).

    With ``symmetric_ambient`` (default: on for ``A:n`` specs) conjugacy of y
    is taken in S_n, i.e. by cycle type.  Otherwise conjugacy is inside G.
    """
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    E = ctx.E
    name = _spec_of(ctx)
    if symmetric_ambient is None:
        symmetric_ambient = name.startswith("A:")
    if not is_simple(ctx.G, cap):
        return _report(ctx, "odd-real-pair", "skipped", t, reason="group is not nonabelian simple")
    orders = E.orders
    two = np.array([o > 1 and o & (o - 1) == 0 for o in orders])
    ginv = E.elems[E.inverse]
    found = {}
    for c in E.classes:
        p = prime_power_base(c.element_order)
        if p is None or p == 2:
            continue
        x = c.rep
        xs = E.elems[x]
        powers = np.zeros(E.order, dtype=bool)
        cur = np.arange(E.degree)
        for _ in range(c.element_order):
            cur = xs[cur]
            powers[E.index_of(tuple(int(v) for v in cur))] = True
        conj = E.index_rows(np.take_along_axis(E.elems, xs[ginv].astype(np.int64), axis=1))
        normal = powers[conj]
        cmask = E.commuting_mask(x)
        cands = np.flatnonzero(normal & two & ~cmask)
        tried = set()
        for y in cands:
            y = int(y)
            if symmetric_ambient:
                key = _cycle_type_key(E.elems[y])
                if key in tried:
                    continue
                tried.add(key)
                clash = any(_cycle_type_key(E.elems[z]) == key for z in np.flatnonzero(cmask))
            else:
                key = E.class_of(y)
                if key in tried:
                    continue
                tried.add(key)
                clash = ctx.commutes_with_class(x, key)
            if not clash:
                combo = (int(c.element_order), int(orders[y]))
                if combo not in found:
                    xy = E.perm(x) ** E.perm(y)
                    k = next(k for k in range(1, c.element_order) if E.perm(x) ** k == xy)
                    found[combo] = {
                        "x": ctx.s(x),
                        "x_order": combo[0],
                        "y": ctx.s(y),
                        "y_order": combo[1],
                        "x_conj_by_y_power": k,
                        "centralizer_order": int(cmask.sum()),
                    }
    conj_note = "symmetric-group cycle types" if symmetric_ambient else "inner conjugacy only"
    if not found:
        return _report(ctx, "odd-real-pair", "inconsistent", t, conjugacy=conj_note)
    witnesses = list(found.values())
    return _report(
        ctx,
        "odd-real-pair",
        "witness-found",
        t,
        witnesses[0],
        conjugacy=conj_note,
        order_combos=[list(cmb) for cmb in found],
        witnesses=witnesses,
    )


def real_odd_centralizer_classes(G, cap=DEFAULT_CAP):
    """(element order, centralizer order, class size) of real classes with odd centralizer."""
    E = G.enumeration(cap)
    out = []
    for c in E.classes:
        cent = E.order // c.size
        if cent % 2 and E.class_of(int(E.inverse[c.rep])) == c.index:
            out.append((c.element_order, cent, c.size))
    return out


def check_real_centralizers(G, cap=DEFAULT_CAP, oracle=None):
    """Consistent when every real element has an even-order centralizer."""
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    rows = real_odd_centralizer_classes(ctx.G, cap)
    if not rows:
        return _report(ctx, "real-centralizers", "consistent", t, all_even=True)
    order, cent, size = rows[0]
    return _report(
        ctx,
        "real-centralizers",
        "witness-found",
        t,
        {"element_order": order, "centralizer_order": cent},
        all_even=False,
        classes=[list(r) for r in rows],
    )


# ------------------------------------------------------------------ Sylow 2 direct factor


def check_direct_factor(G, cap=DEFAULT_CAP, oracle=None):
    """If odd p-elements commute with a conjugate of every 2-element they
    generate a solvable group with, a Sylow 2-subgroup is a direct factor."""
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    o, E = ctx.oracle, ctx.E
    for cx, p in ctx.prime_classes():
        if p == 2:
            continue
        for cy, q in ctx.prime_classes():
            if q != 2 or ctx.commutes_with_class(cx.rep, cy.index):
                continue
            for y in ctx.orbit_reps(cx.rep, cy.index):
                if o.solvable(cx.rep, y):
                    w = {"x": ctx.s(cx.rep), "y": ctx.s(y), "order_x_y": o.order(cx.rep, y)}
                    return _report(
                        ctx, "direct-factor", "skipped", t, w, reason="hypothesis does not hold"
                    )
    # hypothesis holds: check the decomposition
    orders = E.orders
    two_part = p_part(E.order, 2)
    two_mask = np.array([o & (o - 1) == 0 for o in orders])
    odd_mask = orders % 2 == 1
    n_two, n_odd = int(two_mask.sum()), int(odd_mask.sum())
    facts = {
        "sylow2_normal": n_two == two_part,
        "odd_elements_form_complement": n_odd == E.order // two_part,
        "intersection_trivial": int((two_mask & odd_mask).sum()) == 1,
    }
    if facts["sylow2_normal"] and facts["odd_elements_form_complement"]:
        P, K = np.flatnonzero(two_mask), np.flatnonzero(odd_mask)
        # both are subgroups of the stated orders; they commute elementwise
        facts["odd_elements_closed"] = _closed(ctx, K)
        facts["commute"] = bool(
            all((E.elems[a][E.elems[K]] == E.elems[K][:, E.elems[a]]).all() for a in P)
        )
    ok = all(facts.values())
    return _report(ctx, "direct-factor", "consistent" if ok else "inconsistent", t, facts=facts)


def _closed(ctx, idx):
    E = ctx.E
    mask = np.zeros(E.order, dtype=bool)
    mask[idx] = True
    for a in idx:
        prods = E.index_rows(E.elems[idx][:, E.elems[a]])
        if not mask[prods].all():
            return False
    return True


# ------------------------------------------------------------------ radical


def check_radical_membership(G, cap=DEFAULT_CAP, oracle=None):
    """For x of prime order p >= 5 whose solvable pairs with r-elements are
    conjugation-stable, assert x lies in the solvable radical."""
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    o, E = ctx.oracle, ctx.E
    R = solvable_radical(ctx.G, cap)
    rows = []
    for cx in E.classes:
        p = cx.element_order
        if p < 5 or prime_power_base(p) != p:
            continue
        x = cx.rep
        hyp = True
        for cy, r in ctx.prime_classes():
            if r == p:
                continue
            seen = set()
            for y in ctx.orbit_reps(x, cy.index):
                seen.add(o.solvable(x, y))
                if len(seen) == 2:
                    hyp = False
                    break
            if not hyp:
                break
        member = R.contains(E.perm(x))
        rows.append({"x": ctx.s(x), "order": p, "hypothesis": hyp, "in_radical": member})
        if hyp and not member:
            return _report(ctx, "radical-membership", "inconsistent", t, rows[-1], radical_order=R.order())
    return _report(ctx, "radical-membership", "consistent", t, radical_order=R.order(), elements=rows)


# ------------------------------------------------------------------ graphs


def _graph_class_scan(ctx):
    """Decide both graph equalities from class-level data.

    expanded SCC == solvable graph  iff  pairs inside one class are all
    solvable and, across two classes, solvability is all-or-nothing.
    expanded SCC == expanded NCC  iff  two classes with a solvable pair
    always have a nilpotent pair.  Returns the first witness of each failure.
    """
    o, E = ctx.oracle, ctx.E
    scc_w = ncc_w = None
    for c in E.classes[1:]:
        x = c.rep
        for d in E.classes[1:]:
            ys = [y for y in ctx.orbit_reps(x, d.index) if y != x]
            if not ys:
                continue
            sol = [y for y in ys if o.solvable(x, y)]
            if scc_w is None:
                non = next((y for y in ys if y not in set(sol)), None)
                if non is not None and (c.index == d.index or sol):
                    scc_w = {
                        "x": ctx.s(x),
                        "y": ctx.s(non),
                        "same_class": c.index == d.index,
                        "order_x_y": o.order(x, non),
                        "edge_only_in": "expanded-scc",
                    }
            if ncc_w is None and c.index != d.index and sol:
                if not any(o.nilpotent(x, y) for y in sol):
                    ncc_w = {
                        "x": ctx.s(x),
                        "y": ctx.s(sol[0]),
                        "order_x_y": o.order(x, sol[0]),
                        "edge_only_in": "expanded-scc",
                    }
            if scc_w is not None and ncc_w is not None:
                return scc_w, ncc_w
    return scc_w, ncc_w


def verify_graph_criteria(G, cap=DEFAULT_CAP, oracle=None, graph_cap=DEFAULT_GRAPH_CAP):
    """expanded SCC == solvable graph iff solvable; expanded SCC == expanded NCC iff nilpotent.

    Decided at class level for every group; groups of order at most
    ``graph_cap`` also have the three element graphs built and compared.
    """
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    o = ctx.oracle
    scc_w, ncc_w = _graph_class_scan(ctx)
    scc_eq, ncc_eq = scc_w is None, ncc_w is None
    detail = {
        "solvable": o.G_solvable,
        "nilpotent": o.G_nilpotent,
        "expanded_scc_equals_solvable": scc_eq,
        "expanded_scc_equals_expanded_ncc": ncc_eq,
    }
    ok = scc_eq == o.G_solvable and ncc_eq == o.G_nilpotent
    if ctx.N <= graph_cap:
        sg = element_graph(ctx.G, "solvable", oracle=o)
        es = expanded_graph(ctx.G, "solvable", oracle=o)
        en = expanded_graph(ctx.G, "nilpotent", oracle=o)
        built = (graph_equal(es, sg), graph_equal(es, en))
        detail["graphs_built"] = True
        ok = ok and built == (scc_eq, ncc_eq)
    else:
        detail["graphs_built"] = False
    witness = None
    if scc_w or ncc_w:
        witness = {k: v for k, v in (("solvable_graph", scc_w), ("nilpotent_graph", ncc_w)) if v}
    return _report(ctx, "graph-criteria", "consistent" if ok else "inconsistent", t, witness, **detail)


# ------------------------------------------------------------------ minimal non-nilpotent


def _schmidt_pair_scan(ctx):
    """First (x, y) of coprime prime-power order with <x,y> != G and no
    conjugate of y commuting with x."""
    o = ctx.oracle
    for cx, p in ctx.prime_classes():
        x = cx.rep
        for cy, q in ctx.prime_classes():
            if q == p or ctx.commutes_with_class(x, cy.index):
                continue
            for y in ctx.orbit_reps(x, cy.index):
                if not o.generates(x, y):
                    return x, y
    return None


def verify_schmidt_criterion(G, cap=DEFAULT_CAP, oracle=None):
    """For non-nilpotent G: minimal non-nilpotent iff every non-generating
    coprime prime-power pair has a commuting conjugate positioning."""
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    if ctx.oracle.G_nilpotent:
        return _report(ctx, "schmidt-criterion", "skipped", t, reason="group is nilpotent")
    mnn = is_minimal_non_nilpotent(ctx.G, cap)
    hit = _schmidt_pair_scan(ctx)
    cond = hit is None
    witness = None
    if hit is not None:
        x, y = hit
        witness = {"x": ctx.s(x), "y": ctx.s(y), "order_x_y": ctx.oracle.order(x, y)}
    outcome = "inconsistent" if mnn != cond else ("consistent" if cond else "witness-found")
    return _report(
        ctx,
        "schmidt-criterion",
        outcome,
        t,
        witness,
        minimal_non_nilpotent=mnn,
        pair_condition=cond,
    )


def verify_simple_quotient(
    G, cap=DEFAULT_CAP, oracle=None, extended=False, degree_cap=DEFAULT_DEGREE_CAP
):
    """Nonsolvable G where non-generating coprime pairs have a solvable
    conjugate positioning: G/R(G) is nonabelian simple."""
    G0 = G.G if isinstance(G, _Ctx) else G
    if _spec_of(G0) in EXTENDED_ONLY and not extended:
        return VerdictReport(
            _spec_of(G0), "simple-quotient", "skipped", detail={"reason": "extended-scale check"}
        )
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    o = ctx.oracle
    if o.G_solvable:
        return _report(ctx, "simple-quotient", "skipped", t, reason="group is solvable")
    for cx, p in ctx.prime_classes():
        x = cx.rep
        for cy, q in ctx.prime_classes():
            if q == p:
                continue
            nongen = None
            solv = False
            for y in ctx.orbit_reps(x, cy.index):
                if o.solvable(x, y):
                    solv = True
                    break
                if nongen is None and not o.generates(x, y):
                    nongen = y
            if nongen is not None and not solv:
                w = {"x": ctx.s(x), "y": ctx.s(nongen), "order_x_y": o.order(x, nongen)}
                return _report(ctx, "simple-quotient", "skipped", t, w, reason="hypothesis does not hold")
    R = solvable_radical(ctx.G, cap)
    Q = ctx.G if R.order() == 1 else coset_action(ctx.G, R, degree_cap, cap)
    simple = is_simple(Q, cap)
    return _report(
        ctx,
        "simple-quotient",
        "consistent" if simple else "inconsistent",
        t,
        radical_order=R.order(),
        quotient_order=Q.order(),
        quotient_simple=simple,
    )


# ------------------------------------------------------------------ nilpotent normal closures


def verify_baer_suzuki(G, cap=DEFAULT_CAP, oracle=None):
    """<x^G> nilpotent iff every <x, x^g> is nilpotent, per class representative."""
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    o, E = ctx.oracle, ctx.E
    rows = []
    for c in E.classes[1:]:
        x = c.rep
        lhs = is_nilpotent(normal_closure(ctx.G, [E.perm(x)]))
        rhs, bad = True, None
        for y in ctx.orbit_reps(x, c.index):
            if not o.nilpotent(x, y):
                rhs, bad = False, y
                break
        rows.append({"x": ctx.s(x), "closure_nilpotent": lhs, "pairs_nilpotent": rhs})
        if lhs != rhs:
            w = dict(rows[-1])
            if bad is not None:
                w["g_conjugate"] = ctx.s(bad)
            return _report(ctx, "baer-suzuki", "inconsistent", t, w)
    return _report(ctx, "baer-suzuki", "consistent", t, classes=rows)


def verify_op_membership(G, cap=DEFAULT_CAP, oracle=None, primes=None):
    """Odd p-element x meeting every class in a nilpotent <x, g> lies in O_p(G)."""
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    o, E = ctx.oracle, ctx.E
    rows = []
    cores = {}
    for cx, p in ctx.prime_classes():
        if p == 2 or (primes is not None and p not in primes):
            continue
        x = cx.rep
        hyp = True
        for cy in E.classes[1:]:
            if not any(o.nilpotent(x, y) for y in ctx.orbit_reps(x, cy.index)):
                hyp = False
                break
        if p not in cores:
            cores[p] = p_core(ctx.G, p, cap)
        member = cores[p].contains(E.perm(x))
        rows.append({"x": ctx.s(x), "p": p, "hypothesis": hyp, "in_core": member})
        if hyp and not member:
            return _report(ctx, "op-membership", "inconsistent", t, rows[-1])
    return _report(
        ctx,
        "op-membership",
        "consistent",
        t,
        core_orders={str(p): c.order() for p, c in cores.items()},
        elements=rows,
    )


# ------------------------------------------------------------------ prime pairs


def verify_pair_generation(G, p, q, allowed=None, cap=DEFAULT_CAP, oracle=None):
    """Every <x, y> with |x| = p, |y| = q is nonsolvable, of order in ``allowed``."""
    ctx = _ctx(G, cap, oracle)
    t = _Timer(ctx)
    o, E = ctx.oracle, ctx.E
    observed = set()
    for cx in E.classes:
        if cx.element_order != p:
            continue
        for cy in E.classes:
            if cy.element_order != q:
                continue
            for y in E.members(cy.index):
                y = int(y)
                n = o.order(cx.rep, y)
                observed.add(n)
                bad = o.solvable(cx.rep, y) or (allowed is not None and n not in allowed)
                if bad:
                    w = {"x": ctx.s(cx.rep), "y": ctx.s(y), "order_x_y": n, "solvable": o.solvable(cx.rep, y)}
                    outcome = "inconsistent" if allowed is not None else "witness-found"
                    return _report(ctx, "pair-generation", outcome, t, w, p=p, q=q)
    return _report(
        ctx, "pair-generation", "consistent", t, p=p, q=q, observed_orders=sorted(observed)
    )


# ------------------------------------------------------------------ diagonal conjugation


def check_diagonal_identity(S, k=2, trials=100, seed=0, cap=DEFAULT_CAP):
    """In S wr S_k, g (b,...,b) g^-1 = (u_1 b u_1^-1, ..., u_k b u_k^-1) for g = (u_i) sigma."""
    t0 = time.perf_counter()
    E = S.enumeration(cap)
    d = S.degree
    n = d * k
    rng = np.random.default_rng(seed)

    def base(us):
        img = []
        for i, u in enumerate(us):
            img.extend(i * d + v for v in u)
        return Permutation._raw(tuple(img))

    def coord_perm(sigma):
        img = [0] * n
        for i in range(k):
            for j in range(d):
                img[i * d + j] = sigma[i] * d + j
        return Permutation._raw(tuple(img))

    failures = 0
    for _ in range(trials):
        b = E.perm(int(rng.integers(E.order))).raw
        us = [E.perm(int(rng.integers(E.order))).raw for _ in range(k)]
        sigma = [int(v) for v in rng.permutation(k)]
        g = base(us) * coord_perm(sigma)
        y = base([b] * k)
        lhs = g * y * ~g
        expect = base(
            [(Permutation._raw(u) * Permutation._raw(b) * ~Permutation._raw(u)).raw for u in us]
        )
        failures += lhs != expect
    millis = int(round((time.perf_counter() - t0) * 1000))
    return VerdictReport(
        _spec_of(S),
        "diagonal-identity",
        "consistent" if failures == 0 else "inconsistent",
        None,
        {"pairs": trials, "millis": millis},
        {"k": k, "trials": trials, "failures": failures},
    )


# ------------------------------------------------------------------ corpus runner


def _run_pair_generation(ctx, spec, cfg):
    row = PAIR_GENERATION_ROWS.get(spec)
    if row is None:
        return VerdictReport(spec, "pair-generation", "skipped", detail={"reason": "no reference row"})
    p, q, allowed = row
    return verify_pair_generation(ctx, p, q, set(allowed))


CHECKS = {
    "star": lambda ctx, spec, cfg: check_property_star(ctx),
    "solvable-criterion": lambda ctx, spec, cfg: verify_solvability_criterion(ctx),
    "nilpotent-condition": lambda ctx, spec, cfg: check_nilpotent_condition(ctx),
    "nilpotent-criterion": lambda ctx, spec, cfg: verify_nilpotency_criterion(ctx),
    "odd-real-pair": lambda ctx, spec, cfg: check_odd_real_pair(ctx, cfg.cap),
    "real-centralizers": lambda ctx, spec, cfg: check_real_centralizers(ctx, cfg.cap),
    "direct-factor": lambda ctx, spec, cfg: check_direct_factor(ctx),
    "radical-membership": lambda ctx, spec, cfg: check_radical_membership(ctx, cfg.cap),
    "graph-criteria": lambda ctx, spec, cfg: verify_graph_criteria(ctx, graph_cap=cfg.graph_cap),
    "schmidt-criterion": lambda ctx, spec, cfg: verify_schmidt_criterion(ctx, cfg.cap),
    "simple-quotient": lambda ctx, spec, cfg: verify_simple_quotient(
        ctx, cfg.cap, extended=cfg.extended, degree_cap=cfg.degree_cap
    ),
    "baer-suzuki": lambda ctx, spec, cfg: verify_baer_suzuki(ctx),
    "op-membership": lambda ctx, spec, cfg: verify_op_membership(ctx, cfg.cap),
    "pair-generation": _run_pair_generation,
    "diagonal-identity": lambda ctx, spec, cfg: check_diagonal_identity(
        ctx.G, 2, cfg.diagonal_trials, cfg.seed, cfg.cap
    ),
}
DEFAULT_CHECKS = tuple(CHECKS)


def run_corpus(manifest, checks=None, config=None, progress=None):
    """Run ``checks`` (ids) over every spec in ``manifest``; returns reports."""
    cfg = config or CheckConfig()
    checks = list(DEFAULT_CHECKS if checks is None else checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown check id(s): {', '.join(unknown)}")
    specs = [str(s) for s in manifest]
    for s in specs:
        parse_spec(s)
    reports = []
    for spec in specs:
        try:
            G = build(spec, extended=cfg.extended)
            if G.order() > cfg.cap:
                raise CapExceeded(G.order(), cfg.cap)
            ctx = _Ctx(G, cfg.cap)
        except CapExceeded as exc:
            for c in checks:
                reports.append(VerdictReport(spec, c, "skipped", detail={"reason": str(exc)}))
            continue
        except PermSolvError as exc:
            if "extended" in str(exc):
                for c in checks:
                    reports.append(VerdictReport(spec, c, "skipped", detail={"reason": str(exc)}))
                continue
            raise
        for c in checks:
            rep = CHECKS[c](ctx, spec, cfg)
            reports.append(rep)
            if progress:
                progress(rep)
    return reports
