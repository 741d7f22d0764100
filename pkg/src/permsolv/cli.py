"""Command-line front end: ``permsolv {info,graph,verify,table}``.

Exit codes: 0 success, 1 usage error, 2 a check came back inconsistent.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile

from . import atlas, graphs, harness, symcomb
from .errors import CapExceeded, PermSolvError
from .group import DEFAULT_CAP
from .numtheory import prime_power_base
from .structure import DEFAULT_DEGREE_CAP, is_nilpotent, is_solvable, solvable_radical, sylow_orders

EXIT_OK, EXIT_USAGE, EXIT_INCONSISTENT = 0, 1, 2

TABLE_IDS = ("A-subset", "B", "C-subset", "D-m11")
REAL_TABLE_GROUPS = {"A-subset": ("M:11", "M:12", "M:22"), "C-subset": ("PSL2:7", "PSL2:11", "PSL3:3")}
GRAPH_KINDS = {
    "element": graphs.ELEMENT_RELATIONS,
    "class": graphs.CLASS_RELATIONS,
    "expanded": graphs.CLASS_RELATIONS,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _range(text):
    lo, sep, hi = text.partition("..")
    try:
        lo, hi = int(lo), int(hi) if sep else int(lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected LO..HI") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def write_atomic(path, text):
    """Write via a temporary file in the same directory and rename."""
    path = os.fspath(path)
    d = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".permsolv-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(text, out):
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _dump_json(obj):
    return json.dumps(obj, indent=1, sort_keys=False) + "\n"


# ------------------------------------------------------------------ info


def group_info(spec, cap=DEFAULT_CAP, extended=False):
    """Summary dict; fields needing enumeration become {"error": ...} over the cap."""
    G = atlas.build(spec, extended=extended)
    order = G.order()
    info = {
        "spec": G.name,
        "degree": G.degree,
        "order": order,
        "solvable": is_solvable(G),
        "nilpotent": is_nilpotent(G),
        "sylow_orders": {str(p): n for p, n in sylow_orders(G).items()},
    }
    try:
        E = G.enumeration(cap)
        info["radical_order"] = solvable_radical(G, cap).order()
        info["class_count"] = len(E.classes)
    except CapExceeded as exc:
        info["radical_order"] = {"error": str(exc)}
        info["class_count"] = {"error": str(exc)}
    return info


def _info_text(info):
    lines = []
    for k, v in info.items():
        if isinstance(v, dict) and "error" in v:
            v = f"not computed ({v['error']})"
        elif k == "sylow_orders":
            v = ", ".join(f"{p}: {n}" for p, n in v.items()) or "-"
        lines.append(f"{k:14} {v}")
    return "\n".join(lines) + "\n"


def cmd_info(args):
    info = group_info(args.spec, args.cap, args.extended)
    _emit(_dump_json(info) if args.format == "json" else _info_text(info), args.out)
    return EXIT_OK


# ------------------------------------------------------------------ graph


def cmd_graph(args):
    allowed = GRAPH_KINDS[args.kind]
    if args.relation not in allowed:
        raise UsageError(
            f"relation {args.relation!r} is not defined for {args.kind} graphs "
            f"(choose from {', '.join(allowed)})"
        )
    fmt = args.format or "json"
    if fmt not in ("json", "dot"):
        raise UsageError("graph output format must be json or dot")
    G = atlas.build(args.spec, extended=args.extended)
    if G.order() > args.cap:
        raise CapExceeded(G.order(), args.cap)
    builder = {
        "element": graphs.element_graph,
        "class": graphs.class_graph,
        "expanded": graphs.expanded_graph,
    }[args.kind]
    g = builder(G, args.relation, args.cap)
    _emit(graphs.export_dot(g) if fmt == "dot" else graphs.export_json(g), args.out)
    return EXIT_OK


# ------------------------------------------------------------------ verify


def cmd_verify(args):
    if args.spec:
        manifest = list(args.spec)
    elif args.manifest:
        manifest = atlas.load_manifest(args.manifest)
    else:
        manifest = atlas.default_manifest()
    checks = None
    if args.check:
        checks = [c for item in args.check for c in item.split(",") if c]
        unknown = [c for c in checks if c not in harness.CHECKS]
        if unknown:
            raise UsageError(f"unknown check id(s): {', '.join(unknown)}")
    cfg = harness.CheckConfig(cap=args.cap, degree_cap=args.degree_cap, extended=args.extended)
    reports = harness.run_corpus(manifest, checks, cfg)
    bad = [r for r in reports if r.outcome == "inconsistent"]
    fmt = args.format or "json"
    if fmt == "json":
        payload = [r.as_dict(timing=args.timing) for r in reports]
        text = _dump_json(payload)
    elif fmt == "text":
        text = "".join(
            f"{r.spec:24} {r.check:20} {r.outcome}"
            + (f"  ({r.detail['reason']})" if r.outcome == "skipped" and "reason" in r.detail else "")
            + "\n"
            for r in reports
        )
        counts = {}
        for r in reports:
            counts[r.outcome] = counts.get(r.outcome, 0) + 1
        text += "summary: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())) + "\n"
    else:
        raise UsageError("verify output format must be json or text")
    _emit(text, args.out)
    return EXIT_INCONSISTENT if bad else EXIT_OK


# ------------------------------------------------------------------ tables


def alternating_rows(lo, hi):
    """All odd-centralizer real prime-power findings of A_n per n; EMPTY when none."""
    rows = []
    for n in range(lo, hi + 1):
        found = symcomb.search_odd_centralizer_real(n)
        if not found:
            rows.append({"n": n, "status": "EMPTY"})
        for f in found:
            rows.append(
                {
                    "n": n,
                    "status": "found",
                    "order": f.order,
                    "centralizer": f.centralizer_order_alt,
                    "cycle_type": " ".join(map(str, f.cycle_type.lengths)),
                    "label_hint": f.class_label_hint,
                }
            )
    return rows


def real_class_rows(specs, cap=DEFAULT_CAP, extended=False):
    """Real classes of odd prime-power order with odd centralizer, per group."""
    rows = []
    for spec in specs:
        G = atlas.build(spec, extended=extended)
        try:
            classes = harness.real_odd_centralizer_classes(G, cap)
        except CapExceeded as exc:
            rows.append({"group": spec, "status": f"skipped: {exc}"})
            continue
        classes = [c for c in classes if prime_power_base(c[0]) is not None]
        if not classes:
            rows.append({"group": spec, "status": "EMPTY"})
        for order, cent, size in classes:
            rows.append(
                {"group": spec, "status": "found", "order": order, "centralizer": cent, "class_size": size}
            )
    return rows


def pair_generation_rows(cap=DEFAULT_CAP):
    rows = []
    for spec, (p, q, allowed) in harness.PAIR_GENERATION_ROWS.items():
        rep = harness.verify_pair_generation(atlas.build(spec), p, q, set(allowed), cap)
        rows.append(
            {
                "group": spec,
                "p": p,
                "q": q,
                "outcome": rep.outcome,
                "observed_orders": " ".join(map(str, rep.detail.get("observed_orders", []))),
                "pairs": rep.stats["pairs"],
            }
        )
    return rows


def _rows_text(rows, fmt):
    if fmt == "json":
        return _dump_json(rows)
    fields = []
    for r in rows:
        fields.extend(k for k in r if k not in fields)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
        return buf.getvalue()
    widths = {f: max(len(f), *(len(str(r.get(f, ""))) for r in rows)) for f in fields}
    lines = ["  ".join(f.ljust(widths[f]) for f in fields)]
    lines += ["  ".join(str(r.get(f, "")).ljust(widths[f]) for f in fields).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def cmd_table(args):
    fmt = args.format or "text"
    if fmt not in ("csv", "json", "text"):
        raise UsageError("table output format must be csv, json or text")
    if args.table == "B":
        lo, hi = args.range or (5, 41)
        if lo < 5 or hi > symcomb.DEFAULT_SEARCH_BOUND:
            raise UsageError(f"range must lie within 5..{symcomb.DEFAULT_SEARCH_BOUND}")
        rows = alternating_rows(lo, hi)
    elif args.table == "D-m11":
        rows = pair_generation_rows(args.cap)
    else:
        rows = real_class_rows(REAL_TABLE_GROUPS[args.table], args.cap, args.extended)
    _emit(_rows_text(rows, fmt), args.out)
    return EXIT_OK


# ------------------------------------------------------------------ parser


def build_parser():
    common = _Parser(add_help=False)
    common.add_argument("--cap", type=_positive, default=DEFAULT_CAP, help="enumeration cap")
    common.add_argument("--degree-cap", type=_positive, default=DEFAULT_DEGREE_CAP)
    common.add_argument("--extended", action="store_true", help="allow extended-scale groups and checks")
    common.add_argument("--format", choices=("json", "dot", "csv", "text"))
    common.add_argument("--out", help="output path (default: stdout)")

    p = _Parser(prog="permsolv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("info", parents=[common], help="order, solvability and radical of a group")
    s.add_argument("spec")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("graph", parents=[common], help="export an element or class graph")
    s.add_argument("spec")
    s.add_argument("--kind", choices=tuple(GRAPH_KINDS), default="element")
    s.add_argument("--relation", required=True)
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("verify", parents=[common], help="run harness checks over a manifest")
    s.add_argument("--check", action="append", help="check id (repeatable or comma-separated)")
    s.add_argument("--spec", action="append", help="group spec instead of a manifest (repeatable)")
    s.add_argument("--manifest", help="manifest file, one spec per line")
    s.add_argument("--timing", action="store_true", help="record wall time in stats.millis")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", parents=[common], help="reproduce a data table")
    s.add_argument("table", choices=TABLE_IDS)
    s.add_argument("--range", type=_range, help="n range for table B, e.g. 5..41")
    s.set_defaults(func=cmd_table)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if args.format == "dot" and args.command != "graph":
            raise UsageError("dot output is only available for graphs")
        return args.func(args)
    except UsageError as exc:
        print(f"permsolv: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        # an internal self-check failed (order mismatch, series too long, ...)
        print(f"permsolv: internal error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValueError, PermSolvError) as exc:
        # bad specs, unsupported parameters, caps exceeded on direct requests
        print(f"permsolv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
