"""Command line front end: compute vertex/pyramid series, cross-verify the
independent pipelines, and run the uniqueness scan.  Emits JSON or CSV.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import partition_core as pc
from . import rpc
from .dt_vertex import (
    closed_z2z2_nolegs, closed_z2z2_staircase, corollary_rpc_closed,
    enumerate_3d, one_leg_zn_staircase, pyramid_closed, vertex_closed_zn,
)
from .fock_transfer import vertex_by_transfer
from .pyramid import ANTI, DIAG, pyramid_series

WORKERS_ENV = "ORBIVERTEX_WORKERS"


def _partition_arg(text):
    try:
        return pc.parse_partition(text)
    except ValueError as ex:
        raise argparse.ArgumentTypeError(str(ex))


def _methods_arg(allowed):
    def conv(text):
        out = []
        for x in text.split(","):
            x = x.strip()
            if x not in allowed:
                raise argparse.ArgumentTypeError(
                    "method must be one of %s" % ",".join(sorted(allowed)))
            if x not in out:
                out.append(x)
        return tuple(out)
    return conv


def _default_workers():
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _monomial(names, exps):
    bits = []
    for name, e in zip(names, exps):
        if e == 1:
            bits.append(name)
        elif e:
            bits.append("%s^%d" % (name, e))
    return "*".join(bits) if bits else "1"


def _first_diff(a, b):
    keys = sorted(set(a.terms) | set(b.terms), key=lambda e: (sum(e), e))
    for e in keys:
        if a.coefficient(e) != b.coefficient(e):
            return e
    return None


def _series_obj(s):
    return json.loads(s.to_json())


def _write(args, text):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_records(args, records):
    if args.format == "json":
        _write(args, json.dumps({"results": records}, sort_keys=True,
                                separators=(",", ":")) + "\n")
        return
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    names = records[0]["series"]["vars"]
    w.writerow(["method"] + list(names) + ["coef"])
    for rec in records:
        for item in rec["series"]["terms"]:
            w.writerow([rec["method"]] + item["exp"] + [item["coef"]])
    _write(args, buf.getvalue())


def _check_pairs(named):
    """named: list of (label, series).  Returns 0 or prints the first
    differing monomial and returns 1."""
    base_label, base = named[0]
    for label, s in named[1:]:
        e = _first_diff(base, s)
        if e is not None:
            print("mismatch %s vs %s at %s: %d != %d"
                  % (base_label, label, _monomial(s.names, e),
                     base.coefficient(e), s.coefficient(e)))
            return 1
    return 0


def _vertex_series(args, method):
    leg, d = args.leg, args.degree
    if args.group == "z2z2":
        if method == "enumerate":
            return enumerate_3d(leg, "z2z2", d)
        if method == "transfer":
            return vertex_by_transfer("z2z2", leg, d)
        if not pc.is_staircase(leg):
            raise ValueError("closed form needs a staircase leg, got %r" % (leg,))
        if not leg:
            return closed_z2z2_nolegs(d)
        return closed_z2z2_staircase(len(leg), d)
    if method == "enumerate":
        return enumerate_3d(leg, "zn", d, n=args.n)
    if method == "transfer":
        return vertex_by_transfer("zn", leg, d, n=args.n)
    return vertex_closed_zn(args.n, ((), (), leg), d)


def _run_vertex(args):
    records = []
    named = []
    for method in args.method:
        s = _vertex_series(args, method)
        named.append((method, s))
        rec = {"vertex": "zero_leg" if not args.leg else "one_leg",
               "group": args.group, "leg": list(args.leg),
               "method": method, "series": _series_obj(s)}
        if args.group == "zn":
            rec["n"] = args.n
        records.append(rec)
    if args.verify:
        if len(named) < 2:
            raise ValueError("--verify needs at least two methods")
        if _check_pairs(named):
            return 1
    _emit_records(args, records)
    return 0


def _run_pyramid(args):
    records = []
    named = []
    for method in args.method:
        s = pyramid_closed(args.degree) if method == "closed" \
            else pyramid_series(args.degree)
        named.append((method, s))
        records.append({"vertex": "pyramid", "group": "z2z2", "leg": [],
                        "method": method, "series": _series_obj(s)})
    if args.verify:
        if len(named) < 2:
            raise ValueError("--verify needs at least two methods")
        if _check_pairs(named):
            return 1
    _emit_records(args, records)
    return 0


def _run_rpc(args):
    records = []
    named = []
    for method in args.method:
        if method == "interlacing":
            s = rpc.generating_function(args.leg, args.shift, args.frame,
                                        args.degree)
        else:
            if not pc.is_staircase(args.leg):
                raise ValueError("closed form needs a staircase leg, got %r"
                                 % (args.leg,))
            s = corollary_rpc_closed(len(args.leg), args.degree)
        named.append((method, s))
        records.append({"vertex": "rpc", "group": "z2z2",
                        "leg": list(args.leg), "method": method,
                        "frame": args.frame, "shift": args.shift,
                        "series": _series_obj(s)})
    if args.verify:
        if len(named) < 2:
            raise ValueError("--verify needs at least two methods")
        if _check_pairs(named):
            return 1
    _emit_records(args, records)
    return 0


def _run_uniqueness(args):
    scan = rpc.uniqueness_scan(args.max_leg_size, args.shifts, args.window)
    rows = [{"leg": list(v), "shift": l, "symmetric": ok}
            for (v, l), ok in sorted(scan.items())]
    symmetric = sorted({tuple(r["leg"]) for r in rows if r["symmetric"]})
    expected = {tuple(pc.staircase(m)) for m in range(args.max_leg_size + 1)
                if pc.size(pc.staircase(m)) <= args.max_leg_size}
    report = {"window": args.window, "shifts": list(args.shifts),
              "max_leg_size": args.max_leg_size,
              "results": rows,
              "symmetric_legs": [list(v) for v in symmetric],
              "staircases_only": set(symmetric) == expected}
    if args.format == "json":
        _write(args, json.dumps(report, sort_keys=True,
                                separators=(",", ":")) + "\n")
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["leg", "shift", "symmetric"])
        for r in rows:
            w.writerow([",".join(str(x) for x in r["leg"]), r["shift"],
                        int(r["symmetric"])])
        _write(args, buf.getvalue())
    return 0


def _run_verify(args):
    d = args.degree
    checks = []
    en = enumerate_3d((), "z2z2", d)
    checks.append(("zero_leg_enumerate_transfer", en,
                   vertex_by_transfer("z2z2", (), d)))
    checks.append(("zero_leg_enumerate_closed", en, closed_z2z2_nolegs(d)))
    checks.append(("zero_leg_z4_transfer_closed",
                   vertex_by_transfer("zn", (), d, n=4),
                   vertex_closed_zn(4, ((), (), ()), d)))
    for m in (1, 2):
        checks.append(("staircase_m%d_enumerate_closed" % m,
                       enumerate_3d(pc.staircase(m), "z2z2", d),
                       closed_z2z2_staircase(m, d)))
    checks.append(("staircase_m1_z4_branch",
                   vertex_by_transfer("zn", (1,), d, n=4),
                   one_leg_zn_staircase(4, 1, d)))
    checks.append(("pyramid_enumerate_closed", pyramid_series(d),
                   pyramid_closed(d)))
    checks.append(("rpc_m1_interlacing_closed",
                   rpc.generating_function((1,), 0, ANTI, d),
                   corollary_rpc_closed(1, d)))
    rows = []
    status = 0
    for name, a, b in checks:
        e = _first_diff(a, b)
        ok = e is None
        rows.append({"check": name, "ok": ok})
        if not ok:
            print("mismatch in %s at %s: %d != %d"
                  % (name, _monomial(a.names, e),
                     a.coefficient(e), b.coefficient(e)))
            status = 1
    if status == 0:
        if args.format == "json":
            _write(args, json.dumps({"checks": rows, "ok": True},
                                    sort_keys=True,
                                    separators=(",", ":")) + "\n")
        else:
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["check", "ok"])
            for r in rows:
                w.writerow([r["check"], int(r["ok"])])
            _write(args, buf.getvalue())
    return status


def _add_common(p, methods, default_method):
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--method", type=_methods_arg(methods),
                   default=default_method)
    p.add_argument("--verify", action="store_true")
    _add_output(p)


def _add_output(p):
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)
    p.add_argument("--workers", type=int, default=_default_workers())


def build_parser():
    parser = argparse.ArgumentParser(
        prog="orbivertex",
        description="orbifold vertex and pyramid partition series")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vertex", help="one-leg vertex series")
    p.add_argument("--group", choices=("z2z2", "zn"), default="z2z2")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--leg", type=_partition_arg, default=())
    _add_common(p, ("closed", "enumerate", "transfer"), ("closed",))
    p.set_defaults(run=_run_vertex)

    p = sub.add_parser("pyramid", help="pyramid partition series")
    _add_common(p, ("closed", "enumerate"), ("closed",))
    p.set_defaults(run=_run_pyramid)

    p = sub.add_parser("rpc", help="restricted pyramid series")
    p.add_argument("--leg", type=_partition_arg, default=())
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--frame", choices=(ANTI, DIAG), default=ANTI)
    _add_common(p, ("interlacing", "closed"), ("interlacing",))
    p.set_defaults(run=_run_rpc)

    p = sub.add_parser("uniqueness", help="symmetric interlacing scan")
    p.add_argument("--max-leg-size", type=int, default=6)
    p.add_argument("--window", type=int, default=10)
    p.add_argument("--shifts", type=lambda t: tuple(int(x) for x in t.split(",")),
                   default=(0, 1))
    _add_output(p)
    p.set_defaults(run=_run_uniqueness)

    p = sub.add_parser("verify", help="cross-check the three pipelines")
    p.add_argument("--degree", type=int, default=6)
    _add_output(p)
    p.set_defaults(run=_run_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "degree", 0) < 0:
        parser.error("degree must be >= 0")
    if args.workers < 1:
        parser.error("workers must be >= 1")
    try:
        return args.run(args)
    except ValueError as ex:
        parser.error(str(ex))


if __name__ == "__main__":
    sys.exit(main())
