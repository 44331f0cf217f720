"""Command-line frontend: ``bmwskein <verb> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import coeff as C
from .errors import BMWError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def max_n():
    try:
        return int(os.environ.get("BMW_MAX_N", "5"))
    except ValueError:
        raise UsageError("BMW_MAX_N must be an integer") from None


def _partition(text):
    from .young import parse_partition

    try:
        return parse_partition(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _spec(text):
    try:
        return C.Specialization.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cap(n, what="strand count"):
    if n > max_n():
        raise UsageError(f"{what} {n} exceeds BMW_MAX_N={max_n()}")


def _emit(args, payload, text):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# verbs ------------------------------------------------------------------------------


def run_qdim(args):
    from .idem import qdim_specialized, qdim_wenzl

    lam = _partition(args.partition)
    sp = _spec(args.spec)
    forms = ["wen", "wenzltwo"] if args.form == "both" else [args.form]
    values = {}
    for f in forms:
        v = qdim_wenzl(lam, f)
        values[f] = v if sp.kind == "generic" else C.specialize(v, sp)
    payload = {"partition": str(lam), "spec": str(sp)}
    lines = []
    for f in forms:
        payload[f] = str(values[f])
        lines.append(f"{f}: {values[f]}" if len(forms) > 1 else str(values[f]))
    if len(forms) > 1:
        payload["equal"] = values["wen"] == values["wenzltwo"]
        lines.append(f"equal: {payload['equal']}")
    if sp.kind in ("B", "C", "D"):
        closed = qdim_specialized(lam, sp)
        payload["closed_form"] = str(closed)
        payload["closed_form_agrees"] = closed == values[forms[0]]
        lines.append(f"closed form: {closed} (agrees: {payload['closed_form_agrees']})")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def run_idem(args):
    from . import bmw as B
    from .idem import qdim, ytilde, ytilde_pair

    lam = _partition(args.partition)
    if args.pair is not None:
        nu = _partition(args.pair)
        _cap(lam.size + 1)
        x = ytilde_pair(lam, nu)
        label = f"pair ({lam}, {nu})"
    else:
        _cap(lam.size)
        x = ytilde(lam)
        label = f"idempotent {lam}"
    ok = x * x == x
    tr = B.qtrace(x)
    payload = {"label": label, "element": x.to_json(), "idempotent": ok, "qtrace": str(tr)}
    if args.pair is None:
        payload["qtrace_matches_qdim"] = tr == qdim(lam)
    text = f"{label}: {len(x.terms)} basis terms, idempotent={ok}, qtrace={tr}"
    if args.show:
        text += "\n" + str(x)
    _emit(args, payload, text)
    return EXIT_OK if ok else EXIT_FAIL


def run_units(args):
    from . import bmw as B
    from .idem import MatrixUnitDB

    _cap(args.n)
    db = MatrixUnitDB(args.n).build()
    units = db.units_at(args.n)
    total = B.AlgElem(args.n)
    for (_a, _b, q) in units.values():
        total = total + q
    ok = total == B.identity(args.n)
    if args.json:
        payload = db.to_json()
        payload["sum_is_identity"] = ok
        print(json.dumps(payload, sort_keys=True))
    else:
        shapes = {}
        for t in units:
            shapes.setdefault(str(t.shape), []).append(str(t))
        lines = [f"K_{args.n}: {len(units)} path idempotents, sum = 1: {ok}"]
        for lam in sorted(shapes):
            lines.append(f"  {lam}: {', '.join(sorted(shapes[lam]))}")
        print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def run_kauffman(args):
    from .tangle import close_trace, parse_word

    _cap(args.n)
    try:
        w = parse_word(args.word, args.n)
    except (ValueError, IndexError) as exc:
        raise UsageError(str(exc)) from None
    val = close_trace(w)
    _emit(args, {"word": args.word, "n": args.n, "value": str(val)}, str(val))
    return EXIT_OK


def run_feasibility(args):
    from .idem import feasibility

    lam = _partition(args.partition)
    report = feasibility(lam, _spec(args.spec))
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        lines = [f"{report['partition']} at {report['specialization']}: {'pass' if report['ok'] else 'fail'}"]
        for block in ("ytilde", "ptilde"):
            for b in report[block]:
                mark = "pass" if b["ok"] else f"FAIL ({b['witness']})"
                lines.append(f"  {block} {b['bullet']}: {mark}")
        print("\n".join(lines))
    return EXIT_OK if report["ok"] or not args.strict else EXIT_FAIL


def run_verify(args):
    from .verify import SUITES, run

    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    _cap(args.max_size, "max size")
    results = run(args.suite, args.max_size, N=args.N, seed=args.seed)
    ok = all(r.ok for r in results)
    if args.json:
        print(json.dumps({"ok": ok, "suites": [r.to_json() for r in results]}, sort_keys=True))
    else:
        for r in results:
            line = f"{r.suite}: {'pass' if r.ok else 'FAIL'} ({len(r.checks)} checks)"
            print(line)
            if r.suite == "brauer" and r.ok:
                for t, tr in r.info.get("traces", {}).items():
                    print(f"  trace {t} = {tr}")
            if r.suite == "dims" and r.ok:
                for lam, routes in r.info.get("agreement", {}).items():
                    print(f"  {lam}: {' = '.join(routes)}")
            if not r.ok:
                print("  counterexample: " + json.dumps(r.counterexample, sort_keys=True))
    return EXIT_OK if ok else EXIT_FAIL


# parser ----------------------------------------------------------------------------


def build_parser():
    p = _Parser(prog="bmwskein", description="Exact BMW, Hecke and Brauer algebra computations.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    q = sub.add_parser("qdim", help="quantum dimension of a Young diagram")
    q.add_argument("-p", "--partition", required=True)
    q.add_argument("--form", choices=["wen", "wenzltwo", "both"], default="wen")
    q.add_argument("--spec", default="generic")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=run_qdim)

    i = sub.add_parser("idem", help="minimal idempotent of a shape")
    i.add_argument("-p", "--partition", required=True)
    i.add_argument("--pair", default=None, help="build the pair idempotent through this smaller shape")
    i.add_argument("--show", action="store_true")
    i.add_argument("--json", action="store_true")
    i.set_defaults(func=run_idem)

    u = sub.add_parser("units", help="matrix units of K_n")
    u.add_argument("-n", type=int, required=True)
    u.add_argument("--json", action="store_true")
    u.set_defaults(func=run_units)

    k = sub.add_parser("kauffman", help="Kauffman polynomial of a closed word")
    k.add_argument("-n", type=int, required=True)
    k.add_argument("-w", "--word", default="")
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=run_kauffman)

    f = sub.add_parser("feasibility", help="conditions for the idempotents under a specialization")
    f.add_argument("-p", "--partition", required=True)
    f.add_argument("--spec", default="generic")
    f.add_argument("--strict", action="store_true", help="exit 1 when a condition fails")
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=run_feasibility)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", default="all")
    v.add_argument("--max-size", type=int, default=3)
    v.add_argument("--N", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=run_verify)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BMWError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
