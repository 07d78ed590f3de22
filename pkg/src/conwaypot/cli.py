"""Command-line interface: ``conwaypot compute|verify|dataset``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .ccomplex import CComplexData, CComplexError, potential
from .dataset import get_entry, load_dataset
from .diagrams import DiagramError, parse_pd
from .fox import alexander_polynomial
from .laurent import default_names
from .seifert import SeifertSurface, conway_from_seifert, conway_z_form, matrix_to_json
from .suites import SUITES, run_suite

EXIT_FAIL = 1
EXIT_INVALID = 2


def _names(n, style):
    if style == "indexed":
        return ["t%d" % (i + 1) for i in range(n)] if n > 1 else ["t"]
    if style == "xyz":
        if n > 3:
            raise ValueError("xyz names cover at most three colors")
        return ["x", "y", "z"][:n]
    return default_names(n)


def _emit(obj, text, fmt):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)


def _invalid(violations):
    for v in violations:
        print("error: %s" % v, file=sys.stderr)
    return EXIT_INVALID


# -- compute -----------------------------------------------------------------

def _compute_ccomplex(text, args):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CComplexError(["not JSON: %s" % exc]) from None
    if isinstance(obj, dict) and "data" in obj and "forms" not in obj:
        obj = obj["data"]
    c = CComplexData.from_json(obj)
    pv = potential(c)
    names = _names(c.n, args.vars)
    return {"quantity": "potential", "n": c.n, "value": pv.to_json(),
            "text": pv.format(names)}, pv.format(names)


def _compute_conway(text, args):
    d = parse_pd(text)
    if d.n != 1:
        d = d.recolor([1] * d.mu)
    surf = SeifertSurface(d)
    if surf.connected:
        A = surf.matrix()
        D = conway_from_seifert(A)
    else:
        A = None
        D = conway_from_seifert([], split=True)
    names = _names(1, args.vars)
    z = conway_z_form(D)
    obj = {"quantity": "conway_D", "value": D.to_json(), "text": D.format(names),
           "z_form": None if z is None else z.format(["z"]),
           "seifert_matrix": None if A is None else matrix_to_json(A)}
    return obj, D.format(names)


def _compute_alexander(text, args):
    d = parse_pd(text)
    delta = alexander_polynomial(d)
    names = _names(d.n, args.vars)
    obj = {"quantity": "alexander", "n": d.n, "value": delta.to_json(),
           "text": delta.format(names)}
    return obj, delta.format(names)


def cmd_compute(args):
    try:
        text = Path(args.path).read_text() if args.path != "-" else sys.stdin.read()
    except OSError as exc:
        return _invalid(["cannot read %s: %s" % (args.path, exc)])
    fn = {"ccomplex": _compute_ccomplex, "conway": _compute_conway,
          "alexander": _compute_alexander}[args.mode]
    try:
        obj, txt = fn(text, args)
    except CComplexError as exc:
        return _invalid(exc.violations)
    except (DiagramError, ValueError) as exc:
        return _invalid([str(exc)])
    _emit(obj, txt, args.format)
    return 0


# -- verify ------------------------------------------------------------------

def cmd_verify(args):
    try:
        rep = run_suite(args.suite, args.seed, args.count)
    except (OSError, ValueError, KeyError) as exc:
        return _invalid([str(exc)])
    manifest = rep.to_json()
    if args.report:
        Path(args.report).write_text(json.dumps(manifest, indent=1) + "\n")
    if args.format == "json":
        print(json.dumps(manifest, indent=1))
    else:
        by = {}
        for r in manifest["results"]:
            tot, bad, vac = by.get(r["check"], (0, 0, 0))
            by[r["check"]] = (tot + 1, bad + (not r["pass"]), vac + r["vacuous"])
        for name in sorted(by):
            tot, bad, vac = by[name]
            print("%-22s %5d checked  %3d failed  %3d vacuous" % (name, tot, bad, vac))
        for r in manifest["results"]:
            if not r["pass"]:
                print("FAIL %s seed=%s sources=%s %s" % (r["check"], r.get("seed"),
                                                         ",".join(r["sources"]), r["detail"]))
        for s in manifest["skipped"]:
            print("skipped %s: %s" % (s["check"], s["reason"]))
        print("%s: %s (%d checks)" % (args.suite, "PASS" if manifest["pass"] else "FAIL",
                                      manifest["total"]))
    return 0 if manifest["pass"] else EXIT_FAIL


# -- dataset -----------------------------------------------------------------

def cmd_dataset(args):
    try:
        ds = load_dataset()
        if args.action == "list":
            for e in ds.values():
                labels = ", ".join(e.ccomplexes) or "-"
                print("%-22s mu=%d n=%d  complexes: %s  %s"
                      % (e.id, e.mu, e.diagram.n, labels, e.name))
            return 0
        if args.action == "show":
            if not args.id:
                return _invalid(["dataset show needs an entry id"])
            e = get_entry(args.id)
            if args.format == "json":
                print(json.dumps(e.to_json(), indent=1))
                return 0
            print("%s: %s" % (e.id, e.name))
            print("diagram:\n" + e.diagram.to_text().rstrip())
            for label, c in e.ccomplexes.items():
                pv = potential(c)
                print("complex %r: n=%d g=%d clasps=%s  potential %s"
                      % (label, c.n, c.g, list(c.clasp_signs), pv.format()))
            for x in e.expected:
                print("expected %s%s [%s]" % (x.quantity, " of %r" % x.of if x.of else "",
                                              x.provenance))
            return 0
        # export
        entries = [get_entry(args.id)] if args.id else list(ds.values())
        if args.ccomplex:
            if not args.id:
                return _invalid(["--ccomplex needs an entry id"])
            if args.ccomplex not in entries[0].ccomplexes:
                return _invalid(["entry %s has no complex %r" % (args.id, args.ccomplex)])
            out = entries[0].ccomplexes[args.ccomplex].to_json()
        elif args.id:
            out = entries[0].to_json()
        else:
            out = [e.to_json() for e in entries]
        text = json.dumps(out, indent=1) + "\n"
        if args.out:
            Path(args.out).write_text(text)
        else:
            sys.stdout.write(text)
        return 0
    except KeyError as exc:
        return _invalid([str(exc.args[0])])
    except (OSError, ValueError) as exc:
        return _invalid([str(exc)])


def build_parser():
    p = argparse.ArgumentParser(prog="conwaypot",
                                description="Conway potential functions of colored links")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="potential, Conway polynomial or Alexander polynomial")
    c.add_argument("mode", choices=("ccomplex", "conway", "alexander"))
    c.add_argument("path", help="input file, or - for stdin")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--vars", choices=("auto", "indexed", "xyz"), default="auto",
                   help="variable names: t / x,y / t1..tn (auto), t1..tn, or x,y,z")
    c.add_argument("--convention", choices=("right-handed",), default="right-handed")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--count", type=int, default=None)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--report", help="also write the JSON manifest here")
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dataset", help="list, show or export curated entries")
    d.add_argument("action", choices=("list", "show", "export"))
    d.add_argument("id", nargs="?")
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.add_argument("--ccomplex", help="export only this C-complex of the entry")
    d.add_argument("--out", help="write the export to a file")
    d.set_defaults(func=cmd_dataset)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
