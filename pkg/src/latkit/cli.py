"""latkit command line: discriminant forms, short vectors, overlattice
gluing, family checks, and the full claim reproduction suite.

Exit codes: 0 all checks pass, 1 a check failed, 2 input/usage error.
"""

import argparse
import json
import sys

from . import catalog, k3fam, shortvec
from .files import ParseError, parse_family_file, parse_lattice_file
from .lattice import (
    GlueVector, LatticeError, discriminant_group, make_lattice, overlattice,
)

SCHEMA = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _emit(payload, as_json, out):
    if as_json:
        print(json.dumps(payload, indent=2), file=out)
    else:
        _emit_text(payload, out)


def _emit_text(payload, out):
    print("latkit %s" % payload["command"], file=out)
    for res in payload["results"]:
        if "pass" in res:
            status = "ok  " if res["pass"] else "FAIL"
            print("  [%s] %s: expected %s, computed %s  (%.1f ms)"
                  % (status, res["id"], res["expected"], res["computed"],
                     res.get("millis", 0.0)), file=out)
        else:
            print("  %s: %s" % (res["id"], res["value"]), file=out)


def _lattice_from_file(path):
    lf = parse_lattice_file(path)
    lat = make_lattice(lf.gram)
    return lf, lat


def cmd_disc(args, out):
    lf, lat = _lattice_from_file(args.file)
    if lf.glue:
        lat, _, _ = overlattice(lat, [GlueVector(v) for v in lf.glue])
    fqf = discriminant_group(lat)
    results = []
    if not fqf.invariant_factors:
        results.append({"id": "disc/group", "value": "unimodular (trivial group)"})
    else:
        results.append({"id": "disc/group",
                        "value": ",".join(str(d) for d in fqf.invariant_factors)})
        for i, (d, q) in enumerate(zip(fqf.invariant_factors, fqf.q_values)):
            results.append({"id": "disc/q[%d]" % i, "value": "order %d, q = %s" % (d, q)})
        for i, row in enumerate(fqf.b_matrix):
            results.append({"id": "disc/b[%d]" % i,
                            "value": " ".join(str(x) for x in row)})
    payload = {"schema": SCHEMA, "command": "disc %s" % args.file,
               "results": results, "exit": EXIT_OK}
    _emit(payload, args.json, out)
    return EXIT_OK


def cmd_shortvec(args, out):
    lf, lat = _lattice_from_file(args.file)
    if lf.glue:
        lat, _, _ = overlattice(lat, [GlueVector(v) for v in lf.glue])
    rep = shortvec.short_vectors(lat, args.bound)
    results = [
        {"id": "shortvec/pairs", "value": str(rep.total_pairs)},
        {"id": "shortvec/counts",
         "value": "; ".join("norm %d: %d pairs" % (n, c)
                            for n, c in rep.counts_by_norm) or "none"},
        {"id": "shortvec/convention",
         "value": "negated input" if rep.negated else "as given"},
    ]
    if not args.count_only:
        for v, norm in rep.vectors:
            results.append({"id": "shortvec/vector",
                            "value": "%s norm %d" % (list(v), norm)})
    payload = {"schema": SCHEMA, "command": "shortvec %s --bound %d" % (args.file, args.bound),
               "results": results, "exit": EXIT_OK}
    _emit(payload, args.json, out)
    return EXIT_OK


def cmd_overlattice(args, out):
    lf, lat = _lattice_from_file(args.file)
    if not lf.glue:
        raise LatticeError("no glue rows in %s" % args.file)
    lat2, index, basis = overlattice(lat, [GlueVector(v) for v in lf.glue])
    fqf = discriminant_group(lat2)
    results = [
        {"id": "overlattice/index", "value": str(index)},
        {"id": "overlattice/det", "value": str(lat2.det)},
        {"id": "overlattice/even", "value": str(lat2.is_even)},
        {"id": "overlattice/disc",
         "value": ",".join(str(d) for d in fqf.invariant_factors) or "trivial"},
    ]
    for row in basis:
        results.append({"id": "overlattice/basis-row",
                        "value": " ".join(str(x) for x in row)})
    payload = {"schema": SCHEMA, "command": "overlattice %s" % args.file,
               "results": results, "exit": EXIT_OK}
    _emit(payload, args.json, out)
    return EXIT_OK


def cmd_family(args, out):
    ff = parse_family_file(args.file)
    ok, weight = k3fam.is_invariant_family(ff.family)
    results = [{
        "id": "family/invariant", "expected": "True",
        "computed": str(ok), "pass": ok, "millis": 0.0,
    }, {
        "id": "family/weight",
        "value": str(weight) if weight is not None else "mixed",
    }]
    exit_code = EXIT_OK if ok else EXIT_FAIL
    if "sigma" in ff.maps and "iota" in ff.maps:
        dih = k3fam.dihedral_in_pgl(ff.maps["sigma"], ff.maps["iota"])
        results.append({"id": "family/dihedral", "expected": "True",
                        "computed": str(dih), "pass": dih, "millis": 0.0})
        if not dih:
            exit_code = EXIT_FAIL
    payload = {"schema": SCHEMA, "command": "family %s" % args.file,
               "results": results, "exit": exit_code}
    _emit(payload, args.json, out)
    return exit_code


def cmd_repro(args, out):
    claims = catalog.repro_all(filter_tag=args.filter, inject_fault=args.inject_fault)
    if not claims:
        raise ValueError("filter %r matches no claims" % args.filter)
    results = [c.as_dict() for c in claims]
    exit_code = EXIT_OK if all(c.passed for c in claims) else EXIT_FAIL
    payload = {"schema": SCHEMA, "command": "repro", "results": results,
               "exit": exit_code}
    _emit(payload, args.json, out)
    return exit_code


def build_parser():
    ap = argparse.ArgumentParser(
        prog="latkit",
        description="Exact-arithmetic toolkit for even integral lattices.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("disc", help="discriminant form of a lattice file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_disc)

    p = sub.add_parser("shortvec", help="short vectors of a definite lattice")
    p.add_argument("file")
    p.add_argument("--bound", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_shortvec)

    p = sub.add_parser("overlattice", help="glue a lattice file's glue rows")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_overlattice)

    p = sub.add_parser("family", help="check a monomial family file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_family)

    p = sub.add_parser("repro", help="run the full claim reproduction suite")
    p.add_argument("--filter", default=None, help="restrict to claim ids with this prefix")
    p.add_argument("--json", action="store_true")
    p.add_argument("--inject-fault", default=None, metavar="ID",
                   help="negative control: corrupt a construction (known: %s)"
                   % ", ".join(catalog.FAULT_IDS))
    p.set_defaults(fn=cmd_repro)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    try:
        return args.fn(args, out)
    except (ParseError, FileNotFoundError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
