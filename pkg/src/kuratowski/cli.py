"""
Command-line surface.

Every run prints one report document: a JSON envelope (schema version,
argv echo, elapsed milliseconds, payload) or the csv/ascii rendering of
the same payload.  With --output the document goes to a file and
payloads with a natural picture get a figure written next to it.
Exit status: 0 success, 1 a verification command found a failure,
2 bad usage or bad input.
"""

import argparse
import json
import os
import sys
import time

from . import algebra, formats, spaces
from .census import census, named_semigroup
from .checks import CHECKS, verify_all
from .monoid import the_monoid
from .report import render_figures


def _name_grid(table):
    return [[table.names[v] for v in row] for row in table.entries]


def _identity_name(table):
    e = algebra.find_identity(table, set(range(table.order)))
    return None if e is None else table.names[e]


def _parse_ids(text):
    try:
        ids = [int(x) for x in text.split(",")]
    except ValueError:
        raise ValueError("expected comma-separated ids, got %r" % text) \
            from None
    if not ids or any(not 0 <= x < 14 for x in ids):
        raise ValueError("element ids run from 0 to 13")
    return ids


def _scope(args):
    if getattr(args, "within", None):
        ids = _parse_ids(args.within)
        name = "<%s>" % ",".join(str(x) for x in sorted(set(ids)))
        m = the_monoid().table
        return name, algebra.generate(m, ids)
    name = getattr(args, "name", None) or "M"
    return name, named_semigroup(name)


def cmd_table(args):
    name, s = _scope(args)
    t = algebra.restrict(the_monoid().table, s)
    return {"kind": "table", "scope": name, "names": t.names,
            "identity": _identity_name(t), "entries": _name_grid(t)}


def cmd_census(args):
    name, s = _scope(args)
    r = census(s)
    return {"kind": "census", "scope": name,
            "semigroups": r.total_semigroups, "types": r.iso_types,
            "non_monoids": r.non_monoid_count, "groups": r.groups,
            "monoids": r.monoids,
            "by_size": {str(k): list(v)
                        for k, v in sorted(r.by_size.items())},
            "named": r.named_list}


def cmd_classify(args):
    m = the_monoid().table
    r = census(set(range(14)))
    label = {tuple(e["elements"]): e["name"] for e in r.named_list}
    classes = algebra.classify(m, algebra.enumerate_subsemigroups(m))
    rows = []
    for c in classes:
        members = sorted(tuple(sorted(s)) for s in c.members)
        rows.append({"representative": label[tuple(sorted(c.representative))],
                     "size": len(c.representative),
                     "count": len(members),
                     "members": [label[t] for t in members]})
    return {"kind": "classes", "classes": rows}


def cmd_verify(args):
    results = verify_all(None if args.what == "all" else args.what)
    failed = sum(1 for r in results if r["status"] != "pass")
    return {"kind": "checks", "checks": results,
            "passed": len(results) - failed, "failed": failed}


def cmd_quotient(args):
    m = the_monoid().table
    pairs = []
    for txt in args.relate:
        rel = spaces.parse_relation(txt)
        if rel == "discrete":
            raise ValueError("--relate wants a pair i=k")
        pairs.append(rel)
    part = algebra.congruence_closure(m, pairs)
    q, _ = algebra.quotient_table(m, part)
    return {"kind": "quotient",
            "relation": ["s%d=s%d" % p for p in pairs],
            "classes": [["s%d" % x for x in sorted(c)]
                        for c in part.classes],
            "names": q.names, "identity": _identity_name(q),
            "entries": _name_grid(q)}


def _load_target(path):
    with open(path) as fh:
        doc = json.load(fh)
    n = doc.get("points")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("file needs an integer 'points' field")
    if "images" in doc:
        return spaces.abstract_operator(
            [spaces.parse_bits(b, n) for b in doc["images"]])
    if "min_nbhd" in doc:
        rows = [spaces.parse_bits(b, n) for b in doc["min_nbhd"]]
        if len(rows) != n:
            raise ValueError("need one neighborhood row per point")
        return spaces.make_space(rows)
    if "opens" in doc:
        masks = []
        for lst in doc["opens"]:
            mask = 0
            for p in lst:
                if not isinstance(p, int) or not 0 <= p < n:
                    raise ValueError("open set %r names no point" % (lst,))
                mask |= 1 << p
            masks.append(mask)
        return spaces.validate_topology(masks, n)
    raise ValueError("file needs 'opens', 'min_nbhd', or 'images'")


def cmd_space_analyze(args):
    target = _load_target(args.file)
    n = target.n
    om = spaces.operation_monoid(target)
    mon = {"order": len(om.ops), "names": om.table.names,
           "identity": _identity_name(om.table),
           "sigma_image": [om.table.names[j] for j in om.sigma_image],
           "collapsed": ["s%d=s%d" % p for p in om.collapsed_relations],
           "entries": _name_grid(om.table)}
    out = {"kind": "space-analysis", "points": n, "monoid": mon}
    if isinstance(target, spaces.SetOperator):
        out["input"] = "operator"
        out["preserves_empty"] = target.images[0] == 0
    else:
        out["input"] = "space"
        out["min_nbhd"] = [spaces.format_bits(u, n)
                           for u in target.min_nbhd]
        out["discrete"] = spaces.is_discrete(target)
        out["opens"] = len(spaces.open_sets(target))
    if args.set is not None:
        a = spaces.parse_bits(args.set, n)
        pairs, size = spaces.kuratowski_orbit(target, a)
        out["orbit"] = {"set": args.set,
                        "images": [{"word": "s%d" % i,
                                    "image": spaces.format_bits(im, n)}
                                   for i, im in pairs],
                        "distinct": size}
    else:
        mask, size = spaces.max_kuratowski_set(target)
        out["max_set"] = {"set": spaces.format_bits(mask, n),
                          "distinct": size}
    return out


def cmd_space_enumerate(args):
    rows = [{"min_nbhd": [spaces.format_bits(u, args.n)
                          for u in sp.min_nbhd]}
            for sp in spaces.enumerate_spaces(args.n, args.up_to_homeo)]
    return {"kind": "spaces", "n": args.n, "up_to_homeo": args.up_to_homeo,
            "count": len(rows), "spaces": rows}


def cmd_space_fourteen(args):
    if args.threads is not None and args.threads < 1:
        raise ValueError("--threads wants a positive count")
    results = spaces.search_fourteen(args.max_n, args.threads)
    for r in results:
        if r["max_orbit"] > 14:
            raise RuntimeError("orbit bound exceeded: %s" % r)
    rows = [{"n": r["n"], "spaces_scanned": r["spaces_scanned"],
             "max_orbit": r["max_orbit"],
             "witness_space": [spaces.format_bits(u, r["n"])
                               for u in r["witness_space"]],
             "witness_set": spaces.format_bits(r["witness_set"], r["n"])}
            for r in results]
    first = next((r["n"] for r in results if r["max_orbit"] >= 14), None)
    return {"kind": "fourteen", "max_n": args.max_n,
            "first_fourteen_n": first, "results": rows}


def cmd_space_check(args):
    spec = spaces.RelationSpec(args.premise, args.conclusion)
    v = spaces.check_implication(spec, args.max_n)
    ce = None
    if v.counterexample is not None:
        ce = {"n": v.counterexample.n,
              "min_nbhd": [spaces.format_bits(u, v.counterexample.n)
                           for u in v.counterexample.min_nbhd]}
    return {"kind": "implication", "premise": args.premise,
            "conclusion": args.conclusion, "max_n": args.max_n,
            "holds": v.holds, "spaces_checked": v.spaces_checked,
            "counterexample": ce}


def _build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "ascii"),
                        default="json")
    common.add_argument("--output", metavar="PATH")

    p = argparse.ArgumentParser(
        prog="kuratowski",
        description="Reconstruct and cross-check the closure-complement "
                    "monoid, its subsemigroups, and the finite-space "
                    "models that realize its quotients.")
    sub = p.add_subparsers(dest="cmd")

    q = sub.add_parser("table", parents=[common],
                       help="composition table of a named scope")
    g = q.add_mutually_exclusive_group()
    g.add_argument("--name", help='"M", "<i,j,...>", or "(item)"')
    g.add_argument("--within", metavar="i,j,...",
                   help="generate the scope from these ids")
    q.set_defaults(handler=cmd_table)

    q = sub.add_parser("census", parents=[common],
                       help="count subsemigroups and isomorphism types")
    q.add_argument("--within", metavar="i,j,...")
    q.set_defaults(handler=cmd_census)

    q = sub.add_parser("classify", parents=[common],
                       help="isomorphism classes of all subsemigroups")
    q.set_defaults(handler=cmd_classify)

    q = sub.add_parser("verify", parents=[common],
                       help="run the embedded verification suite")
    q.add_argument("what", metavar="all|check-id",
                   help="all, or one of: %s" % ", ".join(i for i, _ in CHECKS))
    q.set_defaults(handler=cmd_verify)

    q = sub.add_parser("quotient", parents=[common],
                       help="quotient by the congruence closing i=k pairs")
    q.add_argument("--relate", metavar="i=k", action="append", required=True)
    q.set_defaults(handler=cmd_quotient)

    sp = sub.add_parser("space", help="finite-space and operator tools")
    ssub = sp.add_subparsers(dest="subcmd")

    q = ssub.add_parser("analyze", parents=[common],
                        help="operation monoid of a space/operator file")
    q.add_argument("--file", required=True, metavar="F")
    q.add_argument("--set", metavar="BITS",
                   help="orbit of this subset (little-endian bitstring)")
    q.set_defaults(handler=cmd_space_analyze)

    q = ssub.add_parser("enumerate", parents=[common],
                        help="all topologies on n points")
    q.add_argument("-n", type=int, required=True)
    q.add_argument("--up-to-homeo", action="store_true")
    q.set_defaults(handler=cmd_space_enumerate)

    q = ssub.add_parser("fourteen", parents=[common],
                        help="search for large orbits")
    q.add_argument("--max-n", type=int, required=True)
    q.add_argument("--threads", type=int)
    q.set_defaults(handler=cmd_space_fourteen)

    q = ssub.add_parser("check", parents=[common],
                        help="test an implication over all small spaces")
    q.add_argument("--premise", required=True, metavar="i=k|discrete")
    q.add_argument("--conclusion", required=True, metavar="i=k|discrete")
    q.add_argument("--max-n", type=int, required=True)
    q.set_defaults(handler=cmd_space_check)

    return p


def main(argv=None):
    args_list = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    args = parser.parse_args(args_list)
    handler = getattr(args, "handler", None)
    if handler is None:
        parser.print_usage(sys.stderr)
        return 2
    t0 = time.monotonic()
    try:
        payload = handler(args)
    except (ValueError, OSError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    report = {"schema_version": formats.SCHEMA_VERSION,
              "command": args_list,
              "elapsed_ms": int((time.monotonic() - t0) * 1000)}
    if args.output:
        figures = render_figures(payload, args.output)
        if figures:
            report["figures"] = [os.path.basename(f) for f in figures]
        report["payload"] = payload
        with open(args.output, "w") as fh:
            fh.write(formats.render(report, args.format))
        done = "wrote %s" % args.output
        if figures:
            done += " and %s" % ", ".join(figures)
        print(done, file=sys.stderr)
    else:
        report["payload"] = payload
        sys.stdout.write(formats.render(report, args.format))
    if payload.get("kind") == "checks" and payload["failed"]:
        return 1
    if payload.get("kind") == "implication" and not payload["holds"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
