"""
Rendering of command reports.

Each command builds one JSON-able report: a fixed envelope around a
payload dict carrying a "kind" tag.  The csv and ascii renderings are
pure functions of that payload, so the three formats always agree.
In ascii mode element names gain the sigma spelling and a table with
an identity drops the identity row and column, which only repeat the
headers.
"""

import csv
import io
import json
import re

SCHEMA_VERSION = 1


def _sigma(text):
    return re.sub(r"\bs(\d+)\b", "σ\\1", text)


def _table_view(names, entries, identity, display):
    keep = list(range(len(names)))
    caption = ""
    if display and identity is not None:
        keep = [i for i in keep if names[i] != identity]
        caption = "row and column of the identity %s omitted" % \
            _sigma(identity)
    shown = [_sigma(names[i]) if display else names[i] for i in keep]
    header = ["*"] + shown
    rows = []
    for label, i in zip(shown, keep):
        cells = [entries[i][k] for k in keep]
        if display:
            cells = [_sigma(c) for c in cells]
        rows.append([label] + cells)
    return caption, header, rows


def tabulate(payload, display=False):
    """(caption, header, rows) for the payload's main table."""
    kind = payload["kind"]
    if kind in ("table", "quotient"):
        cap, header, rows = _table_view(payload["names"], payload["entries"],
                                        payload.get("identity"), display)
        if kind == "quotient":
            classes = " ".join(",".join(c) for c in payload["classes"])
            lead = "quotient by %s; classes %s" % (
                " ".join(payload["relation"]), classes)
            cap = (_sigma(lead) if display else lead) + \
                ("; " + cap if cap else "")
        else:
            lead = "composition table of %s" % payload["scope"]
            cap = lead + ("; " + cap if cap else "")
        return cap, header, rows
    if kind == "census":
        rows = [[str(size), str(cnt), str(types)]
                for size, (cnt, types) in sorted(
                    ((int(k), v) for k, v in payload["by_size"].items()))]
        rows.append(["total", str(payload["semigroups"]),
                     str(payload["types"])])
        cap = "census of %s: %d semigroups, %d types, %d non-monoids, " \
              "%d groups, %d monoids" % (
                  payload["scope"], payload["semigroups"], payload["types"],
                  payload["non_monoids"], payload["groups"],
                  payload["monoids"])
        return cap, ["size", "count", "types"], rows
    if kind == "classes":
        rows = [[c["representative"], str(c["size"]), str(c["count"]),
                 " ".join(c["members"])] for c in payload["classes"]]
        cap = "%d isomorphism classes" % len(payload["classes"])
        return cap, ["representative", "size", "count", "members"], rows
    if kind == "checks":
        rows = [[c["id"], c["status"], c["detail"]]
                for c in payload["checks"]]
        cap = "%d of %d checks passed" % (
            payload["passed"], payload["passed"] + payload["failed"])
        return cap, ["check", "status", "detail"], rows
    if kind == "space-analysis":
        mon = payload["monoid"]
        cap, header, rows = _table_view(mon["names"], mon["entries"],
                                        mon.get("identity"), display)
        lead = "%s on %d points; %d operations; collapses %s" % (
            payload["input"], payload["points"], mon["order"],
            " ".join(mon["collapsed"]) or "nothing")
        if display:
            lead = _sigma(lead)
        return lead + ("; " + cap if cap else ""), header, rows
    if kind == "spaces":
        rows = [[str(i), "|".join(sp["min_nbhd"])]
                for i, sp in enumerate(payload["spaces"])]
        cap = "%d topologies on %d points%s" % (
            payload["count"], payload["n"],
            " up to homeomorphism" if payload["up_to_homeo"] else "")
        return cap, ["index", "min_nbhd"], rows
    if kind == "fourteen":
        rows = [[str(r["n"]), str(r["spaces_scanned"]), str(r["max_orbit"]),
                 r["witness_set"], "|".join(r["witness_space"])]
                for r in payload["results"]]
        first = payload["first_fourteen_n"]
        cap = "largest orbit per point count" + \
            ("; all fourteen first reached on %d points" % first
             if first else "")
        return cap, ["n", "spaces_scanned", "max_orbit", "witness_set",
                     "witness_space"], rows
    if kind == "implication":
        ce = payload["counterexample"]
        rows = [[payload["premise"], payload["conclusion"],
                 str(payload["max_n"]), str(payload["holds"]).lower(),
                 str(payload["spaces_checked"]),
                 "|".join(ce["min_nbhd"]) if ce else ""]]
        cap = "%s => %s %s" % (payload["premise"], payload["conclusion"],
                               "holds" if payload["holds"]
                               else "fails")
        return (_sigma(cap) if display else cap), \
            ["premise", "conclusion", "max_n", "holds", "spaces_checked",
             "counterexample"], rows
    raise ValueError("no tabular view for payload kind %r" % kind)


def _grid(caption, header, rows):
    cols = [header] + rows
    widths = [max(len(r[i]) for r in cols) for i in range(len(header))]
    out = []
    if caption:
        out.append(caption)
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    out.append("  ".join("-" * w for w in widths))
    for r in rows:
        out.append("  ".join(c.ljust(w)
                             for c, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"


def render(report, fmt):
    """The report in one of the three formats, as a string."""
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    if fmt == "csv":
        _, header, rows = tabulate(report["payload"])
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "ascii":
        return _grid(*tabulate(report["payload"], display=True))
    raise ValueError("unknown format %r" % fmt)
