"""
Exhaustive catalogue of the subsemigroups of the fourteen-element monoid:
counts, isomorphism types, breakdown by size, and for every subsemigroup
its canonical name plus all generating collections that are minimal by
inclusion.
"""

from collections import namedtuple

from . import algebra
from .monoid import the_monoid, load_fixture

CensusReport = namedtuple(
    "CensusReport",
    "total_semigroups iso_types non_monoid_count groups monoids by_size named_list")


def _name_of(seq):
    return "<%s>" % ",".join(str(i) for i in seq)


def census(scope):
    """Count and classify every subsemigroup inside the given subset.

    by_size maps size -> (count, isomorphism type count).  named_list
    has one entry per subsemigroup, in (size, bit pattern) order, with
    its canonical name, ascending element list, and every irredundant
    generating collection.
    """
    table = the_monoid().table
    scope = frozenset(scope)
    subs = algebra.enumerate_subsemigroups(table, within=scope)
    classes = algebra.classify(table, subs)
    with_identity = [s for s in subs
                     if algebra.find_identity(table, s) is not None]
    groups = [s for s in subs if algebra.is_group(table, s)]
    by_size = {}
    for s in subs:
        by_size.setdefault(len(s), [0, 0])[0] += 1
    for c in classes:
        by_size[len(c.representative)][1] += 1
    named = []
    for s in subs:
        least = algebra.minimal_generating_collections(table, s)
        collections = algebra.irredundant_generating_collections(table, s)
        name = _name_of(min(tuple(sorted(c)) for c in least))
        named.append({"name": name,
                      "elements": sorted(s),
                      "collections": [sorted(c) for c in collections]})
    return CensusReport(
        total_semigroups=len(subs),
        iso_types=len(classes),
        non_monoid_count=len(subs) - len(with_identity),
        groups=len(groups),
        monoids=len(with_identity),
        by_size={k: tuple(v) for k, v in sorted(by_size.items())},
        named_list=named)


def named_semigroup(name):
    """Element set behind a canonical name.

    Recognized: "M" (everything), "M1" (the largest proper submonoid
    containing the complement), "(1)".."(43)" (the identity-free
    subsemigroups as catalogued), and generator lists "<i,j,...>".
    """
    table = the_monoid().table
    name = name.strip()
    if name == "M":
        return frozenset(range(table.order))
    if name == "M1":
        return algebra.generate(table, {1, 6})
    if name.startswith("(") and name.endswith(")"):
        body = name[1:-1]
        if body.isdigit():
            for item in load_fixture("nonmonoids_43.json")["items"]:
                if item["item"] == int(body):
                    return frozenset(item["elements"])
        raise ValueError("no catalogue item %s" % name)
    if name.startswith("<") and name.endswith(">"):
        try:
            ids = [int(p) for p in name[1:-1].split(",")]
        except ValueError:
            raise ValueError("bad generator list %r" % name) from None
        return algebra.generate(table, ids)
    raise ValueError("unknown semigroup name %r" % name)
