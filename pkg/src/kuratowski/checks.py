"""
Self-contained verification suite.

Every check recomputes a result from scratch and compares it against
embedded expected values (the fixture files plus the constants below).
Each returns a dict with id, status and a human-readable detail line;
verify_all collects them.  No network, no clock, no randomness.
"""

from . import algebra, spaces
from .census import census, named_semigroup
from .monoid import load_fixture, the_monoid, verify_golden_table

# Mirror symmetry of the composition table (swap the two four-cycles).
A_PERM = (0, 1, 5, 4, 3, 2, 9, 8, 7, 6, 13, 12, 11, 10)

# Sizes of the five standard quotients.
QUOTIENT_SIZES = {(2, 7): 6, (2, 8): 6, (7, 8): 8, (7, 10): 10, (7, 13): 10}

# Pairs of identifications generating the same congruence.
EQUAL_CONGRUENCES = [((2, 7), (5, 8)), ((2, 8), (5, 7)), ((7, 8), (10, 13)),
                     ((7, 10), (8, 13)), ((7, 13), (8, 10))]

# How elements fall together when s2 = s7 and when s2 = s8.
CLASSES_27 = [[0], [1], [2, 7, 10], [3, 6, 11], [4, 9, 12], [5, 8, 13]]
CLASSES_28 = [[0], [1], [2, 8, 10], [3, 9, 11], [4, 6, 12], [5, 7, 13]]

# The two six-element quotients are anti-isomorphic but NOT isomorphic:
# no bijection carries one table to the other, while exactly two reverse
# the composition order.  The permutation below (in image form on class
# representatives 0,1,2,3,4,5) is the least order-reversing witness; the
# second constant is an automorphism of each quotient separately.
ANTI_WITNESS = (0, 1, 2, 4, 3, 5)
BOTH_AUTOMORPHISM = (0, 1, 5, 4, 3, 2)

# Generating collections the embedded 43-item list does not carry;
# recomputed here and cross-checked under the mirror symmetry A, which
# must map every collection of an item onto collections of its partner.
EXTRA_COLLECTIONS = {
    11: [[2, 6, 7, 8]],
    28: [[5, 7, 8, 9]],
    37: [[10, 13]],
    38: [[9, 11], [11, 13]],
    41: [[9, 12], [12, 13]],
}

# Census expectations: scope -> (semigroups, types).
SCOPE_TOTALS = {"<2,5>": (20, 9), "<0,2,5>": (41, 17), "<6,9>": (18, 8)}

# Distribution over sizes for the full census: size -> (count, types).
SIZE_SPREAD = {1: (7, 1), 2: (17, 4), 3: (18, 7), 4: (13, 7), 5: (15, 8),
               6: (15, 8), 7: (5, 3), 8: (1, 1), 9: (5, 3), 10: (10, 6),
               11: (7, 4), 12: (3, 2), 13: (1, 1), 14: (1, 1)}

# Model inputs: open-set masks and an operator image table on two points.
DISCRETE_2 = [0, 1, 2, 3]
SIERPINSKI = [0, 1, 3]
THREE_POINT = [0, 3, 4, 7]
EXPANSIVE_2PT = [1, 1, 3, 3]

# Expected orbit maxima for small point counts, with the first space in
# generation order attaining each and its least witness subset.
SMALL_SEARCH = [
    {"n": 1, "spaces_scanned": 1, "max_orbit": 2,
     "witness_space": [1], "witness_set": 0},
    {"n": 2, "spaces_scanned": 4, "max_orbit": 4,
     "witness_space": [1, 3], "witness_set": 1},
    {"n": 3, "spaces_scanned": 29, "max_orbit": 6,
     "witness_space": [1, 3, 7], "witness_set": 2},
    {"n": 4, "spaces_scanned": 355, "max_orbit": 8,
     "witness_space": [1, 2, 5, 10], "witness_set": 6},
]

_CENSUS = {}


def _census_of(name):
    if name not in _CENSUS:
        _CENSUS[name] = census(named_semigroup(name))
    return _CENSUS[name]


def check_golden_table():
    diffs = verify_golden_table()
    if diffs:
        return "fail", "%d table entries differ" % len(diffs)
    return "pass", "all 196 derived entries equal the recorded table"


def check_monoid_laws():
    m = the_monoid().table
    if not algebra.is_associative(m):
        return "fail", "composition table is not associative"
    if algebra.find_identity(m, set(range(14))) != 0:
        return "fail", "s0 is not the identity"
    if algebra.compose(m, 8, 7) != 13 or algebra.compose(m, 2, 12) != 6:
        return "fail", "spot products s8*s7, s2*s12 are wrong"
    return "pass", "associative, identity s0, spot products agree"


def check_census_m():
    r = _census_of("M")
    got = (r.total_semigroups, r.iso_types, r.non_monoid_count,
           r.groups, r.monoids)
    if got != (118, 56, 43, 12, 75):
        return "fail", "census of M gave %s" % (got,)
    return "pass", "118 semigroups, 56 types, 43 non-monoids, " \
                   "12 groups, 75 monoids"


def check_census_sizes():
    r = _census_of("M")
    if r.by_size != SIZE_SPREAD:
        return "fail", "size distribution differs: %s" % (r.by_size,)
    return "pass", "size distribution matches on all 14 sizes"


def check_census_scopes():
    r = _census_of("<3,4>")
    got = (r.total_semigroups, r.iso_types, r.non_monoid_count,
           r.groups, r.monoids)
    if got != (57, 28, 43, 10, 14):
        return "fail", "census of <3,4> gave %s" % (got,)
    for name, want in sorted(SCOPE_TOTALS.items()):
        r = _census_of(name)
        if (r.total_semigroups, r.iso_types) != want:
            return "fail", "census of %s gave %d/%d" % (
                name, r.total_semigroups, r.iso_types)
    return "pass", "<3,4> 57/28 with 10 groups 14 monoids; " \
                   "<2,5> 20/9; <0,2,5> 41/17; <6,9> 18/8"


def check_nonmonoid_list():
    m = the_monoid().table
    items = load_fixture("nonmonoids_43.json")["items"]
    r = _census_of("M")
    computed = [e for e in r.named_list
                if algebra.find_identity(m, set(e["elements"])) is None]
    if len(items) != 43 or len(computed) != 43:
        return "fail", "expected 43 non-monoids, got %d fixture / %d " \
                       "computed" % (len(items), len(computed))
    perm = A_PERM
    by_elements = {tuple(e["elements"]): e for e in computed}
    for it in items:
        want = sorted(it["elements"])
        got = by_elements.get(tuple(want))
        if got is None:
            return "fail", "item (%d) elements %s not found" % (
                it["item"], want)
        colls = [list(c) for c in got["collections"]]
        for c in it["collections"]:
            if sorted(c) not in colls:
                return "fail", "item (%d) misses collection %s" % (
                    it["item"], c)
        extra = [c for c in colls
                 if sorted(c) not in [sorted(x) for x in it["collections"]]]
        want_extra = EXTRA_COLLECTIONS.get(it["item"], [])
        if extra != want_extra:
            return "fail", "item (%d) extras %s, expected %s" % (
                it["item"], extra, want_extra)
        mirrored = {tuple(sorted(perm[x] for x in c)) for c in colls}
        partner = by_elements[tuple(sorted(perm[x] for x in want))]
        if mirrored != {tuple(c) for c in partner["collections"]}:
            return "fail", "item (%d) collections break the mirror " \
                           "symmetry" % it["item"]
    return "pass", "43 items; recorded collections all confirmed, " \
                   "%d extra collections recovered, mirror-symmetric" % \
                   sum(len(v) for v in EXTRA_COLLECTIONS.values())


def check_small_tables():
    m = the_monoid().table
    data = load_fixture("small_tables.json")["tables"]
    for entry in data:
        elems = entry["elements"]
        sub = algebra.restrict(m, set(elems))
        if entry["table"] != sub.entries:
            return "fail", "table %s differs from the recorded one" % \
                entry["name"]
        for other in entry.get("also", []):
            gens = [int(x) for x in other.strip("<>").split(",")]
            s2 = algebra.generate(m, gens)
            if algebra.isomorphic(m, set(elems), m, s2) is None:
                return "fail", "%s is not isomorphic to %s" % (
                    entry["name"], other)
    return "pass", "%d recorded tables match; all stated partners " \
                   "isomorphic" % len(data)


def check_automorphisms():
    m = the_monoid().table
    auts = algebra.automorphisms(m, set(range(14)))
    maps = sorted(tuple(a.map[i] for i in range(14)) for a in auts)
    if maps != sorted([tuple(range(14)), A_PERM]):
        return "fail", "Aut(M) is %s" % maps
    conj = tuple(algebra.compose(m, algebra.compose(m, 1, x), 1)
                 for x in range(14))
    if conj != A_PERM:
        return "fail", "mirror map is not conjugation by s1"
    for gens, want in [((2, 5), 2), ((0, 2, 5), 2)]:
        s = algebra.generate(m, gens)
        k = len(algebra.automorphisms(m, s))
        if k != want:
            return "fail", "<%s> has %d automorphisms" % (gens, k)
    return "pass", "Aut(M) = {identity, mirror}; mirror = conjugation " \
                   "by s1; both complement-closure scopes have exactly 2"


def check_anti_automorphism():
    m = the_monoid().table
    s = algebra.generate(m, (0, 2, 5))
    if sorted(s) != [0, 2, 5, 7, 8, 10, 13]:
        return "fail", "<0,2,5> has elements %s" % sorted(s)
    swap = {x: x for x in s}
    swap[7], swap[8] = 8, 7
    if not algebra.check_anti_morphism(m, s, swap):
        return "fail", "the 7/8 swap does not reverse composition"
    if algebra.check_anti_morphism(m, s, {x: x for x in s}):
        return "fail", "identity map reverses composition but must not"
    pairs = [((7, 10), (7, 13)), ((2, 7), (2, 8)), ((6, 7), (6, 8)),
             ((3, 6), (3, 9)), ((2, 9), (3, 8))]
    for ga, gb in pairs:
        sa, sb = algebra.generate(m, ga), algebra.generate(m, gb)
        if algebra.isomorphic(m, sa, m, sb) is not None:
            return "fail", "<%s> and <%s> came out isomorphic" % (ga, gb)
    return "pass", "7/8 swap reverses composition on <0,2,5>; all five " \
                   "recorded non-isomorphic pairs confirmed"


def _quotient(rel):
    m = the_monoid().table
    part = algebra.congruence_closure(m, [rel])
    return algebra.quotient_table(m, part)[0], part


def check_quotients():
    for rel, size in sorted(QUOTIENT_SIZES.items()):
        q, _ = _quotient(rel)
        if q.order != size:
            return "fail", "quotient by %s has %d elements" % (rel, q.order)
    _, p27 = _quotient((2, 7))
    _, p28 = _quotient((2, 8))
    if [sorted(c) for c in p27.classes] != CLASSES_27 or \
            [sorted(c) for c in p28.classes] != CLASSES_28:
        return "fail", "class structure of the six-element quotients differs"
    for ra, rb in EQUAL_CONGRUENCES:
        _, pa = _quotient(ra)
        _, pb = _quotient(rb)
        if pa.classes != pb.classes:
            return "fail", "identifying %s and %s give different " \
                           "congruences" % (ra, rb)
    fix = load_fixture("quotient_s7eq13.json")
    q, part = _quotient((7, 13))
    if [sorted(c) for c in part.classes] != fix["classes"] or \
            q.entries != fix["entries"]:
        return "fail", "quotient by (7,13) differs from the recorded table"
    return "pass", "five quotient sizes 6/6/8/10/10; class structures " \
                   "and the recorded ten-element table all match"


def check_quotient_pair():
    q27, _ = _quotient((2, 7))
    q28, _ = _quotient((2, 8))
    n = q27.order
    iso = algebra.isomorphic(q27, set(range(n)), q28, set(range(n)))
    if iso is not None:
        return "fail", "the six-element quotients came out isomorphic"
    from itertools import permutations
    antis = []
    for perm in permutations(range(n)):
        if all(perm[q27.entries[i][k]] == q28.entries[perm[k]][perm[i]]
               for i in range(n) for k in range(n)):
            antis.append(perm)
    if antis != [ANTI_WITNESS, (0, 1, 5, 3, 4, 2)]:
        return "fail", "order-reversing bijections are %s" % antis
    for q in (q27, q28):
        got = [tuple(a.map[i] for i in range(n))
               for a in algebra.automorphisms(q, set(range(n)))]
        if BOTH_AUTOMORPHISM not in got:
            return "fail", "the recorded permutation is not an " \
                           "automorphism of both quotients"
    return "pass", "quotients by (2,7) and (2,8) are anti-isomorphic " \
                   "(least witness %s) but NOT isomorphic; the recorded " \
                   "permutation is an automorphism of each" % (ANTI_WITNESS,)


def check_space_models():
    m = the_monoid().table
    om = spaces.operation_monoid(spaces.validate_topology(DISCRETE_2, 2))
    if len(om.ops) != 2:
        return "fail", "discrete two-point space gives %d operations" % \
            len(om.ops)
    om = spaces.operation_monoid(spaces.validate_topology(SIERPINSKI, 2))
    if len(om.ops) != 8 or (7, 8) not in om.collapsed_relations:
        return "fail", "Sierpinski space: %d operations, collapse %s" % (
            len(om.ops), om.collapsed_relations)
    om3 = spaces.operation_monoid(spaces.validate_topology(THREE_POINT, 3))
    q28, _ = _quotient((2, 8))
    if (2, 8) not in om3.collapsed_relations or len(om3.ops) != 6:
        return "fail", "three-point model does not collapse (2,8)"
    if algebra.isomorphic(om3.table, set(range(6)), q28,
                          set(range(6))) is None:
        return "fail", "three-point model monoid differs from the " \
                       "(2,8) quotient"
    op = spaces.abstract_operator(EXPANSIVE_2PT)
    omo = spaces.operation_monoid(op)
    if (2, 7) not in omo.collapsed_relations or \
            (2, 8) in omo.collapsed_relations:
        return "fail", "expansive operator model collapses the wrong pair"
    q27, _ = _quotient((2, 7))
    if algebra.isomorphic(omo.table, set(range(6)), q27,
                          set(range(6))) is None:
        return "fail", "operator model monoid differs from the (2,7) " \
                       "quotient"
    if algebra.isomorphic(omo.table, set(range(6)), om3.table,
                          set(range(6))) is not None:
        return "fail", "the two six-element models came out isomorphic"
    if op.images[0] == 0:
        return "fail", "the operator model should not preserve the " \
                       "empty set"
    return "pass", "discrete=2 ops; Sierpinski=8 with (7,8) collapsed; " \
                   "models realize the (2,8) and (2,7) quotients, " \
                   "which are not isomorphic to each other"


IMPLICATIONS = [("2=5", "discrete"), ("2=7", "0=2"),
                ("2=10", "2=8"), ("2=13", "2=8")]
BICONDITIONALS = [("2=7", "5=8"), ("2=8", "5=7"), ("7=8", "10=13"),
                  ("7=10", "8=13"), ("7=13", "8=10")]


def check_implication_sweep():
    checked = 0
    for prem, conc in IMPLICATIONS:
        v = spaces.check_implication(spaces.RelationSpec(prem, conc), 5)
        if not v.holds:
            return "fail", "%s does not force %s: %s" % (
                prem, conc, v.counterexample)
        checked = v.spaces_checked
    for a, b in BICONDITIONALS:
        for prem, conc in ((a, b), (b, a)):
            v = spaces.check_implication(spaces.RelationSpec(prem, conc), 5)
            if not v.holds:
                return "fail", "%s and %s are not equivalent: %s" % (
                    a, b, v.counterexample)
    return "pass", "4 implications and 5 biconditionals hold on all %d " \
                   "classes with up to 5 points" % checked


def check_operator_laws():
    m = the_monoid().table
    data = load_fixture("small_tables.json")["tables"]
    tables = [the_monoid().table] + \
        [algebra.make_table(e["table"]) for e in data]
    q, _ = _quotient((7, 13))
    tables.append(q)
    for t in tables:
        if not algebra.is_associative(t):
            return "fail", "an embedded table is not associative"
    targets = [spaces.validate_topology(SIERPINSKI, 2),
               spaces.validate_topology(THREE_POINT, 3),
               spaces.abstract_operator(EXPANSIVE_2PT)]
    for w in range(1, 4):
        for h in range(1, 4):
            targets.append(spaces.convex_hull_operator(w, h))
    count = 0
    for n in range(1, 5):
        for sp in spaces.enumerate_spaces(n):
            count += 1
            spaces.operation_monoid(sp)   # asserts the homomorphism law
            targets.append(sp)
    for t in targets:
        for a, b in (("KCKCKCK", "KCK"), ("CKCKCKCK", "CKCK")):
            for mask in range(1 << t.n):
                if spaces.eval_word(t, a, mask) != spaces.eval_word(t, b, mask):
                    return "fail", "word identity %s=%s fails on %s" % (
                        a, b, t)
    return "pass", "tables associative; word-image map is a " \
                   "homomorphism on all %d spaces with up to 4 points; " \
                   "the two word identities hold on every target" % count


def check_orbit_search_small():
    got = spaces.search_fourteen(4, threads=1)
    if got != SMALL_SEARCH:
        return "fail", "small searches gave %s" % got
    for r in SMALL_SEARCH:
        sp = spaces.Space(r["n"], tuple(r["witness_space"]))
        _, size = spaces.kuratowski_orbit(sp, r["witness_set"])
        if size != r["max_orbit"]:
            return "fail", "witness for n=%d does not reach %d" % (
                r["n"], r["max_orbit"])
    return "pass", "orbit maxima 2/4/6/8 for 1-4 points, witnesses replay"


CHECKS = [
    ("golden-table", check_golden_table),
    ("monoid-laws", check_monoid_laws),
    ("census-m", check_census_m),
    ("census-sizes", check_census_sizes),
    ("census-scopes", check_census_scopes),
    ("nonmonoid-list", check_nonmonoid_list),
    ("small-tables", check_small_tables),
    ("automorphisms", check_automorphisms),
    ("anti-automorphism", check_anti_automorphism),
    ("congruence-quotients", check_quotients),
    ("quotient-pair", check_quotient_pair),
    ("space-models", check_space_models),
    ("implication-sweep", check_implication_sweep),
    ("operator-laws", check_operator_laws),
    ("orbit-search-small", check_orbit_search_small),
]


def verify_all(only=None):
    """Run every check (or one, by id); list of id/status/detail dicts."""
    known = dict(CHECKS)
    if only is not None and only not in known:
        raise ValueError("unknown check id %r; known: %s"
                         % (only, ", ".join(i for i, _ in CHECKS)))
    out = []
    for cid, fn in CHECKS:
        if only is not None and cid != only:
            continue
        status, detail = fn()
        out.append({"id": cid, "status": status, "detail": detail})
    return out
