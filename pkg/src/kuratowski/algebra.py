"""
Table-driven finite semigroup machinery.

A table is a square array of element ids: entries[i][k] is the product
i * k, with the convention that the row factor acts second (read the
entries as functions composed right to left).  Subsets are plain
frozensets of ids.  Nothing in this module is specific to the
closure/complement algebra; it works for any associative table.
"""

from collections import namedtuple
from itertools import combinations

Table = namedtuple("Table", "order entries names")
Morphism = namedtuple("Morphism", "source target map kind")
Partition = namedtuple("Partition", "classes class_of")
IsoClass = namedtuple("IsoClass", "members representative fingerprint")

# 2^n subset scans get silly past this
MAX_SCAN_ORDER = 20


def make_table(entries, names=None):
    """Wrap a square list of lists as a Table, checking entries are in range."""
    n = len(entries)
    if n == 0:
        raise ValueError("empty table")
    for row in entries:
        if len(row) != n or any(not 0 <= e < n for e in row):
            raise ValueError("malformed table")
    if names is None:
        names = ["s%d" % i for i in range(n)]
    if len(names) != n:
        raise ValueError("need one name per element")
    return Table(n, [list(row) for row in entries], list(names))


def compose(table, a, b):
    """The product a*b (b acts first, a second)."""
    if not (0 <= a < table.order and 0 <= b < table.order):
        raise ValueError("element id out of range")
    return table.entries[a][b]


def is_associative(table):
    e = table.entries
    rng = range(table.order)
    for a in rng:
        for b in rng:
            ab = e[a][b]
            for c in rng:
                if e[ab][c] != e[a][e[b][c]]:
                    return False
    return True


def generate(table, gens):
    """Smallest subset containing gens and closed under the product."""
    gens = set(gens)
    if not gens:
        raise ValueError("need at least one generator")
    if any(not 0 <= g < table.order for g in gens):
        raise ValueError("element id out of range")
    e = table.entries
    got = set(gens)
    queue = list(got)
    while queue:
        x = queue.pop()
        for y in list(got):
            for z in (e[x][y], e[y][x]):
                if z not in got:
                    got.add(z)
                    queue.append(z)
    return frozenset(got)


def _closed_masks(table, scope_mask):
    """Bit masks of the nonempty product-closed subsets of scope_mask."""
    e = table.entries
    members = [i for i in range(table.order) if scope_mask >> i & 1]
    found = []
    sub = scope_mask
    while sub:
        ok = True
        for a in members:
            if not sub >> a & 1:
                continue
            row = e[a]
            for b in members:
                if sub >> b & 1 and not sub >> row[b] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(sub)
        sub = (sub - 1) & scope_mask
    found.sort(key=lambda m: (bin(m).count("1"), m))
    return found


def enumerate_subsemigroups(table, within=None):
    """All nonempty closed subsets, sorted by (size, bit pattern).

    `within` restricts the scan to subsets of the given set; by default
    the whole table is scanned.
    """
    if within is None:
        scope = range(table.order)
    else:
        scope = set(within)
        if any(not 0 <= x < table.order for x in scope):
            raise ValueError("element id out of range")
    if len(scope) > MAX_SCAN_ORDER:
        raise ValueError("subset scan capped at %d elements" % MAX_SCAN_ORDER)
    scope_mask = 0
    for x in scope:
        scope_mask |= 1 << x
    masks = _closed_masks(table, scope_mask)
    return [frozenset(i for i in range(table.order) if m >> i & 1)
            for m in masks]


def find_identity(table, s):
    """The two-sided identity of s, or None."""
    e = table.entries
    for cand in sorted(s):
        if all(e[cand][x] == x and e[x][cand] == x for x in s):
            return cand
    return None


def is_group(table, s):
    ident = find_identity(table, s)
    if ident is None:
        return False
    e = table.entries
    return all(any(e[x][y] == ident and e[y][x] == ident for y in s)
               for x in s)


def idempotents(table, s):
    e = table.entries
    return frozenset(x for x in s if e[x][x] == x)


def element_profile(table, s, x):
    """Least (index, period), both >= 1, with x^(index+period) = x^index."""
    if x not in s:
        raise ValueError("element not in subset")
    e = table.entries
    seen = {x: 1}
    cur, exp = x, 1
    while True:
        cur = e[cur][x]
        exp += 1
        if cur in seen:
            return seen[cur], exp - seen[cur]
        seen[cur] = exp


def _forced_generators(table, s):
    """Members of s that appear in every generating set of s.

    An element counts as forced when no product of two members, both
    different from it, yields it; any way of producing it from below
    would then already need it.
    """
    e = table.entries
    forced = set()
    for x in s:
        others = [a for a in s if a != x]
        if not any(e[a][b] == x for a in others for b in others):
            forced.add(x)
    return forced


def minimal_generating_collections(table, s):
    """All generating subsets of s of the least workable size, in
    dictionary order on their ascending id sequences."""
    members = sorted(s)
    target = frozenset(s)
    forced = _forced_generators(table, s)
    for k in range(1, len(members) + 1):
        hits = []
        for combo in combinations(members, k):
            if not forced <= set(combo):
                continue
            if generate(table, combo) == target:
                hits.append(frozenset(combo))
        if hits:
            return hits
    raise AssertionError("a set always generates itself")


def irredundant_generating_collections(table, s):
    """All generating subsets of s that stop generating when any one
    member is dropped (minimal by inclusion, all sizes)."""
    members = sorted(s)
    m = len(members)
    if m > MAX_SCAN_ORDER:
        raise ValueError("subset scan capped at %d elements" % MAX_SCAN_ORDER)
    target = frozenset(s)
    forced = 0
    for x in _forced_generators(table, s):
        forced |= 1 << members.index(x)
    winners = []
    out = []
    # size order guarantees every generating subset of a candidate has
    # been seen before the candidate itself comes up
    for mask in sorted(range(1, 1 << m), key=lambda v: (bin(v).count("1"), v)):
        if mask & forced != forced:
            continue
        if any(w & mask == w for w in winners):
            continue
        combo = [members[i] for i in range(m) if mask >> i & 1]
        if generate(table, combo) == target:
            winners.append(mask)
            out.append(frozenset(combo))
    out.sort(key=lambda c: (len(c), sorted(c)))
    return out


def _profiles(table, s):
    return {x: element_profile(table, s, x) for x in s}


def isomorphic(ta, sa, tb, sb):
    """Search for an isomorphism sa -> sb.

    Returns the lexicographically least witnessing Morphism (images
    listed against ascending source ids), or None.  Cheap invariants
    prune first; then a backtracking search over profile-compatible
    bijections.
    """
    if len(sa) != len(sb):
        return None
    pa, pb = _profiles(ta, sa), _profiles(tb, sb)
    if sorted(pa.values()) != sorted(pb.values()):
        return None
    if (find_identity(ta, sa) is None) != (find_identity(tb, sb) is None):
        return None
    src = sorted(sa)
    cand = {x: [y for y in sorted(sb) if pb[y] == pa[x]] for x in src}
    hit = _extend(ta.entries, tb.entries, src, cand, {}, {}, 0, None)
    if hit is None:
        return None
    return Morphism(ta, tb, hit, "isomorphism")


def _extend(ea, eb, src, cand, img, inv, i, collect):
    """Backtracking core shared by isomorphic() and automorphisms()."""
    if i == len(src):
        if collect is None:
            return dict(img)
        collect.append(Morphism(None, None, dict(img), "isomorphism"))
        return None
    x = src[i]
    for y in cand[x]:
        if y in inv:
            continue
        ok = True
        for u in src[:i + 1]:
            v = img[u] if u != x else y
            for p, q in ((ea[x][u], eb[y][v]), (ea[u][x], eb[v][y])):
                if p in img or p == x:
                    if (y if p == x else img[p]) != q:
                        ok = False
                        break
                elif q in inv or q == y:
                    ok = False       # image already spoken for
                    break
            if not ok:
                break
        if ok:
            img[x] = y
            inv[y] = x
            res = _extend(ea, eb, src, cand, img, inv, i + 1, collect)
            if res is not None:
                return res
            del img[x]
            del inv[y]
    return None


def check_anti_morphism(table, s, mapping):
    """True iff mapping reverses the product: map(x*y) = map(y)*map(x)."""
    if set(mapping) != set(s) or set(mapping.values()) != set(s):
        raise ValueError("mapping must be a bijection of the subset")
    e = table.entries
    return all(mapping[e[x][y]] == e[mapping[y]][mapping[x]]
               for x in s for y in s)


def automorphisms(table, s):
    """Every isomorphism of s onto itself, in lexicographic map order."""
    pa = _profiles(table, s)
    src = sorted(s)
    cand = {x: [y for y in src if pa[y] == pa[x]] for x in src}
    found = []
    _extend(table.entries, table.entries, src, cand, {}, {}, 0, found)
    return [Morphism(table, table, m.map, "isomorphism") for m in found]


def _fingerprint(table, s):
    profs = sorted(_profiles(table, s).values())
    return (len(s), len(idempotents(table, s)),
            find_identity(table, s) is not None, is_group(table, s),
            tuple(profs))


def _canonical_name_seq(table, s):
    """Ascending id tuple of the dictionary-least smallest generating set."""
    return min(tuple(sorted(c)) for c in minimal_generating_collections(table, s))


def classify(table, semigroups):
    """Partition closed subsets into isomorphism classes.

    Each class records its members (in input order), a canonical
    representative (the member whose name sequence comes first in the
    dictionary), and the fingerprint shared by the class.
    """
    buckets = {}
    for s in semigroups:
        buckets.setdefault(_fingerprint(table, s), []).append(s)
    classes = []
    for fp in sorted(buckets):
        parts = []
        for s in buckets[fp]:
            for part in parts:
                if isomorphic(table, part[0], table, s) is not None:
                    part.append(s)
                    break
            else:
                parts.append([s])
        for part in parts:
            rep = min(part, key=lambda m: _canonical_name_seq(table, m))
            classes.append(IsoClass(part, rep, fp))
    classes.sort(key=lambda c: (len(c.representative), sorted(c.representative)))
    return classes


def congruence_closure(table, pairs):
    """Least equivalence containing the pairs and compatible with the
    product on both sides."""
    n = table.order
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError("element id out of range")
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    e = table.entries
    queue = [(a, b) for a, b in pairs]
    while queue:
        a, b = queue.pop()
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        for x in range(n):
            queue.append((e[x][a], e[x][b]))
            queue.append((e[a][x], e[b][x]))

    roots = {}
    for x in range(n):
        roots.setdefault(find(x), []).append(x)
    classes = sorted(roots.values(), key=min)
    class_of = [0] * n
    for ci, cls in enumerate(classes):
        for x in cls:
            class_of[x] = ci
    return Partition([frozenset(c) for c in classes], class_of)


def quotient_table(table, p):
    """Quotient by a congruence: a table over the classes plus the
    projection array.  Class names come from least members."""
    n = table.order
    if sorted(x for c in p.classes for x in c) != list(range(n)):
        raise ValueError("classes must partition the element ids")
    for ci, cls in enumerate(p.classes):
        if any(p.class_of[x] != ci for x in cls):
            raise ValueError("class_of disagrees with classes")
    e = table.entries
    reps = [min(c) for c in p.classes]
    cls_of = p.class_of
    for cls, rep in zip(p.classes, reps):
        for a in cls:
            for x in range(n):
                if (cls_of[e[x][a]] != cls_of[e[x][rep]]
                        or cls_of[e[a][x]] != cls_of[e[rep][x]]):
                    raise ValueError("partition is not a congruence")
    entries = [[cls_of[e[ri][rk]] for rk in reps] for ri in reps]
    names = [table.names[r] for r in reps]
    return Table(len(reps), entries, names), list(cls_of)


def restrict(table, s):
    """The table induced on a closed subset, elements in ascending order."""
    members = sorted(s)
    pos = {x: i for i, x in enumerate(members)}
    e = table.entries
    for a in members:
        for b in members:
            if e[a][b] not in pos:
                raise ValueError("subset is not closed")
    entries = [[pos[e[a][b]] for b in members] for a in members]
    return Table(len(members), entries, [table.names[x] for x in members])
