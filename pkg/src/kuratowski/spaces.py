"""
Finite topological spaces and closure-like set operators.

A space on n points is stored as the tuple of minimal open
neighborhoods, one bit mask per point; the family of open sets is
exactly the family of unions of these.  Closure needs only the masks:
a point lies in the closure of A iff its minimal neighborhood meets A.

Subsets of the space are plain ints (bit p = point p).  Operators that
behave like closure without coming from a topology (expansive,
increasing, idempotent) are tables of images, one per subset, indexed
by the subset itself.
"""

from collections import namedtuple
from itertools import permutations

from .algebra import Table
from .monoid import WORDS, the_monoid

Space = namedtuple("Space", "n min_nbhd")
SetOperator = namedtuple("SetOperator", "n images kind")
OperatorMonoid = namedtuple("OperatorMonoid",
                            "ops table sigma_image collapsed_relations")
RelationSpec = namedtuple("RelationSpec", "premise conclusion")
Verdict = namedtuple("Verdict", "holds counterexample spaces_checked")

MAX_POINTS = 16
MAX_ENUM_POINTS = 7
MAX_IMPLICATION_POINTS = 6


def parse_bits(text, n):
    """Little-endian bitstring to mask: character i is point i."""
    if len(text) != n or text.strip("01"):
        raise ValueError("expected %d characters of 0/1, got %r" % (n, text))
    return sum(1 << i for i, ch in enumerate(text) if ch == "1")


def format_bits(mask, n):
    return "".join("1" if mask >> i & 1 else "0" for i in range(n))


def _set_repr(mask, n):
    return "{%s}" % ",".join(str(i) for i in range(n) if mask >> i & 1)


def validate_topology(opens, n):
    """Check the open-set family axioms and build the Space.

    Expects masks over n points.  Raises with the violated axiom and
    the witnessing sets spelled out.
    """
    if not 1 <= n <= MAX_POINTS:
        raise ValueError("point count must be between 1 and %d" % MAX_POINTS)
    full = (1 << n) - 1
    fam = set()
    for m in opens:
        if not 0 <= m <= full:
            raise ValueError("open set %r out of range for %d points" % (m, n))
        fam.add(m)
    if 0 not in fam:
        raise ValueError("not a topology: empty set missing")
    if full not in fam:
        raise ValueError("not a topology: whole space missing")
    for a in fam:
        for b in fam:
            if a | b not in fam:
                raise ValueError("not a topology: union of %s and %s missing"
                                 % (_set_repr(a, n), _set_repr(b, n)))
            if a & b not in fam:
                raise ValueError(
                    "not a topology: intersection of %s and %s missing"
                    % (_set_repr(a, n), _set_repr(b, n)))
    min_nbhd = []
    for p in range(n):
        u = full
        for m in fam:
            if m >> p & 1:
                u &= m
        min_nbhd.append(u)
    return Space(n, tuple(min_nbhd))


def make_space(min_nbhd):
    """Build a Space from minimal-neighborhood masks, checking that
    every point sits in its own neighborhood and that neighborhoods
    nest (q in U(p) forces U(q) inside U(p))."""
    n = len(min_nbhd)
    if not 1 <= n <= MAX_POINTS:
        raise ValueError("point count must be between 1 and %d" % MAX_POINTS)
    full = (1 << n) - 1
    for p, u in enumerate(min_nbhd):
        if not 0 <= u <= full:
            raise ValueError("neighborhood of point %d out of range" % p)
        if not u >> p & 1:
            raise ValueError("not reflexive: point %d outside its own "
                             "neighborhood %s" % (p, _set_repr(u, n)))
    for p, u in enumerate(min_nbhd):
        for q in range(n):
            if u >> q & 1 and min_nbhd[q] | u != u:
                raise ValueError(
                    "not transitive: %d lies in the neighborhood of %d but "
                    "%s is not inside %s" % (q, p, _set_repr(min_nbhd[q], n),
                                             _set_repr(u, n)))
    return Space(n, tuple(min_nbhd))


def open_sets(space):
    """Every open set, ascending by bit pattern."""
    u = space.min_nbhd
    out = []
    for m in range(1 << space.n):
        if all(u[p] | m == m for p in range(space.n) if m >> p & 1):
            out.append(m)
    return out


def is_discrete(space):
    return all(u == 1 << p for p, u in enumerate(space.min_nbhd))


def closure(space, a):
    """Points whose minimal neighborhood meets a."""
    out = 0
    for p, u in enumerate(space.min_nbhd):
        if u & a:
            out |= 1 << p
    return out


def closure_table(target):
    """Image of every subset under one closure/operator step."""
    if isinstance(target, SetOperator):
        return target.images
    return tuple(closure(target, m) for m in range(1 << target.n))


def eval_word(target, word, a):
    """Apply the letters left to right; C complements, K closes."""
    full = (1 << target.n) - 1
    if not 0 <= a <= full:
        raise ValueError("subset out of range")
    table = isinstance(target, SetOperator)
    for letter in word:
        if letter == "C":
            a = full ^ a
        elif letter == "K":
            a = target.images[a] if table else closure(target, a)
        else:
            raise ValueError("words are spelled over C and K")
    return a


def abstract_operator(images, kind="abstract"):
    """Validate a closure-like table: expansive, increasing, idempotent.

    images[m] is the image of subset m, in binary-counting order.
    """
    size = len(images)
    n = size.bit_length() - 1
    if size != 1 << n or n < 1:
        raise ValueError("need one image per subset (a power of two)")
    if n > MAX_POINTS:
        raise ValueError("point count must be between 1 and %d" % MAX_POINTS)
    images = tuple(images)
    full = size - 1
    for m, im in enumerate(images):
        if not 0 <= im <= full:
            raise ValueError("image of %s out of range" % _set_repr(m, n))
        if m & im != m:
            raise ValueError("not expansive: %s not inside its image %s"
                             % (_set_repr(m, n), _set_repr(im, n)))
    for m in range(size):
        for p in range(n):
            if not m >> p & 1 and images[m] | images[m | 1 << p] != images[m | 1 << p]:
                raise ValueError(
                    "not increasing: image of %s exceeds image of %s"
                    % (_set_repr(m, n), _set_repr(m | 1 << p, n)))
    for m in range(size):
        if images[images[m]] != images[m]:
            raise ValueError("not idempotent on %s" % _set_repr(m, n))
    return SetOperator(n, images, kind)


def closure_operator(space):
    """The closure of a space packaged as a SetOperator."""
    return SetOperator(space.n, closure_table(space), "topological-closure")


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull(pts):
    """Convex hull, counterclockwise (Andrew's monotone chain)."""
    pts = sorted(set(pts))
    if len(pts) <= 1:
        return pts
    lo = []
    for p in pts:
        while len(lo) >= 2 and _cross(lo[-2], lo[-1], p) <= 0:
            lo.pop()
        lo.append(p)
    hi = []
    for p in reversed(pts):
        while len(hi) >= 2 and _cross(hi[-2], hi[-1], p) <= 0:
            hi.pop()
        hi.append(p)
    return lo[:-1] + hi[:-1]


def _in_hull(hull, p):
    if not hull:
        return False
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        a, b = hull
        if _cross(a, b, p) != 0:
            return False
        return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))
    m = len(hull)
    return all(_cross(hull[i], hull[(i + 1) % m], p) >= 0 for i in range(m))


def convex_hull_operator(width, height):
    """Hull of the chosen grid points, as a set operator on the grid.

    Point p sits at (p % width, p // width).  Exact integer arithmetic
    throughout, so the operator is reproducible.
    """
    n = width * height
    if width < 1 or height < 1 or n > MAX_POINTS:
        raise ValueError("grid must fit in %d points" % MAX_POINTS)
    coords = [(p % width, p // width) for p in range(n)]
    images = []
    for m in range(1 << n):
        chosen = [coords[p] for p in range(n) if m >> p & 1]
        hull = _hull(chosen)
        im = 0
        for p in range(n):
            if m >> p & 1 or _in_hull(hull, coords[p]):
                im |= 1 << p
        images.append(im)
    return abstract_operator(images)


def word_functions(target):
    """The fourteen canonical words as image tables over every subset."""
    full = (1 << target.n) - 1
    step = closure_table(target)
    fns = {"": tuple(range(full + 1))}
    for w in WORDS[1:]:
        prev = fns[w[:-1]]
        if w[-1] == "C":
            fns[w] = tuple(full ^ v for v in prev)
        else:
            fns[w] = tuple(step[v] for v in prev)
    return [fns[w] for w in WORDS]


def operation_monoid(target):
    """The monoid the fourteen operations induce on an actual space or
    operator: distinct image tables, their composition table, where
    each of the fourteen lands, and which pairs collapse."""
    fns = word_functions(target)
    ops = []
    reps = []
    sigma_image = []
    for i, fn in enumerate(fns):
        if fn in ops:
            sigma_image.append(ops.index(fn))
        else:
            sigma_image.append(len(ops))
            ops.append(fn)
            reps.append(i)
    m = the_monoid().table
    entries = [[sigma_image[m.entries[ri][rk]] for rk in reps] for ri in reps]
    table = Table(len(ops), entries, ["s%d" % r for r in reps])
    for i in range(14):
        for k in range(14):
            assert sigma_image[m.entries[i][k]] == \
                table.entries[sigma_image[i]][sigma_image[k]]
    collapsed = [(i, k) for i in range(14) for k in range(i + 1, 14)
                 if fns[i] == fns[k]]
    return OperatorMonoid(ops, table, sigma_image, collapsed)


def kuratowski_orbit(target, a):
    """All fourteen images of a subset, and how many are distinct."""
    images = [(i, eval_word(target, w, a)) for i, w in enumerate(WORDS)]
    return images, len({im for _, im in images})


def max_kuratowski_set(space):
    """A subset with the most distinct images; ties to the least mask."""
    fns = word_functions(space)
    best_mask, best = 0, 0
    for m in range(1 << space.n):
        k = len({fn[m] for fn in fns})
        if k > best:
            best_mask, best = m, k
    return best_mask, best


def _preorder_rows(n, first_row=None):
    """Backtracking over reflexive-transitive neighborhood matrices.

    Rows come out in ascending numeric order per point, which fixes the
    generation order once and for all.
    """
    full = (1 << n) - 1
    rows = []

    def rec(p):
        if p == n:
            yield tuple(rows)
            return
        bit = 1 << p
        rest = full ^ bit
        sub = 0
        while True:
            u = sub | bit
            ok = first_row is None or p > 0 or u == first_row
            for q in range(p):
                if not ok:
                    break
                uq = rows[q]
                if u >> q & 1 and uq | u != u:
                    ok = False
                elif uq >> p & 1 and u | uq != uq:
                    ok = False
            if ok:
                rows.append(u)
                yield from rec(p + 1)
                rows.pop()
            if sub == rest:
                break
            sub = (sub - rest) & rest

    return rec(0)


def _is_least_labeling(rows):
    """True when no relabeling of points gives a smaller matrix."""
    n = len(rows)
    pos = [0] * n
    for perm in permutations(range(n)):
        for j, q in enumerate(perm):
            pos[q] = j
        for i in range(n):
            row = 0
            for q in range(n):
                if rows[perm[i]] >> q & 1:
                    row |= 1 << pos[q]
            if row < rows[i]:
                return False
            if row > rows[i]:
                break
    return True


def enumerate_spaces(n, up_to_homeo=False):
    """Every topology on n labeled points, in a fixed order.

    With up_to_homeo, only spaces that are the least labeling of their
    relabeling orbit come out — one per homeomorphism class.
    """
    if not 1 <= n <= MAX_ENUM_POINTS:
        raise ValueError("enumeration capped at %d points" % MAX_ENUM_POINTS)
    for rows in _preorder_rows(n):
        if up_to_homeo and not _is_least_labeling(rows):
            continue
        yield Space(n, rows)


def parse_relation(text):
    """Either "discrete" or a word pair "i=k" with ids in 0..13."""
    text = text.strip()
    if text == "discrete":
        return "discrete"
    parts = text.split("=")
    if len(parts) == 2:
        try:
            i, k = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError("bad relation %r" % text) from None
        if 0 <= i < 14 and 0 <= k < 14:
            return (i, k)
    raise ValueError("bad relation %r" % text)


def _relation_holds(space, fns, rel):
    if rel == "discrete":
        return is_discrete(space)
    i, k = rel
    return fns[i] == fns[k]


def check_implication(spec, max_n):
    """Test premise => conclusion on every homeomorphism class with at
    most max_n points; first counterexample wins, else a pass verdict
    with the number of spaces checked."""
    if not 1 <= max_n <= MAX_IMPLICATION_POINTS:
        raise ValueError("implication sweep capped at %d points"
                         % MAX_IMPLICATION_POINTS)
    premise = parse_relation(spec.premise) if isinstance(spec.premise, str) \
        else spec.premise
    conclusion = parse_relation(spec.conclusion) \
        if isinstance(spec.conclusion, str) else spec.conclusion
    checked = 0
    for n in range(1, max_n + 1):
        for space in enumerate_spaces(n, up_to_homeo=True):
            checked += 1
            fns = word_functions(space)
            if _relation_holds(space, fns, premise) and \
                    not _relation_holds(space, fns, conclusion):
                return Verdict(False, space, checked)
    return Verdict(True, None, checked)


def search_fourteen(max_n, threads=None):
    """Largest orbit per point count, with witnesses; see the search
    module for the batched scan itself."""
    from .fourteen import run_search
    return run_search(max_n, threads)
