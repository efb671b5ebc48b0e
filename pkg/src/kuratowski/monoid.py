"""
The fourteen compositions of set complement and topological closure.

Operation words are spelled over the alphabet {C, K} in application
order: the leftmost letter acts first, so "CK" means complement, then
close.  Three replacements

    CC      -> (empty)    complement is an involution
    KK      -> K          closing again changes nothing
    KCKCKCK -> KCK        the seven-step alternation collapses

rewrite every word to a normal form.  Exactly fourteen normal forms
survive; numbering them in shortlex order (C before K) gives the
element ids used across the package.  In the composition table,
entries[i][k] is operation i applied after operation k, so the word
behind it is words[k] + words[i].
"""

import json
from collections import namedtuple
from importlib import resources

from .algebra import Table, is_associative

RULES = [("CC", ""), ("KK", "K"), ("KCKCKCK", "KCK")]

WORDS = ["", "C", "K", "CK", "KC", "CKC", "KCK", "CKCK", "KCKC",
         "CKCKC", "KCKCK", "CKCKCK", "KCKCKC", "CKCKCKC"]

NAMES = ["s%d" % i for i in range(14)]

Monoid = namedtuple("Monoid", "table words names")


def reduce_word(word):
    """Apply the replacement rules anywhere until the word stops changing."""
    while True:
        before = word
        for src, dst in RULES:
            word = word.replace(src, dst)
        if word == before:
            return word


def build_monoid():
    """Close the empty word under appending letters, then tabulate.

    Breadth-first closure of {""} under w -> reduce(w + "C"), w ->
    reduce(w + "K") must yield exactly the fourteen expected normal
    forms, or construction fails.
    """
    seen = {""}
    frontier = [""]
    while frontier:
        nxt = []
        for w in frontier:
            for letter in "CK":
                r = reduce_word(w + letter)
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    words = sorted(seen, key=lambda w: (len(w), w))
    if words != WORDS:
        raise RuntimeError("word closure went wrong: %r" % (words,))
    index = {w: i for i, w in enumerate(words)}
    entries = [[index[reduce_word(words[k] + words[i])] for k in range(14)]
               for i in range(14)]
    table = Table(14, entries, list(NAMES))
    assert is_associative(table)
    return Monoid(table, words, list(NAMES))


_CACHED = None


def the_monoid():
    """Shared instance for callers that only read it."""
    global _CACHED
    if _CACHED is None:
        _CACHED = build_monoid()
    return _CACHED


def load_fixture(name):
    """Read one of the bundled golden data files."""
    path = resources.files(__package__) / "fixtures" / name
    return json.loads(path.read_text())


def verify_golden_table():
    """Diff the freshly derived table against the hand-entered fixture.

    Returns a list of discrepancy records; an empty list means the two
    tables agree on all 196 entries.
    """
    golden = load_fixture("cayley_m.json")
    derived = build_monoid().table
    diffs = []
    for i in range(derived.order):
        for k in range(derived.order):
            got = derived.entries[i][k]
            want = golden["entries"][i][k]
            if got != want:
                diffs.append({"row": i, "col": k,
                              "derived": got, "golden": want})
    return diffs
