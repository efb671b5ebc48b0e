import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kuratowski import spaces

SIER = spaces.validate_topology([0, 1, 3], 2)
THREE = spaces.validate_topology([0, 3, 4, 7], 3)
OP = spaces.abstract_operator([1, 1, 3, 3])


def random_space(draw, max_n=6):
    """Reflexive relation, transitively closed, as a valid space."""
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = [draw(st.integers(min_value=0, max_value=(1 << n) - 1)) | (1 << p)
            for p in range(n)]
    for _ in range(n):
        for p in range(n):
            for q in range(n):
                if rows[p] >> q & 1:
                    rows[p] |= rows[q]
    return spaces.Space(n, tuple(rows))


spaces_st = st.composite(random_space)()


def test_validate_topology_axioms():
    with pytest.raises(ValueError, match="empty set"):
        spaces.validate_topology([1, 3], 2)
    with pytest.raises(ValueError, match="whole space"):
        spaces.validate_topology([0, 1], 2)
    with pytest.raises(ValueError, match="union"):
        spaces.validate_topology([0, 1, 2, 7], 3)
    with pytest.raises(ValueError, match="intersection"):
        spaces.validate_topology([0, 3, 5, 7], 3)
    with pytest.raises(ValueError, match="out of range"):
        spaces.validate_topology([0, 9, 3], 2)
    with pytest.raises(ValueError):
        spaces.validate_topology([0], 0)


def test_min_nbhd_derivation():
    assert SIER.min_nbhd == (1, 3)
    assert THREE.min_nbhd == (3, 3, 4)
    disc = spaces.validate_topology(list(range(4)), 2)
    assert disc.min_nbhd == (1, 2)
    assert spaces.is_discrete(disc)
    assert not spaces.is_discrete(SIER)


def test_make_space_validation():
    sp = spaces.make_space([1, 3])
    assert sp == SIER
    with pytest.raises(ValueError, match="reflexive"):
        spaces.make_space([2, 2])
    with pytest.raises(ValueError, match="transitive"):
        spaces.make_space([1, 3, 6])
    with pytest.raises(ValueError, match="out of range"):
        spaces.make_space([1, 9])


def test_open_sets_round_trip():
    for n in range(1, 4):
        for sp in spaces.enumerate_spaces(n):
            fam = spaces.open_sets(sp)
            assert spaces.validate_topology(fam, n) == sp


def test_closure_on_sierpinski():
    # closed point 1, dense point 0
    assert spaces.closure(SIER, 0b01) == 0b11
    assert spaces.closure(SIER, 0b10) == 0b10
    assert spaces.closure(SIER, 0) == 0


def test_eval_word_letters():
    # "CK" is: complement first, then close
    a = 0b001
    assert spaces.eval_word(THREE, "C", a) == 0b110
    assert spaces.eval_word(THREE, "K", a) == 0b011
    assert spaces.eval_word(THREE, "CK", a) == \
        spaces.closure(THREE, 0b110)
    with pytest.raises(ValueError, match="spelled"):
        spaces.eval_word(THREE, "CX", a)
    with pytest.raises(ValueError, match="range"):
        spaces.eval_word(THREE, "C", 99)


def test_operator_images_used_for_k():
    assert spaces.eval_word(OP, "K", 0) == 1
    assert spaces.eval_word(OP, "KK", 0) == 1
    assert spaces.eval_word(OP, "KC", 0) == 2


def test_abstract_operator_validation():
    with pytest.raises(ValueError, match="expansive"):
        spaces.abstract_operator([1, 1, 3, 2])
    with pytest.raises(ValueError, match="increasing"):
        spaces.abstract_operator([3, 1, 3, 3])
    with pytest.raises(ValueError, match="idempotent"):
        spaces.abstract_operator([1, 3, 3, 3])
    with pytest.raises(ValueError, match="power of two"):
        spaces.abstract_operator([0, 1, 3])
    op = spaces.abstract_operator([0, 1, 2, 3])
    assert op.kind == "abstract"


def test_closure_operator_wrapper():
    op = spaces.closure_operator(SIER)
    assert op.kind == "topological-closure"
    assert op.images[0b01] == 0b11
    # a topological closure preserves the empty set and is additive
    assert op.images[0] == 0
    n = op.n
    for a in range(1 << n):
        for b in range(1 << n):
            assert op.images[a | b] == op.images[a] | op.images[b]


def test_convex_hull_operator_geometry():
    op = spaces.convex_hull_operator(3, 1)
    assert op.images[0b101] == 0b111          # segment fills in
    op = spaces.convex_hull_operator(2, 2)
    assert op.images[0b1001] == 0b1001        # diagonal has no lattice gap
    op = spaces.convex_hull_operator(3, 3)
    corners = 0b101000101
    assert op.images[corners] == (1 << 9) - 1  # full square from corners
    with pytest.raises(ValueError):
        spaces.convex_hull_operator(5, 4)
    with pytest.raises(ValueError):
        spaces.convex_hull_operator(0, 3)


def test_hull_operator_is_not_topological():
    # expansive but not a closure: additivity breaks on a 3-point row
    op = spaces.convex_hull_operator(3, 1)
    a, b = 0b001, 0b100
    assert op.images[a] | op.images[b] != op.images[a | b]


def test_operation_monoid_models():
    assert len(spaces.operation_monoid(
        spaces.validate_topology([0, 1, 2, 3], 2)).ops) == 2
    om = spaces.operation_monoid(SIER)
    assert len(om.ops) == 8
    assert (7, 8) in om.collapsed_relations
    om = spaces.operation_monoid(THREE)
    assert len(om.ops) == 6
    assert (2, 8) in om.collapsed_relations
    om = spaces.operation_monoid(OP)
    assert (2, 7) in om.collapsed_relations
    assert (2, 8) not in om.collapsed_relations


def test_operation_monoid_structure():
    om = spaces.operation_monoid(SIER)
    assert om.sigma_image[0] == 0
    assert len(om.sigma_image) == 14
    assert om.table.names[0] == "s0"
    # ops are distinct image tables
    assert len(set(om.ops)) == len(om.ops)


def test_orbit_and_max_set():
    pairs, size = spaces.kuratowski_orbit(THREE, 0b001)
    assert size == 6
    assert len(pairs) == 14
    assert pairs[0] == (0, 0b001)
    mask, best = spaces.max_kuratowski_set(THREE)
    assert (mask, best) == (0b001, 6)   # 1, 2, 5, 6 tie; least wins
    # ties resolve to the least bit pattern
    disc = spaces.validate_topology(list(range(4)), 2)
    mask, best = spaces.max_kuratowski_set(disc)
    assert best == 2 and mask == 0


def test_enumerate_counts():
    assert [sum(1 for _ in spaces.enumerate_spaces(n))
            for n in range(1, 5)] == [1, 4, 29, 355]
    assert [sum(1 for _ in spaces.enumerate_spaces(n, up_to_homeo=True))
            for n in range(1, 5)] == [1, 3, 9, 33]
    with pytest.raises(ValueError):
        list(spaces.enumerate_spaces(8))
    with pytest.raises(ValueError):
        list(spaces.enumerate_spaces(0))


def test_homeo_representatives_are_least_labelings():
    reps = list(spaces.enumerate_spaces(3, up_to_homeo=True))
    labeled = list(spaces.enumerate_spaces(3))
    for sp in reps:
        assert sp in labeled
        assert spaces._is_least_labeling(sp.min_nbhd)


def test_parse_relation():
    assert spaces.parse_relation("7=13") == (7, 13)
    assert spaces.parse_relation("discrete") == "discrete"
    for bad in ("", "7", "7=99", "x=2", "7=8=9"):
        with pytest.raises(ValueError):
            spaces.parse_relation(bad)


def test_check_implication_verdicts():
    v = spaces.check_implication(spaces.RelationSpec("2=5", "discrete"), 4)
    assert v.holds and v.counterexample is None
    assert v.spaces_checked == 46
    v = spaces.check_implication(spaces.RelationSpec("7=8", "discrete"), 3)
    assert not v.holds
    assert v.counterexample.min_nbhd == (1, 3)
    with pytest.raises(ValueError):
        spaces.check_implication(spaces.RelationSpec("2=5", "discrete"), 7)


def test_bits_round_trip():
    assert spaces.parse_bits("0110010", 7) == 38
    assert spaces.format_bits(38, 7) == "0110010"
    with pytest.raises(ValueError):
        spaces.parse_bits("012", 3)
    with pytest.raises(ValueError):
        spaces.parse_bits("01", 3)


@given(spaces_st, st.data())
@settings(max_examples=150)
def test_closure_axioms_hold(sp, data):
    full = (1 << sp.n) - 1
    a = data.draw(st.integers(min_value=0, max_value=full))
    b = data.draw(st.integers(min_value=0, max_value=full))
    ka = spaces.closure(sp, a)
    assert a | ka == ka                                   # expansive
    assert spaces.closure(sp, ka) == ka                   # idempotent
    assert spaces.closure(sp, a | b) == ka | spaces.closure(sp, b)
    assert spaces.closure(sp, 0) == 0


@given(spaces_st, st.data())
@settings(max_examples=150)
def test_interior_is_complement_closure_complement(sp, data):
    full = (1 << sp.n) - 1
    a = data.draw(st.integers(min_value=0, max_value=full))
    interior = 0
    for p in range(sp.n):
        if sp.min_nbhd[p] | a == a:
            interior |= 1 << p
    assert spaces.eval_word(sp, "CKC", a) == interior


@given(spaces_st, st.data())
@settings(max_examples=100)
def test_word_identities_on_random_spaces(sp, data):
    full = (1 << sp.n) - 1
    a = data.draw(st.integers(min_value=0, max_value=full))
    assert spaces.eval_word(sp, "KCKCKCK", a) == spaces.eval_word(sp, "KCK", a)
    assert spaces.eval_word(sp, "CKCKCKCK", a) == \
        spaces.eval_word(sp, "CKCK", a)


@given(spaces_st)
@settings(max_examples=60)
def test_operation_monoid_is_a_quotient_image(sp):
    om = spaces.operation_monoid(sp)
    assert 1 <= len(om.ops) <= 14
    assert sorted(set(om.sigma_image)) == list(range(len(om.ops)))
    for i, k in om.collapsed_relations:
        assert om.sigma_image[i] == om.sigma_image[k]
