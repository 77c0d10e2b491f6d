"""Degeneration certificates: curves, obstructions, search, composition.

Every positive answer is an explicit matrix over F(t) whose limit is
recomputed here; every negative answer is pinned to a machine-checkable
reason (a semicontinuous invariant, a verified polynomial identity, or
transitivity through an already-settled pair).
"""

import pytest

from nilalg3.catalogue import (AlgebraId, adelta, a3kappa, identify, quarter,
                               structure_of)
from nilalg3.degeneration import (CurveWitness, DegenerationError,
                                  OBSTRUCTION_TAGS, check_obstruction,
                                  compose_curves, curve_limit, degenerates,
                                  known_witness, lift_witness_to_rationals,
                                  search_witness, verify_lemma_identities,
                                  verify_witness)
from nilalg3.fields import PrimeField, RATIONALS, gf4
from nilalg3.polyring import RationalFunctionField
from nilalg3.structspace import Matrix3, act, basis_vector

Q = RATIONALS
GF2 = PrimeField(2)
GF5 = PrimeField(5)
GF7 = PrimeField(7)

C1, C3, L1, C5, A0 = (AlgebraId(t) for t in ("c1", "c3", "l1", "c5", "a0"))


# -- the curve library ---------------------------------------------------------


def test_scale_to_zero_everywhere():
    for field in (Q, GF2, GF7):
        for tag in ("c1", "c3", "l1", "c5"):
            w = known_witness(AlgebraId(tag), A0, field)
            assert w.note == "scale-to-zero"
            assert verify_witness(w).is_zero()


def test_pinch_family_curve():
    for field, deltas in ((Q, (0, 1, -2, 7)), (gf4(), (0, 1))):
        for d in deltas:
            src = adelta(field, d)
            w = known_witness(src, C1, field)
            assert w.note == "pinch-family"
            # intermediate value: t^2*d*221 + t*321 + 331
            rff = w.matrix.parent
            t = rff.gen()
            moved = act(structure_of(src, field).lift(rff), w.matrix)
            expect = (basis_vector(rff, 2, 2, 1).scale(t * t * rff.const(field.element(d)))
                      + basis_vector(rff, 3, 2, 1).scale(t)
                      + basis_vector(rff, 3, 3, 1))
            assert moved == expect
            assert verify_witness(w) == structure_of(C1, field)


def test_squeeze_curve():
    for field in (Q, GF2, GF7):
        w = known_witness(C3, C1, field)
        assert w.note == "squeeze-e2"
        assert verify_witness(w) == structure_of(C1, field)


def test_triangle_collapse_char_not_two():
    w = known_witness(C5, C3, Q)
    assert w.note == "triangle-collapse"
    assert w.up_to_iso
    rff = w.matrix.parent
    t = rff.gen()
    moved = act(structure_of(C5, Q).lift(rff), w.matrix)
    expect = (basis_vector(rff, 1, 1, 2).scale(t * t)
              + basis_vector(rff, 1, 1, 3).scale(2 * t)
              + basis_vector(rff, 1, 2, 3) + basis_vector(rff, 2, 1, 3))
    assert moved == expect
    limit = verify_witness(w)
    assert limit == basis_vector(Q, 1, 2, 3) + basis_vector(Q, 2, 1, 3)
    assert identify(limit) == C3


def test_rep_collapse_char_two():
    for field in (GF2, gf4()):
        w = known_witness(C5, C3, field)
        assert w.note == "rep-collapse"
        assert w.up_to_iso
        limit = verify_witness(w)
        assert limit == (basis_vector(field, 2, 3, 1) + basis_vector(field, 3, 2, 1)
                         + basis_vector(field, 3, 3, 1))
        assert identify(limit) == C3


def test_limit_of_triangle_collapse_is_l1_in_char_two():
    # the same symmetric limit 123 + 213 that gives c3 away from
    # characteristic 2 turns alternating-like in characteristic 2
    vec = basis_vector(GF2, 1, 2, 3) + basis_vector(GF2, 2, 1, 3)
    assert identify(vec) == L1


def test_quarter_pinch():
    for field in (Q, GF7):
        src = adelta(field, quarter(field))
        w = known_witness(src, L1, field)
        assert w.note == "quarter-pinch"
        assert verify_witness(w) == structure_of(L1, field)


def test_shear_pinch_char_two():
    for field in (GF2, gf4()):
        w = known_witness(C3, L1, field)
        assert w.note == "shear-pinch"
        rff = w.matrix.parent
        t = rff.gen()
        moved = act(structure_of(C3, field).lift(rff), w.matrix)
        expect = (basis_vector(rff, 2, 3, 1) + basis_vector(rff, 3, 2, 1)
                  + basis_vector(rff, 3, 3, 1).scale(t))
        assert moved == expect
        assert verify_witness(w) == structure_of(L1, field)
    assert known_witness(C3, L1, Q) is None


def test_cube_collapse():
    for field in (Q, GF2, GF7):
        w = known_witness(C5, C1, field)
        assert w.note == "cube-collapse"
        assert verify_witness(w) == structure_of(C1, field)


def test_known_witness_returns_none_off_table():
    assert known_witness(L1, C1, Q) is None
    assert known_witness(C1, C3, Q) is None


def test_verify_rejects_wrong_target():
    rff = RationalFunctionField(Q, "t")
    t = rff.gen()
    g = Matrix3.from_rows(rff, [[1, 0, 0], [0, 0, 1], [0, t, 0]])
    bad = CurveWitness(adelta(Q, 2), L1, g)
    with pytest.raises(DegenerationError):
        verify_witness(bad)


def test_verify_rejects_pole():
    # shrinking e1 blows up the 221 and 331 coefficients like 1/t
    rff = RationalFunctionField(Q, "t")
    t = rff.gen()
    g = Matrix3.diagonal(rff, t, rff.one(), rff.one())
    w = CurveWitness(C3, C3, g)
    with pytest.raises(DegenerationError):
        curve_limit(w)


def test_verify_rejects_singular_curve():
    rff = RationalFunctionField(Q, "t")
    g = Matrix3.from_rows(rff, [[1, 0, 0], [1, 0, 0], [0, 0, 1]])
    with pytest.raises(DegenerationError):
        curve_limit(CurveWitness(C3, C3, g))


# -- the polynomial identity suite ---------------------------------------------


@pytest.mark.parametrize("char", [0, 2, 5])
def test_identity_suite_holds(char):
    report = verify_lemma_identities(char)
    assert report.ok
    assert report.characteristic == char
    names = [n for n, _ in report.entries]
    assert "moved-231" in names and "alternating-in-orbit" in names
    assert len(names) == 14


def test_identity_suite_detects_mutations():
    for triple in ((2, 3, 1), (3, 2, 1), (1, 1, 1), (3, 3, 2)):
        report = verify_lemma_identities(0, mutate=triple)
        assert not report.ok, f"mutation at {triple} went unnoticed"
    report = verify_lemma_identities(2, mutate=(2, 2, 1))
    assert not report.ok


# -- obstructions ---------------------------------------------------------------


def test_obstruction_tags_are_fixed():
    assert OBSTRUCTION_TAGS == ("nilpotency-class", "commutativity",
                                "m-star-star-closure", "family-separation",
                                "rho-separation", "transitivity-derived")


def test_machine_obstructions_char0():
    assert check_obstruction(A0, C1, Q).tag == "nilpotency-class"
    assert check_obstruction(C3, C5, Q).tag == "nilpotency-class"
    assert check_obstruction(C3, adelta(Q, 3), Q).tag == "commutativity"
    assert check_obstruction(L1, C1, Q).tag == "m-star-star-closure"
    assert check_obstruction(L1, C3, Q).tag == "m-star-star-closure"


def test_lemma_obstructions_char0():
    assert check_obstruction(adelta(Q, 3), L1, Q).tag == "family-separation"
    assert check_obstruction(adelta(Q, 3), adelta(Q, 5), Q).tag == "family-separation"
    # c3 vs l1 is already settled by the cheaper commutativity test, which
    # takes precedence over the identity-suite lemma
    assert check_obstruction(C3, L1, Q).tag == "commutativity"
    q = adelta(Q, quarter(Q))
    assert check_obstruction(q, C3, Q).tag == "rho-separation"
    assert check_obstruction(q, adelta(Q, 3), Q).tag == "rho-separation"


def test_transitivity_obstructions_char0():
    assert check_obstruction(C1, C3, Q).tag == "transitivity-derived"
    assert check_obstruction(adelta(Q, 3), adelta(Q, quarter(Q)), Q).tag \
        == "transitivity-derived"


def test_obstructions_char2():
    F = gf4()
    assert check_obstruction(L1, C1, F).tag == "m-star-star-closure"
    assert check_obstruction(C1, L1, F).tag == "transitivity-derived"
    assert check_obstruction(adelta(F, F.one()), C3, F).tag == "transitivity-derived"
    assert check_obstruction(C1, C3, F).tag == "transitivity-derived"
    assert check_obstruction(adelta(F, F.generator()), L1, F).tag \
        == "family-separation"


def test_no_obstruction_on_true_degenerations():
    assert check_obstruction(C3, C1, Q) is None
    assert check_obstruction(adelta(Q, 3), C1, Q) is None
    assert check_obstruction(C5, C3, Q) is None
    assert check_obstruction(adelta(Q, quarter(Q)), L1, Q) is None
    assert check_obstruction(C3, L1, gf4()) is None
    assert check_obstruction(C5, A0, Q) is None


# -- the complete decision procedure ---------------------------------------------


def test_degenerates_direct():
    fact = degenerates(C3, C1, Q)
    assert fact.holds and fact.witness is not None
    assert fact.witness.note == "squeeze-e2"


def test_degenerates_via_chain():
    fact = degenerates(C5, C1, GF7)
    assert fact.holds
    assert fact.witness is not None or len(fact.chain) >= 2


def test_degenerates_negative():
    fact = degenerates(L1, C1, Q)
    assert not fact.holds
    assert fact.obstruction.tag == "m-star-star-closure"


def test_degenerates_canonicalizes_input():
    fact = degenerates(AlgebraId("rho"), L1, Q)
    assert fact.holds
    fact2 = degenerates(a3kappa(Q, 3), C1, Q)
    assert fact2.holds
    fact3 = degenerates(AlgebraId("chat3"), L1, Q)
    assert not fact3.holds


def test_degenerates_reflexive():
    fact = degenerates(adelta(Q, 5), adelta(Q, 5), Q)
    assert fact.holds


# -- composition -----------------------------------------------------------------


def test_compose_scale_chain():
    first = known_witness(adelta(Q, 2), C1, Q)
    second = known_witness(C1, A0, Q)
    combined = compose_curves(first, second)
    assert combined.src == adelta(Q, 2) and combined.dst == A0
    assert verify_witness(combined).is_zero()


def test_compose_through_iso_bridge():
    first = known_witness(C5, C3, GF7)      # limit is only isomorphic to c3
    second = known_witness(C3, C1, GF7)
    combined = compose_curves(first, second)
    assert combined.src == C5 and combined.dst == C1
    # the bridge turns 123+213 into 221+331, which costs a square root of -1,
    # so the composed curve lives over a quadratic extension of GF(7)
    base = combined.base_field
    assert base.char == 7
    assert verify_witness(combined) == structure_of(C1, base)


def test_compose_char2_chain():
    first = known_witness(C5, C3, GF2)
    second = known_witness(C3, L1, GF2)
    combined = compose_curves(first, second)
    assert combined.src == C5 and combined.dst == L1
    assert verify_witness(combined) == structure_of(L1, GF2)


# -- randomized search ------------------------------------------------------------


def test_search_finds_known_degeneration():
    res = search_witness(a3kappa(GF7, 2), L1, GF7, budget=50000)
    assert res.found
    assert res.witness.note.startswith("search-seed")
    assert verify_witness(res.witness) == structure_of(L1, GF7)


def test_search_is_deterministic():
    r1 = search_witness(a3kappa(GF7, 2), L1, GF7, budget=50000, seed=1729)
    r2 = search_witness(a3kappa(GF7, 2), L1, GF7, budget=50000, seed=1729)
    assert r1.tried == r2.tried
    assert r1.witness.matrix == r2.witness.matrix


def test_search_respects_budget_on_impossible_pair():
    res = search_witness(L1, C1, GF5, budget=3000)
    assert not res.found
    assert res.tried == 3000
    assert res.witness is None


def test_lift_search_hit_to_rationals():
    res = search_witness(a3kappa(GF7, 2), L1, GF7, budget=50000)
    lifted = lift_witness_to_rationals(res.witness)
    assert lifted.base_field == Q
    assert verify_witness(lifted) == structure_of(L1, Q)
    assert lifted.src.param == Q.element(2)
