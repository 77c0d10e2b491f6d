"""The algebra catalogue: ids, isomorphism witnesses, canonical reduction.

The parametric isomorphisms are checked symbolically, with the parameter a
variable of a rational function field, so one assertion covers every value
at once; individual witnesses are then spot-checked over concrete fields.
"""

import random

import pytest

from nilalg3.catalogue import (AlgebraId, CatalogueError, IsoWitness,
                               a3kappa, adelta, canonicalize, hbeta, identify,
                               identify_with_witness, iso_witness, quarter,
                               same_r_class, structure_of)
from nilalg3.fields import (NeedsFieldExtension, PrimeField, RATIONALS,
                            SimpleExtension, gf4)
from nilalg3.polyring import RationalFunctionField
from nilalg3.structspace import Matrix3, act, basis_vector


def _sym_family(K, tag, param):
    """Structure vector of a parametric family over a non-field parent."""
    if tag == "a":
        return (basis_vector(K, 2, 2, 1) + basis_vector(K, 2, 3, 1)
                + basis_vector(K, 3, 3, 1).scale(param))
    if tag == "h":
        return basis_vector(K, 2, 3, 1) + basis_vector(K, 3, 2, 1).scale(param)
    if tag == "a3":
        return (basis_vector(K, 2, 2, 1) + basis_vector(K, 3, 2, 1).scale(param)
                + basis_vector(K, 3, 3, 1))
    raise AssertionError(tag)


def test_algebra_id_validation():
    with pytest.raises(CatalogueError):
        AlgebraId("z9")
    with pytest.raises(CatalogueError):
        AlgebraId("a")            # missing parameter
    with pytest.raises(CatalogueError):
        AlgebraId("c3", RATIONALS.one())
    assert str(AlgebraId("a", RATIONALS.element(2))) == "a(2)"
    assert AlgebraId("rho").is_canonical() is False
    assert AlgebraId("c5").is_canonical() is True


def test_symbolic_swap_carries_h_to_reciprocal():
    K = RationalFunctionField(RATIONALS, "b")
    b = K.gen()
    swap = Matrix3.from_rows(K, [[b, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert act(_sym_family(K, "h", b), swap) == _sym_family(K, "h", 1 / b)


def test_symbolic_kappa_matrix_carries_family_onto_a3():
    K = RationalFunctionField(RATIONALS, "k")
    k = K.gen()
    g = Matrix3.from_rows(K, [[1, 0, 0], [0, 0, 1], [0, k, 0]])
    assert act(_sym_family(K, "a", 1 / (k * k)), g) == _sym_family(K, "a3", k)


def test_symbolic_alpha_matrix_carries_a3_onto_h():
    K = RationalFunctionField(RATIONALS, "a")
    al = K.gen()
    kappa = -(al + 1 / al)
    g = Matrix3.from_rows(K, [[al - 1 / al, 0, 0], [0, al, 1], [0, 1, al]])
    assert act(_sym_family(K, "a3", kappa), g) == _sym_family(K, "h", -al * al)


def test_same_r_class():
    F = PrimeField(7)
    assert same_r_class(F.element(3), F.element(5))       # 5 = 3^-1 mod 7
    assert same_r_class(F.element(3), F.element(3))
    assert not same_r_class(F.element(3), F.element(4))


def test_iso_witness_h_reciprocal():
    F = PrimeField(7)
    w = iso_witness(hbeta(F, 3), hbeta(F, 5), F)
    assert isinstance(w, IsoWitness)
    assert w.field == F
    assert iso_witness(hbeta(F, 3), hbeta(F, 4), F) is None


def test_iso_witness_gf5_omega():
    # -1 is a square in GF(5) (2^2 = 4), so the commutative split happens
    # over the base field
    F = PrimeField(5)
    w = iso_witness(AlgebraId("c3"), AlgebraId("chat3"), F)
    assert w is not None and w.field == F


def test_iso_witness_rationals_need_extension():
    with pytest.raises(NeedsFieldExtension):
        iso_witness(AlgebraId("c3"), AlgebraId("chat3"), RATIONALS)
    w = iso_witness(AlgebraId("c3"), AlgebraId("chat3"), RATIONALS,
                    allow_extension=True)
    assert isinstance(w.field, SimpleExtension)
    assert w.field.char == 0


def test_witness_construction_rejects_wrong_map():
    F = RATIONALS
    with pytest.raises(CatalogueError):
        IsoWitness(AlgebraId("c3"), AlgebraId("c1"), Matrix3.identity(F))


def _compose_chain(chain):
    g = None
    top = chain[-1].field
    for w in chain:
        m = w.matrix if w.field == top else w.matrix.lift(top)
        g = m if g is None else g @ m
    return g, top


@pytest.mark.parametrize("char", [0, 7])
def test_canonicalize_h_family_generic(char):
    field = RATIONALS if char == 0 else PrimeField(char)
    beta = field.element(3)
    target, chain = canonicalize(hbeta(field, beta), field)
    assert target.tag == "a"
    # delta = -beta / (1 - beta)^2 away from characteristic 2
    expect = -beta / ((field.one() - beta) ** 2)
    assert target.param == expect
    g, top = _compose_chain(chain)
    src = structure_of(hbeta(field, beta), top)
    dst = structure_of(target, top)
    assert act(src, g) == dst


def test_canonicalize_h_family_char2():
    F = gf4()
    w = F.generator()
    target, chain = canonicalize(hbeta(F, w), F)
    assert target.tag == "a"
    assert target.param == w / ((F.one() + w) ** 2)
    g, top = _compose_chain(chain)
    assert act(structure_of(hbeta(F, w), top), g) == structure_of(target, top)


def test_canonicalize_special_h_values():
    F = RATIONALS
    assert canonicalize(hbeta(F, 1), F)[0] == AlgebraId("c3")
    assert canonicalize(hbeta(F, -1), F)[0] == AlgebraId("l1")
    t, chain = canonicalize(hbeta(F, 0), F)
    assert t == adelta(F, 0)
    g, top = _compose_chain(chain)
    assert act(structure_of(hbeta(F, 0), top), g) == structure_of(t, top)

    G = gf4()
    assert canonicalize(hbeta(G, 1), G)[0] == AlgebraId("l1")


def test_canonicalize_auxiliary_tags():
    F = RATIONALS
    assert canonicalize(AlgebraId("rho"), F)[0] == adelta(F, quarter(F))
    assert canonicalize(AlgebraId("chat3"), F)[0] == AlgebraId("c3")
    assert canonicalize(AlgebraId("a2"), F)[0] == adelta(F, 0)
    assert canonicalize(a3kappa(F, 0), F)[0] == AlgebraId("c3")
    t, _ = canonicalize(a3kappa(F, 2), F)
    assert t == adelta(F, quarter(F))

    G = PrimeField(2)
    assert canonicalize(AlgebraId("rho"), G)[0] == AlgebraId("c3")
    assert canonicalize(AlgebraId("chat3"), G)[0] == AlgebraId("l1")


def test_canonicalize_a3_generic():
    F = PrimeField(7)
    for k in (1, 2, 3, 4, 5, 6):
        kappa = F.element(k)
        target, chain = canonicalize(a3kappa(F, kappa), F)
        assert target.tag == "a"
        assert target.param == (kappa * kappa).inverse()
        g, top = _compose_chain(chain)
        src = structure_of(a3kappa(F, kappa), top)
        assert act(src, g) == structure_of(target, top)


def test_canonicalize_refuses_extension_when_disallowed():
    with pytest.raises(NeedsFieldExtension):
        canonicalize(AlgebraId("chat3"), RATIONALS, allow_extension=False)


def test_quarter():
    assert quarter(RATIONALS).rep.numerator == 1
    assert quarter(RATIONALS).rep.denominator == 4
    assert quarter(PrimeField(7)) == PrimeField(7).element(2)
    assert quarter(PrimeField(5)) == PrimeField(5).element(4)


def test_identify_canonical_forms_round_trip():
    for field in (RATIONALS, PrimeField(7), gf4()):
        for tag in ("a0", "c1", "c3", "l1", "c5"):
            ident = AlgebraId(tag)
            assert identify(structure_of(ident, field)) == ident
        d = field.element(3)
        assert identify(structure_of(adelta(field, d), field)) == adelta(field, d)


def test_identify_random_basis_changes():
    rng = random.Random(100)
    for field in (PrimeField(7), gf4()):
        ids = [AlgebraId("a0"), AlgebraId("c1"), AlgebraId("c3"),
               AlgebraId("l1"), AlgebraId("c5"), adelta(field, 3)]
        for ident in ids:
            vec = structure_of(ident, field)
            for _ in range(8):
                while True:
                    rows = [[field.element(rng.randrange(field.order()))
                             for _ in range(3)] for _ in range(3)]
                    g = Matrix3.from_rows(field, rows)
                    if not g.det().is_zero():
                        break
                assert identify(act(vec, g)) == ident


def test_identify_sees_through_auxiliary_presentations():
    F = PrimeField(7)
    assert identify(structure_of(AlgebraId("rho"), F)) == adelta(F, quarter(F))
    assert identify(structure_of(AlgebraId("chat3"), F)) == AlgebraId("c3")
    assert identify(structure_of(AlgebraId("a2"), F)) == adelta(F, 0)
    G = PrimeField(2)
    assert identify(structure_of(AlgebraId("chat3"), G)) == AlgebraId("l1")
    assert identify(structure_of(AlgebraId("rho"), G)) == AlgebraId("c3")


def test_identify_rejects_non_associative():
    F = RATIONALS
    bad = basis_vector(F, 1, 1, 2) + basis_vector(F, 2, 2, 3)
    with pytest.raises(ValueError):
        identify(bad)


def test_delta_recovery_is_exact():
    rng = random.Random(55)
    F = RATIONALS
    for num in (0, 1, -1, 2, 5, -7):
        d = F.element(num)
        vec = structure_of(adelta(F, d), F)
        rows = [[3, 1, 0], [1, 0, 2], [0, 1, 1]]
        g = Matrix3.from_rows(F, rows)
        assert identify(act(vec, g)).param == d
    G = PrimeField(13)
    for num in range(10):
        d = G.element(num)
        vec = structure_of(adelta(G, d), G)
        while True:
            rows = [[G.element(rng.randrange(13)) for _ in range(3)]
                    for _ in range(3)]
            g = Matrix3.from_rows(G, rows)
            if not g.det().is_zero():
                break
        assert identify(act(vec, g)).param == d


def test_identify_with_witness_verifies():
    rng = random.Random(60)
    for field in (PrimeField(7), gf4()):
        ids = [AlgebraId("c1"), AlgebraId("c3"), AlgebraId("l1"),
               AlgebraId("c5"), adelta(field, 2)]
        for ident in ids:
            vec = structure_of(ident, field)
            while True:
                rows = [[field.element(rng.randrange(field.order()))
                         for _ in range(3)] for _ in range(3)]
                g = Matrix3.from_rows(field, rows)
                if not g.det().is_zero():
                    break
            moved = act(vec, g)
            got, m = identify_with_witness(moved)
            assert got == ident
            assert act(moved.lift(m.parent), m) == structure_of(ident, m.parent)


def test_identify_with_witness_extension_case():
    # a commutative ann-1 vector whose diagonal ratio is not a rational square
    F = RATIONALS
    vec = basis_vector(F, 2, 2, 1) + basis_vector(F, 3, 3, 1).scale(F.element(3))
    assert identify(vec) == AlgebraId("c3")
    with pytest.raises(NeedsFieldExtension):
        identify_with_witness(vec)
    got, m = identify_with_witness(vec, allow_extension=True)
    assert got == AlgebraId("c3")
    assert isinstance(m.parent, SimpleExtension)
    assert act(vec.lift(m.parent), m) == structure_of(got, m.parent)
