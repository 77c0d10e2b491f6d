"""Structure vectors, 3x3 matrices, and the basis-change action.

The action is cross-checked against two independent computations: the raw
triple-sum with an explicitly inverted matrix (a Kronecker-product sandwich
written out as loops), and the defining change-of-basis property for the
bilinear product.
"""

import random

from nilalg3.fields import PrimeField, RATIONALS, gf4
from nilalg3.structspace import (Matrix3, StructureVector, act, act_cleared,
                                 basis_vector)


def _random_vector(field, rng):
    terms = []
    for i in (1, 2, 3):
        for j in (1, 2, 3):
            for k in (1, 2, 3):
                if rng.random() < 0.4:
                    c = rng.randrange(1, field.order())
                    terms.append((i, j, k, field.element(c)))
    return StructureVector.from_terms(field, terms)


def _random_invertible(field, rng):
    while True:
        rows = [[field.element(rng.randrange(field.order())) for _ in range(3)]
                for _ in range(3)]
        g = Matrix3.from_rows(field, rows)
        if not g.det().is_zero():
            return g


def _act_by_loops(vec, g):
    """Independent action: moved[a,b,c] = sum lam[i,j,k] g[i,a] g[j,b] inv[c,k]."""
    field = vec.parent
    inv = g.inverse()
    coeff = {}
    for i, j, k, c in vec.terms():
        coeff[(i, j, k)] = c
    out = []
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            for c in (1, 2, 3):
                s = field.zero()
                for (i, j, k), lam in coeff.items():
                    s = s + lam * g.entry(i, a) * g.entry(j, b) * inv.entry(c, k)
                if not s.is_zero():
                    out.append((a, b, c, s))
    return StructureVector.from_terms(field, out)


def test_basis_vector_and_terms():
    F = PrimeField(7)
    v = basis_vector(F, 2, 3, 1)
    assert list(v.terms()) == [(2, 3, 1, F.one())]
    w = v + basis_vector(F, 2, 3, 1).scale(F.element(6))
    assert w.is_zero()


def test_matrix_inverse_and_adjugate():
    rng = random.Random(3)
    F = PrimeField(11)
    for _ in range(20):
        g = _random_invertible(F, rng)
        assert g @ g.inverse() == Matrix3.identity(F)
        assert g.inverse() @ g == Matrix3.identity(F)
        d = g.det()
        adj = g.adjugate()
        prod = g @ adj
        assert prod == Matrix3.diagonal(F, d, d, d)


def test_det_by_permutation_formula():
    rng = random.Random(4)
    F = PrimeField(7)
    perms = [((1, 2, 3), 1), ((2, 3, 1), 1), ((3, 1, 2), 1),
             ((1, 3, 2), -1), ((2, 1, 3), -1), ((3, 2, 1), -1)]
    for _ in range(15):
        g = _random_invertible(F, rng)
        s = F.zero()
        for (p1, p2, p3), sign in perms:
            term = g.entry(1, p1) * g.entry(2, p2) * g.entry(3, p3)
            s = s + (term if sign > 0 else -term)
        assert s == g.det()


def test_act_identity_and_composition():
    rng = random.Random(9)
    F = PrimeField(7)
    for _ in range(15):
        vec = _random_vector(F, rng)
        g = _random_invertible(F, rng)
        h = _random_invertible(F, rng)
        assert act(vec, Matrix3.identity(F)) == vec
        assert act(act(vec, g), h) == act(vec, g @ h)


def test_act_matches_loop_oracle():
    for field, seed in ((PrimeField(7), 21), (gf4(), 22)):
        rng = random.Random(seed)
        for _ in range(15):
            vec = _random_vector(field, rng)
            g = _random_invertible(field, rng)
            assert act(vec, g) == _act_by_loops(vec, g)


def test_act_change_of_basis_property():
    """Multiplying in the new coordinates equals conjugating the old product."""
    rng = random.Random(30)
    F = PrimeField(7)
    for _ in range(10):
        vec = _random_vector(F, rng)
        g = _random_invertible(F, rng)
        moved = act(vec, g)
        x = [F.element(rng.randrange(7)) for _ in range(3)]
        y = [F.element(rng.randrange(7)) for _ in range(3)]
        direct = moved.product(x, y)
        old = vec.product(g.apply(x), g.apply(y))
        assert direct == list(g.inverse().apply(old))


def test_act_cleared_is_division_free_act():
    rng = random.Random(41)
    F = PrimeField(13)
    for _ in range(10):
        vec = _random_vector(F, rng)
        g = _random_invertible(F, rng)
        cleared, d = act_cleared(vec, g)
        assert d == g.det()
        assert cleared == act(vec, g).scale(d)


def test_lift_and_map_scalars():
    F = PrimeField(7)
    v = basis_vector(RATIONALS, 2, 2, 1) + basis_vector(RATIONALS, 3, 3, 1).scale(
        RATIONALS.element(9))
    w = v.map_scalars(lambda c: F.element(c.rep), F)
    assert w == basis_vector(F, 2, 2, 1) + basis_vector(F, 3, 3, 1).scale(
        F.element(2))


def test_str_rendering():
    F = RATIONALS
    v = basis_vector(F, 2, 3, 1) - basis_vector(F, 3, 2, 1)
    assert str(v) == "231-321"
    assert str(StructureVector.zero(F)) == "0"
