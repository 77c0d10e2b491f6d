"""The classification catalogue of 3-dimensional nilpotent associative algebras.

Canonical representatives (one per isomorphism class over an algebraically
closed field):

    a0        zero product
    c1        e3*e3 = e1
    c3        e2*e2 = e1,  e3*e3 = e1
    a(d)      e2*e2 = e1,  e2*e3 = e1,  e3*e3 = d*e1      (one class per d)
    l1        e2*e3 = e1,  e3*e2 = -e1
    c5        e1*e1 = e2,  e1*e2 = e3,  e2*e1 = e3

plus the auxiliary presentations that arise while normalizing: the
one-parameter family h(b) with e2*e3 = e1, e3*e2 = b*e1, the family
a3(k) with e2*e2 = e1, e3*e2 = k*e1, e3*e3 = e1, the fixed members
rho = a3(2), chat3 = h(1), a2 = h(0).

Every isomorphism this module hands out is wrapped in an IsoWitness whose
matrix is re-checked by the action at construction time, so no unverified
claim can circulate.  identify() classifies an arbitrary structure vector by
invariants alone; identify_with_witness() additionally builds the explicit
basis change onto the canonical representative.
"""

from __future__ import annotations

from dataclasses import dataclass

from .fields import (Field, FieldElement, NeedsFieldExtension,
                     extend_with_root, square_roots, quadratic_roots)
from . import algprops
from .structspace import Matrix3, StructureVector, act, basis_vector

CANONICAL_TAGS = ("a0", "c1", "c3", "l1", "c5", "a")
AUXILIARY_TAGS = ("h", "a3", "rho", "chat3", "a2")
PARAMETRIC_TAGS = ("a", "h", "a3")


class CatalogueError(ValueError):
    """Unknown tag, missing/superfluous parameter, or an uncatalogued pair."""


class UnclassifiableError(ValueError):
    """The vector is nilpotent associative but fits no catalogue profile.

    Over an algebraically closed field this cannot happen (the table is a
    complete system of representatives); reaching it means the input data or
    the field semantics are off.
    """


@dataclass(frozen=True)
class AlgebraId:
    """A catalogue name, with its exact field-element parameter if it has one."""

    tag: str
    param: FieldElement | None = None

    def __post_init__(self):
        if self.tag not in CANONICAL_TAGS + AUXILIARY_TAGS:
            raise CatalogueError(f"unknown algebra tag {self.tag!r}")
        if self.tag in PARAMETRIC_TAGS:
            if not isinstance(self.param, FieldElement):
                raise CatalogueError(
                    f"tag {self.tag!r} needs a field-element parameter")
        elif self.param is not None:
            raise CatalogueError(f"tag {self.tag!r} takes no parameter")

    def is_canonical(self) -> bool:
        return self.tag in CANONICAL_TAGS

    def __str__(self):
        if self.param is None:
            return self.tag
        return f"{self.tag}({self.param!r})"

    __repr__ = __str__


def _param_in(ident: AlgebraId, field: Field) -> FieldElement:
    p = ident.param
    if isinstance(p, FieldElement):
        if p.field == field:
            return p
        return field.embed(p)
    return field.element(p)


def structure_of(ident: AlgebraId, field: Field) -> StructureVector:
    """The defining structure vector of a catalogue algebra over ``field``."""
    def bv(i, j, k):
        return basis_vector(field, i, j, k)

    t = ident.tag
    if t == "a0":
        return StructureVector.zero(field)
    if t == "c1":
        return bv(3, 3, 1)
    if t == "c3":
        return bv(2, 2, 1) + bv(3, 3, 1)
    if t == "l1":
        return bv(2, 3, 1) - bv(3, 2, 1)
    if t == "c5":
        return bv(1, 1, 2) + bv(1, 2, 3) + bv(2, 1, 3)
    if t == "a":
        return bv(2, 2, 1) + bv(2, 3, 1) + bv(3, 3, 1).scale(_param_in(ident, field))
    if t == "h":
        return bv(2, 3, 1) + bv(3, 2, 1).scale(_param_in(ident, field))
    if t == "a3":
        return bv(2, 2, 1) + bv(3, 2, 1).scale(_param_in(ident, field)) + bv(3, 3, 1)
    if t == "rho":
        return bv(2, 2, 1) + bv(3, 2, 1).scale(field.from_int(2)) + bv(3, 3, 1)
    if t == "chat3":
        return bv(2, 3, 1) + bv(3, 2, 1)
    if t == "a2":
        return bv(2, 3, 1)
    raise CatalogueError(f"unknown algebra tag {t!r}")


@dataclass(frozen=True)
class IsoWitness:
    """A basis change carrying src onto dst, re-verified at construction."""

    src: AlgebraId
    dst: AlgebraId
    matrix: Matrix3

    def __post_init__(self):
        f = self.matrix.parent
        if self.matrix.det().is_zero():
            raise CatalogueError("isomorphism witness matrix is singular")
        if act(structure_of(self.src, f), self.matrix) != structure_of(self.dst, f):
            raise CatalogueError(
                f"witness does not carry {self.src} onto {self.dst}")

    @property
    def field(self) -> Field:
        return self.matrix.parent


def same_r_class(beta: FieldElement, beta2: FieldElement) -> bool:
    """Are two h-family parameters equivalent (equal or reciprocal)?"""
    if not isinstance(beta2, FieldElement):
        beta2 = beta.field.element(beta2)
    return beta == beta2 or beta * beta2 == beta.field.one()


# -- named ids ---------------------------------------------------------------


def a0() -> AlgebraId:
    return AlgebraId("a0")


def c1() -> AlgebraId:
    return AlgebraId("c1")


def c3() -> AlgebraId:
    return AlgebraId("c3")


def l1() -> AlgebraId:
    return AlgebraId("l1")


def c5() -> AlgebraId:
    return AlgebraId("c5")


def adelta(field: Field, d) -> AlgebraId:
    return AlgebraId("a", field.element(d) if not isinstance(d, FieldElement) else d)


def hbeta(field: Field, b) -> AlgebraId:
    return AlgebraId("h", field.element(b) if not isinstance(b, FieldElement) else b)


def a3kappa(field: Field, k) -> AlgebraId:
    return AlgebraId("a3", field.element(k) if not isinstance(k, FieldElement) else k)


def quarter(field: Field) -> FieldElement:
    """(4*1)^-1, the distinguished family parameter in characteristic != 2."""
    return field.from_int(4).inverse()


# -- explicit isomorphism witnesses ------------------------------------------


def _g_kappa(field: Field, kappa: FieldElement) -> Matrix3:
    # columns e1, kappa*e3, e2: carries a(1/kappa^2) onto a3(kappa)
    return Matrix3.from_rows(field, [[1, 0, 0], [0, 0, 1], [0, kappa, 0]])


def _g_alpha(field: Field, alpha: FieldElement) -> Matrix3:
    # carries a3(-(alpha + 1/alpha)) onto h(-alpha^2); singular at alpha^2 = 1
    ai = alpha.inverse()
    return Matrix3.from_rows(
        field, [[alpha - ai, 0, 0], [0, alpha, 1], [0, 1, alpha]])


def _omega_matrix(field: Field, omega: FieldElement) -> Matrix3:
    # columns 2e1, e2 - omega*e3, e2 + omega*e3: carries c3 onto chat3
    return Matrix3.from_rows(field, [[2, 0, 0], [0, 1, 1], [0, -omega, omega]])


_SHEAR_DOWN = [[1, 0, 0], [0, 1, 0], [0, 1, 1]]    # columns e1, e2+e3, e3


def _root_of(field: Field, minpoly: list, name: str, allow_extension: bool):
    """A root in ``field`` if one exists, else adjoin one when permitted.

    Returns (root, field); minpoly is constant-first and monic of degree 2.
    """
    roots = quadratic_roots(field.element(minpoly[2]), field.element(minpoly[1]),
                            field.element(minpoly[0]))
    if roots:
        return roots[0], field
    if not allow_extension:
        raise NeedsFieldExtension(
            f"no root of {minpoly} (constant first) in {field!r}")
    ext, _ = extend_with_root(field, minpoly, name)
    return ext.generator(), ext


def iso_witness(src: AlgebraId, dst: AlgebraId, field: Field,
                allow_extension: bool = False) -> IsoWitness | None:
    """The catalogue's explicit witness for a documented pair, or None.

    Raises NeedsFieldExtension when the required root (a square root or a
    root of x^2 + k*x + 1) is missing from ``field`` and extensions were not
    allowed.
    """
    one = field.one()
    pair = (src.tag, dst.tag)

    if pair == ("h", "h"):
        b1, b2 = _param_in(src, field), _param_in(dst, field)
        if b1 == b2:
            return IsoWitness(src, dst, Matrix3.identity(field))
        if b1 * b2 == one:
            m = Matrix3.from_rows(field, [[b1, 0, 0], [0, 0, 1], [0, 1, 0]])
            return IsoWitness(src, dst, m)
        return None

    if pair == ("a", "a3"):
        d, k = _param_in(src, field), _param_in(dst, field)
        if d.is_zero() or k * k * d != one:
            return None
        return IsoWitness(src, dst, _g_kappa(field, k))

    if pair == ("a3", "a"):
        k, d = _param_in(src, field), _param_in(dst, field)
        if k.is_zero() or k * k * d != one:
            return None
        return IsoWitness(src, dst, _g_kappa(field, k).inverse())

    if pair == ("a3", "a3"):
        k1, k2 = _param_in(src, field), _param_in(dst, field)
        if k1 == k2:
            return IsoWitness(src, dst, Matrix3.identity(field))
        if k1 == -k2:
            return IsoWitness(src, dst, Matrix3.diagonal(field, 1, -1, 1))
        return None

    if pair == ("a3", "h"):
        k, b = _param_in(src, field), _param_in(dst, field)
        root, f2 = _root_of(field, [1, k, 1], "al", allow_extension)
        for alpha in (root, root.inverse()):
            if -(alpha * alpha) == f2.embed(b) and not (alpha * alpha - 1).is_zero():
                return IsoWitness(src, dst, _g_alpha(f2, alpha))
        return None

    if pair == ("h", "a3"):
        b, k = _param_in(src, field), _param_in(dst, field)
        root, f2 = _root_of(field, [b, 0, 1], "al", allow_extension)
        for alpha in (root, -root):
            if alpha.is_zero() or (alpha * alpha - 1).is_zero():
                continue
            if -(alpha + alpha.inverse()) == f2.embed(k):
                return IsoWitness(src, dst, _g_alpha(f2, alpha).inverse())
        return None

    if pair in (("c3", "chat3"), ("chat3", "c3")):
        if field.char == 2:
            return None
        omega, f2 = _root_of(field, [1, 0, 1], "w", allow_extension)
        m = _omega_matrix(f2, omega)
        if pair == ("chat3", "c3"):
            m = m.inverse()
        return IsoWitness(src, dst, m)

    if pair in (("a2", "a"), ("a", "a2")):
        other = dst if pair[0] == "a2" else src
        if not _param_in(other, field).is_zero():
            return None
        m = Matrix3.from_rows(field, _SHEAR_DOWN)
        if pair == ("a", "a2"):
            m = m.inverse()
        return IsoWitness(src, dst, m)

    if structure_of(src, field) == structure_of(dst, field):
        return IsoWitness(src, dst, Matrix3.identity(field))
    return None


def canonicalize(ident: AlgebraId, field: Field, allow_extension: bool = True):
    """Reduce any catalogue id to its Table representative.

    Returns (canonical id, witness chain); composing the chain's matrices
    carries structure_of(ident) onto structure_of(canonical id).  Witnesses
    may live over a quadratic extension of ``field`` when the reduction needs
    a root the field lacks (refused if allow_extension is false).  The
    canonical id's parameter always lies in the original field.
    """
    t = ident.tag
    if t in CANONICAL_TAGS:
        return ident, []

    if t == "a2":
        target = adelta(field, 0)
        return target, [iso_witness(ident, target, field)]

    if t == "chat3":
        if field.char == 2:
            return AlgebraId("l1"), [iso_witness(ident, AlgebraId("l1"), field)]
        target = AlgebraId("c3")
        return target, [iso_witness(ident, target, field, allow_extension)]

    if t == "rho":
        if field.char == 2:
            return AlgebraId("c3"), [iso_witness(ident, AlgebraId("c3"), field)]
        step1 = iso_witness(ident, a3kappa(field, 2), field)
        target = adelta(field, quarter(field))
        step2 = iso_witness(a3kappa(field, 2), target, field)
        return target, [step1, step2]

    if t == "a3":
        k = _param_in(ident, field)
        if k.is_zero():
            return AlgebraId("c3"), [iso_witness(ident, AlgebraId("c3"), field)]
        target = adelta(field, (k * k).inverse())
        return target, [iso_witness(ident, target, field)]

    if t == "h":
        b = _param_in(ident, field)
        one = field.one()
        if b == -one:
            target = AlgebraId("l1")
            return target, [iso_witness(ident, target, field)]
        if b == one:
            mid = AlgebraId("chat3")
            step1 = iso_witness(ident, mid, field)
            target, rest = canonicalize(mid, field, allow_extension)
            return target, [step1] + rest
        if b.is_zero():
            mid = AlgebraId("a2")
            step1 = iso_witness(ident, mid, field)
            target, rest = canonicalize(mid, field, allow_extension)
            return target, [step1] + rest
        # general parameter: pass through a3(k) with k = -(alpha + 1/alpha),
        # alpha^2 = -b; delta = 1/k^2 = -b/(1-b)^2 stays in the base field
        delta = -b / ((one - b) * (one - b))
        alpha, f2 = _root_of(field, [b, 0, 1], "al", allow_extension)
        k2 = -(alpha + alpha.inverse())
        mid = AlgebraId("a3", k2)
        step1 = iso_witness(AlgebraId("h", f2.embed(b)), mid, f2)
        step2 = iso_witness(mid, AlgebraId("a", f2.embed(delta)), f2)
        assert (k2 * k2).inverse() == f2.embed(delta)
        return adelta(field, delta), [step1, step2]

    raise CatalogueError(f"unknown algebra tag {t!r}")


# -- classification of arbitrary structure vectors ---------------------------


def _complement_units(field: Field, f1: list) -> tuple:
    """Two standard unit vectors completing f1 to a basis."""
    units = Matrix3.identity(field).rows()
    for i in range(3):
        for j in range(i + 1, 3):
            m = Matrix3.from_columns(field, [f1, units[i], units[j]])
            if not m.det().is_zero():
                return units[i], units[j]
    raise UnclassifiableError("could not complete the square to a basis")


def _pairing(vec: StructureVector, f1: list, w2: list, w3: list):
    """The 2x2 coefficient table of products of w2, w3 against span(f1)."""
    idx = max(range(3), key=lambda n: 0 if f1[n].is_zero() else 1)
    pivot = f1[idx]
    out = []
    for x in (w2, w3):
        row = []
        for y in (w2, w3):
            p = vec.product(x, y)
            row.append(p[idx] / pivot)
        out.append(row)
    return out


def _delta_invariant(vec: StructureVector, field: Field):
    """det(pairing) / (skew part)^2 -- the exact family parameter."""
    basis = algprops.square_basis(vec)
    if len(basis) != 1:
        raise UnclassifiableError("square is not a line")
    f1 = basis[0]
    w2, w3 = _complement_units(field, f1)
    (p, q), (r, s) = _pairing(vec, f1, w2, w3)
    skew = q - r
    if skew.is_zero():
        raise UnclassifiableError("pairing is symmetric for a non-commutative input")
    return (p * s - q * r) / (skew * skew)


def identify(vec: StructureVector) -> AlgebraId:
    """The canonical id of an arbitrary nilpotent associative structure.

    Decision tree: class 0 is the zero algebra and class 3 the truncated
    polynomial algebra; in class 2 the branch is on commutativity, on the
    annihilator dimension, and on whether all squares stay on their own
    line, with the family parameter recovered from the induced pairing.
    """
    field = vec.parent
    if not algprops.is_associative(vec):
        raise ValueError("structure is not associative")
    ncls = algprops.nilpotency_class(vec)
    if ncls == 0:
        return AlgebraId("a0")
    if ncls == 3:
        return AlgebraId("c5")
    if ncls != 2:
        raise UnclassifiableError(f"nilpotency class {ncls} has no catalogue entry")
    if algprops.is_commutative(vec):
        if algprops.in_m_star_star(vec):
            if field.char != 2:
                raise UnclassifiableError(
                    "commutative square-on-own-line class-2 input outside char 2")
            return AlgebraId("l1")
        ann = algprops.annihilator_dimension(vec)
        if ann == 2:
            return AlgebraId("c1")
        if ann == 1:
            return AlgebraId("c3")
        raise UnclassifiableError(f"annihilator dimension {ann} unexpected")
    if algprops.in_m_star_star(vec):
        return AlgebraId("l1")
    return AlgebraId("a", _delta_invariant(vec, field))


def identify_with_witness(vec: StructureVector, allow_extension: bool = False):
    """identify() plus a verified basis change onto the canonical structure.

    Returns (id, matrix); act(vec, matrix) equals the canonical structure
    exactly.  The matrix may live over a quadratic extension (only the
    commutative ann-1 case can need a square root; refused when
    allow_extension is false).
    """
    ident = identify(vec)
    field = vec.parent
    g = _reduction_matrix(vec, ident, field, allow_extension)
    target = structure_of(ident, g.parent)
    moved = act(vec.lift(g.parent) if g.parent != field else vec, g)
    if moved != target:
        raise UnclassifiableError(f"reduction to {ident} failed verification")
    return ident, g


def _reduction_matrix(vec, ident, field, allow_extension) -> Matrix3:
    t = ident.tag
    if t == "a0":
        return Matrix3.identity(field)

    if t == "c5":
        e = Matrix3.identity(field).rows()
        candidates = list(e)
        candidates += [[a + b for a, b in zip(e[i], e[j])]
                       for i in range(3) for j in range(i + 1, 3)]
        candidates.append([e[0][n] + e[1][n] + e[2][n] for n in range(3)])
        for v1 in candidates:
            v2 = vec.product(v1, v1)
            v3 = vec.product(v1, v2)
            m = Matrix3.from_columns(field, [v1, v2, v3])
            if not m.det().is_zero():
                return m
        raise UnclassifiableError("no generator found for the class-3 algebra")

    basis = algprops.square_basis(vec)
    if len(basis) != 1:
        raise UnclassifiableError("square is not a line")
    f1 = basis[0]

    if t == "c1":
        ann = algprops.annihilator_basis(vec)
        e = Matrix3.identity(field).rows()
        candidates = list(e) + [[a + b for a, b in zip(e[i], e[j])]
                                for i in range(3) for j in range(i + 1, 3)]
        for w3 in candidates:
            sq = vec.product(w3, w3)
            if all(c.is_zero() for c in sq):
                continue
            for w2 in ann + [[a + b for a, b in zip(ann[0], ann[1])]]:
                m = Matrix3.from_columns(field, [sq, w2, w3])
                if not m.det().is_zero():
                    return m
        raise UnclassifiableError("no non-singular frame for the ann-2 algebra")

    w2, w3 = _complement_units(field, f1)

    if t == "l1":
        (p, q), (r, s) = _pairing(vec, f1, w2, w3)
        scaled = [q * c for c in f1]
        return Matrix3.from_columns(field, [scaled, w2, w3])

    if t == "c3":
        (p, q), (r, s) = _pairing(vec, f1, w2, w3)
        if p.is_zero() and not s.is_zero():
            w2, w3 = w3, w2
            (p, q), (r, s) = _pairing(vec, f1, w2, w3)
        if p.is_zero():
            w2 = [a + b for a, b in zip(w2, w3)]
            (p, q), (r, s) = _pairing(vec, f1, w2, w3)
        if p.is_zero():
            raise UnclassifiableError("no anisotropic vector for the pairing")
        w3 = [a - (r / p) * b for a, b in zip(w3, w2)]
        (p, q), (r, s) = _pairing(vec, f1, w2, w3)
        ratio = s / p
        roots = square_roots(ratio)
        f2 = field
        if roots:
            d = roots[0]
        else:
            if not allow_extension:
                raise NeedsFieldExtension(
                    f"square root of {ratio!r} needed to normalise the pairing")
            f2, emb = extend_with_root(field, [-ratio, 0, 1], "r")
            d = f2.generator()
            f1 = [emb(c) for c in f1]
            w2 = [emb(c) for c in w2]
            w3 = [emb(c) for c in w3]
            p = emb(p)
        w3 = [c / d for c in w3]
        scaled = [p * c for c in f1]
        return Matrix3.from_columns(f2, [scaled, w2, w3])

    if t == "a":
        (p, q), (r, s) = _pairing(vec, f1, w2, w3)
        if p.is_zero():
            if not s.is_zero():
                w2, w3 = w3, w2
            else:
                w2 = [a + b for a, b in zip(w2, w3)]
            (p, q), (r, s) = _pairing(vec, f1, w2, w3)
        if p.is_zero():
            raise UnclassifiableError("no anisotropic vector for the pairing")
        w3 = [a - (r / p) * b for a, b in zip(w3, w2)]
        (p, q), (r, s) = _pairing(vec, f1, w2, w3)
        w3 = [(p / q) * c for c in w3]
        scaled = [p * c for c in f1]
        return Matrix3.from_columns(field, [scaled, w2, w3])

    raise CatalogueError(f"no reduction routine for tag {t!r}")
