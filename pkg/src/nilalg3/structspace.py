"""Structure vectors for 3-dimensional algebras and the basis-change action.

An algebra structure on a 3-dimensional space with basis e1, e2, e3 is the
27-tuple of coefficients c[i,j,k] in

    e_i * e_j  =  sum_k  c[i,j,k] e_k .

A basis-change matrix g (columns are the new basis vectors, expressed in the
old one) acts on such a tuple on the right; two tuples give isomorphic
algebras exactly when some invertible g carries one to the other.

Scalars may come from a field, a polynomial ring, or a univariate rational
function field: anything whose parent provides element/zero/one and whose
values support ring arithmetic.  The action itself needs inverses, so over a
polynomial ring use :func:`act_cleared`, which multiplies through by det(g)
and stays division-free.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import FieldElement


class StructureError(ValueError):
    """Bad indices, mismatched parents, or a singular basis-change matrix."""


def _flat(i: int, j: int, k: int) -> int:
    if not (1 <= i <= 3 and 1 <= j <= 3 and 1 <= k <= 3):
        raise StructureError(f"indices out of range: {(i, j, k)}")
    return 9 * (i - 1) + 3 * (j - 1) + (k - 1)


def _unflat(n: int) -> tuple:
    return n // 9 + 1, (n // 3) % 3 + 1, n % 3 + 1


_SCALARS = (int, Fraction, FieldElement)


class StructureVector:
    """The 27 structure coefficients of one bilinear product on k^3."""

    __slots__ = ("parent", "coeffs")

    def __init__(self, parent, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != 27:
            raise StructureError("a structure vector has exactly 27 coefficients")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("StructureVector is immutable")

    @classmethod
    def zero(cls, parent) -> "StructureVector":
        z = parent.zero()
        return cls(parent, (z,) * 27)

    @classmethod
    def from_terms(cls, parent, terms) -> "StructureVector":
        """Build from an iterable of (i, j, k, coefficient); entries add up."""
        out = [parent.zero()] * 27
        for i, j, k, c in terms:
            c = parent.element(c)
            n = _flat(i, j, k)
            out[n] = out[n] + c
        return cls(parent, out)

    def __getitem__(self, ijk):
        i, j, k = ijk
        return self.coeffs[_flat(i, j, k)]

    def terms(self):
        """Yield (i, j, k, coefficient) over the nonzero coefficients."""
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                i, j, k = _unflat(n)
                yield i, j, k, c

    def support(self) -> tuple:
        return tuple((i, j, k) for i, j, k, _ in self.terms())

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def _peer(self, other):
        if not isinstance(other, StructureVector):
            raise StructureError("expected a structure vector")
        if other.parent != self.parent:
            raise StructureError("structure vectors over different scalars")
        return other

    def __add__(self, other):
        o = self._peer(other)
        return StructureVector(self.parent,
                               tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    def __sub__(self, other):
        o = self._peer(other)
        return StructureVector(self.parent,
                               tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __neg__(self):
        return StructureVector(self.parent, tuple(-a for a in self.coeffs))

    def scale(self, c) -> "StructureVector":
        c = self.parent.element(c)
        return StructureVector(self.parent, tuple(c * a for a in self.coeffs))

    def __eq__(self, other):
        if not isinstance(other, StructureVector):
            return NotImplemented
        return self.parent == other.parent and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.parent, self.coeffs))

    def product(self, x, y) -> list:
        """Coordinates of x * y for coordinate triples x and y."""
        parent = self.parent
        x = [parent.element(v) for v in x]
        y = [parent.element(v) for v in y]
        out = [parent.zero()] * 3
        for i, j, k, c in self.terms():
            out[k - 1] = out[k - 1] + c * x[i - 1] * y[j - 1]
        return out

    def lift(self, new_parent) -> "StructureVector":
        """Reinterpret the coefficients inside a larger scalar domain."""
        return StructureVector(new_parent,
                               tuple(new_parent.element(c) for c in self.coeffs))

    def map_scalars(self, fn, new_parent) -> "StructureVector":
        return StructureVector(new_parent, tuple(fn(c) for c in self.coeffs))

    def __str__(self):
        parts = []
        for i, j, k, c in self.terms():
            sym = f"{i}{j}{k}"
            text = _render_scalar(c)
            if text == "1":
                parts.append(sym)
            elif text == "-1":
                parts.append("-" + sym)
            else:
                if any(ch in text[1:] for ch in "+-") or "/" in text:
                    text = f"({text})"
                parts.append(f"{text}*{sym}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    __repr__ = __str__


def _render_scalar(c) -> str:
    return repr(c) if isinstance(c, FieldElement) else str(c)


def basis_vector(parent, i: int, j: int, k: int) -> StructureVector:
    """The tuple with a single 1 at position (i, j, k): e_i e_j = e_k."""
    out = [parent.zero()] * 27
    out[_flat(i, j, k)] = parent.one()
    return StructureVector(parent, out)


class Matrix3:
    """A 3x3 matrix over the same scalar domains as StructureVector."""

    __slots__ = ("parent", "entries")

    def __init__(self, parent, entries):
        entries = tuple(entries)
        if len(entries) != 9:
            raise StructureError("a 3x3 matrix has nine entries")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix3 is immutable")

    @classmethod
    def from_rows(cls, parent, rows) -> "Matrix3":
        rows = list(rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise StructureError("expected three rows of three entries")
        return cls(parent, tuple(parent.element(v) for row in rows for v in row))

    @classmethod
    def from_columns(cls, parent, cols) -> "Matrix3":
        cols = [list(c) for c in cols]
        if len(cols) != 3 or any(len(c) != 3 for c in cols):
            raise StructureError("expected three columns of three entries")
        rows = [[cols[j][i] for j in range(3)] for i in range(3)]
        return cls.from_rows(parent, rows)

    @classmethod
    def identity(cls, parent) -> "Matrix3":
        z, o = parent.zero(), parent.one()
        return cls(parent, (o, z, z, z, o, z, z, z, o))

    @classmethod
    def diagonal(cls, parent, d1, d2, d3) -> "Matrix3":
        z = parent.zero()
        d1, d2, d3 = (parent.element(v) for v in (d1, d2, d3))
        return cls(parent, (d1, z, z, z, d2, z, z, z, d3))

    def entry(self, i: int, j: int):
        """1-based access: row i, column j."""
        if not (1 <= i <= 3 and 1 <= j <= 3):
            raise StructureError(f"entry index out of range: {(i, j)}")
        return self.entries[3 * (i - 1) + (j - 1)]

    def rows(self) -> list:
        return [list(self.entries[3 * r:3 * r + 3]) for r in range(3)]

    def column(self, j: int) -> list:
        return [self.entry(i, j) for i in (1, 2, 3)]

    def transpose(self) -> "Matrix3":
        e = self.entries
        return Matrix3(self.parent,
                       (e[0], e[3], e[6], e[1], e[4], e[7], e[2], e[5], e[8]))

    def det(self):
        a, b, c, d, e, f, g, h, i = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def adjugate(self) -> "Matrix3":
        a, b, c, d, e, f, g, h, i = self.entries
        return Matrix3(self.parent, (
            e * i - f * h, c * h - b * i, b * f - c * e,
            f * g - d * i, a * i - c * g, c * d - a * f,
            d * h - e * g, b * g - a * h, a * e - b * d,
        ))

    def inverse(self) -> "Matrix3":
        d = self.det()
        if d.is_zero():
            raise StructureError("matrix is singular")
        if not hasattr(d, "inverse"):
            raise StructureError(
                "entries do not support division; use the adjugate route")
        di = d.inverse()
        adj = self.adjugate()
        return Matrix3(self.parent, tuple(di * v for v in adj.entries))

    def __matmul__(self, other):
        if not isinstance(other, Matrix3) or other.parent != self.parent:
            raise StructureError("matrix product needs matching scalar domains")
        out = []
        for i in (1, 2, 3):
            for j in (1, 2, 3):
                s = self.parent.zero()
                for k in (1, 2, 3):
                    s = s + self.entry(i, k) * other.entry(k, j)
                out.append(s)
        return Matrix3(self.parent, out)

    def apply(self, v) -> list:
        """Matrix times coordinate column."""
        v = [self.parent.element(x) for x in v]
        return [sum((self.entry(i, j + 1) * v[j] for j in range(3)),
                    self.parent.zero()) for i in (1, 2, 3)]

    def scale(self, c) -> "Matrix3":
        c = self.parent.element(c)
        return Matrix3(self.parent, tuple(c * v for v in self.entries))

    def map_scalars(self, fn, new_parent) -> "Matrix3":
        return Matrix3(new_parent, tuple(fn(v) for v in self.entries))

    def lift(self, new_parent) -> "Matrix3":
        return Matrix3(new_parent, tuple(new_parent.element(v) for v in self.entries))

    def __eq__(self, other):
        if not isinstance(other, Matrix3):
            return NotImplemented
        return self.parent == other.parent and self.entries == other.entries

    def __hash__(self):
        return hash((self.parent, self.entries))

    def __repr__(self):
        rows = ["[" + ", ".join(_render_scalar(v) for v in r) + "]"
                for r in self.rows()]
        return "[" + ", ".join(rows) + "]"


def _act_with(vec: StructureVector, g: Matrix3, h: Matrix3) -> StructureVector:
    """Common core of act/act_cleared: h plays the role of g^-1 or adj(g).

    New coefficient (a, b, c) of the moved structure:

        sum over (i, j, k) of  c[i,j,k] * g[i,a] * g[j,b] * h[c,k] .
    """
    parent = vec.parent
    out = [parent.zero()] * 27
    for i, j, k, coef in vec.terms():
        for a in (1, 2, 3):
            gia = g.entry(i, a)
            if gia.is_zero():
                continue
            ca = coef * gia
            for b in (1, 2, 3):
                gjb = g.entry(j, b)
                if gjb.is_zero():
                    continue
                cab = ca * gjb
                for c in (1, 2, 3):
                    hck = h.entry(c, k)
                    if hck.is_zero():
                        continue
                    n = _flat(a, b, c)
                    out[n] = out[n] + cab * hck
    return StructureVector(parent, out)


def act(vec: StructureVector, g: Matrix3) -> StructureVector:
    """Right action of the basis change g on a structure vector.

    Column j of g holds the coordinates of the new basis vector v_j in the
    old basis; the result is the structure tuple of the same product written
    in the new basis.  The vector is lifted into g's scalar domain when the
    domains differ (a plain field vector moved by a matrix of rational
    functions in t, for instance).
    """
    if vec.parent != g.parent:
        vec = vec.lift(g.parent)
    return _act_with(vec, g, g.inverse())


def act_cleared(vec: StructureVector, g: Matrix3) -> tuple:
    """Division-free variant: returns (det(g) * (vec acted by g), det(g)).

    Because adj(g) = det(g) * g^-1, replacing the inverse by the adjugate
    multiplies every coefficient of the result by det(g).  This keeps all
    arithmetic inside a polynomial ring, which is what the identity checks
    behind the non-degeneration lemmas need.
    """
    if vec.parent != g.parent:
        vec = vec.lift(g.parent)
    return _act_with(vec, g, g.adjugate()), g.det()
