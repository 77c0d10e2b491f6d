"""Sparse multivariate polynomials and univariate rational functions.

Coefficients live in any field from the tower.  Multivariate division is
deliberately absent: identity checks clear denominators first and then test
for the zero polynomial.  Only the univariate case (curves in t) carries a
fraction field, with gcd reduction and a monic denominator as the canonical
form.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import Field, FieldElement, FieldError


class PolyRingError(ArithmeticError):
    """Mixed registries, bad variable names, and similar structural misuse."""


class PoleAtZero(ArithmeticError):
    """The rational function has a pole at t = 0."""


class PolyRing:
    """Polynomials in a fixed ordered tuple of variables over one field."""

    def __init__(self, field: Field, variables):
        self.field = field
        self.vars = tuple(variables)
        if len(set(self.vars)) != len(self.vars):
            raise PolyRingError("duplicate variable names")

    def var(self, name: str) -> "MultiPoly":
        if name not in self.vars:
            raise PolyRingError(f"unknown variable {name!r}")
        exp = tuple(1 if v == name else 0 for v in self.vars)
        return MultiPoly(self, {exp: self.field.one()})

    def gens(self):
        return tuple(self.var(v) for v in self.vars)

    def const(self, c) -> "MultiPoly":
        if isinstance(c, FieldElement) and c.field == self.field:
            pass
        elif isinstance(c, RationalFunction) and c.parent == self.field:
            pass
        else:
            c = self.field.element(c)
        if c.is_zero():
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * len(self.vars): c})

    def element(self, v) -> "MultiPoly":
        """Coerce v (polynomial, field element, int, Fraction) into this ring."""
        if isinstance(v, MultiPoly):
            if v.ring != self:
                raise PolyRingError("polynomial from a different ring")
            return v
        return self.const(v)

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.const(self.field.one())

    def from_int(self, m: int) -> "MultiPoly":
        return self.const(self.field.from_int(m))

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.field == self.field
                and other.vars == self.vars)

    def __hash__(self):
        return hash((self.field, self.vars))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.vars)}]"


class MultiPoly:
    """A sparse polynomial: a map from exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    def _peer(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise PolyRingError("polynomials from different rings")
            return other
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.ring.const(other)
        return None

    def __add__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            s = terms.get(e)
            terms[e] = c if s is None else s + c
        return MultiPoly(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = terms.get(e)
                terms[e] = c if s is None else s + c
        return MultiPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise PolyRingError("polynomial powers must be nonnegative integers")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def evaluate(self, assignment: dict) -> FieldElement:
        """Evaluate at a full assignment mapping variable names to elements."""
        field = self.ring.field
        point = []
        for v in self.ring.vars:
            if v not in assignment:
                raise PolyRingError(f"no value for variable {v!r}")
            x = assignment[v]
            x = field.element(x) if not isinstance(x, FieldElement) else x
            if x.field != field:
                raise PolyRingError("evaluation point from a different field")
            point.append(x)
        out = field.zero()
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                for _ in range(k):
                    term = term * x
            out = out + term
        return out

    def map_coefficients(self, fn, new_ring: PolyRing) -> "MultiPoly":
        return MultiPoly(new_ring, {e: fn(c) for e, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            text = repr(c)
            monos = []
            for v, k in zip(self.ring.vars, e):
                if k == 1:
                    monos.append(v)
                elif k > 1:
                    monos.append(f"{v}^{k}")
            if monos:
                mono = "*".join(monos)
                if text == "1":
                    text = mono
                elif text == "-1":
                    text = "-" + mono
                else:
                    text = text + "*" + mono
            parts.append(text)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    __repr__ = __str__


# -- univariate helpers ------------------------------------------------------


def _require_univariate(p: MultiPoly):
    if len(p.ring.vars) != 1:
        raise PolyRingError("operation requires a univariate polynomial")


def dense_coefficients(p: MultiPoly) -> list:
    """Ascending coefficient list of a univariate polynomial."""
    _require_univariate(p)
    zero = p.ring.field.zero()
    if not p.terms:
        return []
    n = max(e[0] for e in p.terms)
    out = [zero] * (n + 1)
    for e, c in p.terms.items():
        out[e[0]] = c
    return out

def from_dense(ring: PolyRing, coeffs) -> MultiPoly:
    if len(ring.vars) != 1:
        raise PolyRingError("from_dense needs a univariate ring")
    return MultiPoly(ring, {(i,): c for i, c in enumerate(coeffs)})


def poly_gcd(a: MultiPoly, b: MultiPoly) -> MultiPoly:
    """Monic gcd of two univariate polynomials over a field."""
    _require_univariate(a)
    if a.ring != b.ring:
        raise PolyRingError("polynomials from different rings")
    ra, rb = dense_coefficients(a), dense_coefficients(b)
    zero = a.ring.field.zero()
    while rb:
        ra, rb = rb, _dense_mod(ra, rb, zero)
    if not ra:
        return a.ring.zero()
    lead = ra[-1].inverse()
    return from_dense(a.ring, [c * lead for c in ra])


def _dense_mod(a, b, zero):
    a = list(a)
    inv_lead = b[-1].inverse()
    while len(a) >= len(b):
        c = a[-1] * inv_lead
        d = len(a) - len(b)
        for i, y in enumerate(b):
            a[d + i] = a[d + i] - c * y
        while a and a[-1].is_zero():
            a.pop()
        if not a:
            break
    return a


def _dense_exact_div(a, b, zero):
    """Quotient of univariate dense lists assuming the division is exact."""
    q = []
    a = list(a)
    inv_lead = b[-1].inverse()
    while len(a) >= len(b):
        c = a[-1] * inv_lead
        d = len(a) - len(b)
        q.append((d, c))
        for i, y in enumerate(b):
            a[d + i] = a[d + i] - c * y
        while a and a[-1].is_zero():
            a.pop()
    if a:
        raise PolyRingError("division was not exact")
    out = [zero] * (1 + max(d for d, _ in q)) if q else []
    for d, c in q:
        out[d] = out[d] + c
    return out


def t_valuation(p: MultiPoly):
    """Order of vanishing at 0 of a univariate polynomial (None for 0)."""
    _require_univariate(p)
    if not p.terms:
        return None
    return min(e[0] for e in p.terms)


class RationalFunctionField:
    """The fraction field of a univariate polynomial ring."""

    def __init__(self, field: Field, varname: str = "t"):
        self.field = field
        self.varname = varname
        self.char = field.char
        self.ring = PolyRing(field, (varname,))

    def element(self, num, den=None) -> "RationalFunction":
        if isinstance(num, RationalFunction) and den is None:
            if num.parent != self:
                raise PolyRingError("rational function from a different field")
            return num
        num = self._as_poly(num)
        den = self.ring.one() if den is None else self._as_poly(den)
        return RationalFunction._make(self, num, den)

    def _as_poly(self, v) -> MultiPoly:
        if isinstance(v, RationalFunction):
            raise PolyRingError("got a rational function where a polynomial fits")
        if isinstance(v, MultiPoly):
            if v.ring != self.ring:
                raise PolyRingError("polynomial from a different ring")
            return v
        return self.ring.const(v)

    def const(self, c) -> "RationalFunction":
        return self.element(self.ring.const(c))

    def zero(self) -> "RationalFunction":
        return self.element(self.ring.zero())

    def one(self) -> "RationalFunction":
        return self.element(self.ring.one())

    def from_int(self, m: int) -> "RationalFunction":
        return self.element(self.ring.from_int(m))

    def gen(self) -> "RationalFunction":
        return self.element(self.ring.var(self.varname))

    def __eq__(self, other):
        return (isinstance(other, RationalFunctionField)
                and other.field == self.field and other.varname == self.varname)

    def __hash__(self):
        return hash((self.field, self.varname, "rff"))

    def __repr__(self):
        return f"{self.field!r}({self.varname})"


class RationalFunction:
    """num/den in canonical form: gcd-reduced with a monic denominator."""

    __slots__ = ("parent", "num", "den")

    def __init__(self, parent, num, den):
        self.parent = parent
        self.num = num
        self.den = den

    @classmethod
    def _make(cls, parent: RationalFunctionField, num: MultiPoly, den: MultiPoly):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            return cls(parent, parent.ring.zero(), parent.ring.one())
        g = poly_gcd(num, den)
        zero = parent.field.zero()
        if g.degree() > 0:
            gn = dense_coefficients(g)
            num = from_dense(parent.ring, _dense_exact_div(dense_coefficients(num), gn, zero))
            den = from_dense(parent.ring, _dense_exact_div(dense_coefficients(den), gn, zero))
        dl = dense_coefficients(den)[-1]
        if dl != parent.field.one():
            inv = dl.inverse()
            num = num * inv
            den = den * inv
        return cls(parent, num, den)

    def _peer(self, other):
        if isinstance(other, RationalFunction):
            if other.parent != self.parent:
                raise PolyRingError("rational functions from different fields")
            return other
        if isinstance(other, MultiPoly):
            return self.parent.element(other)
        if isinstance(other, (int, Fraction, FieldElement)):
            return self.parent.const(other)
        return None

    def __add__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return RationalFunction._make(
            self.parent, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(self.parent, -self.num, self.den)

    def __sub__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return RationalFunction._make(self.parent, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero():
            raise ZeroDivisionError("inverse of the zero function")
        return RationalFunction._make(self.parent, self.den, self.num)

    def __truediv__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        out = self.parent.one()
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        o = self._peer(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.parent, frozenset(self.num.terms.items()),
                     frozenset(self.den.terms.items())))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def evaluate(self, x: FieldElement) -> FieldElement:
        name = self.parent.varname
        d = self.den.evaluate({name: x})
        if d.is_zero():
            raise ZeroDivisionError(f"denominator vanishes at {x!r}")
        return self.num.evaluate({name: x}) / d

    def __str__(self):
        if self.den == self.parent.ring.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def limit_at_zero(r: RationalFunction) -> FieldElement:
    """The value of r at t = 0, raising PoleAtZero when none exists."""
    zero = r.parent.field.zero()
    dv = t_valuation(r.den)
    if dv == 0:
        return r.evaluate(zero)
    # canonical form: num and den share no factor, so t divides at most one
    raise PoleAtZero(f"pole of order {dv} at 0 in {r}")
