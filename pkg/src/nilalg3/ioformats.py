"""Parsing and rendering for the CLI's external formats.

Scalars are exact: integers ("-3"), fractions ("3/2"), and extension
elements written against the named generators ("2+3w", "1+w^2").  Polynomials
in t use the same scalar syntax for coefficients, with the fraction binding
tightly to the coefficient: "3/2t" means (3/2)*t, never 3/(2t); compound
extension coefficients must be parenthesized, as in "(1+w)t^2".

Field descriptors, structure vectors, and curve witnesses travel as JSON:

    field    {"char": 7}  or  {"char": 2, "ext": {"name": "w", "min_poly": [1, 1, 1]}}
    vector   {"field": {...}, "entries": [{"i": 2, "j": 3, "k": 1, "c": "1"}]}
    witness  {"src": "a3(2)", "dst": "l1", "char": 0,
              "matrix": [["-t", "0", "0"], ["0", "1", "0"], ["0", "-1", "t"]],
              "up_to_iso": false}

min_poly lists are constant-first.  Algebra ids are written a0, c1, c3, l1,
c5, a(C), h(C), a3(C), rho, chat3, a2 with C a scalar.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .catalogue import AlgebraId, CatalogueError
from .degeneration import CurveWitness
from .fields import (Field, FieldElement, PrimeField, RATIONALS,
                     SimpleExtension)
from .polyring import RationalFunctionField
from .structspace import Matrix3, StructureVector

_PRIMES_OK = (2, 3, 5, 7, 11, 13)


class FormatError(ValueError):
    """Malformed field descriptor, scalar, polynomial, id, or JSON payload."""


# -- fields -------------------------------------------------------------------


def parse_field(desc) -> Field:
    if isinstance(desc, str):
        desc = _load_json(desc)
    if not isinstance(desc, dict) or "char" not in desc:
        raise FormatError("field descriptor must be an object with 'char'")
    char = desc["char"]
    if not isinstance(char, int) or char < 0:
        raise FormatError(f"bad characteristic {char!r}")
    if char == 0:
        base = RATIONALS
    elif char in _PRIMES_OK:
        base = PrimeField(char)
    else:
        raise FormatError(f"characteristic {char} is not supported")
    ext = desc.get("ext")
    if ext is None:
        return base
    if not isinstance(ext, dict) or "name" not in ext or "min_poly" not in ext:
        raise FormatError("'ext' needs 'name' and 'min_poly'")
    minpoly = ext["min_poly"]
    if (not isinstance(minpoly, list) or len(minpoly) < 3
            or not all(isinstance(c, int) for c in minpoly)):
        raise FormatError("'min_poly' must be a constant-first list of "
                          "integers of degree >= 2")
    try:
        return SimpleExtension(base, minpoly, str(ext["name"]))
    except Exception as exc:
        raise FormatError(f"bad extension: {exc}") from exc


def describe_field(field: Field) -> dict:
    if isinstance(field, SimpleExtension):
        inner = describe_field(field.base)
        if "ext" in inner:
            raise FormatError("nested extensions have no JSON form")
        inner["ext"] = {"name": field.name,
                        "min_poly": [_as_int(c) for c in field.minpoly]}
        return inner
    return {"char": field.char}


def _as_int(c) -> int:
    rep = c.rep if isinstance(c, FieldElement) else c
    if isinstance(rep, Fraction) and rep.denominator == 1:
        return int(rep)
    if isinstance(rep, int):
        return rep
    raise FormatError(f"coefficient {c!r} has no integer form")


# -- scalars ------------------------------------------------------------------


_TERM_RE = re.compile(
    r"^(?P<num>\d+(?:/\d+)?)?(?:(?P<name>[A-Za-z]\w*)(?:\^(?P<exp>\d+))?)?$")


def _generator_table(field: Field) -> dict:
    names = {}
    level = field
    while isinstance(level, SimpleExtension):
        names[level.name] = field.embed(level.generator())
        level = level.base
    return names


def _split_signed_terms(text: str):
    text = text.replace(" ", "")
    if not text:
        raise FormatError("empty scalar")
    out = []
    sign = 1
    buf = []
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise FormatError(f"unbalanced parentheses in {text!r}")
        if ch in "+-" and depth == 0 and i > 0 and text[i - 1] not in "+-(":
            out.append((sign, "".join(buf)))
            buf = []
            sign = 1 if ch == "+" else -1
            continue
        if ch in "+-" and depth == 0 and i == 0:
            sign = 1 if ch == "+" else -1
            continue
        buf.append(ch)
    if depth != 0:
        raise FormatError(f"unbalanced parentheses in {text!r}")
    out.append((sign, "".join(buf)))
    return out


def parse_scalar(text: str, field: Field) -> FieldElement:
    if isinstance(text, int):
        return field.from_int(text)
    if not isinstance(text, str):
        raise FormatError(f"scalar must be text, got {text!r}")
    gens = _generator_table(field)
    total = field.zero()
    for sign, term in _split_signed_terms(text):
        m = _TERM_RE.match(term)
        if not m or (m.group("num") is None and m.group("name") is None):
            raise FormatError(f"bad scalar term {term!r} in {text!r}")
        value = field.element(Fraction(m.group("num"))) if m.group("num") \
            else field.one()
        name = m.group("name")
        if name is not None:
            if name not in gens:
                raise FormatError(
                    f"unknown generator {name!r} over {field!r}")
            value = value * gens[name] ** int(m.group("exp") or 1)
        total = total + (value if sign > 0 else -value)
    return total


def render_scalar(x: FieldElement) -> str:
    return repr(x)


# -- polynomials in t ----------------------------------------------------------


_POLY_TERM_RE = re.compile(
    r"^(?P<coef>\d+(?:/\d+)?|\((?P<paren>[^()]*)\))?\*?"
    r"(?P<t>t(?:\^(?P<exp>\d+))?)?$")


def parse_poly_in_t(text: str, rff: RationalFunctionField):
    """A polynomial entry of a curve matrix, as a rational function."""
    if isinstance(text, int):
        return rff.from_int(text)
    if not isinstance(text, str):
        raise FormatError(f"polynomial must be text, got {text!r}")
    t = rff.gen()
    total = rff.zero()
    for sign, term in _split_signed_terms(text):
        m = _POLY_TERM_RE.match(term)
        if not m or (m.group("coef") is None and m.group("t") is None):
            raise FormatError(f"bad polynomial term {term!r} in {text!r}")
        coef = m.group("coef")
        if coef is None:
            value = rff.one()
        elif m.group("paren") is not None:
            value = rff.const(parse_scalar(m.group("paren"), rff.field))
        else:
            value = rff.const(rff.field.element(Fraction(coef)))
        if m.group("t"):
            value = value * t ** int(m.group("exp") or 1)
        total = total + (value if sign > 0 else -value)
    return total


# -- algebra ids ---------------------------------------------------------------


_ID_RE = re.compile(r"^(?P<tag>a0|c1|c3|l1|c5|a3|a|h|rho|chat3|a2)"
                    r"(?:\((?P<param>[^()]*)\))?$")


def parse_algebra_id(text: str, field: Field) -> AlgebraId:
    if not isinstance(text, str):
        raise FormatError(f"algebra id must be text, got {text!r}")
    m = _ID_RE.match(text.strip())
    if not m:
        raise FormatError(f"unrecognised algebra id {text!r}")
    tag, param = m.group("tag"), m.group("param")
    try:
        if param is None:
            return AlgebraId(tag)
        return AlgebraId(tag, parse_scalar(param, field))
    except CatalogueError as exc:
        raise FormatError(str(exc)) from exc


def render_algebra_id(ident: AlgebraId) -> str:
    return str(ident)


# -- vectors and witnesses ------------------------------------------------------


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def parse_vector(payload) -> StructureVector:
    if isinstance(payload, str):
        payload = _load_json(payload)
    if not isinstance(payload, dict) or "entries" not in payload:
        raise FormatError("vector payload must be an object with 'entries'")
    field = parse_field(payload.get("field", {"char": 0}))
    terms = []
    for entry in payload["entries"]:
        if not isinstance(entry, dict) or not {"i", "j", "k", "c"} <= set(entry):
            raise FormatError(f"bad vector entry {entry!r}")
        i, j, k = entry["i"], entry["j"], entry["k"]
        if not all(isinstance(n, int) and 1 <= n <= 3 for n in (i, j, k)):
            raise FormatError(f"indices out of range in {entry!r}")
        terms.append((i, j, k, parse_scalar(entry["c"], field)))
    return StructureVector.from_terms(field, terms)


def render_vector(vec: StructureVector) -> dict:
    entries = [{"i": i, "j": j, "k": k, "c": render_scalar(c)}
               for i, j, k, c in vec.terms()]
    payload = {"entries": entries}
    try:
        payload["field"] = describe_field(vec.parent)
    except (FormatError, AttributeError):
        pass
    return payload


def parse_matrix(payload, field: Field) -> Matrix3:
    if isinstance(payload, str):
        payload = _load_json(payload)
    if (not isinstance(payload, list) or len(payload) != 3
            or any(not isinstance(r, list) or len(r) != 3 for r in payload)):
        raise FormatError("matrix must be a 3x3 array")
    rows = [[parse_scalar(c, field) for c in row] for row in payload]
    return Matrix3.from_rows(field, rows)


def parse_witness(payload) -> CurveWitness:
    if isinstance(payload, str):
        payload = _load_json(payload)
    if not isinstance(payload, dict):
        raise FormatError("witness payload must be an object")
    missing = {"src", "dst", "matrix"} - set(payload)
    if missing:
        raise FormatError(f"witness payload lacks {sorted(missing)}")
    if "field" in payload:
        field = parse_field(payload["field"])
    else:
        field = parse_field({"char": payload.get("char", 0)})
    rff = RationalFunctionField(field, "t")
    src = parse_algebra_id(payload["src"], field)
    dst = parse_algebra_id(payload["dst"], field)
    mat = payload["matrix"]
    if (not isinstance(mat, list) or len(mat) != 3
            or any(not isinstance(r, list) or len(r) != 3 for r in mat)):
        raise FormatError("witness matrix must be a 3x3 array")
    rows = [[parse_poly_in_t(c, rff) for c in row] for row in mat]
    return CurveWitness(src, dst, Matrix3.from_rows(rff, rows),
                        up_to_iso=bool(payload.get("up_to_iso", False)),
                        note=str(payload.get("note", "")))


def render_witness(witness: CurveWitness) -> dict:
    field = witness.base_field
    payload = {
        "src": render_algebra_id(witness.src),
        "dst": render_algebra_id(witness.dst),
        "field": describe_field(field),
        "matrix": [[str(witness.matrix.entry(i, j)) for j in (1, 2, 3)]
                   for i in (1, 2, 3)],
    }
    if witness.up_to_iso:
        payload["up_to_iso"] = True
    if witness.note:
        payload["note"] = witness.note
    return payload
