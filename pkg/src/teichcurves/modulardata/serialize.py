"""JSON encoding of exact values.  Rationals are always ``"num/den"`` strings."""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from ..errors import DataFormatError
from ..exactfield import (QQ, Field, FpElement, Matrix, MultiPoly, QuadElement, QuadraticField,
                          RationalFunction, RationalFunctionField, UniPoly, format_rational,
                          parse_rational)

POLY_KEYS = {"vars", "field", "terms"}


def field_to_json(field: Field) -> dict:
    return field.descriptor()


def field_from_json(d: dict) -> Field:
    kind = d.get("field")
    if kind == "QQ":
        return QQ
    if kind == "QQ(sqrt D)":
        return QuadraticField(int(d["D"]))
    if kind == "K(t)":
        return RationalFunctionField(field_from_json(d["base"]), d.get("var", "t"))
    raise DataFormatError(f"unknown field descriptor {d!r}")


def rational_from_json(s: Any, where: str = "") -> Fraction:
    if isinstance(s, float) or isinstance(s, bool):
        raise DataFormatError("floats are not allowed; use \"num/den\" strings", where)
    try:
        return parse_rational(s)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise DataFormatError(f"bad rational {s!r}: {exc}", where) from None


def coeff_to_json(c: Any) -> dict:
    if isinstance(c, QuadElement):
        return {"u": format_rational(c.u), "v": format_rational(c.v)}
    return {"u": format_rational(Fraction(c)), "v": "0"}


def coeff_from_json(d: Any, field: Field, where: str = "") -> Any:
    if not isinstance(d, dict) or "u" not in d:
        raise DataFormatError("coefficient must be an object with keys u, v", where)
    u = rational_from_json(d["u"], where)
    v = rational_from_json(d.get("v", "0"), where)
    if v and not isinstance(field, QuadraticField):
        raise DataFormatError("sqrt(D) part in a rational polynomial", where)
    return field((u, v)) if isinstance(field, QuadraticField) else field(u)


def poly_to_json(p: MultiPoly | UniPoly) -> dict:
    if isinstance(p, UniPoly):
        p = MultiPoly.from_unipoly(p, 0, (p.var,))
    return {
        "vars": list(p.names),
        "field": field_to_json(p.field),
        "terms": [{"exponents": list(e), "coeff": coeff_to_json(c)} for e, c in p.sorted_terms()],
    }


def poly_from_json(d: Any, where: str = "") -> MultiPoly:
    if not isinstance(d, dict) or not POLY_KEYS <= set(d):
        raise DataFormatError(f"polynomial needs keys {sorted(POLY_KEYS)}", where)
    names = tuple(d["vars"])
    field = field_from_json(d["field"])
    terms = {}
    for k, t in enumerate(d["terms"]):
        loc = f"{where}/terms[{k}]"
        exps = t.get("exponents") if isinstance(t, dict) else None
        if not isinstance(exps, list) or len(exps) != len(names) or \
                not all(isinstance(x, int) and x >= 0 for x in exps):
            raise DataFormatError("bad exponent vector", loc)
        e = tuple(exps)
        if e in terms:
            raise DataFormatError("repeated exponent vector", loc)
        c = coeff_from_json(t.get("coeff"), field, loc)
        if not c:
            raise DataFormatError("stored zero coefficient", loc)
        terms[e] = c
    return MultiPoly(terms, names, field, _raw=True)


def unipoly_from_json(d: Any, where: str = "") -> UniPoly:
    p = poly_from_json(d, where)
    if p.nvars != 1:
        raise DataFormatError("expected a univariate polynomial", where)
    return p.to_unipoly(0)


def ratfunc_to_json(f: RationalFunction) -> dict:
    return {"num": poly_to_json(f.num), "den": poly_to_json(f.den)}


def ratfunc_from_json(d: Any, K: RationalFunctionField, where: str = "") -> RationalFunction:
    if not isinstance(d, dict) or "num" not in d:
        raise DataFormatError("rational function needs num/den", where)
    num = unipoly_from_json(d["num"], where + "/num")
    den = unipoly_from_json(d["den"], where + "/den") if "den" in d else UniPoly([1], K.base, K.var)
    return K.fraction(num, den)


def to_jsonable(x: Any) -> Any:
    """Best-effort exact encoding of nested results for reports."""
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, QuadElement):
        return coeff_to_json(x)
    if isinstance(x, FpElement):
        return {"residue": x.n, "p": x.p}
    if isinstance(x, RationalFunction):
        return {"num": repr(x.num), "den": repr(x.den)}
    if isinstance(x, (UniPoly, MultiPoly)):
        return repr(x)
    if isinstance(x, Matrix):
        return [[to_jsonable(v) for v in row] for row in x.rows]
    if isinstance(x, Field):
        return x.descriptor()
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        seq = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [to_jsonable(v) for v in seq]
    if hasattr(x, "to_dict"):
        return to_jsonable(x.to_dict())
    if isinstance(x, float):
        raise TypeError("floating point value in exact output")
    return repr(x)
