"""Divisors cut out by vertical lines on hyperelliptic models and by lines on quartics.

Points are grouped into places; a place of degree d is described by the
minimal polynomial (over the coefficient field) of a coordinate.  Factoring
over QQ(sqrt D) uses sympy.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any

import sympy

from ..errors import TeichError
from ..exactfield import QQ, Field, Matrix, MultiPoly, QuadElement, QuadraticField, UniPoly
from ..modulardata.serialize import to_jsonable
from .singular import PlaneCurveModel, homogenize


class LineInCurveError(TeichError):
    pass


@dataclass
class Place:
    degree: int
    multiplicity: int
    description: dict

    def to_dict(self) -> dict:
        return to_jsonable({"degree": self.degree, "multiplicity": self.multiplicity, **self.description})


@dataclass
class Divisor:
    field: Field
    places: list[Place] = dc_field(default_factory=list)

    @property
    def degree(self) -> int:
        return sum(p.degree * p.multiplicity for p in self.places)

    def to_dict(self) -> dict:
        return {"field": self.field.descriptor(), "degree": self.degree,
                "places": [p.to_dict() for p in self.places]}


def hyperelliptic_vertical_divisor(model: PlaneCurveModel, x0: Any) -> Divisor:
    """The fiber of x over x0 on y^2 + h y + f = 0 (degree 2)."""
    if model.f is None:
        raise TeichError("expected a hyperelliptic model")
    K = model.f.field
    x0 = K(x0)
    h0 = model.h(x0) if model.h is not None else K.zero
    f0 = model.f(x0)
    delta = h0 * h0 - f0 * 4
    half = K.one / 2
    if not delta:
        return Divisor(K, [Place(1, 2, {"x": x0, "y": -h0 * half})])
    r = K.sqrt(delta)
    if r is not None:
        return Divisor(K, [Place(1, 1, {"x": x0, "y": (-h0 + r) * half}),
                           Place(1, 1, {"x": x0, "y": (-h0 - r) * half})])
    return Divisor(K, [Place(2, 1, {"x": x0, "y_minpoly": [f0, h0, K.one]})])


def form_zero_divisor(model: PlaneCurveModel, linear: UniPoly) -> Divisor:
    """Zeros of (c1 x + c0) dx/y on a genus-two model with deg(h^2 - 4f) = 6.

    dx/y has no zeros in the affine part there, so the zeros are the fiber
    over the root of the linear factor.
    """
    if linear.degree != 1:
        raise ValueError("expected a linear polynomial in x")
    q = (model.h * model.h if model.h is not None else model.f * 0) - model.f * 4
    if q.degree != 6:
        raise TeichError("form divisors are computed for sextic models only")
    x0 = -linear.coeff(0) / linear.coeff(1)
    return hyperelliptic_vertical_divisor(model, x0)


def _to_sympy(c: Any, D: int | None) -> sympy.Expr:
    if isinstance(c, QuadElement):
        return sympy.Rational(c.u.numerator, c.u.denominator) + \
            sympy.Rational(c.v.numerator, c.v.denominator) * sympy.sqrt(c.D)
    c = QQ(c)
    return sympy.Rational(c.numerator, c.denominator)


def line_quartic_intersection(g: MultiPoly, line: MultiPoly) -> Divisor:
    """Intersection divisor of the projective closure of g = 0 with a line aX + bY + cZ = 0."""
    K = line.field if isinstance(line.field, QuadraticField) else g.field
    G = homogenize(g)
    if G.field != K:
        G = G.map_coeffs(K, K)
    if line.field != K:
        line = line.map_coeffs(K, K)
    if line.total_degree() != 1 or any(sum(e) != 1 for e in line.terms):
        raise ValueError("line must be a linear form in X, Y, Z")
    abc = [line.terms.get(tuple(1 if i == j else 0 for i in range(3)), K.zero) for j in range(3)]
    P1, P2 = Matrix([abc], K).nullspace()
    s, t = sympy.symbols("s t")
    D = K.D if isinstance(K, QuadraticField) else None
    pts = [_to_sympy(P1[i], D) * s + _to_sympy(P2[i], D) * t for i in range(3)]
    expr = sympy.Integer(0)
    for e, c in G.terms.items():
        expr += _to_sympy(c, D) * pts[0] ** e[0] * pts[1] ** e[1] * pts[2] ** e[2]
    form = sympy.Poly(sympy.expand(expr), s, t)
    if form.is_zero:
        raise LineInCurveError("line contained in curve")
    n = G.total_degree()
    uni = sympy.Poly(form.as_expr().subs(t, 1), s)
    at_inf = n - uni.degree()
    kw = {"extension": sympy.sqrt(D)} if D else {}
    _, factors = sympy.factor_list(uni.as_expr(), s, **kw)
    places = []
    for fac, mult in factors:
        fp = sympy.Poly(fac, s)
        fp = sympy.Poly(fp.as_expr() / fp.LC(), s)
        desc = {"parameter_minpoly": str(fp.as_expr()), "basis": [list(P1), list(P2)]}
        if fp.degree() == 1:
            root = sympy.solve(fp.as_expr(), s)[0]
            desc["point"] = [str(sympy.nsimplify(sympy.simplify(c.subs({s: root, t: 1})))) for c in pts]
        places.append(Place(fp.degree(), int(mult), desc))
    if at_inf:
        places.append(Place(1, at_inf, {"parameter_minpoly": "t", "basis": [list(P1), list(P2)],
                                        "point": [str(c.subs({s: 1, t: 0})) for c in pts]}))
    return Divisor(K, places)
