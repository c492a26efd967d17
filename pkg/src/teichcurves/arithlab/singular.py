"""Primes of bad reduction for integral plane models.

Hyperelliptic models y^2 + h(x) y + f(x) = 0 use the discriminant of
h^2 - 4f.  Plane quartics are handled chart by chart: iterated resultants
give a finite candidate set, and each candidate p is decided by asking
whether (g, g_x, g_y) generates the unit ideal over F_p.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import reduce as _fold
from math import gcd
from typing import Any

from sympy import factorint

from ..errors import SingularModelError, TeichError
from ..exactfield import QQ, MultiPoly, QuadElement, QuadraticField, UniPoly, bareiss_det, discriminant, \
    interpolate, resultant
from ..modulardata.registry import DiscriminantRecord, check_discriminant, model_polynomial
from ..modulardata.serialize import unipoly_from_json
from . import ffpoly, groebner


def n_of_D(D: int) -> int:
    """N(D) = 2 D prod (D - e^2)/4 over e > 0, e = D mod 2, e^2 < D."""
    check_discriminant(D)
    out = 2 * D
    e = 2 - D % 2
    while e * e < D:
        out *= (D - e * e) // 4
        e += 2
    return out


def prime_support(n: int) -> list[int]:
    n = abs(int(n))
    if n == 0:
        raise ValueError("prime support of 0 is undefined")
    return sorted(int(q) for q in factorint(n))


class NonIntegralModelError(TeichError):
    pass


@dataclass
class PlaneCurveModel:
    kind: str  # hyperelliptic | conic | quartic
    g: MultiPoly
    h: UniPoly | None = None
    f: UniPoly | None = None

    @property
    def field(self):
        return self.g.field

    @classmethod
    def from_record(cls, rec: DiscriminantRecord) -> PlaneCurveModel:
        if not rec.model or rec.model.get("g") is None:
            raise TeichError(f"no plane model stored for D = {rec.D}")
        g = model_polynomial(rec)
        h = unipoly_from_json(rec.model["h"]) if "h" in rec.model else None
        f = unipoly_from_json(rec.model["f"]) if "f" in rec.model else None
        return cls(rec.model["kind"], g, h, f)

    @classmethod
    def hyperelliptic(cls, h: UniPoly, f: UniPoly) -> PlaneCurveModel:
        F = f.field
        names = ("x", "y")
        y = MultiPoly.var(1, names, F)
        g = y * y + MultiPoly.from_unipoly(h, 0, names) * y + MultiPoly.from_unipoly(f, 0, names)
        return cls("hyperelliptic", g, h, f)


def _is_integral(c: Any) -> bool:
    if isinstance(c, QuadElement):
        u2, v2 = 2 * c.u, 2 * c.v
        if c.D % 4 == 1:
            return u2.denominator == 1 and v2.denominator == 1 and (u2 - v2) % 2 == 0
        return c.u.denominator == 1 and c.v.denominator == 1
    return Fraction(c).denominator == 1


@dataclass
class SingularPrimesResult:
    primes: list[int]
    method: str
    discriminant: Any = None
    norm: int | None = None
    ramified: list[int] = dc_field(default_factory=list)
    details: dict = dc_field(default_factory=dict)

    def to_dict(self) -> dict:
        from ..modulardata.serialize import to_jsonable
        return to_jsonable({"primes": self.primes, "method": self.method, "discriminant": self.discriminant,
                            "norm": self.norm, "ramified": self.ramified, "details": self.details})


def singular_primes_hyperelliptic(m: PlaneCurveModel) -> SingularPrimesResult:
    """Primes dividing disc(h^2 - 4f); over QQ(sqrt D) the absolute norm is used."""
    if m.kind not in ("hyperelliptic", "conic") or m.f is None:
        raise TeichError("expected a hyperelliptic model y^2 + h y + f = 0")
    h = m.h if m.h is not None else UniPoly([], m.f.field, m.f.var)
    for c in list(h.coeffs) + list(m.f.coeffs):
        if not _is_integral(c):
            raise NonIntegralModelError("non-integral model")
    q = h * h - m.f * 4
    d = discriminant(q)
    if not d:
        raise SingularModelError("h^2 - 4f has a repeated root")
    K = q.field
    if isinstance(K, QuadraticField):
        norm = d.norm()
        if norm.denominator != 1:
            raise NonIntegralModelError("non-integral discriminant norm")
        primes = prime_support(int(norm))
        ram = [p for p in prime_support(K.D) if p in primes]
        return SingularPrimesResult(primes, "hyperelliptic-norm", d, int(norm), ram)
    return SingularPrimesResult(prime_support(int(d)), "hyperelliptic", d, None)


# --------------------------------------------------------------------------
# plane quartics
# --------------------------------------------------------------------------

def homogenize(g: MultiPoly) -> MultiPoly:
    n = g.total_degree()
    names = ("X", "Y", "Z")
    return MultiPoly({(e[0], e[1], n - e[0] - e[1]): c for e, c in g.terms.items()}, names, g.field)


def charts(g: MultiPoly) -> list[MultiPoly]:
    """Dehomogenizations at Z = 1, Y = 1 and X = 1, each in two variables."""
    G = homogenize(g)
    out = []
    for drop in (2, 1, 0):
        keep = [i for i in range(3) if i != drop]
        terms: dict = {}
        for e, c in G.terms.items():
            k = (e[keep[0]], e[keep[1]])
            terms[k] = terms.get(k, 0) + c
        out.append(MultiPoly({k: v for k, v in terms.items() if v}, ("u", "v"), g.field))
    return out


def _int_coeff_lists(A: MultiPoly, var: int) -> list[MultiPoly]:
    """Coefficients of A as a polynomial in variable ``var`` (formal degree)."""
    by = A.coefficients_in(var)
    n = max(by) if by else 0
    zero = MultiPoly({}, A.names, A.field)
    return [by.get(i, zero) for i in range(n + 1)]


def _sylvester_int(a: list[int], b: list[int]) -> list[list[int]]:
    m, n = len(a) - 1, len(b) - 1
    rows = []
    for i in range(n):
        rows.append([0] * i + a[::-1] + [0] * (n - 1 - i))
    for i in range(m):
        rows.append([0] * i + b[::-1] + [0] * (m - 1 - i))
    return rows


def resultant_in(A: MultiPoly, B: MultiPoly, var: int) -> UniPoly:
    """Res_var(A, B) for integral bivariate A, B: a polynomial in the other variable.

    Formal leading coefficients are kept, so the result commutes with
    reduction modulo every prime.  Computed by evaluation and interpolation.
    """
    other = 1 - var
    ca, cb = _int_coeff_lists(A, var), _int_coeff_lists(B, var)
    if len(ca) == 1 and len(cb) == 1:
        raise ValueError("resultant needs positive degree in the eliminated variable")
    bound = A.total_degree() * B.total_degree() + 1
    xs, ys = [], []
    for x0 in range(bound + 1):
        pt = [0, 0]
        pt[other] = Fraction(x0)
        a = [int(c.eval(pt)) if c else 0 for c in ca]
        b = [int(c.eval(pt)) if c else 0 for c in cb]
        xs.append(x0)
        ys.append(bareiss_det(_sylvester_int(a, b)))
    return interpolate(xs, ys, QQ, A.names[other])


@dataclass
class ChartCandidates:
    chart: int
    resultants: list[int]
    primes: set


def candidate_primes(g: MultiPoly) -> tuple[set, list[ChartCandidates]]:
    """Primes that can possibly be singular, chart by chart, plus 2 and 3."""
    total = {2, 3}
    info = []
    for idx, c in enumerate(charts(g)):
        gx, gy = c.diff(0), c.diff(1)
        nonzero = []
        for var in (1, 0):
            try:
                R1 = resultant_in(c, gx, var) if gx else None
                R2 = resultant_in(c, gy, var) if gy else None
            except ValueError:
                continue
            if R1 is None or R2 is None:
                continue
            if R1.degree <= 0 or R2.degree <= 0:
                R = (R1.coeff(0) if R1.degree == 0 else 0, R2.coeff(0) if R2.degree == 0 else 0)
                val = gcd(int(R[0]), int(R[1]))
                if val:
                    nonzero.append(val)
                continue
            R = resultant(R1, R2)
            if R:
                nonzero.append(int(R))
        if not nonzero:
            raise SingularModelError("singular generic fiber: every chart resultant vanishes")
        common = _fold(gcd, nonzero)
        primes = set(prime_support(common)) if abs(common) > 1 else set()
        # primes where the chart polynomial loses its leading terms
        for var in (0, 1):
            top = _int_coeff_lists(c, var)[-1]
            cont = _fold(gcd, (int(v) for v in top.terms.values()), 0)
            if abs(cont) > 1:
                primes |= set(prime_support(cont))
        info.append(ChartCandidates(idx, nonzero, primes))
        total |= primes
    return total, info


def _to_ff(c: MultiPoly, p: int) -> dict:
    out = {}
    for e, v in c.terms.items():
        v = Fraction(v)
        r = v.numerator * pow(v.denominator, -1, p) % p
        if r:
            out[e] = r
    return out


def chart_singular_mod_p(c: MultiPoly, p: int) -> bool:
    """True iff c, dc/du, dc/dv have a common zero over the algebraic closure of F_p."""
    F = [_to_ff(c, p), _to_ff(c.diff(0), p), _to_ff(c.diff(1), p)]
    F = [f for f in F if f]
    if not F:
        return True
    return not groebner.is_unit_ideal(F, p)


def _restrict(c: MultiPoly, var: int, p: int) -> list[list[int]]:
    """c as a polynomial in ``var`` whose coefficients are int lists in the other variable."""
    other = 1 - var
    n = max((e[var] for e in c.terms), default=0)
    out = [[0] for _ in range(n + 1)]
    for e, v in c.terms.items():
        v = Fraction(v)
        r = v.numerator * pow(v.denominator, -1, p) % p
        row = out[e[var]]
        k = e[other]
        row.extend([0] * (k + 1 - len(row)))
        row[k] = (row[k] + r) % p
    return [ffpoly.trim(r, p) for r in out]


@dataclass
class Witness:
    p: int
    chart: int
    eliminated: str  # which coordinate is given by the root of the factor
    minpoly: list[int]  # irreducible over F_p, in the projected coordinate
    fiber: list[list[int]]  # gcd over F_p[x]/(minpoly) of the three generators

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def to_dict(self) -> dict:
        return {"p": self.p, "chart": self.chart, "projected_coordinate": self.eliminated,
                "minpoly": self.minpoly, "extension_degree": self.degree, "fiber_factor": self.fiber}


def find_witness(c: MultiPoly, p: int, chart_index: int = 0, max_degree: int = 12) -> Witness | None:
    """An explicit common zero of (c, c_u, c_v) over some F_{p^k}, k <= max_degree."""
    gens = [c, c.diff(0), c.diff(1)]
    if p <= 101:
        # F_p-rational singular points first; this also covers non-reduced
        # reductions, where every resultant vanishes identically
        ff = [_to_ff(gp, p) for gp in gens]
        for u0 in range(p):
            for v0 in range(p):
                if all(sum(cf * pow(u0, e[0], p) * pow(v0, e[1], p) for e, cf in f.items()) % p == 0
                       for f in ff):
                    return Witness(p, chart_index, c.names[0], [(-u0) % p, 1], [[(-v0) % p], [1]])
    for var in (1, 0):
        other = 1 - var
        try:
            r = resultant_in(c, c.diff(var), var) if c.diff(var) else None
        except ValueError:
            r = None
        if r is None:
            continue
        rp = ffpoly.trim([int(Fraction(v).numerator * pow(Fraction(v).denominator, -1, p)) for v in r.coeffs], p)
        if ffpoly.deg(rp) < 1:
            continue
        for m, _ in ffpoly.factor(rp, p):
            if ffpoly.deg(m) > max_degree:
                continue
            E = ffpoly.ExtField(p, m)
            alpha = [0, 1] if ffpoly.deg(m) > 1 else [(-m[0]) % p]
            fibers = []
            for gpoly in gens:
                if not gpoly:
                    continue
                rows = _restrict(gpoly, var, p)
                fibers.append([E.red(_eval_int_list(row, alpha, E)) for row in rows])
            gg = fibers[0]
            for f in fibers[1:]:
                gg = E.poly_gcd(gg, f)
                if len(gg) < 2:
                    break
            if len(gg) >= 2:
                return Witness(p, chart_index, c.names[other], m, gg)
    return None


def _eval_int_list(row: list[int], alpha: list[int], E: ffpoly.ExtField) -> list[int]:
    acc: list[int] = []
    for coef in reversed(row):
        acc = E.add(E.mul(acc, alpha), [coef] if coef else [])
    return acc


def singular_primes_quartic(g: MultiPoly, with_witness: bool = True) -> SingularPrimesResult:
    """Union over the three affine charts of the primes where the model is singular."""
    if g.total_degree() != 4:
        raise TeichError("expected a plane quartic")
    for v in g.terms.values():
        if not _is_integral(v):
            raise NonIntegralModelError("non-integral model")
    cands, info = candidate_primes(g)
    cs = charts(g)
    primes = []
    per_prime: dict = {}
    for p in sorted(cands):
        hit = [i for i, c in enumerate(cs) if chart_singular_mod_p(c, p)]
        if not hit:
            continue
        primes.append(p)
        entry: dict = {"charts": hit}
        if with_witness:
            w = None
            for i in hit:
                w = find_witness(cs[i], p, i)
                if w is not None:
                    break
            entry["witness"] = w.to_dict() if w else None
        per_prime[p] = entry
    details = {"candidates": sorted(cands), "per_prime": per_prime,
               "chart_resultants": [ci.resultants for ci in info]}
    return SingularPrimesResult(primes, "quartic-elimination", details=details)


def singular_primes(model: PlaneCurveModel) -> SingularPrimesResult:
    if model.kind == "quartic":
        return singular_primes_quartic(model.g)
    return singular_primes_hyperelliptic(model)
