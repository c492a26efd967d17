"""Cusps of Weierstrass curves: splitting prototypes, spin, stable limits.

A splitting prototype of discriminant D is an integer tuple (a, b, c, e) with
D = e^2 + 4bc, b, c > 0, c + e < b, 0 <= a < gcd(b, c) and gcd(a, b, c, e) = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Any, Sequence

from .errors import DegenerateFamilyError, SpinUndefinedError
from .exactfield import QQ, QuadraticField, RationalFunction, RationalFunctionField, UniPoly, discriminant
from .genus2 import WeightedPoint, chart, weighted_equal
from .modulardata.registry import check_discriminant

WEIGHTS = (2, 4, 6, 10)


@dataclass(frozen=True, order=True)
class SplittingPrototype:
    a: int
    b: int
    c: int
    e: int
    D: int

    def __post_init__(self) -> None:
        a, b, c, e, D = self.a, self.b, self.c, self.e, self.D
        ok = (D == e * e + 4 * b * c and b > 0 and c > 0 and c + e < b
              and 0 <= a < gcd(b, c) and gcd(gcd(a, b), gcd(c, e)) == 1)
        if not ok:
            raise ValueError(f"({a},{b},{c},{e}) is not a splitting prototype of discriminant {D}")

    @property
    def tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.e)


def enumerate_prototypes(D: int) -> list[SplittingPrototype]:
    """All prototypes of discriminant D in lexicographic (a, b, c, e) order."""
    check_discriminant(D)
    out = []
    top = isqrt(D)
    for e in range(-top, top + 1):
        rest = D - e * e
        if rest <= 0 or rest % 4:
            continue
        n = rest // 4
        for b in range(1, n + 1):
            if n % b:
                continue
            c = n // b
            if c + e >= b:
                continue
            for a in range(gcd(b, c)):
                if gcd(gcd(a, b), gcd(c, e)) == 1:
                    out.append(SplittingPrototype(a, b, c, e, D))
    return sorted(out)


def spin(p: SplittingPrototype, f: int = 1) -> int:
    """Spin invariant (e - f)/2 + (c + 1)(a + b + ab) mod 2, for D = 1 mod 8."""
    if p.D % 8 != 1:
        raise SpinUndefinedError("spin undefined: D is not 1 mod 8")
    if f % 2 == 0:
        raise SpinUndefinedError("spin undefined: conductor must be odd")
    return ((p.e - f) // 2 + (p.c + 1) * (p.a + p.b + p.a * p.b)) % 2


def spin_split(D: int) -> tuple[int, int]:
    """Number of prototypes with spin 0 and with spin 1."""
    counts = [0, 0]
    for p in enumerate_prototypes(D):
        counts[spin(p)] += 1
    return counts[0], counts[1]


def prototype_limit(p: SplittingPrototype | Sequence[int], D: int | None = None) -> WeightedPoint:
    """Invariants of the stable curve at the cusp indexed by p (I10 = 0).

    A bare tuple (a, b, c, e) plus D is evaluated without the prototype
    inequalities, so that quoted tuples can be checked as printed.
    """
    if not isinstance(p, SplittingPrototype):
        if D is None:
            raise ValueError("D is required for a bare tuple")
        _, pb, pc, pe = p
        if D != pe * pe + 4 * pb * pc:
            raise ValueError("D != e^2 + 4bc")
    else:
        pb, pc, pe, D = p.b, p.c, p.e, p.D
    K = QuadraticField(D)
    r = K.gen
    b, c, e, D = (Fraction(v) for v in (pb, pc, pe, D))
    I2 = (12 * b**4 - 8 * b**3 * c + 12 * b**2 * c**2 - 4 * b**2 * e**2 + 24 * b * c * e**2
          + 6 * e**4) + r * (e * (3 * e**2 + 3 * D - 4 * b**2))
    lead = (r + e) ** 4 * b**4
    I4 = lead
    I6 = lead * ((4 * b**4 - 4 * b**3 * c + 4 * b**2 * c**2 - 2 * b**2 * e**2 + 8 * b * c * e**2
                  + 2 * e**4) + r * (e * (e**2 + D - 2 * b**2)))
    return WeightedPoint(K(I2), K(I4), K(I6), K.zero, field=K)


def match_prototypes(D: int, P: WeightedPoint) -> list[SplittingPrototype]:
    """Prototypes whose stable limit is weighted-equal to P (the entry a is irrelevant)."""
    K = QuadraticField(D)
    if P.field != K:
        P = P.map(K, K)
    if P.I10:
        return []
    return [p for p in enumerate_prototypes(D) if weighted_equal(prototype_limit(p), P)]


# --------------------------------------------------------------------------
# families
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class CuspidalPolynomial:
    D: int
    poly: UniPoly

    @property
    def discriminant(self) -> Any:
        return discriminant(self.poly) if self.poly.degree > 1 else self.poly.field.one

    def to_dict(self) -> dict:
        return {"D": self.D, "poly": repr(self.poly), "degree": self.poly.degree,
                "discriminant": self.discriminant}


def _family_invariants(family: Any) -> WeightedPoint:
    P = getattr(family, "ic_a", family)
    if not isinstance(P, WeightedPoint) or not isinstance(P.field, RationalFunctionField):
        raise TypeError("expected a certification record or weighted point over K(t)")
    return P


def cuspidal_polynomial(family: Any, D: int | None = None) -> CuspidalPolynomial:
    """Squarefree monic polynomial vanishing at the affine poles of I2^5 / I10."""
    P = _family_invariants(family)
    if not P.I10:
        raise DegenerateFamilyError("family is degenerate: I10 vanishes identically")
    q: RationalFunction = P.I2 ** 5 / P.I10
    if all(c.is_constant() for c in chart(P)):
        raise DegenerateFamilyError("family is degenerate: invariants are constant")
    den = q.den
    c = den.squarefree_part() if den.degree > 0 else den
    c = c * (c.field.one / c.lc())
    return CuspidalPolynomial(D if D is not None else getattr(family, "D", 0), c)


def _as_polynomials(P: WeightedPoint) -> list[UniPoly]:
    """Weighted-rescale so that every coordinate is a polynomial in t."""
    K = P.field
    L = UniPoly([K.base.one], K.base, K.var)
    for c in P.coords:
        if c:
            L = L * c.den.exact_div(L.gcd(c.den))
    Q = P.scaled(K(L) ** 2) if L.degree > 0 else P
    out = []
    for c in Q.coords:
        c = K(c)
        if c.den.degree > 0:
            raise AssertionError("clearing denominators failed")
        out.append(c.num)
    return out


def stable_limit_at_infinity(family: Any) -> WeightedPoint:
    """Limit of the invariants as t -> infinity in P(2,4,6,10).

    With m = max deg(I_k)/w_k, the limit is the tuple of coefficients of
    t^(w_k m) in I_k (zero when that exponent is not an integer or exceeds
    the degree).
    """
    P = _family_invariants(family)
    polys = _as_polynomials(P)
    if not any(polys):
        raise DegenerateFamilyError("limit undefined: all invariants vanish")
    m = max(Fraction(p.degree, w) for p, w in zip(polys, WEIGHTS) if p)
    base = P.field.base
    out = []
    for p, w in zip(polys, WEIGHTS):
        ex = m * w
        out.append(p.coeff(int(ex)) if p and ex.denominator == 1 and ex <= p.degree else base.zero)
    return WeightedPoint(*out, field=base)


@dataclass(frozen=True)
class StableLimitComparison:
    computed: WeightedPoint
    candidates: dict  # label -> (WeightedPoint, bool)

    def matches(self) -> list[str]:
        return [k for k, (_, ok) in self.candidates.items() if ok]

    def to_dict(self) -> dict:
        return {
            "computed": list(self.computed.coords),
            "candidates": {k: {"point": list(P.coords), "matches": ok}
                           for k, (P, ok) in self.candidates.items()},
            "matches": self.matches(),
        }


def compare_stable_limit(family: Any, candidates: dict[str, Any]) -> StableLimitComparison:
    """Compare the exact limit against labelled candidate points (tuples or WeightedPoints)."""
    lim = stable_limit_at_infinity(family)
    out = {}
    for label, cand in candidates.items():
        if isinstance(cand, SplittingPrototype):
            cand = prototype_limit(cand)
        elif isinstance(cand, tuple) and len(cand) == 2 and isinstance(cand[1], int) and len(cand[0]) == 4:
            cand = prototype_limit(cand[0], cand[1])
        if not isinstance(cand, WeightedPoint):
            cand = WeightedPoint(*(QQ(v) for v in cand), field=QQ)
        K = cand.field
        here = lim.map(K, K) if K != lim.field else lim
        out[label] = (cand, weighted_equal(here, cand))
    return StableLimitComparison(lim, out)


def cusp_count_report(D: int, components: Sequence[int]) -> dict:
    """Cross-check of prototype counts (and spin split) against tabulated cusp counts."""
    protos = enumerate_prototypes(D)
    rep: dict = {"D": D, "prototypes": len(protos), "table": list(components)}
    if D % 8 == 1:
        split = spin_split(D)
        rep["spin_split"] = list(split)
        rep["ok"] = sorted(split) == sorted(components) and len(components) == 2
    else:
        rep["ok"] = len(protos) == sum(components)
    return rep
