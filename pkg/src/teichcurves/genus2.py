"""Genus-two curves z^2 = f_a(w), their Igusa-Clebsch invariants, and the
affine chart used to compare derivatives of the invariant map.

Normalization.  Invariants are built from transvectants of the binary sextic
F(X, Z) = Z^6 f(X/Z):

    i = (F,F)_4,  Delta = (i,i)_2,  y1 = (F,i)_4,  y2 = (i,y1)_2,  y3 = (i,y2)_2
    A = (F,F)_6,  B = (i,i)_4,  C = (i,Delta)_4,  D = (y3,y1)_2

and then

    I2  = -120 A
    I4  = -720 A^2 + 6750 B
    I6  = 8640 A^3 - 108000 A B + 202500 C
    I10 = -62208 A^5 + 972000 A^3 B + 1620000 A^2 C - 3037500 A B^2
          - 6075000 B C - 4556250 D

With this scaling I10 is exactly the discriminant of a monic quintic, and for a
general sextic I2 = -240 c0 c6 + 40 c1 c5 - 16 c2 c4 + 6 c3^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, Sequence

from .errors import ChartUndefinedError, NotProjectivePointError
from .exactfield import QQ, Field, Matrix, MultiPoly, UniPoly
from .exactfield.poly import discriminant

WEIGHTS = (2, 4, 6, 10)
HALF_WEIGHTS = (1, 2, 3, 5)
A_NAMES = ("a0", "a1", "a2", "a3", "a4")


# --------------------------------------------------------------------------
# binary forms and transvectants
# --------------------------------------------------------------------------
# A binary form of degree n is a list c with c[i] the coefficient of X^i Z^(n-i).

def _falling(x: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= x - i
    return out


def _partial(form: list, n: int, dx: int, dz: int) -> list:
    """d^(dx+dz) / dX^dx dZ^dz of a degree-n form, as a form of degree n-dx-dz."""
    m = n - dx - dz
    out = []
    for i in range(dx, dx + m + 1):
        out.append(form[i] * (_falling(i, dx) * _falling(n - i, dz)))
    return out


def _form_mul(f: list, g: list) -> list:
    out = [None] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            p = x * y
            out[i + j] = p if out[i + j] is None else out[i + j] + p
    return out


def transvectant(f: list, g: list, k: int) -> list:
    """(f, g)_k, normalized by (m-k)!(n-k)!/(m!n!)."""
    m, n = len(f) - 1, len(g) - 1
    scale = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    acc = None
    for j in range(k + 1):
        term = _form_mul(_partial(f, m, k - j, j), _partial(g, n, j, k - j))
        c = comb(k, j) * (-1 if j % 2 else 1)
        term = [t * c for t in term]
        acc = term if acc is None else [a + b for a, b in zip(acc, term)]
    return [a * scale for a in acc]


def clebsch_invariants(sextic: Sequence[Any]) -> tuple[Any, Any, Any, Any]:
    """Clebsch's A, B, C, D for c0 + c1 X + ... + c6 X^6 (dehomogenized)."""
    F = list(sextic)
    i = transvectant(F, F, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(F, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    A = transvectant(F, F, 6)[0]
    B = transvectant(i, i, 4)[0]
    C = transvectant(i, delta, 4)[0]
    D = transvectant(y3, y1, 2)[0]
    return A, B, C, D


def ic_from_clebsch(A: Any, B: Any, C: Any, D: Any) -> tuple[Any, Any, Any, Any]:
    A2 = A * A
    I2 = A * -120
    I4 = A2 * -720 + B * 6750
    I6 = A2 * A * 8640 + A * B * -108000 + C * 202500
    I10 = (A2 * A2 * A * -62208 + A2 * A * B * 972000 + A2 * C * 1620000
           + A * B * B * -3037500 + B * C * -6075000 + D * -4556250)
    return I2, I4, I6, I10


def igusa_clebsch_sextic(coeffs: Sequence[Any], field: Field = QQ) -> WeightedPoint:
    """Invariants of c0 + c1 x + ... + c6 x^6 (pad shorter input with zeros)."""
    cs = [field(c) for c in coeffs] + [field.zero] * (7 - len(coeffs))
    if len(cs) != 7:
        raise ValueError("a binary sextic has at most seven coefficients")
    return WeightedPoint(*ic_from_clebsch(*clebsch_invariants(cs)), field=field)


@lru_cache(maxsize=1)
def ic_polynomials() -> tuple[MultiPoly, MultiPoly, MultiPoly, MultiPoly]:
    """I2, I4, I6, I10 as integer polynomials in a0..a4 (monic quintic model)."""
    gens = MultiPoly.gens(A_NAMES)
    one = MultiPoly.constant(1, A_NAMES)
    zero = MultiPoly.constant(0, A_NAMES)
    return ic_from_clebsch(*clebsch_invariants(gens + [one, zero]))


@lru_cache(maxsize=1)
def ic_gradients() -> tuple[tuple[MultiPoly, ...], ...]:
    return tuple(tuple(I.diff(k) for k in range(5)) for I in ic_polynomials())


# --------------------------------------------------------------------------
# models and points
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class QuinticModel:
    """The curve z^2 = w^5 + a4 w^4 + ... + a0, with ``a = (a0, ..., a4)``."""

    a: tuple
    field: Field = QQ

    def __post_init__(self) -> None:
        if len(self.a) != 5:
            raise ValueError("a quintic model needs five coefficients a0..a4")
        object.__setattr__(self, "a", tuple(self.field(x) for x in self.a))

    def poly(self, var: str = "w") -> UniPoly:
        return UniPoly(list(self.a) + [self.field.one], self.field, var)

    def discriminant(self) -> Any:
        return discriminant(self.poly())

    def is_nondegenerate(self) -> bool:
        return bool(self.discriminant())

    def sextic(self) -> list:
        return list(self.a) + [self.field.one, self.field.zero]


@dataclass(frozen=True)
class WeightedPoint:
    """A representative (I2, I4, I6, I10) of a point of P(2,4,6,10)."""

    I2: Any
    I4: Any
    I6: Any
    I10: Any
    field: Field = QQ

    @property
    def coords(self) -> tuple:
        return (self.I2, self.I4, self.I6, self.I10)

    def scaled(self, lam: Any) -> WeightedPoint:
        """Apply lambda: (I_k) -> (lambda^(k/2) I_k); ``lam`` plays the role of lambda^2."""
        return WeightedPoint(*(c * lam ** h for c, h in zip(self.coords, HALF_WEIGHTS)), field=self.field)

    def map(self, fn, field: Field | None = None) -> WeightedPoint:
        return WeightedPoint(*(fn(c) for c in self.coords), field=field or self.field)

    def is_projective(self) -> bool:
        return any(bool(c) for c in self.coords)

    def __repr__(self) -> str:
        return "(" + " : ".join(repr(c) for c in self.coords) + ")"


def igusa_clebsch(m: QuinticModel) -> WeightedPoint:
    """Exact invariants of the model, via the cached coefficient polynomials."""
    pt = list(m.a)
    vals = [P.eval(pt, one=m.field.one) for P in ic_polynomials()]
    return WeightedPoint(*vals, field=m.field)


def weighted_equal(P: WeightedPoint, Q: WeightedPoint) -> bool:
    """True iff P and Q lie in one orbit of the weighted scaling action.

    Compares P_i^(d_j) Q_j^(d_i) with Q_i^(d_j) P_j^(d_i) for half-weights d.
    """
    pc, qc = P.coords, Q.coords
    if not P.is_projective() or not Q.is_projective():
        raise NotProjectivePointError("not a projective point")
    if [bool(x) for x in pc] != [bool(x) for x in qc]:
        return False
    for i in range(4):
        for j in range(i + 1, 4):
            di, dj = HALF_WEIGHTS[i], HALF_WEIGHTS[j]
            if pc[i] ** dj * qc[j] ** di != qc[i] ** dj * pc[j] ** di:
                return False
    return True


# --------------------------------------------------------------------------
# affine chart
# --------------------------------------------------------------------------

def chart_normalizer(P: WeightedPoint) -> int:
    """Index of the coordinate used to normalize (I2 first, then I4, then I6)."""
    for idx in range(3):
        if P.coords[idx]:
            return idx
    raise ChartUndefinedError("chart undefined: I2 = I4 = I6 = 0")


def chart(P: WeightedPoint, normalizer: int | None = None) -> tuple:
    """(I4/I2^2, I6/I2^3, I10/I2^5), or the analogous ratios for the fallback normalizer.

    For normalizer k with weight w_k the three other coordinates I_j are
    sent to I_j^(w_k/g) / I_k^(w_j/g) with g = gcd(w_j, w_k), which is
    orbit-invariant.
    """
    k = chart_normalizer(P) if normalizer is None else normalizer
    c = P.coords
    if not c[k]:
        raise ChartUndefinedError("chart undefined")
    out = []
    for j in range(4):
        if j == k:
            continue
        p, q = _chart_exponents(j, k)
        out.append(c[j] ** p / c[k] ** q)
    return tuple(out)


def _chart_exponents(j: int, k: int) -> tuple[int, int]:
    from math import gcd
    dj, dk = HALF_WEIGHTS[j], HALF_WEIGHTS[k]
    g = gcd(dj, dk)
    return dk // g, dj // g


def chart_jacobian_from(values: Sequence[Any], grads: Sequence[Sequence[Any]], normalizer: int = 0) -> list:
    """Chart Jacobian from invariant values and their gradients (rows per invariant).

    d(I_j^p / I_k^q) = I_j^(p-1) I_k^(-q-1) (p I_k dI_j - q I_j dI_k).
    """
    k = normalizer
    Ik = values[k]
    if not Ik:
        raise ChartUndefinedError("chart undefined")
    rows = []
    for j in range(4):
        if j == k:
            continue
        p, q = _chart_exponents(j, k)
        Ij = values[j]
        factor = Ij ** (p - 1) / Ik ** (q + 1)
        row = []
        for dIj, dIk in zip(grads[j], grads[k]):
            row.append(factor * (Ik * dIj * p - Ij * dIk * q))
        rows.append(row)
    return rows


def ic_values_and_gradients(m: QuinticModel) -> tuple[list, list]:
    one = m.field.one
    pt = list(m.a)
    vals = [P.eval(pt, one=one) for P in ic_polynomials()]
    grads = [[g.eval(pt, one=one) for g in row] for row in ic_gradients()]
    return vals, grads


def ic_jacobian(m: QuinticModel, normalizer: int | None = None) -> Matrix:
    """3x5 Jacobian of a -> chart(IC(Y(a))) at the model's coefficients."""
    vals, grads = ic_values_and_gradients(m)
    P = WeightedPoint(*vals, field=m.field)
    k = chart_normalizer(P) if normalizer is None else normalizer
    return Matrix(chart_jacobian_from(vals, grads, k), m.field)


def ic_jacobian_representative(m: QuinticModel) -> Matrix:
    """Raw 4x5 Jacobian of (I2, I4, I6, I10); depends on the representative (debugging aid)."""
    _, grads = ic_values_and_gradients(m)
    return Matrix(grads, m.field)


# --------------------------------------------------------------------------
# quadratic differentials
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class QuadraticDifferential:
    """(x0 + x1 w + x2 w^2) dw^2 / f_a(w)."""

    x: tuple
    field: Field = QQ

    def __post_init__(self) -> None:
        if len(self.x) != 3:
            raise ValueError("a quadratic differential needs three coefficients")
        object.__setattr__(self, "x", tuple(self.field(v) for v in self.x))

    def poly(self) -> UniPoly:
        return UniPoly(self.x, self.field, "w")


def differential_double_zero(q: QuadraticDifferential | Sequence[Any], field: Field = QQ) -> bool:
    """Whether the eigenform pair read off from ``q`` contains dw/z up to scale.

    Squares of a single form (vanishing discriminant of the lambda quadratic)
    also return True; ``ela.factor_eigenforms`` marks them degenerate.
    """
    if not isinstance(q, QuadraticDifferential):
        q = QuadraticDifferential(tuple(q), field)
    x0, x1, x2 = q.x
    if not (x0 or x1 or x2):
        raise ValueError("zero quadratic differential")
    if not (x1 * x1 - x0 * x2 * 4):
        return True
    return not x2 and bool(x1)
