"""Pairing between quadratic differentials and deformations of z^2 = f_a(w).

Both matrices are stored 3x5 so that the pairing always reads x^T . M . v
with x in K^3 (a quadratic differential) and v in K^5 (a tangent vector to
the coefficient space).  The overall factor 2*pi is dropped; downstream code
only consumes kernels and ranges.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence

from .errors import SingularModelError
from .exactfield import Field, Matrix, QQ, UniPoly
from .genus2 import QuinticModel

K_RANGE = range(2, 9)


def power_sums(f: UniPoly, count: int) -> list[Any]:
    """p_0 .. p_{count-1}, the power sums of the roots of a monic ``f`` (Newton)."""
    n = f.degree
    fld = f.field
    # e-coefficients: f = w^n + c_{n-1} w^{n-1} + ... ; Newton with c's directly
    c = [f.coeff(n - i) for i in range(n + 1)]  # c[0] = 1, c[i] = coeff of w^(n-i)
    p = [fld(n)]
    for k in range(1, count):
        acc = fld.zero
        for i in range(1, min(k, n + 1)):
            acc = acc + c[i] * p[k - i]
        if k <= n:
            acc = acc + c[k] * k
        p.append(-acc)
    return p


def _trace_basis(m: QuinticModel) -> tuple[UniPoly, UniPoly, list[Any]]:
    f = m.poly()
    if not m.discriminant():
        raise SingularModelError("singular model")
    u = f.derivative().invmod(f)
    return f, (u * u) % f, power_sums(f, 5)


def _trace(e: UniPoly, p: list[Any], zero: Any) -> Any:
    acc = zero
    for i, c in enumerate(e.coeffs):
        acc = acc + c * p[i]
    return acc


def trace_Mk(m: QuinticModel, k: int) -> Any:
    """Sum over roots r of f_a of r^(k-2) / f_a'(r)^2, computed without roots."""
    if k not in K_RANGE:
        raise ValueError("k must lie in 2..8")
    f, u2, p = _trace_basis(m)
    w = UniPoly.x(m.field)
    e = (w ** (k - 2) * u2) % f
    return _trace(e, p, m.field.zero)


def m_values(m: QuinticModel) -> dict[int, Any]:
    """All M_k for k = 2..8, sharing one inverse computation."""
    f, u2, p = _trace_basis(m)
    w = UniPoly.x(m.field)
    out = {}
    e = u2
    for k in K_RANGE:
        out[k] = _trace(e, p, m.field.zero)
        e = (e * w) % f
    return out


def matrix_M(m: QuinticModel) -> Matrix:
    """Hankel matrix with (j, k) entry M_{j+k}, 1 <= j <= 3, 1 <= k <= 5."""
    vals = m_values(m)
    return Matrix([[vals[j + k] for k in range(1, 6)] for j in range(1, 4)], m.field)


def matrix_N(roots: Sequence[Any], field: Field = QQ) -> Matrix:
    """Residue matrix: row k-1, column j holds -r_j^(k-1) prod_{m != j} 1/(r_m - r_j)."""
    r = [field(x) for x in roots]
    if len(r) != 5:
        raise ValueError("five roots expected")
    if len(set(r)) != 5:
        raise SingularModelError("repeated roots")
    cols = []
    for j, rj in enumerate(r):
        prod = field.one
        for mi, rm in enumerate(r):
            if mi != j:
                prod = prod * (rm - rj)
        base = -(field.one / prod)
        cols.append([base, base * rj, base * rj * rj])
    return Matrix.from_columns(cols, field)


def coefficients_from_roots(roots: Sequence[Any], field: Field = QQ) -> tuple:
    f = UniPoly.from_roots(roots, field)
    return tuple(f.coeff(i) for i in range(5))


def roots_jacobian(roots: Sequence[Any], field: Field = QQ) -> Matrix:
    """5x5 matrix d a / d r: column j is the coefficient vector of -prod_{m != j}(w - r_m)."""
    r = [field(x) for x in roots]
    cols = []
    for j in range(5):
        g = -UniPoly.from_roots([x for i, x in enumerate(r) if i != j], field)
        cols.append([g.coeff(i) for i in range(5)])
    return Matrix.from_columns(cols, field)


@dataclass
class PairingCheck:
    holds: bool
    literal_holds: bool
    N: Matrix
    M: Matrix
    da: Matrix
    disc: Any
    difference: Matrix = dc_field(repr=False, default=None)


def verify_NrMada(roots: Sequence[Any], field: Field = QQ) -> PairingCheck:
    """Compare N(r) with the coefficient-side pairing pulled back along a(r).

    ``holds`` tests N = (Disc * M) . da / Disc, reading the matrix of the
    identity as the polynomial matrix Disc * M(a).  ``literal_holds`` tests
    N = M . da / Disc with M the rational-function matrix itself.
    """
    N = matrix_N(roots, field)
    model = QuinticModel(coefficients_from_roots(roots, field), field)
    M = matrix_M(model)
    da = roots_jacobian(roots, field)
    disc = model.discriminant()
    poly_M = M * disc
    pulled = (poly_M * da) * (field.one / disc)
    literal = (M * da) * (field.one / disc)
    diff = N - pulled
    return PairingCheck(holds=diff.is_zero(), literal_holds=(N == literal), N=N, M=M, da=da,
                        disc=disc, difference=diff)


def pairing(x: Sequence[Any], M: Matrix, v: Sequence[Any]) -> Any:
    """x^T . M . v (the 2*pi factor omitted)."""
    Mv = M.apply(list(v))
    acc = M.field.zero
    for a, b in zip(x, Mv):
        acc = acc + a * b
    return acc
