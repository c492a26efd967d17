"""Elliptic curves in long Weierstrass form over an exact field.

    y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from ..errors import SingularCurveError
from ..exactfield import QQ, Field, QuadElement, UniPoly


@dataclass(frozen=True)
class EllipticCurve:
    a1: Any
    a2: Any
    a3: Any
    a4: Any
    a6: Any
    field: Field = QQ

    def __post_init__(self) -> None:
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, self.field(getattr(self, name)))
        if not self.discriminant:
            raise SingularCurveError("singular curve: discriminant is zero")

    @classmethod
    def from_hyperelliptic(cls, h: UniPoly, f: UniPoly) -> EllipticCurve:
        """From y^2 + h(x) y + f(x) = 0 with deg h <= 1 and -f monic cubic."""
        F = f.field
        rhs = -f
        if rhs.degree != 3 or rhs.lc() != 1 or (h and h.degree > 1):
            raise ValueError("need y^2 + (a1 x + a3) y = x^3 + ...")
        return cls(h.coeff(1) if h else F.zero, rhs.coeff(2), h.coeff(0) if h else F.zero,
                   rhs.coeff(1), rhs.coeff(0), F)

    # invariants -----------------------------------------------------------
    @property
    def b_invariants(self) -> tuple:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + a2 * 4
        b4 = a1 * a3 + a4 * 2
        b6 = a3 * a3 + a6 * 4
        b8 = a1 * a1 * a6 + a2 * a6 * 4 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    @property
    def c4(self) -> Any:
        b2, b4, _, _ = self.b_invariants
        return b2 * b2 - b4 * 24

    @property
    def discriminant(self) -> Any:
        b2, b4, b6, b8 = self.b_invariants
        return -b2 * b2 * b8 - b4 * b4 * b4 * 8 - b6 * b6 * 27 + b2 * b4 * b6 * 9

    def j_invariant(self) -> Any:
        c4 = self.c4
        return c4 * c4 * c4 / self.discriminant

    # points ---------------------------------------------------------------
    def contains(self, P: ECPoint) -> bool:
        if P.is_zero:
            return True
        x, y = P.x, P.y
        return y * y + self.a1 * x * y + self.a3 * y == x * x * x + self.a2 * x * x + self.a4 * x + self.a6

    def point(self, x: Any, y: Any) -> ECPoint:
        P = ECPoint(self, self.field(x), self.field(y))
        if not self.contains(P):
            raise ValueError(f"({x}, {y}) is not on the curve")
        return P

    @property
    def zero(self) -> ECPoint:
        return ECPoint(self, None, None)


@dataclass(frozen=True)
class ECPoint:
    curve: EllipticCurve
    x: Any
    y: Any

    @property
    def is_zero(self) -> bool:
        return self.x is None

    def __neg__(self) -> ECPoint:
        if self.is_zero:
            return self
        E = self.curve
        return ECPoint(E, self.x, -self.y - E.a1 * self.x - E.a3)

    def __add__(self, other: ECPoint) -> ECPoint:
        return ec_group_law(self.curve, self, other)

    def __sub__(self, other: ECPoint) -> ECPoint:
        return self + (-other)

    def __mul__(self, n: int) -> ECPoint:
        return scalar_multiply(n, self)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ECPoint):
            return NotImplemented
        return self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def is_rational(self) -> bool:
        """Coordinates lie in QQ (trivially true for the identity)."""
        if self.is_zero:
            return True
        return all(not isinstance(c, QuadElement) or c.v == 0 for c in (self.x, self.y))

    def __repr__(self) -> str:
        return "O" if self.is_zero else f"({self.x!r}, {self.y!r})"


def ec_group_law(E: EllipticCurve, P: ECPoint, Q: ECPoint) -> ECPoint:
    """Chord-tangent addition."""
    if P.is_zero:
        return Q
    if Q.is_zero:
        return P
    a1, a2, a3, a4, a6 = E.a1, E.a2, E.a3, E.a4, E.a6
    if P.x == Q.x:
        if P.y + Q.y + a1 * Q.x + a3 == 0:
            return E.zero
        num = P.x * P.x * 3 + a2 * P.x * 2 + a4 - a1 * P.y
        den = P.y * 2 + a1 * P.x + a3
    else:
        num = Q.y - P.y
        den = Q.x - P.x
    lam = num / den
    nu = P.y - lam * P.x
    x3 = lam * lam + a1 * lam - a2 - P.x - Q.x
    y3 = -(lam + a1) * x3 - nu - a3
    return ECPoint(E, x3, y3)


def scalar_multiply(n: int, P: ECPoint) -> ECPoint:
    if n < 0:
        return scalar_multiply(-n, -P)
    out = P.curve.zero
    base = P
    while n:
        if n & 1:
            out = out + base
        base = base + base
        n >>= 1
    return out


def j_invariant(E: EllipticCurve) -> Any:
    return E.j_invariant()


def first_rational_multiple(P: ECPoint, bound: int) -> int | None:
    """Smallest 1 <= n <= bound with n P rational, or None."""
    Q = P.curve.zero
    for n in range(1, bound + 1):
        Q = Q + P
        if Q.is_rational():
            return n
    return None
