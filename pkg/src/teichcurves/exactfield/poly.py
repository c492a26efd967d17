"""Dense univariate polynomials over any supported field."""

from __future__ import annotations

from fractions import Fraction
from math import gcd as igcd
from typing import Any, Iterable, Sequence

from ..errors import NotInvertibleError, UndefinedResultantError
from .fields import QQ, Field, format_rational


def _strip(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


class UniPoly:
    """Immutable polynomial; ``coeffs[i]`` multiplies ``var**i``."""

    __slots__ = ("coeffs", "field", "var")

    def __init__(self, coeffs: Iterable[Any] = (), field: Field = QQ, var: str = "w",
                 *, _raw: bool = False) -> None:
        cs = list(coeffs) if _raw else [field(c) for c in coeffs]
        self.coeffs: tuple = tuple(_strip(cs))
        self.field = field
        self.var = var

    # construction helpers --------------------------------------------------
    @classmethod
    def _make(cls, cs: list, field: Field, var: str) -> UniPoly:
        p = cls.__new__(cls)
        p.coeffs = tuple(_strip(cs))
        p.field = field
        p.var = var
        return p

    @classmethod
    def x(cls, field: Field = QQ, var: str = "w") -> UniPoly:
        return cls._make([field.zero, field.one], field, var)

    @classmethod
    def constant(cls, c: Any, field: Field = QQ, var: str = "w") -> UniPoly:
        return cls._make([field(c)], field, var)

    @classmethod
    def from_roots(cls, roots: Sequence[Any], field: Field = QQ, var: str = "w") -> UniPoly:
        p = cls.constant(1, field, var)
        for r in roots:
            p = p * cls._make([-field(r), field.one], field, var)
        return p

    def _like(self, cs: list) -> UniPoly:
        return UniPoly._make(cs, self.field, self.var)

    # basic structure -------------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> Any:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def coeff(self, i: int) -> Any:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def monic(self) -> UniPoly:
        if not self.coeffs:
            return self
        inv = self.field.one / self.coeffs[-1]
        return self._like([c * inv for c in self.coeffs])

    # arithmetic ------------------------------------------------------------
    def _lift(self, other: Any) -> UniPoly | None:
        if isinstance(other, UniPoly):
            return other
        try:
            return self._like([self.field(other)])
        except (TypeError, ValueError):
            return None

    def __add__(self, other: Any) -> UniPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return self._like(cs)

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return self._like([-c for c in self.coeffs])

    def __sub__(self, other: Any) -> UniPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> UniPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> UniPoly:
        if not isinstance(other, UniPoly):
            try:
                c = self.field(other)
            except (TypeError, ValueError):
                return NotImplemented
            if not c:
                return self._like([])
            return self._like([x * c for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return self._like([])
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> UniPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self._like([self.field.one])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divmod(self, other: UniPoly) -> tuple[UniPoly, UniPoly]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return self._like([]), self
        inv = self.field.one / other.coeffs[-1]
        quot = [self.field.zero] * (len(rem) - dq)
        oc = other.coeffs
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if not c:
                continue
            c = c * inv
            quot[k - dq] = c
            for j in range(dq + 1):
                rem[k - dq + j] = rem[k - dq + j] - c * oc[j]
        return self._like(quot), self._like(rem[:dq])

    def __floordiv__(self, other: Any) -> UniPoly:
        if not isinstance(other, UniPoly):
            return self * (self.field.one / self.field(other))
        return self.divmod(other)[0]

    def __mod__(self, other: UniPoly) -> UniPoly:
        return self.divmod(other)[1]

    def exact_div(self, other: UniPoly) -> UniPoly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if not self.coeffs:
            return other == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == other

    def __hash__(self) -> int:
        return hash(self.coeffs)

    # calculus and evaluation ----------------------------------------------
    def derivative(self) -> UniPoly:
        return self._like([c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Any) -> Any:
        if not self.coeffs:
            return self.field.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose(self, g: UniPoly) -> UniPoly:
        acc = self._like([])
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def map_coeffs(self, fn, field: Field | None = None) -> UniPoly:
        fld = field or self.field
        return UniPoly([fn(c) for c in self.coeffs], fld, self.var)

    def reverse(self, n: int | None = None) -> UniPoly:
        """``w**n * p(1/w)`` with ``n`` defaulting to the degree."""
        n = self.degree if n is None else n
        cs = list(self.coeffs) + [self.field.zero] * (n + 1 - len(self.coeffs))
        return self._like(cs[: n + 1][::-1])

    # gcd family --------------------------------------------------------------
    def gcd(self, other: UniPoly) -> UniPoly:
        """Monic gcd (zero if both are zero)."""
        if self.field == QQ and self.coeffs and other.coeffs:
            return _gcd_qq(self, other)
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def xgcd(self, other: UniPoly) -> tuple[UniPoly, UniPoly, UniPoly]:
        """(g, s, t) with s*self + t*other = g, g monic."""
        one, zero = self._like([self.field.one]), self._like([])
        r0, r1, s0, s1, t0, t1 = self, other, one, zero, zero, one
        while r1:
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            s0, s1 = s1, s0 - q * s1
            t0, t1 = t1, t0 - q * t1
        if not r0:
            return r0, s0, t0
        inv = self.field.one / r0.lc()
        return r0 * inv, s0 * inv, t0 * inv

    def invmod(self, modulus: UniPoly) -> UniPoly:
        """Inverse of ``self`` modulo ``modulus``; raises carrying the gcd."""
        if modulus.degree < 1:
            raise ValueError("modulus must have positive degree")
        g, s, _ = (self % modulus).xgcd(modulus)
        if g.degree != 0:
            raise NotInvertibleError(g)
        return s % modulus

    def resultant(self, other: UniPoly) -> Any:
        return resultant(self, other)

    def discriminant(self) -> Any:
        return discriminant(self)

    def squarefree_part(self) -> UniPoly:
        """Monic radical (characteristic zero)."""
        if self.degree < 1:
            return self._like([self.field.one]) if self.coeffs else self
        return self.exact_div(self.gcd(self.derivative())).monic()

    def sqrt(self) -> UniPoly | None:
        """Exact square root when ``self`` is a square in K[var], else None."""
        if not self.coeffs:
            return self
        if self.degree % 2:
            return None
        lead = self.field.sqrt(self.lc())
        if lead is None:
            return None
        n = self.degree // 2
        # top-down coefficient matching
        root = [self.field.zero] * (n + 1)
        root[n] = lead
        two_lead = lead + lead
        for k in range(n - 1, -1, -1):
            # coefficient of w^(n+k) in root^2, minus the already known terms
            idx = n + k
            acc = self.coeffs[idx]
            for i in range(k + 1, n + 1):
                j = idx - i
                if k < j <= n:
                    acc = acc - root[i] * root[j]
            root[k] = acc / two_lead
        cand = self._like(root)
        return cand if cand * cand == self else None

    def content_primitive(self) -> tuple[Fraction, UniPoly]:
        """Over QQ: (c, p) with self = c*p and p integral primitive, lc(p) > 0."""
        if not self.coeffs:
            return Fraction(0), self
        den = 1
        for c in self.coeffs:
            den = den * c.denominator // igcd(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = igcd(g, v)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), self._like([Fraction(v // g) for v in ints])

    def integer_coeffs(self) -> list[int]:
        out = []
        for c in self.coeffs:
            c = Fraction(c)
            if c.denominator != 1:
                raise ValueError("polynomial is not integral")
            out.append(c.numerator)
        return out

    # display -----------------------------------------------------------------
    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            cs = format_rational(c) if isinstance(c, (int, Fraction)) else repr(c)
            mono = "" if i == 0 else (self.var if i == 1 else f"{self.var}^{i}")
            if mono and cs == "1":
                parts.append(mono)
            elif mono and cs == "-1":
                parts.append("-" + mono)
            elif mono:
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of integer coefficient lists (low to high)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        shift = len(r) - 1 - db
        r = [x * lb for x in r]
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        while r and r[-1] == 0:
            r.pop()
    return r


def _int_primitive(a: list[int]) -> list[int]:
    g = 0
    for v in a:
        g = igcd(g, v)
    return [v // g for v in a] if g > 1 else a


def _gcd_qq(f: UniPoly, g: UniPoly) -> UniPoly:
    """Primitive PRS over the integers, avoids rational coefficient growth."""
    _, pf = f.content_primitive()
    _, pg = g.content_primitive()
    a = [int(c) for c in pf.coeffs]
    b = [int(c) for c in pg.coeffs]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r) if r else r
    lead = Fraction(a[-1])
    return f._like([Fraction(v) / lead for v in a])


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list[Any]]:
    m, n = f.degree, g.degree
    zero = f.field.zero
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([zero] * i + fc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + gc + [zero] * (size - n - 1 - i))
    return rows


def resultant(f: UniPoly, g: UniPoly) -> Any:
    """Determinant of the Sylvester matrix of ``f`` and ``g``."""
    from .linalg import Matrix

    if f.is_zero() and g.is_zero():
        raise UndefinedResultantError("undefined resultant")
    field = f.field
    if f.is_zero() or g.is_zero():
        # Res(0, c) = 1 for a nonzero constant c by convention; otherwise 0
        other = g if f.is_zero() else f
        return field.one if other.degree == 0 else field.zero
    if f.degree == 0 and g.degree == 0:
        return field.one
    if f.degree == 0:
        return f.lc() ** g.degree
    if g.degree == 0:
        return g.lc() ** f.degree
    return Matrix(sylvester_matrix(f, g), field).det()


def discriminant(f: UniPoly) -> Any:
    """(-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant of a constant polynomial")
    if n == 1:
        return f.field.one
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return res * sign / f.lc()


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    return f.gcd(g)


def poly_invmod(g: UniPoly, f: UniPoly) -> UniPoly:
    return g.invmod(f)


def interpolate(xs: Sequence[Any], ys: Sequence[Any], field: Field = QQ, var: str = "x") -> UniPoly:
    """Lagrange interpolation through distinct nodes (Newton form)."""
    n = len(xs)
    coef = [field(y) for y in ys]
    xs = [field(x) for x in xs]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly._make([coef[-1]], field, var)
    for i in range(n - 2, -1, -1):
        p = p * UniPoly._make([-xs[i], field.one], field, var) + coef[i]
    return p
