"""Rational function fields K(t) over K = QQ or QQ(sqrt D).

Elements are kept canonical: numerator and denominator coprime, denominator
monic.  Sums use Henrici's trick (only the gcd of the two denominators is
ever needed) so that long eliminations over QQ(t) stay tractable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from .fields import QQ, Field, QuadElement
from .poly import UniPoly


class RationalFunction:
    __slots__ = ("num", "den", "parent")

    def __init__(self, num: UniPoly, den: UniPoly | None = None, parent: RationalFunctionField | None = None,
                 *, _reduced: bool = False) -> None:
        if parent is None:
            parent = RationalFunctionField(num.field, num.var)
        if den is None:
            den = UniPoly._make([parent.base.one], parent.base, parent.var)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if not num:
                den = UniPoly._make([parent.base.one], parent.base, parent.var)
            elif den.degree > 0:
                g = num.gcd(den)
                if g.degree > 0:
                    num, den = num.exact_div(g), den.exact_div(g)
            lc = den.lc()
            if lc != 1:
                inv = parent.base.one / lc
                num, den = num * inv, den * inv
        self.num = num
        self.den = den
        self.parent = parent

    def _new(self, num: UniPoly, den: UniPoly, reduced: bool = False) -> RationalFunction:
        return RationalFunction(num, den, self.parent, _reduced=reduced)

    def _coerce(self, other: Any) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            return other
        try:
            return self.parent(other)
        except (TypeError, ValueError):
            return None

    def _den_one(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other: Any) -> RationalFunction:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._den_one() and o._den_one():
            return self._new(self.num + o.num, self.den, True)
        if self.den == o.den:
            return self._new(self.num + o.num, self.den)
        g = self.den.gcd(o.den)
        if g.degree == 0:
            return self._new(self.num * o.den + o.num * self.den, self.den * o.den, True)
        d1, d2 = self.den.exact_div(g), o.den.exact_div(g)
        num = self.num * d2 + o.num * d1
        if not num:
            return self.parent.zero
        g2 = num.gcd(g)
        if g2.degree > 0:
            num, g = num.exact_div(g2), g.exact_div(g2)
        den = d1 * d2 * g
        inv = self.parent.base.one / den.lc()
        return self._new(num * inv, den * inv, True)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return self._new(-self.num, self.den, True)

    def __sub__(self, other: Any) -> RationalFunction:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> RationalFunction:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> RationalFunction:
        if isinstance(other, (int, Fraction, QuadElement)):
            if not other:
                return self.parent.zero
            return self._new(self.num * other, self.den, True)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return self.parent.zero
        a, b, c, d = self.num, self.den, o.num, o.den
        if b.degree > 0 and c.degree > 0:
            g = c.gcd(b)
            if g.degree > 0:
                c, b = c.exact_div(g), b.exact_div(g)
        if d.degree > 0 and a.degree > 0:
            g = a.gcd(d)
            if g.degree > 0:
                a, d = a.exact_div(g), d.exact_div(g)
        den = b * d
        inv = self.parent.base.one / den.lc()
        return self._new(a * c * inv, den * inv, True)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return self._new(self.den, self.num)

    def __truediv__(self, other: Any) -> RationalFunction:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> RationalFunction:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> RationalFunction:
        if n < 0:
            return self.inverse() ** (-n)
        return self._new(self.num ** n, self.den ** n, True)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, QuadElement)):
            return self._den_one() and self.num == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._den_one() and self.num.degree <= 0:
            return hash(self.num.coeff(0))
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __call__(self, t0: Any) -> Any:
        d = self.den(t0)
        if not d:
            raise ZeroDivisionError(f"pole at t = {t0}")
        return self.num(t0) / d

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> Any:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.num.coeff(0)

    def degree(self) -> int:
        """deg num - deg den (the order of the pole at infinity)."""
        return self.num.degree - self.den.degree

    def map_coeffs(self, fn) -> RationalFunction:
        return RationalFunction(self.num.map_coeffs(fn), self.den.map_coeffs(fn), self.parent)

    def __repr__(self) -> str:
        if self._den_one():
            return repr(self.num) if self.den.lc() == 1 else f"({self.num})/({self.den})"
        return f"({self.num})/({self.den})"


class RationalFunctionField(Field):
    """K(var) for a characteristic-zero base field K."""

    def __init__(self, base: Field = QQ, var: str = "t") -> None:
        self.base = base
        self.var = var
        self._zero = None
        self._one = None

    def __call__(self, x: Any) -> RationalFunction:
        if isinstance(x, RationalFunction):
            if x.parent is self:
                return x
            if x.parent == self:
                return RationalFunction(x.num, x.den, self, _reduced=True)
            raise ValueError(f"element of {x.parent} in {self}")
        if isinstance(x, UniPoly):
            if x.field != self.base:
                x = x.map_coeffs(self.base, self.base)
            x = UniPoly._make(list(x.coeffs), self.base, self.var)
            return RationalFunction(x, None, self, _reduced=True)
        c = self.base(x)
        return RationalFunction(UniPoly._make([c], self.base, self.var),
                                UniPoly._make([self.base.one], self.base, self.var), self, _reduced=True)

    @property
    def zero(self) -> RationalFunction:
        if self._zero is None:
            self._zero = self(0)
        return self._zero

    @property
    def one(self) -> RationalFunction:
        if self._one is None:
            self._one = self(1)
        return self._one

    @property
    def gen(self) -> RationalFunction:
        return self(UniPoly.x(self.base, self.var))

    def fraction(self, num: UniPoly, den: UniPoly) -> RationalFunction:
        return RationalFunction(UniPoly._make(list(num.coeffs), self.base, self.var),
                                UniPoly._make(list(den.coeffs), self.base, self.var), self)

    def sqrt(self, x: RationalFunction) -> RationalFunction | None:
        x = self(x)
        c = x.num.lc()
        # den is monic; num = c * monic
        rc = self.base.sqrt(c) if x.num else self.base.zero
        if rc is None:
            return None
        n = (x.num * (self.base.one / c)).sqrt() if x.num else x.num
        d = x.den.sqrt()
        if n is None or d is None:
            return None
        return RationalFunction(n * rc, d, self, _reduced=True)

    def descriptor(self) -> dict:
        out = {"field": "K(t)", "var": self.var}
        out["base"] = self.base.descriptor()
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalFunctionField) and other.base == self.base and other.var == self.var

    def __hash__(self) -> int:
        return hash(("Frac", self.base, self.var))

    def __repr__(self) -> str:
        return f"{self.base!r}({self.var})"
