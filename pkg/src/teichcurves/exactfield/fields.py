"""Coefficient fields: the rationals, real quadratic fields and prime fields.

Every algorithm in the package is written against the small ``Field``
protocol below, so the same code runs over Q, Q(sqrt D), Q(t), Q(sqrt D)(t)
and GF(p).  Elements are immutable and use Python operators; plain ``int``
and ``Fraction`` values coerce into any characteristic-zero field.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt
from typing import Any

Rational = Fraction


def parse_rational(s: str | int | Fraction) -> Fraction:
    """Parse ``"num/den"`` (or an integer string) into a Fraction.

    Decimal points and exponents are rejected: data files carry exact
    rationals only.
    """
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    text = s.strip()
    if any(ch in text for ch in ".eE"):
        raise ValueError(f"not an exact rational: {s!r}")
    if "/" in text:
        num, den = text.split("/", 1)
        n, d = int(num), int(den)
        if d == 0:
            raise ValueError(f"zero denominator in {s!r}")
        return Fraction(n, d)
    return Fraction(int(text))


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rational_sqrt(q: Fraction | int) -> Fraction | None:
    q = Fraction(q)
    if q < 0:
        return None
    n, d = isqrt(q.numerator), isqrt(q.denominator)
    if n * n == q.numerator and d * d == q.denominator:
        return Fraction(n, d)
    return None


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


class Field:
    """Minimal field protocol shared by every coefficient domain."""

    characteristic = 0

    def __call__(self, x: Any) -> Any:
        raise NotImplementedError

    @property
    def zero(self) -> Any:
        return self(0)

    @property
    def one(self) -> Any:
        return self(1)

    def is_zero(self, x: Any) -> bool:
        return x == 0

    def sqrt(self, x: Any) -> Any | None:
        """Square root inside the field, or None when ``x`` is not a square."""
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError


class RationalField(Field):
    def __call__(self, x: Any) -> Fraction:
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return parse_rational(x)
        if isinstance(x, QuadElement) and x.v == 0:
            return x.u
        raise TypeError(f"cannot coerce {x!r} into QQ")

    def sqrt(self, x: Fraction) -> Fraction | None:
        return rational_sqrt(x)

    def descriptor(self) -> dict:
        return {"field": "QQ"}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


class QuadElement:
    """``u + v*sqrt(D)`` with rational ``u``, ``v``."""

    __slots__ = ("u", "v", "D")

    def __init__(self, u: Any, v: Any = 0, D: int = 5) -> None:
        self.u = Fraction(u)
        self.v = Fraction(v)
        self.D = D

    def _coerce(self, other: Any) -> QuadElement | None:
        if isinstance(other, QuadElement):
            if other.D != self.D:
                raise ValueError(f"mixing Q(sqrt {self.D}) and Q(sqrt {other.D})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElement(other, 0, self.D)
        return None

    def __add__(self, other: Any) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.u + o.u, self.v + o.v, self.D)

    __radd__ = __add__

    def __neg__(self) -> QuadElement:
        return QuadElement(-self.u, -self.v, self.D)

    def __sub__(self, other: Any) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.u - o.u, self.v - o.v, self.D)

    def __rsub__(self, other: Any) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElement(self.u * o.u + self.D * self.v * o.v,
                           self.u * o.v + self.v * o.u, self.D)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        return self.u * self.u - self.D * self.v * self.v

    def trace(self) -> Fraction:
        return 2 * self.u

    def conjugate(self) -> QuadElement:
        return QuadElement(self.u, -self.v, self.D)

    def inverse(self) -> QuadElement:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        return QuadElement(self.u / n, -self.v / n, self.D)

    def __truediv__(self, other: Any) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> QuadElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> QuadElement:
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElement(1, 0, self.D)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadElement):
            return self.D == other.D and self.u == other.u and self.v == other.v
        if isinstance(other, (int, Fraction)):
            return self.v == 0 and self.u == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.v == 0:
            return hash(self.u)
        return hash((self.u, self.v, self.D))

    def __bool__(self) -> bool:
        return bool(self.u) or bool(self.v)

    def is_rational(self) -> bool:
        return self.v == 0

    def __float__(self) -> float:
        return float(self.u) + float(self.v) * self.D ** 0.5

    def __repr__(self) -> str:
        if self.v == 0:
            return format_rational(self.u)
        return f"({format_rational(self.u)} + {format_rational(self.v)}*sqrt({self.D}))"


class QuadraticField(Field):
    """The real quadratic field Q(sqrt D) for a discriminant D."""

    def __init__(self, D: int) -> None:
        if D <= 0 or is_square(D) or D % 4 not in (0, 1):
            raise ValueError(f"{D} is not a non-square discriminant")
        self.D = D

    def __call__(self, x: Any) -> QuadElement:
        if isinstance(x, QuadElement):
            if x.D != self.D:
                raise ValueError(f"element of Q(sqrt {x.D}) in Q(sqrt {self.D})")
            return x
        if isinstance(x, (int, Fraction)):
            return QuadElement(x, 0, self.D)
        if isinstance(x, str):
            return QuadElement(parse_rational(x), 0, self.D)
        if isinstance(x, tuple) and len(x) == 2:
            return QuadElement(x[0], x[1], self.D)
        raise TypeError(f"cannot coerce {x!r} into Q(sqrt {self.D})")

    @property
    def gen(self) -> QuadElement:
        """sqrt(D)."""
        return QuadElement(0, 1, self.D)

    def sqrt_of(self, m: int) -> QuadElement:
        """sqrt(m) as an element, for m with m/D a rational square (or m a square)."""
        r = rational_sqrt(Fraction(m))
        if r is not None:
            return QuadElement(r, 0, self.D)
        r = rational_sqrt(Fraction(m, self.D))
        if r is None:
            raise ValueError(f"sqrt({m}) does not lie in Q(sqrt {self.D})")
        return QuadElement(0, r, self.D)

    def sqrt(self, x: QuadElement) -> QuadElement | None:
        x = self(x)
        u, v, D = x.u, x.v, self.D
        if v == 0:
            r = rational_sqrt(u)
            if r is not None:
                return QuadElement(r, 0, D)
            r = rational_sqrt(u / D)
            return None if r is None else QuadElement(0, r, D)
        # (a + b sqrt D)^2 = x  ->  a^2 solves A^2 - u A + D v^2 / 4 = 0
        root = rational_sqrt(x.norm())
        if root is None:
            return None
        for a2 in ((u + root) / 2, (u - root) / 2):
            a = rational_sqrt(a2)
            if a:
                cand = QuadElement(a, v / (2 * a), D)
                if cand * cand == x:
                    return cand
        return None

    def descriptor(self) -> dict:
        return {"field": "QQ(sqrt D)", "D": self.D}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuadraticField) and other.D == self.D

    def __hash__(self) -> int:
        return hash(("QQ(sqrt)", self.D))

    def __repr__(self) -> str:
        return f"QQ(sqrt {self.D})"


class FpElement:
    """Residue class modulo a prime."""

    __slots__ = ("n", "p")

    def __init__(self, n: int, p: int) -> None:
        self.n = n % p
        self.p = p

    def _coerce(self, other: Any) -> int | None:
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixing different prime fields")
            return other.n
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return None

    def __add__(self, other: Any) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.n + o, self.p)

    __radd__ = __add__

    def __sub__(self, other: Any) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.n - o, self.p)

    def __rsub__(self, other: Any) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o - self.n, self.p)

    def __neg__(self) -> FpElement:
        return FpElement(-self.n, self.p)

    def __mul__(self, other: Any) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(self.n * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> FpElement:
        if self.n == 0:
            raise ZeroDivisionError(f"division by zero mod {self.p}")
        return FpElement(pow(self.n, self.p - 2, self.p), self.p)

    def __truediv__(self, other: Any) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * FpElement(o, self.p).inverse()

    def __rtruediv__(self, other: Any) -> FpElement:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FpElement(o, self.p) * self.inverse()

    def __pow__(self, e: int) -> FpElement:
        if e < 0:
            return self.inverse() ** (-e)
        return FpElement(pow(self.n, e, self.p), self.p)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FpElement):
            return self.p == other.p and self.n == other.n
        if isinstance(other, int):
            return (self.n - other) % self.p == 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.p))

    def __bool__(self) -> bool:
        return self.n != 0

    def __repr__(self) -> str:
        return f"{self.n} mod {self.p}"


class PrimeField(Field):
    def __init__(self, p: int) -> None:
        if p < 2 or any(p % q == 0 for q in range(2, isqrt(p) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x: Any) -> FpElement:
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise ValueError("element of a different prime field")
            return x
        if isinstance(x, int):
            return FpElement(x, self.p)
        if isinstance(x, Fraction):
            return FpElement(x.numerator, self.p) / x.denominator
        raise TypeError(f"cannot coerce {x!r} into GF({self.p})")

    def sqrt(self, x: FpElement) -> FpElement | None:
        """Tonelli-Shanks."""
        a, p = self(x).n, self.p
        if a == 0:
            return FpElement(0, p)
        if p == 2:
            return FpElement(a, p)
        if pow(a, (p - 1) // 2, p) != 1:
            return None
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while pow(z, (p - 1) // 2, p) != p - 1:
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
        return FpElement(r, p)

    def elements(self):
        return (FpElement(i, self.p) for i in range(self.p))

    def descriptor(self) -> dict:
        return {"field": "GF(p)", "p": self.p}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"


def squarefree_kernel(n: int) -> int:
    """Product of the distinct primes dividing ``n`` (trial division, small n)."""
    n = abs(n)
    out, q = 1, 2
    while q * q <= n:
        if n % q == 0:
            out *= q
            while n % q == 0:
                n //= q
        q += 1
    return out * (n if n > 1 else 1)


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b if a and b else 0
