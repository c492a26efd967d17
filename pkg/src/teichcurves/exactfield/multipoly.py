"""Sparse multivariate polynomials with a fixed variable list."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Mapping, Sequence

from .fields import QQ, Field, format_rational
from .poly import UniPoly


class MultiPoly:
    __slots__ = ("terms", "names", "field")

    def __init__(self, terms: Mapping[tuple[int, ...], Any] | None = None,
                 names: Sequence[str] = ("r", "s"), field: Field = QQ,
                 *, _raw: bool = False) -> None:
        self.names = tuple(names)
        self.field = field
        if _raw:
            self.terms = dict(terms or {})
            return
        n = len(self.names)
        out: dict[tuple[int, ...], Any] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != n:
                raise ValueError(f"exponent {e} has wrong arity for {self.names}")
            c = field(c)
            if c:
                out[e] = out[e] + c if e in out else c
                if not out[e]:
                    del out[e]
        self.terms = out

    # constructors -------------------------------------------------------------
    def _like(self, terms: dict) -> MultiPoly:
        return MultiPoly(terms, self.names, self.field, _raw=True)

    @classmethod
    def var(cls, i: int, names: Sequence[str], field: Field = QQ) -> MultiPoly:
        e = tuple(1 if k == i else 0 for k in range(len(names)))
        return cls({e: field.one}, names, field, _raw=True)

    @classmethod
    def gens(cls, names: Sequence[str], field: Field = QQ) -> list[MultiPoly]:
        return [cls.var(i, names, field) for i in range(len(names))]

    @classmethod
    def constant(cls, c: Any, names: Sequence[str], field: Field = QQ) -> MultiPoly:
        c = field(c)
        return cls({tuple(0 for _ in names): c} if c else {}, names, field, _raw=True)

    @property
    def nvars(self) -> int:
        return len(self.names)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # arithmetic ----------------------------------------------------------------
    def _lift(self, other: Any) -> MultiPoly | None:
        if isinstance(other, MultiPoly):
            if other.names != self.names:
                raise ValueError(f"variable mismatch {self.names} vs {other.names}")
            return other
        try:
            return MultiPoly.constant(other, self.names, self.field)
        except (TypeError, ValueError):
            return None

    def __add__(self, other: Any) -> MultiPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            if e in out:
                v = out[e] + c
                if v:
                    out[e] = v
                else:
                    del out[e]
            else:
                out[e] = c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return self._like({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> MultiPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> MultiPoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            try:
                c = self.field(other)
            except (TypeError, ValueError):
                return NotImplemented
            if not c:
                return self._like({})
            return self._like({e: v * c for e, v in self.terms.items()})
        self._lift(other)
        out: dict[tuple[int, ...], Any] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = c1 * c2
                if e in out:
                    out[e] = out[e] + v
                else:
                    out[e] = v
        return self._like({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.constant(1, self.names, self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MultiPoly):
            return self.names == other.names and self.terms == other.terms
        if not self.terms:
            return other == 0
        z = tuple(0 for _ in self.names)
        return len(self.terms) == 1 and z in self.terms and self.terms[z] == other

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    # structure -----------------------------------------------------------------
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def diff(self, i: int) -> MultiPoly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                out[ne] = c * e[i]
        return self._like(out)

    def map_coeffs(self, fn: Callable[[Any], Any], field: Field | None = None) -> MultiPoly:
        fld = field or self.field
        return MultiPoly({e: fn(c) for e, c in self.terms.items()}, self.names, fld)

    def content_denominator(self) -> int:
        """lcm of coefficient denominators (QQ coefficients only)."""
        from math import lcm
        d = 1
        for c in self.terms.values():
            d = lcm(d, Fraction(c).denominator)
        return d

    def __call__(self, *point: Any) -> Any:
        return self.eval(point)

    def eval(self, point: Sequence[Any], one: Any = None) -> Any:
        """Evaluate at a point whose entries live in any ring containing the coefficients."""
        if len(point) != self.nvars:
            raise ValueError("point has wrong arity")
        if not self.terms:
            return self.field.zero if one is None else one * 0
        maxdeg = [self.degree(i) for i in range(self.nvars)]
        if one is None:
            one = point[0] ** 0 if point else self.field.one
        powers = []
        for i, x in enumerate(point):
            pw = [one]
            for _ in range(maxdeg[i]):
                pw.append(pw[-1] * x)
            powers.append(pw)
        acc = None
        for e, c in self.terms.items():
            term = None
            for i, k in enumerate(e):
                if k:
                    term = powers[i][k] if term is None else term * powers[i][k]
            term = (one * c) if term is None else term * c
            acc = term if acc is None else acc + term
        return acc

    def specialize(self, i: int, value: Any) -> MultiPoly:
        """Substitute a field value for variable ``i`` (the variable stays, with degree 0)."""
        value = self.field(value)
        out: dict = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            v = c * value ** e[i]
            out[ne] = out[ne] + v if ne in out else v
        return self._like({e: c for e, c in out.items() if c})

    def to_unipoly(self, i: int, var: str | None = None) -> UniPoly:
        """View as a univariate polynomial in variable ``i``; others must be absent."""
        deg = self.degree(i)
        cs = [self.field.zero] * (deg + 1)
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError("polynomial involves other variables")
            cs[e[i]] = c
        return UniPoly(cs, self.field, var or self.names[i])

    def coefficients_in(self, i: int) -> dict[int, MultiPoly]:
        """Split by powers of variable ``i``."""
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            out.setdefault(e[i], {})[ne] = c
        return {k: self._like(v) for k, v in out.items()}

    @classmethod
    def from_unipoly(cls, p: UniPoly, i: int, names: Sequence[str]) -> MultiPoly:
        n = len(names)
        terms = {}
        for k, c in enumerate(p.coeffs):
            if c:
                terms[tuple(k if j == i else 0 for j in range(n))] = c
        return cls(terms, names, p.field, _raw=True)

    def compose(self, subs: Sequence[MultiPoly]) -> MultiPoly:
        """Substitute polynomials (sharing one variable list) for each variable."""
        return self.eval(subs, one=MultiPoly.constant(1, subs[0].names, subs[0].field))

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Any]]:
        """Terms in descending graded-lex order (deterministic serialization)."""
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(self.names, e) if k)
            cs = format_rational(c) if isinstance(c, (int, Fraction)) else f"({c!r})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_from_dict(d: Mapping[Iterable[int], Any], names: Sequence[str], field: Field = QQ) -> MultiPoly:
    return MultiPoly({tuple(k): v for k, v in d.items()}, names, field)
