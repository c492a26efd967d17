"""Parser for polynomials typeset in TeX, e.g. ``(2+2 \\sqrt{17})r^2 - 64 s``.

Juxtaposition is multiplication.  Supported atoms: integers, the declared
variable letters, parentheses / braces / ``\\left( ... \\right)``,
``\\frac{..}{..}`` with constant denominator and ``\\sqrt{m}`` where sqrt(m)
lies in the coefficient field.  Anything ambiguous, such as a digit glued to
a variable (``s0``) or an unbraced multi-digit exponent, raises
``TexParseError`` instead of being guessed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from ..errors import DataFormatError
from ..exactfield import QQ, Field, MultiPoly, QuadraticField


class TexParseError(DataFormatError):
    pass


_SKIP = re.compile(r"(\\[,;!: ]|\\quad|\\qquad|\\left|\\right|\\big|\\Big|\\cdot|\*|\s)+")


class _Parser:
    def __init__(self, text: str, names: Sequence[str], field: Field) -> None:
        self.s = text
        self.i = 0
        self.names = tuple(names)
        self.field = field

    # lexing helpers ---------------------------------------------------------
    def skip(self) -> None:
        while True:
            m = _SKIP.match(self.s, self.i)
            if not m or m.end() == self.i:
                return
            self.i = m.end()

    def peek(self) -> str:
        self.skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def startswith(self, tok: str) -> bool:
        self.skip()
        return self.s.startswith(tok, self.i)

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.i += 1

    def fail(self, msg: str) -> None:
        lo = max(0, self.i - 15)
        raise TexParseError(f"{msg} at offset {self.i} near {self.s[lo:self.i + 15]!r}")

    # grammar -----------------------------------------------------------------
    def parse(self) -> MultiPoly:
        out = self.expr()
        if self.peek():
            self.fail("trailing input")
        return out

    def expr(self) -> MultiPoly:
        sign = 1
        c = self.peek()
        if c and c in "+-":
            sign = -1 if c == "-" else 1
            self.i += 1
        acc = self.term() * sign
        while True:
            c = self.peek()
            if c not in ("+", "-"):
                return acc
            self.i += 1
            t = self.term()
            acc = acc + t if c == "+" else acc - t

    def term(self) -> MultiPoly:
        acc = self.factor()
        while True:
            c = self.peek()
            if not c or c in "+-)}]":
                return acc
            acc = acc * self.factor()

    def factor(self) -> MultiPoly:
        base = self.atom()
        if self.peek() == "^":
            self.i += 1
            base = base ** self.exponent()
        return base

    def exponent(self) -> int:
        c = self.peek()
        if c == "{":
            self.i += 1
            m = re.match(r"\s*(\d+)\s*\}", self.s[self.i:])
            if not m:
                self.fail("bad exponent")
            self.i += m.end()
            return int(m.group(1))
        if c.isdigit():
            self.i += 1
            nxt = self.s[self.i] if self.i < len(self.s) else ""
            if nxt.isdigit():
                self.fail("unbraced multi-digit exponent")
            return int(c)
        self.fail("bad exponent")
        return 0

    def const(self, v) -> MultiPoly:
        return MultiPoly.constant(v, self.names, self.field)

    def atom(self) -> MultiPoly:
        c = self.peek()
        if c.isdigit():
            m = re.match(r"\d+", self.s[self.i:])
            self.i += m.end()
            nxt = self.s[self.i] if self.i < len(self.s) else ""
            if nxt == ".":
                self.fail("decimal point in coefficient")
            return self.const(int(m.group(0)))
        if c in ("(", "{", "["):
            close = {"(": ")", "{": "}", "[": "]"}[c]
            self.i += 1
            inner = self.expr()
            self.expect(close)
            return inner
        if self.startswith("\\frac"):
            self.i += len("\\frac")
            self.expect("{")
            num = self.expr()
            self.expect("}")
            self.expect("{")
            den = self.expr()
            self.expect("}")
            if den.total_degree() > 0 or not den:
                self.fail("non-constant denominator")
            return num * (self.field.one / den.terms[(0,) * len(self.names)])
        if self.startswith("\\sqrt"):
            self.i += len("\\sqrt")
            self.expect("{")
            m = re.match(r"\s*(\d+)\s*\}", self.s[self.i:])
            if not m:
                self.fail("bad radicand")
            self.i += m.end()
            n = int(m.group(1))
            if isinstance(self.field, QuadraticField):
                return self.const(self.field.sqrt_of(n))
            root = QQ.sqrt(Fraction(n))
            if root is None:
                self.fail(f"sqrt({n}) outside the coefficient field")
            return self.const(root)
        if c and c in self.names:
            self.i += 1
            nxt = self.s[self.i] if self.i < len(self.s) else ""
            if nxt.isdigit():
                self.fail(f"digit glued to variable {c!r}")
            if nxt.isalpha() and nxt not in self.names:
                self.fail(f"unknown identifier starting {c + nxt!r}")
            return MultiPoly.var(self.names.index(c), self.names, self.field)
        self.fail(f"unexpected {c!r}")
        return self.const(0)


def parse_tex_poly(text: str, names: Sequence[str] = ("r", "s"), field: Field = QQ) -> MultiPoly:
    """Parse a TeX polynomial body (no ``name(vars) =`` prefix)."""
    return _Parser(text, names, field).parse()


_HEAD = re.compile(r"^\s*([A-Za-z]+)_\{?(\d+)\}?(\^\{?(\d)\}?)?\s*\(([^)]*)\)\s*=\s*")


def split_definition(text: str) -> tuple[str, int, int | None, tuple[str, ...], str]:
    """``w_{12}(r,s) = body`` -> ("w", 12, None, ("r","s"), body)."""
    m = _HEAD.match(text)
    if not m:
        raise TexParseError(f"not a polynomial definition: {text[:40]!r}")
    names = tuple(v.strip() for v in m.group(5).split(","))
    comp = int(m.group(4)) if m.group(4) is not None else None
    return m.group(1), int(m.group(2)), comp, names, text[m.end():]
