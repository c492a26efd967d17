"""Dense univariate polynomials over F_p as int lists (low degree first).

Small and fast enough for the degree <= 30 polynomials met in singular-prime
witness searches.  Includes Cantor-Zassenhaus factorization and arithmetic in
F_p[x]/(m) for irreducible m.
"""

from __future__ import annotations

import random
from typing import Sequence

Poly = list  # list[int], trimmed, low degree first


def trim(a: Sequence[int], p: int) -> Poly:
    out = [c % p for c in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def deg(a: Poly) -> int:
    return len(a) - 1


def add(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)], p)


def sub(a: Poly, b: Poly, p: int) -> Poly:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p)


def scale(a: Poly, c: int, p: int) -> Poly:
    return trim([x * c for x in a], p)


def mul(a: Poly, b: Poly, p: int) -> Poly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, p)


def divmod_(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] * inv % p
        q[i] = c
        if c:
            for j, y in enumerate(b):
                a[i + j] = (a[i + j] - c * y) % p
    return trim(q, p), trim(a[:len(b) - 1], p)


def mod(a: Poly, b: Poly, p: int) -> Poly:
    return divmod_(a, b, p)[1]


def monic(a: Poly, p: int) -> Poly:
    if not a:
        return a
    return scale(a, pow(a[-1], p - 2, p), p)


def gcd(a: Poly, b: Poly, p: int) -> Poly:
    a, b = trim(a, p), trim(b, p)
    while b:
        a, b = b, mod(a, b, p)
    return monic(a, p)


def xgcd(a: Poly, b: Poly, p: int) -> tuple[Poly, Poly, Poly]:
    """(g, s, t) with s a + t b = g monic."""
    r0, r1 = trim(a, p), trim(b, p)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], p - 2, p)
    return scale(r0, inv, p), scale(s0, inv, p), scale(t0, inv, p)


def powmod(a: Poly, e: int, m: Poly, p: int) -> Poly:
    out, base = [1], mod(a, m, p)
    while e:
        if e & 1:
            out = mod(mul(out, base, p), m, p)
        base = mod(mul(base, base, p), m, p)
        e >>= 1
    return out


def derivative(a: Poly, p: int) -> Poly:
    return trim([i * a[i] for i in range(1, len(a))], p)


def evaluate(a: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


# --------------------------------------------------------------------------
# factorization
# --------------------------------------------------------------------------

def _pth_root(a: Poly, p: int) -> Poly:
    # over F_p the coefficients are fixed by Frobenius
    return trim([a[i] for i in range(0, len(a), p)], p)


def squarefree_factorization(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Yun-style decomposition valid in characteristic p."""
    f = monic(trim(f, p), p)
    if deg(f) < 1:
        return []
    out: list[tuple[Poly, int]] = []
    fp = derivative(f, p)
    if not fp:
        return [(g, e * p) for g, e in squarefree_factorization(_pth_root(f, p), p)]
    c = gcd(f, fp, p)
    w = divmod_(f, c, p)[0]
    i = 1
    while deg(w) > 0:
        y = gcd(w, c, p)
        z = divmod_(w, y, p)[0]
        if deg(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = divmod_(c, y, p)[0]
    if deg(c) > 0:
        out += [(g, e * p) for g, e in squarefree_factorization(_pth_root(c, p), p)]
    return out


def distinct_degree(f: Poly, p: int) -> list[tuple[Poly, int]]:
    """Split a squarefree monic f into products of irreducibles of equal degree."""
    out = []
    h = [0, 1]
    k = 0
    f = monic(f, p)
    while deg(f) >= 2 * (k + 1):
        k += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, [0, 1], p), p)
        if deg(g) > 0:
            out.append((g, k))
            f = divmod_(f, g, p)[0]
            h = mod(h, f, p)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def _equal_degree(f: Poly, d: int, p: int, rng: random.Random) -> list[Poly]:
    n = deg(f)
    if n == d:
        return [f]
    while True:
        a = trim([rng.randrange(p) for _ in range(n)], p)
        if deg(a) < 1:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, cur = a, a
            for _ in range(d - 1):
                cur = mod(mul(cur, cur, p), f, p)
                t = add(t, cur, p)
            g = gcd(f, t, p)
        else:
            g = gcd(f, sub(powmod(a, (p ** d - 1) // 2, f, p), [1], p), p)
        if 0 < deg(g) < n:
            return _equal_degree(g, d, p, rng) + _equal_degree(divmod_(f, g, p)[0], d, p, rng)


def factor(f: Poly, p: int, seed: int = 0) -> list[tuple[Poly, int]]:
    """Monic irreducible factors with multiplicities (Cantor-Zassenhaus)."""
    rng = random.Random(seed)
    out = []
    for g, e in squarefree_factorization(f, p):
        for h, d in distinct_degree(g, p):
            out += [(q, e) for q in _equal_degree(h, d, p, rng)]
    return sorted(out, key=lambda t: (deg(t[0]), t[0]))


def is_irreducible(f: Poly, p: int) -> bool:
    fs = factor(f, p)
    return len(fs) == 1 and fs[0][1] == 1


# --------------------------------------------------------------------------
# F_p[x]/(m) and polynomials over it
# --------------------------------------------------------------------------

class ExtField:
    """F_{p^k} = F_p[x]/(m) for monic irreducible m; elements are int lists."""

    def __init__(self, p: int, m: Poly) -> None:
        self.p = p
        self.m = monic(trim(m, p), p)
        self.k = deg(self.m)

    def red(self, a: Poly) -> Poly:
        return mod(trim(a, self.p), self.m, self.p)

    def add(self, a: Poly, b: Poly) -> Poly:
        return add(a, b, self.p)

    def sub(self, a: Poly, b: Poly) -> Poly:
        return sub(a, b, self.p)

    def mul(self, a: Poly, b: Poly) -> Poly:
        return mod(mul(a, b, self.p), self.m, self.p)

    def inv(self, a: Poly) -> Poly:
        g, s, _ = xgcd(a, self.m, self.p)
        if g != [1]:
            raise ZeroDivisionError("not invertible in the extension")
        return s

    def poly_trim(self, f: list[Poly]) -> list[Poly]:
        f = [self.red(c) for c in f]
        while f and not f[-1]:
            f.pop()
        return f

    def poly_mod(self, a: list[Poly], b: list[Poly]) -> list[Poly]:
        a = self.poly_trim(a)
        b = self.poly_trim(b)
        inv = self.inv(b[-1])
        while len(a) >= len(b):
            c = self.mul(a[-1], inv)
            shift = len(a) - len(b)
            for j, y in enumerate(b):
                a[shift + j] = self.sub(a[shift + j], self.mul(c, y))
            a = self.poly_trim(a)
        return a

    def poly_gcd(self, a: list[Poly], b: list[Poly]) -> list[Poly]:
        a, b = self.poly_trim(a), self.poly_trim(b)
        while b:
            a, b = b, self.poly_mod(a, b)
        if not a:
            return a
        inv = self.inv(a[-1])
        return [self.mul(c, inv) for c in a]

    def poly_eval(self, f: list[Poly], x: Poly) -> Poly:
        acc: Poly = []
        for c in reversed(f):
            acc = self.add(self.mul(acc, x), c)
        return acc
