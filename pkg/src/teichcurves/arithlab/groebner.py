"""Buchberger's algorithm over F_p with graded-lex order.

Polynomials are dicts {exponent tuple: residue}.  Only what is needed to
decide whether a small ideal is the unit ideal.
"""

from __future__ import annotations

from typing import Sequence

Poly = dict


def _key(e: tuple) -> tuple:
    return (sum(e),) + e


def lead(f: Poly) -> tuple:
    return max(f, key=_key)


def normalize(f: Poly, p: int) -> Poly:
    return {e: c % p for e, c in f.items() if c % p}


def _monic(f: Poly, p: int) -> Poly:
    lm = lead(f)
    inv = pow(f[lm], p - 2, p)
    return {e: c * inv % p for e, c in f.items()}


def _sub_mul(f: Poly, g: Poly, c: int, shift: tuple, p: int) -> Poly:
    out = dict(f)
    for e, v in g.items():
        ee = tuple(a + b for a, b in zip(e, shift))
        w = (out.get(ee, 0) - c * v) % p
        if w:
            out[ee] = w
        else:
            out.pop(ee, None)
    return out


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def reduce(f: Poly, G: Sequence[Poly], p: int) -> Poly:
    """Full normal form of f modulo monic G."""
    f = dict(f)
    rem: Poly = {}
    leads = [lead(g) for g in G]
    while f:
        lm = lead(f)
        c = f[lm]
        for g, lg in zip(G, leads):
            if _divides(lg, lm):
                shift = tuple(a - b for a, b in zip(lm, lg))
                f = _sub_mul(f, g, c, shift, p)
                break
        else:
            rem[lm] = c
            del f[lm]
    return rem


def _spoly(f: Poly, g: Poly, p: int) -> Poly:
    lf, lg = lead(f), lead(g)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    sf = tuple(a - b for a, b in zip(lcm, lf))
    sg = tuple(a - b for a, b in zip(lcm, lg))
    out = {tuple(a + b for a, b in zip(e, sf)): c for e, c in f.items()}
    return _sub_mul(out, g, 1, sg, p)


def groebner_basis(F: Sequence[Poly], p: int, max_pairs: int = 200_000) -> list[Poly]:
    G = [_monic(f, p) for f in (normalize(f, p) for f in F) if f]
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    done = 0
    while pairs:
        i, j = pairs.pop()
        done += 1
        if done > max_pairs:
            raise RuntimeError("Buchberger pair budget exhausted")
        li, lj = lead(G[i]), lead(G[j])
        if all(min(a, b) == 0 for a, b in zip(li, lj)):
            continue  # coprime leading monomials
        h = reduce(_spoly(G[i], G[j], p), G, p)
        if h:
            h = _monic(h, p)
            if all(v == 0 for v in lead(h)):
                return [h]
            G.append(h)
            pairs += [(k, len(G) - 1) for k in range(len(G) - 1)]
    return G


def is_unit_ideal(F: Sequence[Poly], p: int) -> bool:
    G = groebner_basis(F, p)
    return any(all(v == 0 for v in lead(g)) for g in G)
