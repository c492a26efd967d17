import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from _tally import tick
from teichcurves.arithlab import (PlaneCurveModel, n_of_D, prime_support, singular_primes,
                                  singular_primes_hyperelliptic, singular_primes_quartic)
from teichcurves.arithlab import ffpoly, groebner
from teichcurves.arithlab.divisors import (LineInCurveError, form_zero_divisor, hyperelliptic_vertical_divisor,
                                           line_quartic_intersection)
from teichcurves.arithlab.elliptic import EllipticCurve, first_rational_multiple
from teichcurves.arithlab.mordell import mordell_report, w44_curve
from teichcurves.arithlab.singular import (NonIntegralModelError, chart_singular_mod_p, charts, find_witness)
from teichcurves.errors import SingularCurveError
from teichcurves.exactfield import QQ, MultiPoly, PrimeField, QuadraticField, UniPoly
from teichcurves.modulardata.registry import load_record
from teichcurves.modulardata.serialize import poly_from_json, unipoly_from_json

X, Y = MultiPoly.gens(("x", "y"))
TABLE = {21: [2, 3, 5, 7], 44: [2, 5, 11], 53: [2, 11, 13, 53], 56: [2, 5, 7, 13],
         60: [2, 3, 5, 7, 11], 61: [2, 3, 5, 13, 61]}


# ---------------------------------------------------------------- N(D)

def test_n_of_D_examples():
    assert n_of_D(12) == 48
    assert n_of_D(44) == 12320 and prime_support(12320) == [2, 5, 7, 11]
    assert n_of_D(5) == 10


# ---------------------------------------------------------------- singular primes

@pytest.mark.parametrize("D", sorted(TABLE))
def test_singular_primes_reproduce_table(D):
    res = singular_primes(PlaneCurveModel.from_record(load_record(D)))
    assert res.primes == TABLE[D]
    assert set(res.primes) <= set(prime_support(n_of_D(D)))
    if D in (56, 60):
        assert res.method == "quartic-elimination"
        for p, entry in res.details["per_prime"].items():
            assert entry["witness"] is not None, p


def test_cubic_example():
    w = UniPoly.x(QQ, "x")
    m = PlaneCurveModel.hyperelliptic(UniPoly([], QQ, "x"), -(w ** 3 - w))
    assert singular_primes_hyperelliptic(m).primes == [2]


def test_fermat_quartic():
    res = singular_primes_quartic(X ** 4 + Y ** 4 + 1)
    assert set(res.primes) <= {2}
    for p in (3, 5, 7):
        assert not any(chart_singular_mod_p(c, p) for c in charts(X ** 4 + Y ** 4 + 1))


def test_non_integral_model():
    with pytest.raises(NonIntegralModelError):
        singular_primes_quartic(X ** 4 + Y ** 4 * Fraction(1, 3) + 1)
    with pytest.raises(NonIntegralModelError):
        singular_primes(PlaneCurveModel.from_record(load_record(73)))


def _witness_holds(c: MultiPoly, w) -> bool:
    """Evaluate c, c_u, c_v at the witness point in F_p[x]/(minpoly)."""
    p = w.p
    E = ffpoly.ExtField(p, w.minpoly)
    alpha = E.red([0, 1])
    fib = E.poly_trim(w.fiber)
    if len(fib) != 2:
        return len(fib) > 2  # a common zero exists in a further extension
    beta = E.mul(E.sub([], fib[0]), E.inv(fib[1]))
    u, v = (alpha, beta) if w.eliminated == c.names[0] else (beta, alpha)

    def ev(f: MultiPoly):
        acc = []
        for e, coeff in f.terms.items():
            term = [int(coeff) % p]
            for _ in range(e[0]):
                term = E.mul(term, u)
            for _ in range(e[1]):
                term = E.mul(term, v)
            acc = E.add(acc, term)
        return acc

    return all(not ev(f) for f in (c, c.diff(0), c.diff(1)))


def test_quartic_witnesses_verify():
    for D in (56, 60):
        g = poly_from_json(load_record(D).model["g"])
        cs = charts(g)
        for p in TABLE[D]:
            hit = [i for i, c in enumerate(cs) if chart_singular_mod_p(c, p)]
            assert hit
            w = find_witness(cs[hit[0]], p, hit[0])
            assert w is not None and _witness_holds(cs[hit[0]], w)


# ---------------------------------------------------------------- finite fields

small_primes = st.sampled_from([2, 3, 5, 7, 11, 13, 31])


@settings(max_examples=80)
@given(small_primes, st.lists(st.integers(0, 40), min_size=2, max_size=9))
def test_factorization_matches_sympy(p, cs):
    tick()
    f = ffpoly.trim(cs, p)
    assume(len(f) >= 2)
    f = ffpoly.monic(f, p)
    fac = ffpoly.factor(f, p, seed=len(cs))
    prod = [1]
    for q, e in fac:
        assert ffpoly.is_irreducible(q, p)
        for _ in range(e):
            prod = ffpoly.mul(prod, q, p)
    assert prod == f
    x = sympy.Symbol("x")
    ref = sympy.Poly(list(reversed(f)), x, modulus=p).factor_list()[1]
    assert sorted((q.degree(), e) for q, e in ref) == sorted((len(q) - 1, e) for q, e in fac)


@settings(max_examples=40)
@given(small_primes, st.lists(st.integers(0, 30), min_size=1, max_size=6),
       st.lists(st.integers(0, 30), min_size=1, max_size=6))
def test_xgcd_over_prime_field(p, a, b):
    tick()
    a, b = ffpoly.trim(a, p), ffpoly.trim(b, p)
    assume(a or b)
    g, s, t = ffpoly.xgcd(a, b, p)
    assert ffpoly.add(ffpoly.mul(s, a, p), ffpoly.mul(t, b, p), p) == g
    if a:
        assert not ffpoly.mod(a, g, p)


@st.composite
def planted_singular(draw):
    """A bivariate integer polynomial singular at a chosen F_p point."""
    p = draw(st.sampled_from([2, 3, 5, 7, 11]))
    a, b = draw(st.integers(0, p - 1)), draw(st.integers(0, p - 1))
    u = X - a
    v = Y - b
    c = MultiPoly.constant(0, ("x", "y"))
    for mono in (u * u, u * v, v * v, u ** 3, v ** 3, u * u * v):
        c = c + mono * draw(st.integers(-6, 6))
    c = c + u ** 4 * draw(st.integers(1, 5)) + Y ** 4 * p * draw(st.integers(-3, 3))
    return p, c


@settings(max_examples=40)
@given(planted_singular())
def test_planted_singularity_found_with_witness(data):
    tick()
    p, c = data
    assert chart_singular_mod_p(c, p)
    w = find_witness(c, p)
    assert w is not None and _witness_holds(c, w)


@settings(max_examples=40)
@given(st.sampled_from([3, 5, 7, 11, 13]),
       st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-9, 9), min_size=2, max_size=7))
def test_buchberger_sound(p, terms):
    """Whenever the ideal test reports a singular point, a witness exists."""
    tick()
    c = MultiPoly(terms, ("x", "y"), QQ)
    assume(c.total_degree() >= 2)
    if chart_singular_mod_p(c, p):
        w = find_witness(c, p)
        assert w is not None and _witness_holds(c, w)


@settings(max_examples=40)
@given(st.sampled_from([5, 7, 13]), st.integers(0, 12), st.integers(0, 12),
       st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_groebner_common_zero_not_unit(p, a, b, cs):
    tick()
    f = {(1, 0): 1, (0, 0): -a}  # x - a
    g = {(0, 2): cs[0], (1, 1): cs[1], (0, 1): -cs[1] * a + cs[2], (0, 0): -cs[0] * b * b - cs[2] * b}
    g = groebner.normalize(g, p)
    assert not groebner.is_unit_ideal([f, g, {(0, 1): 1, (0, 0): -b}], p)
    G = groebner.groebner_basis([f, {(0, 1): 1, (0, 0): -b}], p)
    assert not groebner.reduce(g, G, p)
    assert groebner.is_unit_ideal([f, {(1, 0): 1, (0, 0): -a - 1}], p)


# ---------------------------------------------------------------- elliptic curves

def test_j_invariant_examples():
    assert EllipticCurve(0, 0, 0, -1, 0).j_invariant() == 1728
    assert EllipticCurve(0, 0, 0, 0, -1).j_invariant() == 0
    with pytest.raises(SingularCurveError):
        EllipticCurve(0, 0, 0, 0, 0)


def test_w44_report():
    rep = mordell_report(18)
    assert rep.j == Fraction(479 ** 3, 11 * 2 ** 5 * 5 ** 5)
    assert all(r["ok"] for r in rep.rows) and len(rep.rows) == 9
    assert rep.difference_rational and rep.rational_multiple is None
    assert rep.ok


def test_w44_specific_relation():
    E, table = w44_curve()
    K = E.field
    from teichcurves.modulardata.serialize import coeff_from_json
    P1 = E.point(*(coeff_from_json(table["generators"]["P1"][k], K) for k in ("x", "y")))
    P2 = E.point(*(coeff_from_json(table["generators"]["P2"][k], K) for k in ("x", "y")))
    Q = P1 * 6 - P2 * 9
    assert Q.x == -9 and Q.y == K.sqrt_of(11) * 10


def _points_mod_p(E, F):
    pts = []
    for x in F.elements():
        for y in F.elements():
            P = type(E.zero)(E, x, y)
            if E.contains(P):
                pts.append(P)
    return pts


@st.composite
def fp_curve_triples(draw):
    p = draw(st.sampled_from([5, 7, 11, 13, 17]))
    rng = random.Random(draw(st.integers(0, 2 ** 32)))
    F = PrimeField(p)
    while True:
        try:
            E = EllipticCurve(*(rng.randrange(p) for _ in range(5)), field=F)
            break
        except SingularCurveError:
            continue
    pts = _points_mod_p(E, F) + [E.zero]
    return E, [rng.choice(pts) for _ in range(3)]


@settings(max_examples=60)
@given(fp_curve_triples())
def test_group_axioms_finite_field(data):
    tick()
    E, (P, Q, R) = data
    assert (P + Q) + R == P + (Q + R)
    assert P + Q == Q + P
    assert (P + (-P)).is_zero
    for n in range(1, 6):
        assert (P + Q) * n == P * n + Q * n
    assert E.contains(P + Q)


@settings(max_examples=50)
@given(st.lists(st.tuples(st.integers(-2, 2), st.integers(-2, 2)), min_size=3, max_size=3))
def test_group_axioms_w44(coeffs):
    tick()
    E, table = w44_curve()
    from teichcurves.modulardata.serialize import coeff_from_json
    K = E.field
    P1 = E.point(*(coeff_from_json(table["generators"]["P1"][k], K) for k in ("x", "y")))
    P2 = E.point(*(coeff_from_json(table["generators"]["P2"][k], K) for k in ("x", "y")))
    A, B, C = (P1 * m + P2 * n for m, n in coeffs)
    assert (A + B) + C == A + (B + C)
    assert (A + (-A)).is_zero
    assert E.contains(A + B)


def test_first_rational_multiple():
    E = EllipticCurve(0, 0, 0, -1, 0)
    P = E.point(0, 0)
    assert first_rational_multiple(P, 3) == 1


# ---------------------------------------------------------------- divisors

def _model(D):
    return PlaneCurveModel.from_record(load_record(D))


def test_D53_form_divisor():
    m = _model(53)
    K = QuadraticField(53)
    form = load_record(53).extras["canonical_forms"][0]
    lin = unipoly_from_json(form["linear_factor"])
    lin = lin.map_coeffs(K, K) if lin.field != K else lin
    mK = PlaneCurveModel(m.kind, m.g.map_coeffs(K, K), m.h.map_coeffs(K, K), m.f.map_coeffs(K, K))
    div = form_zero_divisor(mK, lin)
    assert div.degree == 2


def test_D56_line():
    rec = load_record(56)
    g = poly_from_json(rec.model["g"])
    line = poly_from_json(rec.extras["canonical_lines"][0]["form"])
    div = line_quartic_intersection(g, line)
    assert div.degree == 4


def test_vertical_divisor_degree():
    m = _model(44)
    for x0 in (0, 1, -3, Fraction(1, 2)):
        assert hyperelliptic_vertical_divisor(m, x0).degree == 2


def test_line_through_quartic():
    g = X ** 4 + Y ** 4 + 1
    Xh, Yh, Zh = MultiPoly.gens(("X", "Y", "Z"))
    rng = random.Random(7)
    for _ in range(5):
        line = Xh * rng.randint(1, 9) + Yh * rng.randint(-9, 9) + Zh * rng.randint(-9, 9)
        assert line_quartic_intersection(g, line).degree == 4
    with pytest.raises(LineInCurveError):
        line_quartic_intersection((X - 1) * (X ** 3 + Y ** 3 + 1), Xh - Zh)
