from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from _tally import tick
from strategies import distinct_roots, nonzero_rationals, rationals
from teichcurves.errors import ChartUndefinedError, NotProjectivePointError
from teichcurves.exactfield import QQ, UniPoly, discriminant
from teichcurves.genus2 import (QuadraticDifferential, QuinticModel, WeightedPoint, chart, chart_normalizer,
                                differential_double_zero, ic_jacobian, igusa_clebsch, igusa_clebsch_sextic,
                                weighted_equal)
from teichcurves.modulardata.cert import cached_cert

A_REF = (24, 52, -8, -12, -2)


def wp(*c):
    return WeightedPoint(*(Fraction(x) for x in c))


def test_reference_invariants():
    P = igusa_clebsch(QuinticModel(A_REF))
    assert weighted_equal(P, wp(56, -32, -348, -324))
    assert P.I10 == discriminant(QuinticModel(A_REF).poly())


def test_degenerate_model_has_zero_I10():
    assert igusa_clebsch(QuinticModel((0, 0, 0, 0, 0))).I10 == 0
    m = QuinticModel(tuple(UniPoly.from_roots([1, 1, 2, 3, 4]).coeffs[:5]))
    assert igusa_clebsch(m).I10 == 0


def test_weighted_equal_examples():
    P = wp(56, -32, -348, -324)
    assert weighted_equal(P, wp(4 * 56, 16 * -32, 64 * -348, 1024 * -324))
    assert not weighted_equal(wp(96, 144, 4032, 0), wp(96, 289, 8092, 0))
    with pytest.raises(NotProjectivePointError):
        weighted_equal(wp(0, 0, 0, 0), P)


def test_reference_curve_matches_surface_point():
    cert = cached_cert()
    lhs = igusa_clebsch(QuinticModel(A_REF))
    rhs = cert.icd.evaluate((Fraction(-3, 8), Fraction(-1, 2)))
    assert weighted_equal(lhs, rhs)


def test_family_invariants_at_zero_against_float_roots():
    cert = cached_cert()
    a0 = tuple(c(Fraction(0)) for c in cert.family_a)
    m = QuinticModel(a0)
    roots = np.roots([1.0] + [float(c) for c in reversed(a0)])
    disc = np.prod([(x - y) ** 2 for x, y in combinations(roots, 2)])
    exact = float(igusa_clebsch(m).I10)
    assert abs(disc.real - exact) <= 1e-8 * max(1.0, abs(exact))
    assert abs(disc.imag) <= 1e-8 * max(1.0, abs(exact))


def test_reference_jacobian_rank():
    assert ic_jacobian(QuinticModel(A_REF)).rank() == 3


def test_chart_undefined():
    with pytest.raises(ChartUndefinedError):
        chart_normalizer(wp(0, 0, 0, 5))
    assert chart_normalizer(wp(0, 3, 1, 1)) == 1


def test_double_zero_examples():
    assert differential_double_zero((0, 1, 0))
    assert not differential_double_zero((1, 0, 1))
    assert differential_double_zero((0, 0, 1))
    with pytest.raises(ValueError):
        differential_double_zero((0, 0, 0))
    with pytest.raises(ValueError):
        QuadraticDifferential((1, 2))


def test_general_sextic_I2_formula():
    c = [Fraction(x) for x in (3, -1, 4, 1, -5, 9, 2)]
    P = igusa_clebsch_sextic(c)
    expect = -240 * c[0] * c[6] + 40 * c[1] * c[5] - 16 * c[2] * c[4] + 6 * c[3] ** 2
    assert P.I2 == expect


# ---------------------------------------------------------------- properties

quintics = st.lists(rationals(30, 4), min_size=5, max_size=5).map(tuple)


@settings(max_examples=60)
@given(quintics)
def test_I10_is_discriminant(a):
    tick()
    m = QuinticModel(a)
    assert igusa_clebsch(m).I10 == m.discriminant()


@settings(max_examples=100)
@given(st.lists(rationals(), min_size=4, max_size=4), nonzero_rationals(6, 3), nonzero_rationals(6, 3))
def test_weighted_equal_scaling_invariance(c, lam, mu):
    tick()
    assume(any(c))
    P = wp(*c)
    assert weighted_equal(P, P.scaled(lam))
    assert weighted_equal(P.scaled(mu), P.scaled(lam))
    Q = P.scaled(lam)
    R = Q.scaled(mu)
    assert weighted_equal(P, R) and weighted_equal(R, P)


@settings(max_examples=40)
@given(quintics, nonzero_rationals(5, 3))
def test_invariants_under_weighted_substitution(a, u):
    """w -> u w rescales the quintic; the invariants stay in one orbit."""
    tick()
    m = QuinticModel(a)
    assume(m.is_nondegenerate())
    # z^2 = f(w) with w = u W, z = u^(5/2) Z gives W^5 + a4/u W^4 + ... + a0/u^5
    b = tuple(a[i] / u ** (5 - i) for i in range(5))
    assert weighted_equal(igusa_clebsch(m), igusa_clebsch(QuinticModel(b)))


@settings(max_examples=40)
@given(quintics, rationals(10, 3))
def test_invariants_under_translation(a, h):
    tick()
    m = QuinticModel(a)
    assume(m.is_nondegenerate())
    w = UniPoly.x(QQ)
    g = m.poly().compose(w + h)
    assert weighted_equal(igusa_clebsch(m), igusa_clebsch(QuinticModel(tuple(g.coeffs[:5]))))


@settings(max_examples=25)
@given(distinct_roots(), st.lists(st.integers(-3, 3), min_size=5, max_size=5).filter(any))
def test_jacobian_finite_difference(roots, v):
    tick()
    a = tuple(UniPoly.from_roots(roots).coeffs[:5])
    m = QuinticModel(a)
    P = igusa_clebsch(m)
    assume(P.I2 != 0)
    J = ic_jacobian(m, 0)
    eps = 1e-6
    base = np.array([float(c) for c in chart(P, 0)])
    a_f = [float(x) for x in a]
    shifted = QuinticModel(tuple(Fraction(x + eps * d) for x, d in zip(a_f, v)))
    moved = np.array([float(c) for c in chart(igusa_clebsch(shifted), 0)])
    fd = (moved - base) / eps
    exact = np.array([float(x) for x in J.apply([Fraction(d) for d in v])])
    scale = max(1.0, float(np.max(np.abs(exact))))
    assert np.max(np.abs(fd - exact)) <= 1e-3 * scale
