from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from _tally import tick
from strategies import distinct_roots, rationals
from teichcurves.errors import SingularModelError
from teichcurves.exactfield import QQ, QuadraticField, UniPoly
from teichcurves.genus2 import QuinticModel
from teichcurves.pairing import (coefficients_from_roots, matrix_M, matrix_N, m_values, pairing, power_sums,
                                 trace_Mk, verify_NrMada)


def root_sum_Mk(roots, k):
    """Oracle: sum over roots of r^(k-2) / f'(r)^2, from the factored form."""
    total = Fraction(0)
    for i, r in enumerate(roots):
        fp = Fraction(1)
        for j, s in enumerate(roots):
            if j != i:
                fp *= r - s
        total += Fraction(r) ** (k - 2) / fp ** 2
    return total


def test_split_quintic_against_root_sums():
    roots = [1, 2, 3, 4, 5]
    m = QuinticModel(coefficients_from_roots(roots))
    for k in range(2, 9):
        assert trace_Mk(m, k) == root_sum_Mk(roots, k)


def test_roots_of_unity_M2_vanishes():
    m = QuinticModel((-1, 0, 0, 0, 0))
    assert trace_Mk(m, 2) == 0


def test_reference_M_matrix():
    m = QuinticModel((24, 52, -8, -12, -2))
    rows = [[95, -8, 74, 328, 44], [-8, 74, 328, 44, 2752], [74, 328, 44, 2752, 5000]]
    assert matrix_M(m).rows == [[Fraction(x, 2 ** 8 * 3 ** 6) for x in r] for r in rows]


def test_hankel_structure():
    m = QuinticModel((3, -1, 2, 0, 7))
    M = matrix_M(m)
    for j in range(3):
        for k in range(5):
            assert M.rows[j][k] == trace_Mk(m, j + k + 2)


def test_matrix_N_entry_and_columns():
    N = matrix_N([0, 1, 2, 3, 4])
    assert N.rows[0][0] == Fraction(-1, 24)
    for j, r in enumerate([0, 1, 2, 3, 4]):
        col = [N.rows[i][j] for i in range(3)]
        assert col[1] == col[0] * r and col[2] == col[0] * r * r


def test_matrix_N_permutation():
    r = [Fraction(x) for x in (3, -1, 5, 0, 2)]
    perm = [2, 0, 4, 1, 3]
    N = matrix_N(r)
    Np = matrix_N([r[i] for i in perm])
    for i in range(3):
        assert [Np.rows[i][j] for j in range(5)] == [N.rows[i][p] for p in perm]


def test_pairing_identity_reference_roots():
    chk = verify_NrMada([1, 2, 3, 4, 5])
    assert chk.holds
    assert not chk.literal_holds


def test_repeated_roots_rejected():
    with pytest.raises(SingularModelError):
        verify_NrMada([1, 1, 2, 3, 4])
    with pytest.raises(SingularModelError):
        trace_Mk(QuinticModel((0, 0, 0, 0, 0)), 3)
    with pytest.raises(ValueError):
        trace_Mk(QuinticModel((1, 0, 0, 0, 0)), 9)


def test_pairing_bilinear_form():
    m = QuinticModel((24, 52, -8, -12, -2))
    M = matrix_M(m)
    assert pairing([0, 1, 0], M, [1, 0, 0, 0, 0]) == M.rows[1][0]


def test_power_sums_newton():
    f = UniPoly.from_roots([1, 2, 3])
    assert power_sums(f, 4) == [3, 6, 14, 36]


# ---------------------------------------------------------------- properties

@settings(max_examples=100)
@given(distinct_roots())
def test_pairing_identity_random_roots(roots):
    tick()
    assert verify_NrMada(roots).holds


@settings(max_examples=40)
@given(distinct_roots())
def test_trace_matches_root_sums(roots):
    tick()
    m = QuinticModel(coefficients_from_roots(roots))
    vals = m_values(m)
    for k in range(2, 9):
        assert vals[k] == root_sum_Mk(roots, k)


@settings(max_examples=40)
@given(st.lists(rationals(20, 3), min_size=5, max_size=5))
def test_disc_times_M_is_polynomial_in_a(a):
    """Disc * M_k is integral over Z[a] at integral points (checked via denominators)."""
    tick()
    a = [Fraction(int(x)) for x in a]
    m = QuinticModel(tuple(a))
    if not m.is_nondegenerate():
        return
    disc = m.discriminant()
    for v in m_values(m).values():
        assert (v * disc).denominator == 1


@settings(max_examples=40)
@given(st.sampled_from((5, 12, 17, 44)), st.lists(st.tuples(rationals(8, 3), rationals(8, 3)), min_size=5, max_size=5))
def test_galois_equivariance_of_M(D, pairs):
    tick()
    K = QuadraticField(D)
    a = tuple(K(u) + K.gen * v for u, v in pairs)
    m = QuinticModel(a, K)
    if not m.is_nondegenerate():
        return
    conj = QuinticModel(tuple(x.conjugate() for x in a), K)
    M, Mc = matrix_M(m), matrix_M(conj)
    assert [[x.conjugate() for x in row] for row in M.rows] == Mc.rows
