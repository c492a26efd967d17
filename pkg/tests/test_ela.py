from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from _tally import tick
from strategies import nonzero_rationals, rationals
from teichcurves.cusps import cuspidal_polynomial
from teichcurves.errors import DegenerateFamilyError, FieldMismatchError, SingularModelError, TeichError
from teichcurves.exactfield import QQ, Matrix, QuadraticField, RationalFunctionField
from teichcurves.ela import (CERTIFIED, REJECTED, Eigenforms, LambdaQuadratic, certify_family, eigenform_kernel,
                             ela_run, factor_eigenforms, family_bad_polynomial, family_from_cert, run_point,
                             specialize_record)
from teichcurves.genus2 import QuinticModel, ic_jacobian
from teichcurves.modulardata.cert import cached_cert

CERT = cached_cert()


@pytest.fixture(scope="module")
def point_record():
    return run_point(CERT)


@pytest.fixture(scope="module")
def family_record():
    model, b = family_from_cert(CERT)
    return ela_run(CERT.icd, model, b)


# ---------------------------------------------------------------- eigenform factoring

def test_factor_examples():
    e = factor_eigenforms((0, 1, 0))
    assert e.lam == 1 and set(e.forms) == {(1, 0), (0, 1)}
    assert e.contains_dw_over_z()
    e = factor_eigenforms((1, 0, -1))
    assert isinstance(e, Eigenforms) and e.lam in (1, -1)
    q = factor_eigenforms((1, 1, 1))
    assert isinstance(q, LambdaQuadratic) and q.discriminant == -3
    with pytest.raises(ValueError):
        factor_eigenforms((0, 0, 0))


def test_factor_over_quadratic_field():
    K = QuadraticField(12)
    e = factor_eigenforms((1, 1, 1), K)
    assert isinstance(e, LambdaQuadratic)  # disc -3 is not a square in QQ(sqrt 12)
    e = factor_eigenforms((K(1), K(0), K(-3)), K)
    assert isinstance(e, Eigenforms) and e.lam * e.lam == 3


def test_degenerate_square():
    e = factor_eigenforms((1, 2, 1))
    assert e.degenerate and e.lam == 1


# ---------------------------------------------------------------- point run

def test_point_run(point_record):
    r = point_record
    assert r.status == CERTIFIED
    assert all(r.conditions.values())
    assert list(r.x) == [0, 1, 0] and r.lam == 1
    assert r.eigen.contains_dw_over_z()


def test_point_run_rejected_at_first_step():
    r = ela_run(CERT.icd, QuinticModel(CERT.point_a), (0, 0))
    assert r.status == REJECTED
    assert r.failing.startswith("ELA1")
    assert r.conditions == {"ELA1": False}


def test_degenerate_model_raises():
    with pytest.raises(SingularModelError, match="disc"):
        ela_run(CERT.icd, QuinticModel((0, 0, 0, 0, 0)), (0, 0))


def test_field_mismatch():
    K = QuadraticField(5)
    with pytest.raises(FieldMismatchError):
        ela_run(CERT.icd, QuinticModel(CERT.point_a), (K.gen, 0))
    # base change of rational data is allowed
    r = ela_run(CERT.icd, QuinticModel(tuple(K(x) for x in CERT.point_a), K), CERT.point_b)
    assert r.certified and r.field == K


def test_tangent_vectors_solve_chart_equation(point_record):
    """The printed tangent vectors satisfy the same chart-level system as L."""
    r = point_record
    m = QuinticModel(CERT.point_a)
    Ja = ic_jacobian(m, r.normalizer)
    Jb = CERT.icd.chart_jacobian(CERT.point_b, QQ, r.normalizer)
    V = Matrix.from_columns([CERT.tangent["v_r"], CERT.tangent["v_s"]])
    assert (Ja * V).rows == Jb.rows
    assert eigenform_kernel(r.M, V) == [[0, 1, 0]]


def test_point_run_is_deterministic(point_record):
    again = run_point(CERT)
    assert again.to_dict() == point_record.to_dict()


# ---------------------------------------------------------------- family run

def test_family_certified(family_record):
    r = family_record
    assert r.certified
    K = r.field
    assert isinstance(K, RationalFunctionField)
    assert [c for c in r.x] == [K.zero, K.one, K.zero]
    assert r.lam == K.one


def test_family_identity_and_nonconstancy(family_record):
    rep = certify_family(family_record, CERT.w_D)
    assert rep.w_identity and not rep.w_residual
    assert rep.nonconstant
    assert rep.fiber_degree == 1
    assert rep.status == CERTIFIED


def test_family_bad_polynomial_excludes_rank_drop(family_record):
    bad = family_bad_polynomial(family_record)
    base = family_record.field.base
    assert bad(base(0)) == 0
    assert bad(base(-1)) == 0
    a, b = specialize_record(family_record, -1)
    assert not ela_run(CERT.icd, a, b).certified


def test_perturbed_family_fails_first_step(family_record):
    K = family_record.field
    t = K.gen
    a = list(family_record.a)
    a[0] = a[0] + t
    r = ela_run(CERT.icd, QuinticModel(tuple(a), K), family_record.b)
    assert r.status == REJECTED and r.failing.startswith("ELA1")


def test_constant_family_rejected():
    K = RationalFunctionField(QQ, "t")
    a = tuple(K(c) for c in CERT.point_a)
    b = tuple(K(c) for c in CERT.point_b)
    r = ela_run(CERT.icd, QuinticModel(a, K), b)
    assert r.certified
    rep = certify_family(r, CERT.w_D)
    assert not rep.nonconstant and rep.status == REJECTED
    with pytest.raises(DegenerateFamilyError):
        cuspidal_polynomial(r, 12)


def test_certify_family_needs_function_field(point_record):
    with pytest.raises(TeichError):
        certify_family(point_record, CERT.w_D)


# ---------------------------------------------------------------- properties

@settings(max_examples=25)
@given(rationals(40, 9))
def test_specialization_matches_point_run(family_record, t0):
    tick()
    base = family_record.field.base
    t0 = base(t0)
    assume(family_bad_polynomial(family_record)(t0))
    a, b = specialize_record(family_record, t0)
    pr = ela_run(CERT.icd, a, b)
    assert pr.certified
    assert pr.x == tuple(c(t0) for c in family_record.x)
    assert pr.lam == family_record.lam(t0)


@settings(max_examples=20)
@given(rationals(40, 9).filter(bool))
def test_perturbed_specialization_fails(family_record, t0):
    tick()
    t0 = family_record.field.base(t0)
    assume(family_bad_polynomial(family_record)(t0))
    a, b = specialize_record(family_record, t0)
    moved = QuinticModel((a.a[0] + t0,) + a.a[1:])
    assume(moved.is_nondegenerate())
    assert ela_run(CERT.icd, moved, b).failing.startswith("ELA1")


@settings(max_examples=50)
@given(st.lists(rationals(6, 4), min_size=2, max_size=2), st.lists(rationals(6, 4), min_size=2, max_size=2))
def test_kernel_basis_invariance(point_record, c1, c2):
    """Adding kernel directions of d(IC o Y)_a to L leaves the eigenform line unchanged."""
    tick()
    r = point_record
    Ja = ic_jacobian(QuinticModel(CERT.point_a), r.normalizer)
    ker = Ja.nullspace()
    assert len(ker) == 2
    shift = Matrix.from_columns([[c1[0] * u + c1[1] * v for u, v in zip(*ker)],
                                 [c2[0] * u + c2[1] * v for u, v in zip(*ker)]])
    L2 = Matrix([[x + y for x, y in zip(ra, rb)] for ra, rb in zip(r.L.rows, shift.rows)])
    assert eigenform_kernel(r.M, L2) == [[0, 1, 0]]


def _root_line(form):
    a, b = form  # a w + b
    return ("inf",) if a == 0 else (-b / a,)


@settings(max_examples=80)
@given(rationals(), rationals(), nonzero_rationals(), nonzero_rationals(6, 4))
def test_forms_multiply_to_quadratic(x0, x2, lam, mu):
    tick()
    x1 = (lam * lam + x0 * x2) / lam
    e = factor_eigenforms((x0, x1, x2))
    assert isinstance(e, Eigenforms)
    (a1, b1), (a2, b2) = e.forms
    prod = (b1 * b2, a1 * b2 + a2 * b1, a1 * a2)
    assert prod == (e.lam * x0, e.lam * x1, e.lam * x2)
    scaled = factor_eigenforms((mu * x0, mu * x1, mu * x2))
    assert sorted(map(_root_line, e.forms), key=repr) == sorted(map(_root_line, scaled.forms), key=repr)


@settings(max_examples=10)
@given(st.integers(0, 3))
def test_ela_determinism(_):
    tick()
    assert run_point(CERT).to_dict() == run_point(CERT).to_dict()
