"""Eigenform location: certify that a quintic model carries real multiplication.

Given an IC_D parametrization, a model ``a`` and surface coordinates ``b``
with IC_D(b) = IC(Y(a)), the tangent map of the surface is lifted to the
coefficient space (matrix L), paired against quadratic differentials via
M(a), and the kernel vector x is factored into two eigenforms.

Rank conditions are tested on affine-chart Jacobians of the weighted
projective space: the chart map of IC(Y(.)) must have rank 3 at ``a`` and
that of IC_D rank 2 at ``b``.  Over K(t) every condition is an identity of
rational functions; the finite set of bad parameters is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Any, Sequence

from .errors import FieldMismatchError, SingularModelError, TeichError
from .exactfield import (QQ, Field, Matrix, MultiPoly, QuadraticField, RationalFunction,
                         RationalFunctionField, UniPoly)
from .genus2 import (QuinticModel, WeightedPoint, chart, chart_normalizer, ic_jacobian,
                     igusa_clebsch, weighted_equal)
from .modulardata.cert import CertData, ICParametrization
from .modulardata.serialize import to_jsonable
from .pairing import matrix_M

CERTIFIED = "certified"
REJECTED = "rejected"


@dataclass(frozen=True)
class LambdaQuadratic:
    """lambda^2 - x1*lambda + x0*x2 with no usable nonzero root in the base field."""

    coeffs: tuple  # (x0*x2, -x1, 1), low to high
    discriminant: Any
    reason: str

    def to_dict(self) -> dict:
        return {"quadratic": list(self.coeffs), "discriminant": self.discriminant, "reason": self.reason}


@dataclass(frozen=True)
class Eigenforms:
    """The forms (lam*w + x0) dw/z and (x2*w + lam) dw/z as (w-coeff, constant) pairs."""

    lam: Any
    forms: tuple
    degenerate: bool = False

    def contains_dw_over_z(self) -> bool:
        return any(not f[0] and f[1] for f in self.forms)

    def to_dict(self) -> dict:
        return {"lambda": self.lam, "forms": [list(f) for f in self.forms], "degenerate": self.degenerate}


def factor_eigenforms(x: Sequence[Any], field: Field = QQ) -> Eigenforms | LambdaQuadratic:
    """Split the quadratic differential x into a pair of eigenforms.

    lambda solves lambda^2 + x0 x2 = x1 lambda and must be nonzero.  When both
    roots are nonzero the one built from the field's canonical square root
    (+sqrt) is taken; the other root merely swaps the two forms.
    """
    x0, x1, x2 = (field(v) for v in x)
    if not (x0 or x1 or x2):
        raise ValueError("x must be nonzero")
    disc = x1 * x1 - x0 * x2 * 4
    quad = (x0 * x2, -x1, field.one)
    root = field.sqrt(disc)
    if root is None:
        return LambdaQuadratic(quad, disc, "no root in the base field")
    half = field.one / 2
    candidates = [(x1 + root) * half, (x1 - root) * half]
    nonzero = [c for c in candidates if c]
    if not nonzero:
        return LambdaQuadratic(quad, disc, "only root is lambda = 0")
    lam = nonzero[0]
    forms = ((lam, x0), (x2, lam))
    return Eigenforms(lam, forms, degenerate=not disc)


@dataclass
class CertificationRecord:
    D: int
    field: Field
    a: tuple
    b: tuple
    status: str
    conditions: dict
    failing: str | None = None
    normalizer: int | None = None
    ic_a: WeightedPoint | None = None
    ic_b: WeightedPoint | None = None
    M: Matrix | None = None
    L: Matrix | None = None
    x: tuple | None = None
    lam: Any = None
    eigen: Eigenforms | LambdaQuadratic | None = None
    bad_polynomials: dict = dc_field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.status == CERTIFIED

    def to_dict(self) -> dict:
        out = {
            "D": self.D,
            "field": self.field.descriptor(),
            "a": list(self.a),
            "b": list(self.b),
            "status": self.status,
            "conditions": dict(self.conditions),
            "failing": self.failing,
            "normalizer": self.normalizer,
            "ic_a": None if self.ic_a is None else list(self.ic_a.coords),
            "M": self.M,
            "L": self.L,
            "x": None if self.x is None else list(self.x),
            "lambda": self.lam,
            "eigenforms": self.eigen,
        }
        if self.bad_polynomials:
            out["bad_polynomials"] = self.bad_polynomials
        return to_jsonable(out)


def _common_field(a: QuinticModel, b: Sequence[Any], icd: ICParametrization) -> tuple:
    K = a.field
    base = K.base if isinstance(K, RationalFunctionField) else K
    icf = icd.coords[0].field
    if isinstance(icf, QuadraticField) and icf != base:
        raise FieldMismatchError(f"IC_D is defined over {icf!r} but the model lives over {K!r}")
    try:
        bb = tuple(K(v) for v in b)
    except (TypeError, ValueError) as exc:
        raise FieldMismatchError(f"b does not lie in {K!r}: {exc}") from None
    if len(bb) != 2:
        raise ValueError("b needs two coordinates")
    return K, bb


def eigenform_kernel(M: Matrix, L: Matrix) -> list[list[Any]]:
    """Basis of the nullspace of (M L)^T, each vector scaled by its first nonzero entry."""
    basis = (M * L).transpose().nullspace()
    out = []
    for v in basis:
        lead = next(c for c in v if c)
        out.append([c / lead for c in v])
    return out


def _rank_witness(A: Matrix) -> Any:
    """Determinant of a nonsingular maximal minor (pivot rows by pivot columns)."""
    cols = A.rref()[1]
    rows = A.transpose().rref()[1]
    return Matrix([[A.rows[i][j] for j in cols] for i in rows], A.field).det()


def ela_run(icd: ICParametrization, a: QuinticModel, b: Sequence[Any]) -> CertificationRecord:
    """Run the four ELA steps; unmet conditions give status 'rejected' naming the step."""
    K, bb = _common_field(a, b, icd)
    if not a.is_nondegenerate():
        raise SingularModelError("degenerate model: disc(f_a) = 0")
    icf = icd if icd.coords[0].field == K else icd.map_coeffs(K, K)
    rec = CertificationRecord(icd.D, K, a.a, bb, REJECTED, {})

    def reject(name: str) -> CertificationRecord:
        rec.failing = name
        return rec

    ic_a = igusa_clebsch(a)
    ic_b = icf.evaluate(bb, K)
    rec.ic_a, rec.ic_b = ic_a, ic_b
    if not ic_b.is_projective():
        rec.conditions["ELA1"] = False
        return reject("ELA1: IC_D(b) is not a projective point")
    ela1 = weighted_equal(ic_b, ic_a)
    rec.conditions["ELA1"] = ela1
    if not ela1:
        return reject("ELA1: IC_D(b) != IC(Y(a))")

    M = matrix_M(a)
    rec.M = M
    rank_M = M.rank() == 3
    rec.conditions["ELA2:rank M(a) = 3"] = rank_M
    k = chart_normalizer(ic_a)
    rec.normalizer = k
    Ja = ic_jacobian(a, k)
    Jb = icf.chart_jacobian(bb, K, k)
    rank_a = Ja.rank() == 3
    rank_b = Jb.rank() == 2
    rec.conditions["ELA2:rank d(IC o Y)_a = 3"] = rank_a
    rec.conditions["ELA2:rank d(IC_D)_b = 2"] = rank_b
    if not (rank_M and rank_a and rank_b):
        failed = [n for n, ok in rec.conditions.items() if n.startswith("ELA2") and not ok]
        return reject(failed[0])

    # ELA3: d(IC o Y)_a . L = d(IC_D)_b; solvable since Ja is onto
    L = Ja.solve(Jb)
    rec.L = L
    rec.conditions["ELA3"] = True
    kernel = eigenform_kernel(M, L)
    rec.conditions["ELA4:kernel is a line"] = len(kernel) == 1
    if len(kernel) != 1:
        return reject("ELA4: nullspace of (M L)^T is not one-dimensional")
    x = tuple(kernel[0])
    rec.x = x
    if isinstance(K, RationalFunctionField):
        # specializations keep every rank where these minors do not vanish
        rec.bad_polynomials = {name: _rank_witness(A) for name, A in
                               (("rank M(a)", M), ("rank d(IC o Y)_a", Ja),
                                ("rank d(IC_D)_b", Jb), ("rank M L", M * L))}
    eig = factor_eigenforms(x, K)
    rec.eigen = eig
    if isinstance(eig, LambdaQuadratic):
        rec.conditions["ELA4:nonzero lambda"] = False
        return reject(f"ELA4: {eig.reason}")
    rec.lam = eig.lam
    rec.conditions["ELA4:nonzero lambda"] = True
    rec.status = CERTIFIED
    return rec


# --------------------------------------------------------------------------
# families over K(t)
# --------------------------------------------------------------------------

def _numerators_and_denominators(values) -> tuple[list[UniPoly], list[UniPoly]]:
    nums, dens = [], []
    for v in values:
        if isinstance(v, RationalFunction):
            nums.append(v.num)
            dens.append(v.den)
    return nums, dens


def _squarefree_product(polys: list[UniPoly], base: Field, var: str) -> UniPoly:
    acc = UniPoly([base.one], base, var)
    for p in polys:
        if p.degree > 0:
            acc = acc * p
    return acc.squarefree_part() if acc.degree > 0 else acc


@dataclass
class FamilyReport:
    record: CertificationRecord
    w_identity: bool
    w_residual: Any
    nonconstant: bool
    probe_t: Any
    fiber_degree: int | None
    bad_polynomial: UniPoly
    status: str
    failing: str | None = None

    def to_dict(self) -> dict:
        return to_jsonable({
            "status": self.status,
            "failing": self.failing,
            "w_identity": self.w_identity,
            "w_residual": self.w_residual,
            "nonconstant": self.nonconstant,
            "fiber_probe": {"t": self.probe_t, "fiber_degree": self.fiber_degree,
                            "note": "birationality beyond this probe is not certified here"},
            "bad_polynomial": self.bad_polynomial,
            "record": self.record.to_dict(),
        })


def chart_map(record: CertificationRecord) -> tuple:
    """t -> chart(IC(Y(a(t)))) as rational functions."""
    return chart(record.ic_a, record.normalizer)


def family_bad_polynomial(record: CertificationRecord) -> UniPoly:
    """Squarefree polynomial whose roots are the parameters excluded from the certificate."""
    K = record.field
    parts: list[UniPoly] = []
    _, dens = _numerators_and_denominators(list(record.a) + list(record.b))
    parts += dens
    model = QuinticModel(record.a, K)
    parts += [model.discriminant().num]
    if record.ic_a is not None and record.normalizer is not None:
        parts.append(record.ic_a.coords[record.normalizer].num)
        parts.append(record.ic_b.coords[record.normalizer].num)
    if record.L is not None:
        parts += _numerators_and_denominators([c for row in record.L.rows for c in row])[1]
    if record.x is not None:
        nums, dens = _numerators_and_denominators(record.x)
        parts += dens + [n for n in nums if n.degree > 0]
    if record.lam is not None and isinstance(record.lam, RationalFunction):
        parts += [record.lam.num, record.lam.den]
    for minor in record.bad_polynomials.values():
        parts += [minor.num, minor.den]
    return _squarefree_product(parts, K.base, K.var)


def _fiber_degree(cm: tuple, t0: Any) -> int | None:
    g = None
    for comp in cm:
        v = comp(t0)
        diff = comp - v
        if not diff:
            continue
        g = diff.num if g is None else g.gcd(diff.num)
    return None if g is None else g.degree


def certify_family(record: CertificationRecord, w_D: MultiPoly, probe_t: Any = None) -> FamilyReport:
    """Extra checks for a record computed over K(t).

    Verifies w_D(b(t)) = 0 identically, nonconstancy of t -> chart(IC(Y(a(t)))),
    and the size of one fiber of that map over a rational value.
    """
    K = record.field
    if not isinstance(K, RationalFunctionField):
        raise TeichError("certify_family needs a record over a rational function field")
    if not record.certified:
        raise TeichError(f"record is not certified: {record.failing}")
    w = w_D if w_D.field == K.base else w_D.map_coeffs(K.base, K.base)
    residual = w.eval(list(record.b), one=K.one)
    cm = chart_map(record)
    nonconstant = any(not c.is_constant() for c in cm)
    bad = family_bad_polynomial(record)
    if probe_t is None:
        probe_t = next(K.base(n) for n in range(2, 10_000) if bad(K.base(n)) and
                       all(c.den(K.base(n)) for c in cm))
    fiber = _fiber_degree(cm, probe_t) if nonconstant else None
    failing = None
    if residual:
        failing = f"w_D identity fails: residual {residual!r}"
    elif not nonconstant:
        failing = "invariant map is constant"
    return FamilyReport(record, not residual, residual, nonconstant, probe_t, fiber, bad,
                        CERTIFIED if failing is None else REJECTED, failing)


def family_from_cert(cert: CertData) -> tuple[QuinticModel, tuple]:
    K = cert.family_field
    return QuinticModel(tuple(cert.family_a), K), tuple(cert.family_b)


def run_point(cert: CertData) -> CertificationRecord:
    return ela_run(cert.icd, QuinticModel(cert.point_a), cert.point_b)


def run_family(cert: CertData) -> FamilyReport:
    model, b = family_from_cert(cert)
    rec = ela_run(cert.icd, model, b)
    if not rec.certified:
        raise TeichError(f"family run rejected: {rec.failing}")
    return certify_family(rec, cert.w_D)


def specialize_record(record: CertificationRecord, t0: Any) -> tuple[QuinticModel, tuple]:
    """The point input (a(t0), b(t0)) of a family record."""
    base = record.field.base
    a = tuple(c(base(t0)) for c in record.a)
    b = tuple(c(base(t0)) for c in record.b)
    return QuinticModel(a, base), b
