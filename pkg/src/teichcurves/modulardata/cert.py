"""Certification inputs: an IC_D parametrization plus model data a_D, b_D."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from pathlib import Path
from typing import Any, Sequence

from ..errors import DataFormatError
from ..exactfield import QQ, Field, Matrix, MultiPoly, RationalFunctionField
from ..genus2 import WeightedPoint, chart_jacobian_from, chart_normalizer
from .registry import data_dir
from .serialize import (field_from_json, poly_from_json, ratfunc_from_json, rational_from_json)

CERT_SCHEMA = "teichcurves/cert/v1"


@dataclass(frozen=True)
class ICParametrization:
    """IC_D : (r, s) -> (I2 : I4 : I6 : I10), with its branch curve b_D."""

    D: int
    coords: tuple  # four MultiPoly in (r, s)
    branch: MultiPoly

    def __post_init__(self) -> None:
        if len(self.coords) != 4:
            raise ValueError("IC_D needs four weighted coordinates")

    def evaluate(self, b: Sequence[Any], field: Field = QQ) -> WeightedPoint:
        one = field.one
        vals = [c.eval([field(b[0]), field(b[1])], one=one) for c in self.coords]
        return WeightedPoint(*vals, field=field)

    def gradients(self, b: Sequence[Any], field: Field = QQ) -> list[list[Any]]:
        pt = [field(b[0]), field(b[1])]
        return [[c.diff(i).eval(pt, one=field.one) for i in range(2)] for c in self.coords]

    def chart_jacobian(self, b: Sequence[Any], field: Field = QQ, normalizer: int | None = None) -> Matrix:
        P = self.evaluate(b, field)
        k = chart_normalizer(P) if normalizer is None else normalizer
        return Matrix(chart_jacobian_from(P.coords, self.gradients(b, field), k), field)

    def map_coeffs(self, fn, field: Field) -> ICParametrization:
        return ICParametrization(self.D, tuple(c.map_coeffs(fn, field) for c in self.coords),
                                 self.branch.map_coeffs(fn, field))


@dataclass
class CertData:
    D: int
    icd: ICParametrization
    w_D: MultiPoly
    point_a: tuple
    point_b: tuple
    family_field: RationalFunctionField
    family_a: tuple
    family_b: tuple
    tangent: dict = dc_field(default_factory=dict)
    expected: dict = dc_field(default_factory=dict)
    raw: dict = dc_field(default_factory=dict, repr=False)

    def w_residual(self) -> Any:
        """w_D(b(t)) as an exact element of K(t) (zero when the identity holds)."""
        K = self.family_field
        return self.w_D.eval(list(self.family_b), one=K.one)


def cert_from_json(d: dict, where: str = "") -> CertData:
    if d.get("schema") != CERT_SCHEMA:
        raise DataFormatError(f"schema must be {CERT_SCHEMA!r}", where)
    try:
        D = int(d["D"])
        ic = d["ic"]
        coords = tuple(poly_from_json(ic[k], f"{where}/ic/{k}") for k in ("I2", "I4", "I6", "I10"))
        icd = ICParametrization(D, coords, poly_from_json(d["b_D"], f"{where}/b_D"))
        w = poly_from_json(d["w_D"], f"{where}/w_D")
        pt = d["point"]
        fam = d["family"]
        K = field_from_json(fam["field"])
        if not isinstance(K, RationalFunctionField):
            raise DataFormatError("family field must be a rational function field", where)
        fa = tuple(ratfunc_from_json(x, K, f"{where}/family/a[{i}]") for i, x in enumerate(fam["a"]))
        fb = tuple(ratfunc_from_json(x, K, f"{where}/family/b[{i}]") for i, x in enumerate(fam["b"]))
        pa = tuple(rational_from_json(x, f"{where}/point/a") for x in pt["a"])
        pb = tuple(rational_from_json(x, f"{where}/point/b") for x in pt["b"])
    except KeyError as exc:
        raise DataFormatError(f"missing key {exc}", where) from None
    if len(fa) != 5 or len(fb) != 2 or len(pa) != 5 or len(pb) != 2:
        raise DataFormatError("a needs 5 entries and b needs 2", where)
    tangent = {k: tuple(rational_from_json(x, where) for x in v) for k, v in d.get("tangent", {}).items()}
    return CertData(D, icd, w, pa, pb, K, fa, fb, tangent, d.get("expected", {}), d)


def load_cert(path: str | Path | None = None, D: int = 12) -> CertData:
    path = Path(path) if path else data_dir() / "cert" / f"cert{D}.json"
    if not path.exists():
        raise FileNotFoundError(f"no certification data at {path}")
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DataFormatError(f"invalid JSON: {exc}", str(path)) from None
    return cert_from_json(raw, str(path))


@lru_cache(maxsize=4)
def cached_cert(D: int = 12) -> CertData:
    return load_cert(None, D)
