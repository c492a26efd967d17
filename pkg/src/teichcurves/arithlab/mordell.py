"""Relations among cusp points on the genus-one curve of discriminant 44."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..exactfield import QuadraticField
from ..modulardata.registry import load_record, load_table
from ..modulardata.serialize import coeff_from_json, field_from_json, poly_from_json, to_jsonable
from .elliptic import ECPoint, EllipticCurve, first_rational_multiple
from .singular import PlaneCurveModel


@dataclass
class MordellReport:
    j: Any
    j_expected: Fraction
    rows: list[dict]
    difference_rational: bool
    rational_multiple: int | None
    bound: int

    @property
    def ok(self) -> bool:
        return (self.j == self.j_expected and all(r["ok"] for r in self.rows)
                and self.difference_rational and self.rational_multiple is None)

    def to_dict(self) -> dict:
        return to_jsonable({
            "j_invariant": self.j, "j_expected": self.j_expected, "j_ok": self.j == self.j_expected,
            "rows": self.rows,
            "P1_minus_P2_rational": self.difference_rational,
            "first_rational_multiple_of_P2": self.rational_multiple,
            "search_bound": self.bound,
            "status": "pass" if self.ok else "fail",
        })


def w44_curve() -> tuple[EllipticCurve, dict]:
    table = load_table("w44cusps")
    K = field_from_json(table["field"])
    rec = load_record(44)
    m = PlaneCurveModel.from_record(rec)
    h = m.h.map_coeffs(K, K)
    f = m.f.map_coeffs(K, K)
    return EllipticCurve.from_hyperelliptic(h, f), table


def _point(E: EllipticCurve, d: dict | None) -> ECPoint:
    if d is None:
        return E.zero
    K = E.field
    return E.point(coeff_from_json(d["x"], K), coeff_from_json(d["y"], K))


def mordell_report(bound: int = 18) -> MordellReport:
    E, table = w44_curve()
    P1 = _point(E, table["generators"]["P1"])
    P2 = _point(E, table["generators"]["P2"])
    rows = []
    for row in table["rows"]:
        m, n = row["mordell_weil"]
        listed = _point(E, row["point"])
        combo = P1 * m + P2 * n
        rows.append({"prototype": row["prototype"], "mordell_weil": [m, n], "point": listed,
                     "ok": combo == listed})
    j_expected = Fraction(table["j_invariant"])
    return MordellReport(E.j_invariant(), j_expected, rows, (P1 - P2).is_rational(),
                         first_rational_multiple(P2, bound), bound)
