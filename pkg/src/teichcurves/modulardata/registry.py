"""Discriminant registry: loading, schema checks and consistency findings."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path
from typing import Any

from ..errors import DataFormatError, InvalidDiscriminantError, SpinUndefinedError
from ..exactfield import MultiPoly, UniPoly, is_square
from .serialize import poly_from_json, rational_from_json, unipoly_from_json

SCHEMA = "teichcurves/registry/v1"
DATA_ENV = "TEICHCURVES_DATA_DIR"
FUNDAMENTAL_DISCRIMINANTS = (5, 8, 12, 13, 17, 21, 24, 28, 29, 33, 37, 40, 41, 44, 53, 56, 57,
                             60, 61, 65, 69, 73, 76, 77, 85, 88, 89, 92, 93, 97)


def data_dir() -> Path:
    """Data root; the environment variable overrides the copy shipped with the package."""
    env = os.environ.get(DATA_ENV)
    if env:
        return Path(env)
    return Path(__file__).resolve().parent.parent / "data"


def check_discriminant(D: Any) -> int:
    if not isinstance(D, int) or isinstance(D, bool) or D <= 1 or D % 4 not in (0, 1) or is_square(D):
        raise InvalidDiscriminantError(f"{D!r} is not a non-square discriminant D > 1")
    return D


def is_fundamental(D: int) -> bool:
    if D % 4 == 1:
        return _squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False


def _squarefree(n: int) -> bool:
    q = 2
    while q * q <= n:
        if n % (q * q) == 0:
            return False
        q += 1
    return True


@dataclass(frozen=True)
class Homeotype:
    g: int
    e2: int
    C: int
    chi: Fraction

    def expected_chi(self) -> Fraction:
        return Fraction(2 - 2 * self.g - self.C) - Fraction(self.e2, 2)


@dataclass
class DiscriminantRecord:
    D: int
    fundamental: bool
    spin_reducible: bool
    b_D: MultiPoly | None
    w_D: MultiPoly | None
    w_label: str
    homeotype: list[Homeotype]
    orbifold_exempt: bool = False
    w_tex: str | None = None
    model: dict | None = None
    cuspidal_polynomial: UniPoly | None = None
    cusp_disc_factored: dict[int, int] | None = None
    singular_primes: list[int] | None = None
    status: str = "ok"
    notes: list[str] = dc_field(default_factory=list)
    extras: dict = dc_field(default_factory=dict)
    source: str = ""

    @property
    def total_cusps(self) -> int:
        return sum(h.C for h in self.homeotype)


@dataclass(frozen=True)
class Finding:
    code: str
    status: str  # pass | fail | exempt | suspect
    message: str

    def to_dict(self) -> dict:
        return {"code": self.code, "status": self.status, "message": self.message}


class RegistryError(DataFormatError):
    def __init__(self, problems: list[str]) -> None:
        super().__init__("; ".join(problems))
        self.problems = problems


def _req(d: dict, key: str, where: str) -> Any:
    if key not in d:
        raise DataFormatError(f"missing key {key!r}", where)
    return d[key]


def record_from_json(d: dict, where: str = "") -> DiscriminantRecord:
    if d.get("schema") != SCHEMA:
        raise DataFormatError(f"schema must be {SCHEMA!r}", where)
    D = _req(d, "D", where)
    try:
        check_discriminant(D)
    except InvalidDiscriminantError as exc:
        raise DataFormatError(str(exc), where) from None
    homeo = []
    for k, h in enumerate(_req(d, "homeotype", where)):
        loc = f"{where}/homeotype[{k}]"
        try:
            homeo.append(Homeotype(int(h["g"]), int(h["e2"]), int(h["C"]),
                                   rational_from_json(h["chi"], loc)))
        except (KeyError, TypeError) as exc:
            raise DataFormatError(f"bad homeotype row: {exc}", loc) from None
    cusp = None
    if d.get("cuspidal_polynomial") is not None:
        cusp = unipoly_from_json(d["cuspidal_polynomial"], where + "/cuspidal_polynomial")
    disc_f = d.get("cusp_disc_factored")
    w_json = d.get("w_D")
    return DiscriminantRecord(
        D=D,
        fundamental=bool(_req(d, "fundamental", where)),
        spin_reducible=bool(_req(d, "spin_reducible", where)),
        b_D=poly_from_json(d["b_D"], where + "/b_D") if d.get("b_D") is not None else None,
        w_D=poly_from_json(w_json, where + "/w_D") if w_json is not None else None,
        w_label=_req(d, "w_label", where),
        homeotype=homeo,
        orbifold_exempt=bool(d.get("orbifold_exempt", False)),
        w_tex=d.get("w_tex"),
        model=d.get("model"),
        cuspidal_polynomial=cusp,
        cusp_disc_factored={int(k): int(v) for k, v in disc_f.items()} if disc_f else None,
        singular_primes=d.get("singular_primes"),
        status=d.get("status", "ok"),
        notes=list(d.get("notes", [])),
        extras=dict(d.get("extras", {})),
        source=where,
    )


def load_record(D: int, root: Path | None = None) -> DiscriminantRecord:
    root = root or data_dir()
    path = root / "registry" / f"D{D}.json"
    if not path.exists():
        raise InvalidDiscriminantError(f"no registry entry for D = {D}")
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DataFormatError(f"invalid JSON: {exc}", str(path)) from None
    return record_from_json(raw, str(path))


def load_registry(root: Path | str | None = None) -> dict[int, DiscriminantRecord]:
    """All registry records; schema problems across files are reported together."""
    root = Path(root) if root else data_dir()
    out: dict[int, DiscriminantRecord] = {}
    problems: list[str] = []
    files = sorted((root / "registry").glob("D*.json"))
    for path in files:
        try:
            with open(path) as fh:
                rec = record_from_json(json.load(fh), str(path))
            out[rec.D] = rec
        except (DataFormatError, json.JSONDecodeError) as exc:
            problems.append(f"{path.name}: {exc}")
    missing = [D for D in FUNDAMENTAL_DISCRIMINANTS if D not in out and
               not any(p.startswith(f"D{D}.json") for p in problems)]
    if missing:
        problems.append(f"missing discriminants {missing}")
    for rec in out.values():
        for f in validate_record(rec):
            if f.code == "euler-characteristic" and f.status == "fail":
                problems.append(f"D={rec.D}: {f.message}")
    if problems:
        raise RegistryError(problems)
    return dict(sorted(out.items()))


def spin_one_model(rec: DiscriminantRecord) -> MultiPoly:
    """w_D^1, the Galois conjugate of the stored w_D^0 (D = 1 mod 8 only)."""
    if not rec.spin_reducible:
        raise SpinUndefinedError(f"D = {rec.D} has a single component")
    if rec.w_D is None:
        raise DataFormatError("w_D^0 is not available", rec.source)
    return rec.w_D.map_coeffs(lambda c: c.conjugate() if hasattr(c, "conjugate") else c)


def model_polynomial(rec: DiscriminantRecord) -> MultiPoly | None:
    if not rec.model or rec.model.get("g") is None:
        return None
    return poly_from_json(rec.model["g"], f"{rec.source}/model/g")


def validate_record(rec: DiscriminantRecord, cert: Any = None) -> list[Finding]:
    """Consistency findings for one record (never raises on content problems)."""
    out: list[Finding] = []
    D = rec.D
    ok_disc = D % 4 in (0, 1) and not is_square(D)
    out.append(Finding("discriminant", "pass" if ok_disc else "fail",
                       f"D = {D} is {'a' if ok_disc else 'not a'} non-square discriminant"))
    spin = D % 8 == 1
    out.append(Finding("spin-flag", "pass" if rec.spin_reducible == spin else "fail",
                       f"spin_reducible = {rec.spin_reducible}, D mod 8 = {D % 8}"))
    expect_components = 2 if spin else 1
    comp_ok = len(rec.homeotype) == expect_components
    label_ok = rec.w_label == ("w_D0" if spin else "w_D")
    out.append(Finding("irreducibility", "pass" if comp_ok and label_ok else "fail",
                       f"{len(rec.homeotype)} component(s), model label {rec.w_label}"))
    if rec.orbifold_exempt or D <= 8:
        out.append(Finding("euler-characteristic", "exempt", "exempt: orbifold footnote"))
    else:
        bad = [h for h in rec.homeotype if h.chi != h.expected_chi()]
        if bad:
            h = bad[0]
            out.append(Finding("euler-characteristic", "fail",
                               f"Euler characteristic mismatch: stored {h.chi}, "
                               f"2 - 2g - C - e2/2 = {h.expected_chi()}"))
        else:
            out.append(Finding("euler-characteristic", "pass", "chi = 2 - 2g - C - e2/2"))
    if rec.b_D is None or rec.b_D.total_degree() < 1:
        out.append(Finding("b_D-degree", "fail", "branch polynomial missing or constant"))
    else:
        want = rec.extras.get("b_D_degrees")
        got = [rec.b_D.degree(0), rec.b_D.degree(1)]
        status = "pass" if want is None or list(want) == got else "fail"
        out.append(Finding("b_D-degree", status, f"deg_r = {got[0]}, deg_s = {got[1]}"))
    if rec.status == "transcription-suspect":
        out.append(Finding("transcription", "suspect", "; ".join(rec.notes) or "transcription-suspect"))
    elif rec.w_D is None:
        out.append(Finding("w_D", "fail", "Weierstrass curve model missing"))
    if cert is not None and getattr(cert, "D", None) == D:
        residual = cert.w_residual()
        out.append(Finding("w_D-identity", "pass" if not residual else "fail",
                           "w_D(b_D(t)) = 0" if not residual else f"residual {residual}"))
    return out


def load_table(name: str, root: Path | None = None) -> Any:
    root = root or data_dir()
    path = root / "tables" / f"{name}.json"
    with open(path) as fh:
        return json.load(fh)
