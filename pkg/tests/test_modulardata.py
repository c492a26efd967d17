import dataclasses
import json
import shutil
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from _tally import tick
from strategies import quad_elements, rationals
from teichcurves.errors import DataFormatError, InvalidDiscriminantError, SpinUndefinedError
from teichcurves.exactfield import QQ, MultiPoly, QuadraticField, RationalFunctionField, UniPoly
from teichcurves.modulardata.cert import cert_from_json, load_cert
from teichcurves.modulardata.registry import (FUNDAMENTAL_DISCRIMINANTS, Homeotype, RegistryError, data_dir,
                                              load_record, load_registry, model_polynomial, spin_one_model,
                                              validate_record)
from teichcurves.modulardata.serialize import (coeff_from_json, coeff_to_json, poly_from_json, poly_to_json,
                                               ratfunc_from_json, ratfunc_to_json, rational_from_json)
from teichcurves.modulardata.texpoly import TexParseError, parse_tex_poly, split_definition


def _findings(rec, cert=None):
    return {f.code: f for f in validate_record(rec, cert)}


# ---------------------------------------------------------------- TeX parsing

def test_parse_simple():
    r, s = MultiPoly.gens(("r", "s"))
    assert parse_tex_poly("27r + (8-12s-9s^2+13s^3)") == 27 * r + 8 - 12 * s - 9 * s ** 2 + 13 * s ** 3
    assert parse_tex_poly("\\left(2r\\right)^{2} s") == 4 * r ** 2 * s


def test_parse_sqrt_coefficients():
    K = QuadraticField(17)
    p = parse_tex_poly("(2+2\\sqrt{17}) r^2 - 9", field=K)
    assert p.terms[(2, 0)] == K(2) + K.gen * 2


def test_parse_errors():
    with pytest.raises(TexParseError):
        parse_tex_poly("1/0")
    with pytest.raises(TexParseError, match="digit glued"):
        parse_tex_poly("1200r^2 s0")
    with pytest.raises(TexParseError):
        parse_tex_poly("3q")


def test_split_definition():
    name, D, comp, names, body = split_definition("w_{17}^0(r,s) = r + s")
    assert (name, D, comp, names, body.strip()) == ("w", 17, 0, ("r", "s"), "r + s")


def test_bad_rational_in_data():
    with pytest.raises(DataFormatError):
        rational_from_json("1/0")
    with pytest.raises(DataFormatError):
        rational_from_json(0.5)


# ---------------------------------------------------------------- registry

def test_registry_complete():
    reg = load_registry()
    assert sorted(reg) == sorted(FUNDAMENTAL_DISCRIMINANTS)
    with pytest.raises(InvalidDiscriminantError):
        load_record(16)


def test_record_D12():
    rec = load_record(12)
    r, s = MultiPoly.gens(("r", "s"))
    assert rec.w_D == 27 * r + 8 - 12 * s - 9 * s ** 2 + 13 * s ** 3
    assert rec.homeotype == [Homeotype(0, 1, 3, Fraction(-3, 2))]
    t = UniPoly.x(QQ, "t")
    assert rec.cuspidal_polynomial == t ** 2 + 10 * t + 13


def test_record_D44():
    rec = load_record(44)
    x, y = MultiPoly.gens(("x", "y"))
    assert model_polynomial(rec) == x ** 3 + x ** 2 + 160 * x + 3188 - y ** 2
    assert rec.homeotype == [Homeotype(1, 3, 9, Fraction(-21, 2))]
    assert rec.singular_primes == [2, 5, 11]


def test_validate_D17_passes():
    f = _findings(load_record(17))
    assert all(x.status == "pass" for x in f.values())


def test_tampered_euler_characteristic():
    rec = load_record(12)
    rec.homeotype = [dataclasses.replace(rec.homeotype[0], chi=Fraction(-2))]
    f = _findings(rec)["euler-characteristic"]
    assert f.status == "fail" and "Euler characteristic mismatch" in f.message


def test_small_discriminants_exempt():
    for D in (5, 8):
        f = _findings(load_record(D))["euler-characteristic"]
        assert f.status == "exempt" and f.message == "exempt: orbifold footnote"


def test_suspect_record():
    rec = load_record(65)
    assert rec.status == "transcription-suspect" and rec.w_D is None and rec.w_tex
    assert _findings(rec)["transcription"].status == "suspect"


def test_cert_identity_finding():
    cert = load_cert()
    assert _findings(load_record(12), cert)["w_D-identity"].status == "pass"


def test_spin_one_model():
    rec = load_record(17)
    w1 = spin_one_model(rec)
    assert w1 != rec.w_D
    assert w1.map_coeffs(lambda c: c.conjugate()) == rec.w_D
    with pytest.raises(SpinUndefinedError):
        spin_one_model(load_record(12))


def test_every_shipped_polynomial_round_trips():
    root = data_dir()
    count = 0
    for path in sorted(root.glob("**/*.json")):
        stack = [json.loads(path.read_text())]
        while stack:
            node = stack.pop()
            if isinstance(node, dict):
                if {"vars", "field", "terms"} <= set(node):
                    assert poly_to_json(poly_from_json(node)) == node, path
                    count += 1
                stack.extend(node.values())
            elif isinstance(node, list):
                stack.extend(node)
    assert count > 60


def test_data_dir_override(tmp_path, monkeypatch):
    shutil.copytree(data_dir(), tmp_path / "data")
    bad = tmp_path / "data" / "registry" / "D13.json"
    raw = json.loads(bad.read_text())
    raw["homeotype"][0]["chi"] = "7"
    bad.write_text(json.dumps(raw))
    monkeypatch.setenv("TEICHCURVES_DATA_DIR", str(tmp_path / "data"))
    assert data_dir() == tmp_path / "data"
    with pytest.raises(RegistryError, match="D=13"):
        load_registry()
    (tmp_path / "data" / "registry" / "D17.json").unlink()
    with pytest.raises(RegistryError, match="missing discriminants \\[17\\]"):
        load_registry()


def test_float_in_cert_rejected():
    raw = json.loads((data_dir() / "cert" / "cert12.json").read_text())
    raw["point"]["a"][0] = 24.0
    with pytest.raises(DataFormatError):
        cert_from_json(raw)


# ---------------------------------------------------------------- round trips

@settings(max_examples=60)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), rationals(), max_size=6))
def test_poly_round_trip_rational(terms):
    tick()
    p = MultiPoly(terms, ("r", "s"), QQ)
    assert poly_from_json(json.loads(json.dumps(poly_to_json(p)))) == p


@settings(max_examples=40)
@given(st.lists(quad_elements(D=17), min_size=1, max_size=4))
def test_poly_round_trip_quadratic(items):
    tick()
    K = items[0][0]
    p = UniPoly([x for _, x in items], K, "x")
    q = poly_from_json(json.loads(json.dumps(poly_to_json(p))))
    assert q.to_unipoly(0, "x") == p if p else not q
    for _, x in items:
        assert coeff_from_json(coeff_to_json(x), K) == x


@settings(max_examples=40)
@given(st.lists(rationals(), min_size=1, max_size=4), st.lists(rationals(), min_size=1, max_size=3))
def test_ratfunc_round_trip(num, den):
    tick()
    K = RationalFunctionField(QQ, "t")
    d = UniPoly(den, QQ, "t")
    if not d:
        return
    f = K.fraction(UniPoly(num, QQ, "t"), d)
    assert ratfunc_from_json(json.loads(json.dumps(ratfunc_to_json(f))), K) == f
