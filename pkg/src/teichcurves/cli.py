"""Command-line front end.

Every command prints one JSON report (or a text table with ``--pretty``).
Exit codes: 0 pass, 1 fail, 2 input error, 3 transcription-suspect data met
under ``--strict``.  Without ``--strict`` suspect findings are kept in the
report as passing findings flagged ``"suspect": true``.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable

from . import __version__
from .errors import DataFormatError, InvalidDiscriminantError, TeichError
from .modulardata.serialize import to_jsonable

REPORT_SCHEMA = "teichcurves/report/v1"
EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_SUSPECT = 0, 1, 2, 3


class InputError(TeichError):
    """Bad command-line input or missing data; maps to exit code 2."""


@dataclass
class RunReport:
    command: str
    inputs: dict
    findings: list = dc_field(default_factory=list)
    data: dict = dc_field(default_factory=dict)
    strict: bool = False
    digest_files: list = dc_field(default_factory=list)

    def add(self, code: str, ok: bool | str, message: str, **extra: Any) -> None:
        status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
        if status == "exempt":
            status, extra["exempt"] = "pass", True
        if status == "suspect" and not self.strict:
            status, extra["suspect"] = "pass", True
        self.findings.append({"code": code, "status": status, "message": message, **extra})

    @property
    def status(self) -> str:
        st = {f["status"] for f in self.findings}
        if "fail" in st:
            return "fail"
        if "suspect" in st:
            return "suspect"
        return "pass"

    def digest(self) -> str:
        h = hashlib.sha256(json.dumps(to_jsonable(self.inputs), sort_keys=True).encode())
        for p in sorted(set(self.digest_files)):
            h.update(Path(p).read_bytes())
        return h.hexdigest()

    def to_dict(self, wall: float | None = None) -> dict:
        out = {
            "schema": REPORT_SCHEMA,
            "version": __version__,
            "command": self.command,
            "inputs": self.inputs,
            "inputs_digest": self.digest(),
            "status": self.status,
            "findings": self.findings,
            "data": self.data,
        }
        if wall is not None:
            out["wall_time_s"] = f"{wall:.3f}"
        return to_jsonable(out)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def _data_root() -> Path:
    from .modulardata.registry import data_dir
    return data_dir()


def _cert(args, rep: RunReport):
    from .modulardata.cert import load_cert
    path = Path(args.cert) if getattr(args, "cert", None) else _data_root() / "cert" / f"cert{args.disc}.json"
    if not path.exists():
        raise InputError(f"missing certification data for D = {args.disc} ({path})")
    rep.digest_files.append(str(path))
    cert = load_cert(path)
    if cert.D != args.disc:
        raise InputError(f"certificate is for D = {cert.D}, not {args.disc}")
    return cert


def _record(D: int, rep: RunReport):
    from .modulardata.registry import load_record
    path = _data_root() / "registry" / f"D{D}.json"
    rep.digest_files.append(str(path))
    try:
        return load_record(D)
    except InvalidDiscriminantError as exc:
        raise InputError(str(exc)) from None


def _record_findings(rec, rep: RunReport) -> None:
    from .ela import CertificationRecord
    assert isinstance(rec, CertificationRecord)
    for name, ok in rec.conditions.items():
        rep.add(name, ok, "holds" if ok else "fails")
    rep.add("status", rec.certified, rec.failing or "certified")


def cmd_certify_point(cert, rep: RunReport) -> None:
    from .ela import run_point
    rec = run_point(cert)
    _record_findings(rec, rep)
    rep.data["record"] = rec.to_dict()
    exp = cert.expected
    if rec.M is not None and "M_scaled" in exp:
        scale = Fraction(exp["M_scale"])
        want = [[Fraction(v) * scale for v in row] for row in exp["M_scaled"]]
        rep.add("M(a)", rec.M.rows == want, "trace-based M(a) equals the tabulated matrix")
    if rec.x is not None and "x" in exp:
        rep.add("kernel", list(rec.x) == [Fraction(v) for v in exp["x"]], f"x = {to_jsonable(list(rec.x))}")
    if rec.lam is not None and "lambda" in exp:
        rep.add("lambda", rec.lam == Fraction(exp["lambda"]), f"lambda = {to_jsonable(rec.lam)}")
    if rec.eigen is not None and "eigenforms" in exp and hasattr(rec.eigen, "forms"):
        got = sorted([list(map(Fraction, f)) for f in rec.eigen.forms])
        want = sorted([list(map(Fraction, f)) for f in exp["eigenforms"]])
        rep.add("eigenforms", got == want, "forms (w-coefficient, constant) as expected")
        rep.add("double-zero form", rec.eigen.contains_dw_over_z(), "dw/z is one of the eigenforms")


SPECIALIZE_COUNT = 10
SPECIALIZE_SEED = 20260


def specialization_parameters(seed: int = SPECIALIZE_SEED):
    """Deterministic stream of random rationals p/q with |p| <= 50, 1 <= q <= 12."""
    rng = random.Random(seed)
    while True:
        yield Fraction(rng.randint(-50, 50), rng.randint(1, 12))


def cmd_certify_family(cert, rep: RunReport, count: int = SPECIALIZE_COUNT,
                       seed: int = SPECIALIZE_SEED) -> Any:
    from .ela import certify_family, ela_run, family_from_cert, specialize_record
    model, b = family_from_cert(cert)
    rec = ela_run(cert.icd, model, b)
    _record_findings(rec, rep)
    if not rec.certified:
        rep.data["record"] = rec.to_dict()
        return rec
    fam = certify_family(rec, cert.w_D)
    rep.add("w_D identity", fam.w_identity, "w_D(b(t)) = 0 in K(t)" if fam.w_identity
            else f"residual {fam.w_residual!r}")
    rep.add("nonconstant", fam.nonconstant, "t -> chart(IC(Y(a(t)))) is nonconstant")
    rep.add("fiber probe", fam.fiber_degree == 1, f"fiber over t = {fam.probe_t} has degree {fam.fiber_degree}")
    base = rec.field.base
    runs, skipped = [], []
    for t0 in specialization_parameters(seed):
        if len(runs) == count:
            break
        t0 = base(t0)
        if not fam.bad_polynomial(t0):
            skipped.append(t0)
            continue
        if any(r["t"] == t0 for r in runs):
            continue
        a0, b0 = specialize_record(rec, t0)
        pr = ela_run(cert.icd, a0, b0)
        xs = tuple(c(t0) for c in rec.x)
        runs.append({"t": t0, "ok": pr.certified and pr.x == xs and pr.lam == rec.lam(t0)})
    good = sum(r["ok"] for r in runs)
    rep.add("specializations", good == count, f"{good} of {count} point runs agree (seed {seed})")
    rep.data["specializations"] = {"runs": runs, "skipped_bad_parameters": skipped}
    rep.data["family"] = fam.to_dict()
    return rec


def cmd_certify(args, rep: RunReport) -> None:
    cert = _cert(args, rep)
    if args.family:
        cmd_certify_family(cert, rep)
    else:
        cmd_certify_point(cert, rep)


def cmd_cusps(args, rep: RunReport) -> None:
    from .cusps import cusp_count_report, enumerate_prototypes, prototype_limit, spin
    D = args.disc
    if args.spin and D % 8 != 1:
        raise InputError("spin undefined: D is not 1 mod 8")
    rec = _record(D, rep)
    comps = [h.C for h in rec.homeotype]
    protos = enumerate_prototypes(D)
    items = []
    for p in protos:
        it = {"prototype": list(p.tuple), "limit": list(prototype_limit(p).coords)}
        if args.spin and D % 8 == 1:
            it["spin"] = spin(p)
        items.append(it)
    rep.data["prototypes"] = items
    cr = cusp_count_report(D, comps)
    rep.data["counts"] = cr
    rep.add("cusp count", len(protos) == sum(comps), f"{len(protos)} prototypes, table total {sum(comps)}")
    if args.spin:
        rep.add("spin split", cr["ok"], f"spin split {cr['spin_split']} vs components {comps}")


def _disc_support_ok(poly, D: int) -> tuple[bool, list, list]:
    from .arithlab import n_of_D, prime_support
    from .exactfield import discriminant
    d = discriminant(poly) if poly.degree > 1 else Fraction(1)
    num = abs(Fraction(d).numerator) * Fraction(d).denominator
    sup = prime_support(num) if num != 1 else []
    nsup = prime_support(n_of_D(D))
    return set(sup) <= set(nsup), sup, nsup


def cmd_cusp_poly(args, rep: RunReport) -> None:
    from .cusps import cuspidal_polynomial
    from .ela import ela_run, family_from_cert
    from .modulardata.serialize import poly_to_json
    D = args.disc
    rec = _record(D, rep)
    have_cert = bool(getattr(args, "cert", None)) or (_data_root() / "cert" / f"cert{D}.json").exists()
    if have_cert:
        cert = _cert(args, rep)
        model, b = family_from_cert(cert)
        er = ela_run(cert.icd, model, b)
        if not er.certified:
            rep.add("family", False, f"family run rejected: {er.failing}")
            return
        cp = cuspidal_polynomial(er, D)
        poly = cp.poly
        rep.data["cuspidal_polynomial"] = poly_to_json(poly)
        rep.data["discriminant"] = cp.discriminant
        if rec.cuspidal_polynomial is not None:
            rep.add("table", poly == rec.cuspidal_polynomial, f"c_D(t) = {poly!r}")
        if rec.cusp_disc_factored is not None:
            want = 1
            for p, e in rec.cusp_disc_factored.items():
                want *= p ** e
            rep.add("discriminant", abs(cp.discriminant) == want, f"disc = {to_jsonable(cp.discriminant)}")
    elif rec.cuspidal_polynomial is not None:
        poly = rec.cuspidal_polynomial
        rep.data["cuspidal_polynomial"] = poly_to_json(poly)
        rep.add("source", True, "data-level check only: no family certificate shipped for this D")
    else:
        raise InputError(f"no cuspidal polynomial or certificate for D = {D}")
    ok, sup, nsup = _disc_support_ok(poly, D)
    rep.add("N(D) containment", ok, f"disc primes {sup} within primes of N(D) {nsup}")


def cmd_singular_primes(args, rep: RunReport) -> None:
    from .arithlab import PlaneCurveModel, n_of_D, prime_support, singular_primes
    D = args.disc
    rec = _record(D, rep)
    if not rec.model:
        raise InputError(f"no plane model stored for D = {D}")
    res = singular_primes(PlaneCurveModel.from_record(rec))
    rep.data["result"] = res.to_dict()
    if rec.singular_primes is not None:
        rep.add("table", res.primes == sorted(rec.singular_primes),
                f"computed {res.primes}, tabulated {sorted(rec.singular_primes)}")
    nsup = prime_support(n_of_D(D))
    rep.add("N(D) containment", set(res.primes) <= set(nsup), f"primes of N(D) = {nsup}")


def cmd_mordell(args, rep: RunReport) -> None:
    from .arithlab.mordell import mordell_report
    if args.disc != 44:
        raise InputError("Mordell-Weil relations are tabulated for D = 44 only")
    rep.digest_files.append(str(_data_root() / "tables" / "w44cusps.json"))
    r = mordell_report(args.bound)
    d = r.to_dict()
    rep.data["mordell"] = d
    rep.add("j-invariant", d["j_ok"], f"j = {d['j_expected']}" if d["j_ok"] else f"j = {r.j!r}")
    for row in d["rows"]:
        rep.add(f"relation {tuple(row['prototype'])}", row["ok"], f"{tuple(row['mordell_weil'])} . (P1, P2)")
    rep.add("P1 - P2 rational", r.difference_rational, "P1 - P2 has rational coordinates")
    rep.add("n P2 irrational", r.rational_multiple is None, f"no n <= {r.bound} with n P2 rational")


def _roundtrip_findings(rep: RunReport) -> None:
    from .modulardata.serialize import poly_from_json, poly_to_json
    root = _data_root()
    bad = []
    for path in sorted(root.glob("**/*.json")):
        raw = json.loads(path.read_text())
        stack = [raw]
        while stack:
            node = stack.pop()
            if isinstance(node, dict):
                if {"vars", "field", "terms"} <= set(node):
                    if poly_to_json(poly_from_json(node, str(path))) != node:
                        bad.append(str(path.relative_to(root)))
                        break
                stack.extend(node.values())
            elif isinstance(node, list):
                stack.extend(node)
    rep.add("round-trip", not bad, "every stored polynomial re-serializes identically" if not bad
            else f"round-trip mismatch in {bad}")


def cmd_data_validate(args, rep: RunReport) -> None:
    from .modulardata.cert import load_cert
    from .modulardata.registry import RegistryError, load_registry, validate_record
    root = _data_root()
    rep.digest_files += [str(p) for p in sorted(root.glob("**/*.json"))]
    try:
        reg = load_registry(root)
    except RegistryError as exc:
        for prob in exc.problems:
            rep.add("registry", False, prob)
        return
    rep.add("registry", True, f"{len(reg)} discriminants loaded")
    cert = load_cert(root / "cert" / "cert12.json") if (root / "cert" / "cert12.json").exists() else None
    for D, rec in reg.items():
        for f in validate_record(rec, cert):
            rep.add(f"D={D} {f.code}", f.status, f.message)
    _roundtrip_findings(rep)


def cmd_stable_limit(cert, rep: RunReport) -> None:
    from .cusps import compare_stable_limit, match_prototypes
    from .ela import ela_run, family_from_cert
    model, b = family_from_cert(cert)
    er = ela_run(cert.icd, model, b)
    exp = cert.expected
    cands = {}
    if "stable_limit_display" in exp:
        cands["display"] = [Fraction(v) for v in exp["stable_limit_display"]]
    if "stable_limit_prototype" in exp:
        cands["prototype formula"] = (tuple(exp["stable_limit_prototype"]), cert.D)
    cmp = compare_stable_limit(er, cands)
    d = cmp.to_dict()
    d["matching_prototypes"] = [list(p.tuple) for p in match_prototypes(cert.D, cmp.computed)]
    rep.data["stable_limit"] = d
    matches = cmp.matches()
    rep.add("stable limit", True, f"exact limit {to_jsonable(list(cmp.computed.coords))} matches "
            f"{matches or 'none of the candidates'}; "
            f"does not match {[k for k in cands if k not in matches] or 'nothing'}",
            matches=matches)


def cmd_report(args, rep: RunReport) -> None:
    from .modulardata.registry import FUNDAMENTAL_DISCRIMINANTS, load_registry
    from .pairing import verify_NrMada

    def sub(name: str, fn: Callable[[RunReport], None]) -> None:
        child = RunReport(name, {}, strict=rep.strict)
        try:
            fn(child)
        except TeichError as exc:
            child.add("error", False, str(exc))
        for f in child.findings:
            rep.findings.append({**f, "code": f"{name}: {f['code']}"})
        rep.digest_files.extend(child.digest_files)
        rep.data[name] = {"status": child.status}

    ns = argparse.Namespace
    cert_ns = ns(disc=12, cert=None, family=False)
    sub("certify point", lambda r: cmd_certify_point(_cert(cert_ns, r), r))
    sub("certify family", lambda r: cmd_certify_family(_cert(cert_ns, r), r))
    sub("stable limit", lambda r: cmd_stable_limit(_cert(cert_ns, r), r))
    for D in FUNDAMENTAL_DISCRIMINANTS:
        sub(f"cusps D={D}", lambda r, D=D: cmd_cusps(ns(disc=D, spin=D % 8 == 1), r))
    for D, rec in load_registry().items():
        if rec.cuspidal_polynomial is not None:
            sub(f"cusp-poly D={D}", lambda r, D=D: cmd_cusp_poly(ns(disc=D, cert=None), r))
        if rec.singular_primes is not None:
            sub(f"singular-primes D={D}", lambda r, D=D: cmd_singular_primes(ns(disc=D), r))
    sub("mordell D=44", lambda r: cmd_mordell(ns(disc=44, bound=18), r))
    sub("data", lambda r: cmd_data_validate(ns(), r))

    def pairing(r: RunReport) -> None:
        chk = verify_NrMada([1, 2, 3, 4, 5])
        r.add("N = M da", chk.holds, "pairing identity at roots (1,2,3,4,5)")
    sub("pairing", pairing)


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _disc(s: str) -> int:
    try:
        D = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{s!r} is not an integer") from None
    return D


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit code 2 like every input error
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable table instead of JSON")
    common.add_argument("--strict", action="store_true", help="exit 3 when transcription-suspect data is met")
    common.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")

    ap = _Parser(prog="teichcurves", description="Certification and table reproduction for Weierstrass curves.")
    ap.add_argument("--version", action="version", version=__version__)
    sp = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sp.add_parser("certify", parents=[common], help="run the eigenform location algorithm")
    p.add_argument("--disc", type=_disc, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--family", action="store_true")
    g.add_argument("--point", action="store_true")
    p.add_argument("--cert")
    p.set_defaults(func=cmd_certify)

    p = sp.add_parser("cusps", parents=[common], help="splitting prototypes and stable limits")
    p.add_argument("--disc", type=_disc, required=True)
    p.add_argument("--spin", action="store_true")
    p.set_defaults(func=cmd_cusps)

    p = sp.add_parser("cusp-poly", parents=[common], help="cuspidal polynomial of a certified family")
    p.add_argument("--disc", type=_disc, required=True)
    p.add_argument("--cert")
    p.set_defaults(func=cmd_cusp_poly)

    p = sp.add_parser("singular-primes", parents=[common], help="primes of bad reduction of the stored model")
    p.add_argument("--disc", type=_disc, required=True)
    p.set_defaults(func=cmd_singular_primes)

    p = sp.add_parser("mordell", parents=[common], help="Mordell-Weil relations among cusps")
    p.add_argument("--disc", type=_disc, required=True)
    p.add_argument("--bound", type=int, default=18)
    p.set_defaults(func=cmd_mordell)

    p = sp.add_parser("data", help="registry maintenance")
    dsp = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = dsp.add_parser("validate", parents=[common], help="validate every shipped data file")
    q.set_defaults(func=cmd_data_validate)

    p = sp.add_parser("report", parents=[common], help="run the full suite")
    p.add_argument("--all", action="store_true", required=True)
    p.set_defaults(func=cmd_report)
    return ap


def render_pretty(d: dict) -> str:
    lines = [f"{d['command']}: {d['status'].upper()}  (inputs {d['inputs_digest'][:12]})"]
    width = max((len(f["code"]) for f in d["findings"]), default=0)
    for f in d["findings"]:
        tag = f["status"].upper()
        if f.get("suspect"):
            tag += "*"
        lines.append(f"  [{tag:<7}] {f['code']:<{width}}  {f['message']}")
    if any(f.get("suspect") for f in d["findings"]):
        lines.append("  * transcription-suspect data (use --strict to fail on it)")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    name = args.command + (f" {args.action}" if getattr(args, "action", None) else "")
    inputs = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "command", "action", "pretty", "timing")}
    rep = RunReport(name, inputs, strict=args.strict)
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
    except (InputError, InvalidDiscriminantError, DataFormatError, FileNotFoundError) as exc:
        print(json.dumps({"schema": REPORT_SCHEMA, "command": name, "status": "input-error",
                          "error": str(exc)}, sort_keys=True), file=sys.stderr)
        return EXIT_INPUT
    out = rep.to_dict(time.perf_counter() - t0 if args.timing else None)
    print(render_pretty(out) if args.pretty else json.dumps(out, sort_keys=True, indent=1))
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "suspect": EXIT_SUSPECT}[out["status"]]


if __name__ == "__main__":
    sys.exit(main())
