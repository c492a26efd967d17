#!/usr/bin/env python3
"""Certify the D = 12 eigenform family and sample its specializations.

    python3 scripts/run_certification.py --samples 25 --seed 7 --out results/cert12

Writes ``family.json`` (the certificate record), ``specializations.jsonl``
(one line per sampled parameter) and ``summary.json``.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import random
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from teichcurves.cusps import cuspidal_polynomial, stable_limit_at_infinity  # noqa: E402
from teichcurves.ela import (CERTIFIED, certify_family, ela_run, family_bad_polynomial, family_from_cert,  # noqa: E402
                             specialize_record)
from teichcurves.exactfield import QQ  # noqa: E402
from teichcurves.modulardata.cert import load_cert  # noqa: E402
from teichcurves.modulardata.serialize import to_jsonable  # noqa: E402


@dataclass
class SamplerConfig:
    samples: int = 10
    seed: int = 20260
    max_numerator: int = 50
    max_denominator: int = 12


@dataclass
class CertificationConfig:
    cert: str | None = None  # default: the shipped certificate
    out: Path = Path("results/certification")
    sampler: SamplerConfig = field(default_factory=SamplerConfig)


def parse_args(argv=None) -> CertificationConfig:
    cfg = CertificationConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--cert", default=cfg.cert)
    ap.add_argument("--out", type=Path, default=cfg.out)
    ap.add_argument("--samples", type=int, default=cfg.sampler.samples)
    ap.add_argument("--seed", type=int, default=cfg.sampler.seed)
    ap.add_argument("--max-numerator", type=int, default=cfg.sampler.max_numerator)
    ap.add_argument("--max-denominator", type=int, default=cfg.sampler.max_denominator)
    ns = ap.parse_args(argv)
    return CertificationConfig(ns.cert, ns.out, SamplerConfig(ns.samples, ns.seed, ns.max_numerator,
                                                              ns.max_denominator))


def sample_parameters(cfg: SamplerConfig):
    rng = random.Random(cfg.seed)
    while True:
        yield Fraction(rng.randint(-cfg.max_numerator, cfg.max_numerator), rng.randint(1, cfg.max_denominator))


def main(argv=None) -> int:
    cfg = parse_args(argv)
    cfg.out.mkdir(parents=True, exist_ok=True)
    cert = load_cert(cfg.cert) if cfg.cert else load_cert()

    t0 = time.perf_counter()
    model, b = family_from_cert(cert)
    fam = ela_run(cert.icd, model, b)
    rep = certify_family(fam, cert.w_D)
    (cfg.out / "family.json").write_text(json.dumps(fam.to_dict(), indent=1, sort_keys=True))

    bad = family_bad_polynomial(fam)
    rows, skipped = [], []
    for t in sample_parameters(cfg.sampler):
        if len(rows) == cfg.sampler.samples:
            break
        if not bad(QQ(t)):
            skipped.append(str(t))
            continue
        a, bt = specialize_record(fam, t)
        pr = ela_run(cert.icd, a, bt)
        rows.append({"t": str(t), "certified": pr.certified,
                     "agrees": pr.certified and pr.x == tuple(c(t) for c in fam.x) and pr.lam == fam.lam(t)})
    with open(cfg.out / "specializations.jsonl", "w") as fh:
        for r in rows:
            fh.write(json.dumps(r) + "\n")

    cp = cuspidal_polynomial(fam, cert.D)
    summary = {
        "config": to_jsonable(dataclasses.asdict(cfg) | {"out": str(cfg.out)}),
        "family_status": rep.status,
        "w_identity": rep.w_identity,
        "cuspidal_polynomial": repr(cp.poly),
        "cusp_discriminant": str(cp.discriminant),
        "stable_limit": [str(c) for c in stable_limit_at_infinity(fam).coords],
        "specializations_agree": sum(r["agrees"] for r in rows),
        "specializations_total": len(rows),
        "skipped_bad_parameters": skipped,
        "seconds": round(time.perf_counter() - t0, 3),
    }
    (cfg.out / "summary.json").write_text(json.dumps(summary, indent=1, sort_keys=True))
    print(json.dumps(summary, indent=1, sort_keys=True))
    return 0 if rep.status == CERTIFIED and summary["specializations_agree"] == len(rows) else 1


if __name__ == "__main__":
    sys.exit(main())
