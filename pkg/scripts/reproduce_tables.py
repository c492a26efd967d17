#!/usr/bin/env python3
"""Recompute the tabulated invariants from the shipped registry and diff them.

    python3 scripts/reproduce_tables.py --tables cusps singular w44 --out results/tables

For each selected table a JSON file with one row per discriminant is written,
each row carrying the recomputed value, the stored value and an ``agree`` flag.
Records marked transcription-suspect are reported, never repaired.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from teichcurves.arithlab import PlaneCurveModel, n_of_D, prime_support, singular_primes  # noqa: E402
from teichcurves.arithlab.mordell import mordell_report  # noqa: E402
from teichcurves.cusps import cusp_count_report, spin_split  # noqa: E402
from teichcurves.modulardata.registry import load_registry, validate_record  # noqa: E402

TABLES = ("cusps", "euler", "singular", "w44")


@dataclass
class TableConfig:
    tables: list[str] = field(default_factory=lambda: list(TABLES))
    discriminants: list[int] | None = None  # None: every registry entry
    mordell_bound: int = 18
    out: Path = Path("results/tables")


def parse_args(argv=None) -> TableConfig:
    d = TableConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--tables", nargs="+", choices=TABLES, default=d.tables)
    ap.add_argument("--disc", type=int, nargs="+", dest="discriminants", default=d.discriminants)
    ap.add_argument("--mordell-bound", type=int, default=d.mordell_bound)
    ap.add_argument("--out", type=Path, default=d.out)
    ns = ap.parse_args(argv)
    return TableConfig(ns.tables, ns.discriminants, ns.mordell_bound, ns.out)


def cusp_rows(reg):
    for D, rec in reg.items():
        comps = [h.C for h in rec.homeotype]
        rep = cusp_count_report(D, comps)
        row = {"D": D, "computed": rep["prototypes"], "stored": sum(comps), "agree": rep["ok"]}
        if D % 8 == 1:
            split = sorted(spin_split(D))
            row |= {"spin_split": split, "agree": rep["ok"] and split == sorted(comps)}
        yield row


def euler_rows(reg):
    for D, rec in reg.items():
        f = {x.code: x for x in validate_record(rec)}["euler-characteristic"]
        yield {"D": D, "status": f.status, "message": f.message, "agree": f.status in ("pass", "exempt")}


def singular_rows(reg):
    for D, rec in reg.items():
        if rec.singular_primes is None or not rec.model:
            continue
        t0 = time.perf_counter()
        res = singular_primes(PlaneCurveModel.from_record(rec))
        yield {"D": D, "computed": res.primes, "stored": sorted(rec.singular_primes), "method": res.method,
               "divides_N": set(res.primes) <= set(prime_support(n_of_D(D))),
               "agree": res.primes == sorted(rec.singular_primes), "seconds": round(time.perf_counter() - t0, 3)}


def w44_rows(bound):
    rep = mordell_report(bound)
    for r in rep.rows:
        yield {k: str(v) if not isinstance(v, (bool, int, list, dict)) else v for k, v in r.items()}
    yield {"j": str(rep.j), "difference_rational": rep.difference_rational,
           "rational_multiple_up_to_bound": rep.rational_multiple, "agree": rep.ok}


def main(argv=None) -> int:
    cfg = parse_args(argv)
    cfg.out.mkdir(parents=True, exist_ok=True)
    reg = load_registry()
    if cfg.discriminants:
        reg = {D: reg[D] for D in cfg.discriminants}
    producers = {"cusps": lambda: cusp_rows(reg), "euler": lambda: euler_rows(reg),
                 "singular": lambda: singular_rows(reg), "w44": lambda: w44_rows(cfg.mordell_bound)}
    summary = {"config": asdict(cfg) | {"out": str(cfg.out)}}
    for name in cfg.tables:
        rows = list(producers[name]())
        (cfg.out / f"{name}.json").write_text(json.dumps(rows, indent=1, sort_keys=True))
        bad = [r.get("D", "-") for r in rows if not r.get("agree", True)]
        summary[name] = {"rows": len(rows), "disagree": bad}
        print(f"{name:9s} rows={len(rows):3d} disagree={bad}")
    (cfg.out / "summary.json").write_text(json.dumps(summary, indent=1, sort_keys=True))
    return 0 if all(not v["disagree"] for k, v in summary.items() if k != "config") else 1


if __name__ == "__main__":
    sys.exit(main())
