#!/usr/bin/env python3
"""Regenerate the shipped JSON data from the TeX source of the tables.

    python3 scripts/build_registry.py SOURCE [--out src/teichcurves/data]

Every polynomial goes through the strict TeX parser; anything it refuses is
stored verbatim with status "transcription-suspect" instead of being repaired.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from teichcurves.exactfield import QQ, MultiPoly, QuadraticField, UniPoly  # noqa: E402
from teichcurves.exactfield.fields import format_rational  # noqa: E402
from teichcurves.modulardata.registry import FUNDAMENTAL_DISCRIMINANTS, SCHEMA  # noqa: E402
from teichcurves.modulardata.cert import CERT_SCHEMA  # noqa: E402
from teichcurves.modulardata.serialize import coeff_to_json, poly_to_json  # noqa: E402
from teichcurves.modulardata.texpoly import (TexParseError, parse_tex_poly,  # noqa: E402
                                             split_definition)


def strip_comments(text: str) -> str:
    text = re.sub(r"\\begin\{comment\}.*?\\end\{comment\}", "", text, flags=re.S)
    return "\n".join(line for line in text.splitlines() if not line.lstrip().startswith("%"))


def braced(text: str, start: int) -> tuple[str, int]:
    """Contents of the brace group opening at text[start] == '{'."""
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "{":
            depth += 1
        elif text[i] == "}":
            depth -= 1
            if depth == 0:
                return text[start + 1:i], i + 1
    raise ValueError("unbalanced braces")


def macro_bodies(text: str, names=("ppoly", "psspoly")) -> list[str]:
    out = []
    for m in re.finditer(r"\\(%s)\{" % "|".join(names), text):
        body, _ = braced(text, m.end() - 1)
        out.append(" ".join(body.split()))
    return out


def field_for(D: int, body: str):
    return QuadraticField(D) if "\\sqrt" in body else QQ


def try_parse(body: str, names, D: int):
    fld = field_for(D, body)
    try:
        return parse_tex_poly(body, names, fld), None
    except (TexParseError, ValueError) as exc:
        return None, str(exc)


# ---------------------------------------------------------------------------
# individual tables
# ---------------------------------------------------------------------------

def table_polys(text: str) -> dict:
    out = {"b": {}, "w": {}, "g": {}}
    for body in macro_bodies(text):
        letter, D, comp, names, rhs = split_definition(body)
        if letter not in out:
            continue
        poly, err = try_parse(rhs, names, D)
        out[letter][D] = {"poly": poly, "error": err, "tex": rhs.strip(), "component": comp,
                          "names": names}
    m = re.search(r"\\\[\s*g_\{21\}\(x,y\)\s*=\s*(.*?)\.\s*\\\]", text, flags=re.S)
    if m:
        poly, err = try_parse(m.group(1), ("x", "y"), 21)
        out["g"][21] = {"poly": poly, "error": err, "tex": m.group(1).strip(), "component": None,
                        "names": ("x", "y")}
    return out


def _cell_value(cell: str):
    cell = cell.replace("\\left", "").replace("\\right", "").strip()
    if cell.startswith("\\{"):
        return [_cell_value(x) for x in cell[2:-2].split(",")]
    m = re.fullmatch(r"(-?)\\frac\{(\d+)\}\{(\d+)\}", cell)
    if m:
        return Fraction(int(m.group(2)), int(m.group(3))) * (-1 if m.group(1) else 1)
    return Fraction(int(cell))


def homeotype_rows(text: str) -> dict[int, dict]:
    start = text.index("D & g & e_2 & C & \\chi")
    block = text[start:text.index("\\bottomrule", start)]
    out = {}
    for line in block.splitlines()[1:]:
        line = line.split("\\\\")[0].strip()
        if "&" not in line:
            continue
        cells = [c.strip() for c in line.split("&")]
        for half in (cells[:5], cells[5:]):
            if len(half) < 5:
                continue
            dcell = half[0]
            star = dcell.endswith("^*")
            D = int(dcell.rstrip("^*"))
            g, e2, C, chi = (_cell_value(c) for c in half[1:])
            if isinstance(g, list):
                comps = [{"g": int(g[i]), "e2": int(e2[i]), "C": int(C[i]), "chi": format_rational(chi[i])}
                         for i in range(2)]
            else:
                comps = [{"g": int(g), "e2": int(e2), "C": int(C), "chi": format_rational(chi)}]
            out[D] = {"components": comps, "orbifold": star}
    return out


def parse_factored_int(s: str) -> dict[int, int]:
    s = s.replace("$", "").strip()
    if s == "1":
        return {}
    out = {}
    for part in s.split("\\cdot"):
        m = re.fullmatch(r"\s*(\d+)(?:\^\{?(\d+)\}?)?\s*", part)
        out[int(m.group(1))] = int(m.group(2) or 1)
    return out


def cusp_rows(text: str) -> dict[int, dict]:
    start = text.index("Cuspidal polynomial $c_D(t)$")
    block = text[text.index("\\midrule", start):text.index("\\bottomrule", start)]
    block = block.replace("\\midrule", "")
    out = {}
    for row in re.split(r"\\\\\s*\\addlinespace\[0\.4em\]", block):
        row = re.sub(r"^\s*\\addlinespace\[[^]]*\]", "", row)
        if "&" not in row:
            continue
        dcell, pcell, disc = (c.strip() for c in row.split("&"))
        D = int(dcell.strip("$ "))
        tex = pcell
        tex = re.sub(r"\\begin\{array\}\{\w\}|\\end\{array\}|\\hspace\{[^}]*\}", " ", tex)
        tex = re.sub(r"\\multicolumn\{1\}\{\w\}", " ", tex)
        tex = tex.replace("\\\\", " ").replace("$", " ")
        tex = " ".join(tex.split())
        poly = parse_tex_poly(tex, ("t",), QQ).to_unipoly(0)
        out[D] = {"tex": tex, "poly": poly, "disc_factored": parse_factored_int(disc)}
    return out


def singular_rows(text: str) -> dict[int, list[int]]:
    start = text.index("Singular primes for")
    block = text[start:text.index("\\bottomrule", start)]
    out = {}
    for m in re.finditer(r"\$(\d+)\$\s*&\s*\$\\left\\\{(.*?)\\right\\\}\$", block):
        out[int(m.group(1))] = sorted(int(x) for x in m.group(2).split(","))
    return out


def _pair(s: str, F):
    """'(a, b)' with TeX entries over F; returns list of coefficient JSON or None for infinity."""
    s = s.strip().strip("$").strip()
    s = s.replace("\\left", "").replace("\\right", "").strip()
    assert s[0] == "(" and s[-1] == ")", s
    inner = s[1:-1]
    depth, cut = 0, None
    for i, ch in enumerate(inner):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == "," and depth == 0:
            cut = i
    a, b = inner[:cut], inner[cut + 1:]
    if "infty" in a:
        return None
    vals = []
    for part in (a, b):
        p = parse_tex_poly(part, ("x",), F)
        vals.append(p.terms.get((0,), F.zero))
    return vals


def w44_rows(text: str) -> list[dict]:
    start = text.index("Prototype & $(x,y)$")
    block = text[text.index("\\midrule", start) + len("\\midrule"):text.index("\\bottomrule", start)]
    F = QuadraticField(44)
    rows = []
    for row in re.split(r"\\\\\s*\\addlinespace\[0\.4em\]", block):
        row = re.sub(r"^\s*\\addlinespace\[[^]]*\]", "", row)
        if "&" not in row:
            continue
        proto, xy, rs, mw = (c.strip() for c in row.split("&"))
        pv = [int(x) for x in proto.strip("$()").split(",")]
        pt = _pair(xy, F)
        rsv = _pair(rs, F)
        mwv = [int(x) for x in mw.strip("$()").split(",")]
        rows.append({
            "prototype": pv,
            "point": None if pt is None else {"x": coeff_to_json(pt[0]), "y": coeff_to_json(pt[1])},
            "rs": [coeff_to_json(v) for v in rsv],
            "mordell_weil": mwv,
            "tex": {"xy": xy, "rs": rs},
        })
    return rows


def w44_generators(text: str) -> dict:
    m = re.search(r"P_1 = \\left\((.*?)\\right\) \\mbox\{ and \} P_2 = \\left\((.*?)\\right\)", text, flags=re.S)
    F = QuadraticField(44)
    out = {}
    for name, body in (("P1", m.group(1)), ("P2", m.group(2))):
        body = re.sub(r"\\frac\{([^{}]*)\}\{(\d+)\}", r"(\1)/\2", body)
        xs, ys = body.split(",")
        vals = []
        for part in (xs, ys):
            if "/" in part:
                num, den = part.rsplit("/", 1)
                v = parse_tex_poly(num, ("x",), F).terms[(0,)] / int(den)
            else:
                v = parse_tex_poly(part, ("x",), F).terms[(0,)]
            vals.append(v)
        out[name] = {"x": coeff_to_json(vals[0]), "y": coeff_to_json(vals[1])}
    return out


def j_invariant_tex(text: str) -> str:
    m = re.search(r"j\(\\overline\{W\}_\{44\}\) = (\d+)\^(\d+)/\((.*?)\)", text)
    num = int(m.group(1)) ** int(m.group(2))
    den = 1
    for part in m.group(3).split("\\cdot"):
        b, _, e = part.strip().partition("^")
        den *= int(b) ** int(e or 1)
    return format_rational(Fraction(num, den))


def linear_forms(D: int, raw: str) -> list[dict]:
    F = QuadraticField(D)
    out = []
    for piece in re.split(r",|\\mbox\{ and \}|\\\\", raw):
        piece = piece.strip()
        if not piece:
            continue
        lhs, rhs = piece.split("=")
        names = ("X", "Y", "Z")
        try:
            form = parse_tex_poly(lhs, names, F) - parse_tex_poly(rhs, names, F)
        except TexParseError as exc:
            out.append({"tex": piece, "form": None, "status": "transcription-suspect", "note": str(exc)})
            continue
        mentions = len(re.findall(r"[XYZ]", piece))
        distinct = sum(1 for i in range(3) if form.degree(i) > 0)
        status = "ok"
        note = ""
        if mentions > len(set(re.findall(r"[XYZ]", piece))):
            status = "transcription-suspect"
            note = "a coordinate letter occurs twice; the form collapses to fewer variables"
        out.append({"tex": piece, "form": poly_to_json(form), "status": status, "note": note,
                    "variables_used": distinct})
    return out


def canonical_data(text: str) -> dict[int, dict]:
    out = {}
    m = re.search(r"\\omega_1 = \\left\((.*?)\\right\) dx/y \\mbox\{ and \}\\omega_2 = \\left\((.*?)\\right\) dx/y", text)
    if m:
        F = QuadraticField(53)
        out[53] = {"canonical_forms": [
            {"tex": g, "linear_factor": poly_to_json(parse_tex_poly(g, ("x",), F).to_unipoly(0)),
             "differential": "dx/y"} for g in (m.group(1), m.group(2))]}
    m = re.search(r"The line \$(Y = 2Z)\$ meets \$\\overline\{W\}_\{56\}\$", text)
    if m:
        out[56] = {"canonical_lines": linear_forms(56, m.group(1))}
    m = re.search(r"Each of the following five lines.*?\\begin\{array\}\{c\}(.*?)\\end\{array\}", text, flags=re.S)
    if m:
        out[60] = {"canonical_lines": linear_forms(60, " ".join(m.group(1).split()))}
    return out


# ---------------------------------------------------------------------------
# certification data for D = 12
# ---------------------------------------------------------------------------

def _eq_block(text: str, label: str, end: str) -> str:
    i = text.index("\\label{%s}" % label) + len(label) + 8
    return text[i:text.index(end, i)]


def _ratfunc(tex: str) -> dict:
    """'num/den' with a single top-level slash into serialized polynomials in t."""
    depth, cut = 0, None
    for i, ch in enumerate(tex):
        if ch in "({":
            depth += 1
        elif ch in ")}":
            depth -= 1
        elif ch == "/" and depth == 0:
            cut = i
    num = parse_tex_poly(tex[:cut] if cut else tex, ("t",)).to_unipoly(0)
    den = parse_tex_poly(tex[cut + 1:], ("t",)).to_unipoly(0) if cut else UniPoly([1], QQ, "t")
    return {"num": poly_to_json(num), "den": poly_to_json(den)}


def cert12(text: str, w12: MultiPoly, b12_table: MultiPoly) -> dict:
    block = _eq_block(text, "eqn:IC12", "\\end{multline}")
    block = block.split("=", 1)[1]
    block = block.replace("\\big(", "").replace("\\big)", "").replace("\\\\", " ")
    parts = [" ".join(p.split()).rstrip(" .,") for p in block.split(":")]
    coords = [parse_tex_poly(p) for p in parts]
    bblock = _eq_block(text, "eqn:b12", "\\end{equation}")
    btex = bblock.split("where", 1)[1].split("=", 1)[1].strip()
    b12 = parse_tex_poly(btex)
    assert b12 == b12_table, "factored b_12 disagrees with the table entry"
    fam = _eq_block(text, "eqn:w12UC", "\\end{multline}").split("=", 1)[1].replace("\\\\", " ")
    fpoly = parse_tex_poly(" ".join(fam.split()), ("w", "t"))
    by_w = fpoly.coefficients_in(0)
    assert by_w[5] == 1
    a_t = []
    for k in range(5):
        c = by_w.get(k, MultiPoly({}, ("w", "t")))
        a_t.append({"num": poly_to_json(MultiPoly({(e[1],): v for e, v in c.terms.items()}, ("t",)).to_unipoly(0)),
                    "den": poly_to_json(UniPoly([1], QQ, "t"))})
    rm = re.search(r"\$r\(t\) = (.*?)\$, \$s\(t\) = (.*?)\$", text)
    b_t = [_ratfunc(rm.group(1)), _ratfunc(rm.group(2))]
    pt = _eq_block(text, "eqn:w12pt", "\\end{equation}").split("=", 1)[1]
    pp = parse_tex_poly(pt, ("w",)).to_unipoly(0)
    assert pp.lc() == 1 and pp.degree == 5
    bm = re.search(r"b=\((-?\d+/\d+),(-?\d+/\d+)\)", text)
    vm = re.search(r"v_r = \(([-\d, ]+)\).*?v_s = \(([-\d, ]+)\)", text)
    lim = re.search(r"\\lim_\{t \\to \\infty\} IC\(Y_\{12\}\(t\)\) = \(([^)]*)\) = IC\\left\( \(([^)]*)\) \\right\)", text)
    mblock = _eq_block(text, "eqn:w12ptMa", "\\end{array}")
    sm = re.search(r"\\frac\{1\}\{2\^(\d+) \\cdot 3\^(\d+)\}", mblock)
    rows = []
    for line in mblock.split("\n"):
        if "&" in line:
            rows.append([int(x) for x in line.replace("\\\\", "").split("&")])
    return {
        "schema": CERT_SCHEMA,
        "D": 12,
        "ic": {k: poly_to_json(p) for k, p in zip(("I2", "I4", "I6", "I10"), coords)},
        "b_D": poly_to_json(b12),
        "w_D": poly_to_json(w12),
        "point": {"a": [format_rational(pp.coeff(i)) for i in range(5)],
                  "b": [bm.group(1), bm.group(2)]},
        "family": {"field": {"field": "K(t)", "var": "t", "base": {"field": "QQ"}},
                   "a": a_t, "b": b_t},
        "tangent": {"v_r": [x.strip() for x in vm.group(1).split(",")],
                    "v_s": [x.strip() for x in vm.group(2).split(",")]},
        "expected": {
            "M_scale": format_rational(Fraction(1, 2 ** int(sm.group(1)) * 3 ** int(sm.group(2)))),
            "M_scaled": rows,
            "x": [0, 1, 0],
            "lambda": "1",
            "eigenforms": [[0, 1], [1, 0]],
            "stable_limit_display": [x.strip() for x in lim.group(1).split(":")],
            "stable_limit_prototype": [int(x) for x in lim.group(2).split(",")],
        },
    }


# ---------------------------------------------------------------------------

def model_entry(D: int, info: dict) -> dict:
    g = info["poly"]
    if g is None:
        return {"kind": "unknown", "g": None, "tex": info["tex"], "status": "transcription-suspect",
                "note": info["error"]}
    x, y = 0, 1
    degy = g.degree(y)
    entry = {"g": poly_to_json(g), "tex": info["tex"], "status": "ok"}
    if info.get("component") is not None:
        entry["component"] = info["component"]
    if degy == 2:
        by_y = g.coefficients_in(y)
        lead = by_y[2].terms.get((0, 0))
        if by_y[2].total_degree() == 0 and lead in (1, -1):
            norm = {k: v * lead for k, v in by_y.items()}
            h = norm.get(1, MultiPoly({}, g.names, g.field))
            f = norm.get(0, MultiPoly({}, g.names, g.field))
            entry["kind"] = "conic" if f.degree(x) <= 2 and h.degree(x) <= 1 else "hyperelliptic"
            entry["h"] = poly_to_json(h.to_unipoly(x))
            entry["f"] = poly_to_json(f.to_unipoly(x))
            return entry
    entry["kind"] = "quartic" if g.total_degree() == 4 else "plane"
    return entry


def build(source: Path, out: Path) -> None:
    text = strip_comments(source.read_text())
    polys = table_polys(text)
    homeo = homeotype_rows(text)
    cusps = cusp_rows(text)
    sing = singular_rows(text)
    canon = canonical_data(text)
    (out / "registry").mkdir(parents=True, exist_ok=True)
    (out / "tables").mkdir(parents=True, exist_ok=True)
    (out / "cert").mkdir(parents=True, exist_ok=True)

    for D in FUNDAMENTAL_DISCRIMINANTS:
        spin = D % 8 == 1
        notes, status = [], "ok"
        b = polys["b"].get(D)
        w = polys["w"].get(D)
        if b is None or w is None:
            raise SystemExit(f"missing table entry for D={D}")
        if b["error"]:
            status = "transcription-suspect"
            notes.append(f"b_D: {b['error']}")
        if w["error"]:
            status = "transcription-suspect"
            notes.append(f"w_D: {w['error']}")
        if spin and w["component"] is None:
            notes.append("model printed without a component superscript; stored as the spin-0 component")
        rec = {
            "schema": SCHEMA,
            "D": D,
            "fundamental": True,
            "spin_reducible": spin,
            "b_D": poly_to_json(b["poly"]) if b["poly"] is not None else None,
            "w_label": "w_D0" if spin else "w_D",
            "w_D": poly_to_json(w["poly"]) if w["poly"] is not None else None,
            "homeotype": homeo[D]["components"],
            "orbifold_exempt": homeo[D]["orbifold"],
            "status": status,
            "notes": notes,
            "extras": {},
        }
        if w["poly"] is None:
            rec["w_tex"] = w["tex"]
        if b["poly"] is not None:
            rec["extras"]["b_D_degrees"] = [b["poly"].degree(0), b["poly"].degree(1)]
        if D in polys["g"]:
            rec["model"] = model_entry(D, polys["g"][D])
        if D in cusps:
            rec["cuspidal_polynomial"] = poly_to_json(cusps[D]["poly"])
            rec["cusp_disc_factored"] = {str(p): e for p, e in cusps[D]["disc_factored"].items()}
        if D in sing:
            rec["singular_primes"] = sing[D]
        if D in canon:
            rec["extras"].update(canon[D])
            for line in canon[D].get("canonical_lines", []):
                if line["status"] != "ok":
                    rec["notes"].append(f"canonical line {line['tex']!r}: {line['note']}")
        (out / "registry" / f"D{D}.json").write_text(json.dumps(rec, indent=1) + "\n")

    (out / "tables" / "homeotype.json").write_text(json.dumps(
        [{"D": D, **homeo[D]} for D in sorted(homeo)], indent=1) + "\n")
    (out / "tables" / "cusppolys.json").write_text(json.dumps(
        [{"D": D, "tex": cusps[D]["tex"], "poly": poly_to_json(cusps[D]["poly"]),
          "disc_factored": {str(p): e for p, e in cusps[D]["disc_factored"].items()}}
         for D in sorted(cusps)], indent=1) + "\n")
    (out / "tables" / "singularprimes.json").write_text(json.dumps(
        [{"D": D, "primes": sing[D], "route": "quartic" if polys["g"][D]["poly"].total_degree() == 4
          and polys["g"][D]["poly"].degree(1) > 2 else "hyperelliptic"} for D in sorted(sing)],
        indent=1) + "\n")
    w44 = {
        "curve": poly_to_json(polys["g"][44]["poly"]),
        "field": {"field": "QQ(sqrt D)", "D": 44},
        "generators": w44_generators(text),
        "rows": w44_rows(text),
        "j_invariant": j_invariant_tex(text),
        "recorded_not_computed": {"conductor": 880, "mordell_weil_generator": [26, 160],
                                  "rational_torsion_search_bound": 18},
    }
    (out / "tables" / "w44cusps.json").write_text(json.dumps(w44, indent=1) + "\n")
    cert = cert12(text, polys["w"][12]["poly"], polys["b"][12]["poly"])
    (out / "cert" / "cert12.json").write_text(json.dumps(cert, indent=1) + "\n")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("source", type=Path)
    ap.add_argument("--out", type=Path, default=ROOT / "src" / "teichcurves" / "data")
    args = ap.parse_args()
    build(args.source, args.out)
    print(f"wrote data under {args.out}")


if __name__ == "__main__":
    main()
