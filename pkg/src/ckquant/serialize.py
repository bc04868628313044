"""JSON, text and LaTeX forms of multipliers, rule sets, tables and reports.

JSON coefficients are lists of scalar terms
``{re, im, units, params, vPower, sPower, chPower}`` where ``re``/``im`` are
exact rationals written as strings.  ``parse_*`` inverts ``emit_*`` exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Mapping

from .catalog import EntryResult, Report
from .kinematics import (Classification, CommutatorTable, KinematicsSpec, TableEntry,
                         kinematics_spec)
from .multiplier import Permutation, sigma_name
from .ncalgebra import INV, X1, ExchangeRuleSet, NCPoly, format_poly
from .scalars import GaussQ, HyperScalar, ParamMonomial, ParamValue, format_scalar


# -- scalars -----------------------------------------------------------------

def scalar_to_json(x: HyperScalar) -> list[dict]:
    out = []
    for (units, params, vp, sp, cp), c in sorted(x.items(), key=lambda kv: repr(kv[0])):
        out.append({
            "re": str(c.re), "im": str(c.im),
            "units": {u: e for u, e in units},
            "params": {f"j{k}": e for k, e in params},
            "vPower": vp, "sPower": sp, "chPower": cp,
        })
    return out


def scalar_from_json(terms: list[dict]) -> HyperScalar:
    out = {}
    for t in terms:
        key = (tuple(sorted(t["units"].items())),
               tuple(sorted((int(k[1:]), e) for k, e in t["params"].items())),
               t["vPower"], t["sPower"], t["chPower"])
        out[key] = GaussQ(Fraction(t["re"]), Fraction(t["im"]))
    return HyperScalar(out)


def monomial_to_json(m: ParamMonomial) -> dict:
    return {f"j{k}": e for k, e in m.exps}


def monomial_from_json(d: Mapping[str, int]) -> ParamMonomial:
    return ParamMonomial(tuple((int(k[1:]), e) for k, e in d.items()))


# -- polynomials ---------------------------------------------------------------

def poly_to_json(p: NCPoly, rank: Mapping[str, int] | None = None) -> list[dict]:
    out = []
    for w, c in p.sorted_items(rank):
        for term in scalar_to_json(c):
            out.append({"word": list(w), **term})
    return out


def poly_from_json(terms: list[dict]) -> NCPoly:
    p = NCPoly()
    for t in terms:
        p = p + NCPoly({tuple(t["word"]): scalar_from_json([t])})
    return p


def relation_to_json(lhs: str, rhs: NCPoly, rank=None, **extra) -> dict:
    return {"lhs": lhs, "rhs": format_poly(rhs, rank),
            "coefficients": poly_to_json(rhs, rank), **extra}


# -- rule sets ---------------------------------------------------------------

def _param_value_to_json(pv: ParamValue) -> dict:
    return {"value": scalar_to_json(pv.value), "label": pv.label}


def _meta_to_json(meta: Mapping) -> dict:
    out = {}
    for key, val in meta.items():
        if key == "sigma":
            out[key] = list(val.images)
        elif key == "assignment":
            out[key] = {str(k): _param_value_to_json(v) for k, v in sorted(val.items())}
        elif key == "unit_limits":
            out[key] = list(val)
        elif key == "base":
            out[key] = rule_set_to_json(val)
        else:
            out[key] = val
    return out


def _meta_from_json(d: Mapping) -> dict:
    out = {}
    for key, val in d.items():
        if key == "sigma":
            out[key] = Permutation(tuple(val))
        elif key == "assignment":
            out[key] = {int(k): ParamValue(scalar_from_json(v["value"]), v["label"])
                        for k, v in val.items()}
        elif key == "unit_limits":
            out[key] = tuple(val)
        elif key == "base":
            out[key] = rule_set_from_json(val)
        else:
            out[key] = val
    return out


def rule_set_to_json(R: ExchangeRuleSet) -> dict:
    rels = []
    for (a, b), rhs in sorted(R.rules.items(), key=lambda kv: (R.rank[kv[0][0]], R.rank[kv[0][1]])):
        rels.append(relation_to_json(f"{a} {b}", rhs, R.rank, name=R.names.get((a, b))))
    sphere = None
    if R.sphere is not None:
        sphere = {"poly": poly_to_json(R.sphere[0], R.rank), "value": scalar_to_json(R.sphere[1])}
    return {
        "gens": list(R.gens),
        "rank": R.rank,
        "localized": R.localized,
        "stepBudget": R.step_budget,
        "multiplier": monomial_to_json(R.multiplier) if R.multiplier is not None else None,
        "relations": rels,
        "sphere": sphere,
        "meta": _meta_to_json(R.meta),
    }


def rule_set_from_json(d: Mapping) -> ExchangeRuleSet:
    rules, names = {}, {}
    for rel in d["relations"]:
        key = tuple(rel["lhs"].split())
        rules[key] = poly_from_json(rel["coefficients"])
        if rel.get("name") is not None:
            names[key] = rel["name"]
    sphere = None
    if d["sphere"] is not None:
        sphere = (poly_from_json(d["sphere"]["poly"]), scalar_from_json(d["sphere"]["value"]))
    mult = monomial_from_json(d["multiplier"]) if d["multiplier"] is not None else None
    return ExchangeRuleSet(gens=tuple(d["gens"]), rank=dict(d["rank"]), rules=rules,
                           step_budget=d["stepBudget"], multiplier=mult, sphere=sphere,
                           localized=d["localized"], names=names, meta=_meta_from_json(d["meta"]))


# -- tables ------------------------------------------------------------------

def _alias_to_json(alias: Mapping[tuple, HyperScalar] | None):
    if alias is None:
        return None
    return [{"aliases": list(m), "coefficients": scalar_to_json(c)}
            for m, c in sorted(alias.items(), key=lambda kv: (len(kv[0]), kv[0]))]


def _alias_from_json(items):
    if items is None:
        return None
    return {tuple(i["aliases"]): scalar_from_json(i["coefficients"]) for i in items}


def _entry_to_json(e: TableEntry) -> dict:
    return {"lhs": e.lhs, "rhs": e.rhs, "coefficients": poly_to_json(e.poly),
            "aliasForm": _alias_to_json(e.alias)}


def _entry_from_json(d: Mapping) -> TableEntry:
    return TableEntry(d["lhs"], poly_from_json(d["coefficients"]), _alias_from_json(d["aliasForm"]))


def table_to_json(t: CommutatorTable) -> dict:
    return {
        "family": t.spec.family,
        "dimension": t.spec.dimension_string,
        "mixed": [_entry_to_json(e) for e in t.mixed],
        "connections": [_entry_to_json(e) for e in t.connections],
        "right": None if t.right is None else [_entry_to_json(e) for e in t.right],
    }


def table_from_json(d: Mapping, sigma) -> CommutatorTable:
    spec = kinematics_spec(d["family"], sigma)
    right = None if d["right"] is None else [_entry_from_json(e) for e in d["right"]]
    return CommutatorTable(spec, [_entry_from_json(e) for e in d["mixed"]], right,
                           [_entry_from_json(e) for e in d["connections"]])


# -- documents -----------------------------------------------------------------

def document(kind: str, sigma: Permutation | None, multiplier: ParamMonomial | None,
             key: str | None = None, payload=None) -> dict:
    doc = {
        "kind": kind,
        "n": sigma.N if sigma is not None else None,
        "sigma": list(sigma.images) if sigma is not None else None,
        "multiplier": monomial_to_json(multiplier) if multiplier is not None else None,
    }
    if key is not None:
        doc[key] = payload
    return doc


def multiplier_document(sigma: Permutation, J: ParamMonomial, minimal: bool) -> dict:
    return dict(document("multiplier", sigma, J), minimal=minimal, text=str(J))


def relations_document(R: ExchangeRuleSet) -> dict:
    sigma = R.meta.get("sigma")
    return document("relations", sigma, R.multiplier, "relations", rule_set_to_json(R))


def table_document(t: CommutatorTable) -> dict:
    return document("table", t.spec.sigma, t.spec.J, "table", table_to_json(t))


def catalog_document(spec: KinematicsSpec, table) -> dict:
    payload = {"family": table.family, "source": table.source,
               "entries": [{"text": e.text, "emended": e.emended, "note": e.note}
                           for e in table.entries]}
    return document("catalog", spec.sigma, spec.J, "table", payload)


def classification_document(c: Classification) -> dict:
    return document("classification", None, None, "classes",
                    {"family": c.family, "count": c.count, "classes": c.classes,
                     "commutative": c.commutative()})


def report_document(r: Report) -> dict:
    return document("report", None, None, "report",
                    {"ok": r.ok, "counts": r.counts(),
                     "entries": [vars(e) for e in r.results]})


def report_from_json(d: Mapping) -> Report:
    return Report([EntryResult(**e) for e in d["report"]["entries"]])


def dumps(doc: Mapping) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False, sort_keys=False)


def loads(text: str) -> dict:
    return json.loads(text)


# -- LaTeX -------------------------------------------------------------------

_UNIT_TEX = {"jt": r"\tilde{j}_1", "c": "c", "T": "T", "R": "R"}


def _tex_power(base: str, e: int) -> str:
    return base if e == 1 else f"{base}^{{{e}}}"


def _tex_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _tex_gauss(c: GaussQ) -> tuple[str, bool]:
    """LaTeX of a coefficient and whether it needs brackets before factors."""
    if not c.im:
        return _tex_rational(c.re), False
    if not c.re:
        if c.im == 1:
            return "i", False
        if c.im == -1:
            return "-i", False
        return _tex_rational(c.im) + "i", False
    sign = "+" if c.im > 0 else "-"
    return f"{_tex_rational(c.re)}{sign}{_tex_rational(abs(c.im))}i", True


def scalar_to_latex(x: HyperScalar) -> str:
    if x.is_zero():
        return "0"
    parts = []
    for (units, params, vp, sp, cp), c in sorted(x.items(), key=lambda kv: repr(kv[0])):
        factors = [_tex_power(_UNIT_TEX.get(u, u), e) for u, e in units]
        factors += [_tex_power(f"j_{{{k}}}", e) for k, e in params]
        if vp:
            factors.append(_tex_power("v", vp))
        if sp:
            factors.append(_tex_power(r"\sinh", sp) + r"\frac{\tilde{J}v}{2}")
        if cp:
            factors.append(_tex_power(r"\cosh", cp) + r"\frac{\tilde{J}v}{2}")
        cs, bracket = _tex_gauss(c)
        body = " ".join(factors)
        if not factors:
            parts.append(cs)
        elif cs == "1":
            parts.append(body)
        elif cs == "-1":
            parts.append("-" + body)
        else:
            parts.append((f"({cs})" if bracket else cs) + " " + body)
    return " + ".join(parts).replace("+ -", "- ")


def _tex_letter(x: str) -> str:
    if x == INV:
        return r"\xi_1^{-1}"
    if x.startswith("x") and x[1:].isdigit():
        return rf"\xi_{{{x[1:]}}}"
    if len(x) > 1 and x[1] == "h":
        return _tex_alias(x[0] + x[2:], hat=True)
    return _tex_alias(x)


def _tex_alias(a: str, hat: bool = False) -> str:
    head = rf"\hat{{{a[0]}}}" if hat else a[0]
    return head if len(a) == 1 else f"{head}_{{{a[1:]}}}"


def word_to_latex(w) -> str:
    out = []
    for x, n in _runs(w):
        out.append(_tex_power(_tex_letter(x), n))
    return " ".join(out)


def _runs(w):
    out = []
    for x in w:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return out


def poly_to_latex(p: NCPoly, rank=None) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for w, c in p.sorted_items(rank):
        cs = scalar_to_latex(c)
        if not w:
            parts.append(cs)
        elif cs == "1":
            parts.append(word_to_latex(w))
        else:
            parts.append(rf"\left({cs}\right) {word_to_latex(w)}")
    return " + ".join(parts)


def alias_poly_to_latex(d: Mapping[tuple, HyperScalar]) -> str:
    if not d:
        return "0"
    parts = []
    for mono in sorted(d, key=lambda m: (len(m), m)):
        cs = scalar_to_latex(d[mono])
        if not mono:
            parts.append(cs)
        elif cs == "1":
            parts.append(word_to_latex(mono))
        else:
            parts.append(rf"\left({cs}\right) {word_to_latex(mono)}")
    return " + ".join(parts)


def _tex_lhs(text: str) -> str:
    text = text.strip()
    if text.startswith("["):
        a, b = text.strip("[]").split(",")
        return f"[{_tex_letter(a.strip())},{_tex_letter(b.strip())}]"
    out = []
    for tok in text.split():
        out.append(tok if tok in "+-" else word_to_latex(tuple([tok])))
    return " ".join(out)


def _align(lines: list[str]) -> str:
    return "\\begin{align*}\n" + " \\\\\n".join(lines) + "\n\\end{align*}"


def rule_set_to_latex(R: ExchangeRuleSet) -> str:
    lines = []
    for (a, b), rhs in sorted(R.rules.items(), key=lambda kv: (R.rank[kv[0][0]], R.rank[kv[0][1]])):
        lines.append(f"{word_to_latex((a, b))} &= {poly_to_latex(rhs, R.rank)}")
    return _align(lines)


def table_to_latex(t: CommutatorTable) -> str:
    lines = []
    src = t.right if t.right is not None else t.mixed
    for e in src:
        rhs = alias_poly_to_latex(e.alias) if e.alias is not None else poly_to_latex(e.poly)
        lines.append(f"{_tex_lhs(e.lhs)} &= {rhs}")
    for e in t.connections:
        rhs = alias_poly_to_latex(e.alias) if e.alias is not None else poly_to_latex(e.poly)
        lines.append(f"{_tex_lhs(e.lhs)} &= {rhs}")
    return _align(lines)


def standalone(body: str) -> str:
    return ("\\documentclass{article}\n\\usepackage{amsmath}\n\\begin{document}\n"
            + body + "\n\\end{document}\n")


# -- text --------------------------------------------------------------------

def table_to_text(t: CommutatorTable) -> str:
    name = sigma_name(t.spec.sigma) or str(t.spec.sigma)
    lines = [f"{t.spec.family} {name}  J = {t.spec.J}  [v] = {t.spec.dimension_string}"]
    src = t.right if t.right is not None else t.mixed
    for e in src:
        lines.append(f"  {e.lhs} = {e.rhs}")
    for e in t.connections:
        lines.append(f"  {e.lhs} = {e.rhs}")
    return "\n".join(lines)


def rule_set_to_text(R: ExchangeRuleSet) -> str:
    lines = [f"J = {R.multiplier}"]
    for (a, b), rhs in sorted(R.rules.items(), key=lambda kv: (R.rank[kv[0][0]], R.rank[kv[0][1]])):
        lines.append(f"  {a} {b} -> {format_poly(rhs, R.rank)}")
    if R.sphere is not None:
        lines.append(f"  sphere: {format_poly(R.sphere[0], R.rank)} = {format_scalar(R.sphere[1])}")
    return "\n".join(lines)


def report_to_text(r: Report) -> str:
    lines = []
    for e in r.results:
        line = f"{e.status:<12} {e.family:<9} {e.sigma:<11} [{e.source}] {e.text}"
        if e.note:
            line += f"\n{'':13}note: {e.note}"
        if e.residual:
            line += f"\n{'':13}residual: {e.residual}"
        lines.append(line)
    counts = ", ".join(f"{k} {v}" for k, v in sorted(r.counts().items()))
    lines.append(f"summary: {counts}")
    return "\n".join(lines)


def report_to_latex(r: Report) -> str:
    rows = []
    for e in r.results:
        text = e.text.replace("_", r"\_").replace("**", "^").replace("*", " ")
        rows.append(rf"{e.family} & {e.sigma} & {e.source} & \texttt{{{e.status}}} & ${text}$ \\")
    return ("\\begin{tabular}{lllll}\n" + "\n".join(rows) + "\n\\end{tabular}")


__all__ = [
    "scalar_to_json", "scalar_from_json", "poly_to_json", "poly_from_json",
    "rule_set_to_json", "rule_set_from_json", "table_to_json", "table_from_json",
    "document", "relations_document", "table_document", "classification_document",
    "report_document", "report_from_json", "multiplier_document", "catalog_document",
    "dumps", "loads", "scalar_to_latex", "poly_to_latex", "rule_set_to_latex",
    "table_to_latex", "standalone", "table_to_text", "rule_set_to_text", "report_to_text",
    "report_to_latex", "X1",
]
