"""Command line: multipliers, relations, kinematics tables, classification, verification.

Exit codes: 0 success, 2 bad input, 3 inadmissible contraction, 4 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from . import serialize as ser
from .catalog import UnknownCombination, catalog, verify
from .ckspace import CKSpaceSpec, build_relations, contract_relations
from .kinematics import (JT_VALUES, CommutatorTable, UnknownFamily, classify, derive_table,
                         kinematics_spec)
from .multiplier import (IndexOutOfRange, InvalidPermutation, full_multiplier,
                         minimal_multiplier, resolve_sigma)
from .ncalgebra import StepBudgetExceeded
from .scalars import (ONE, IndefiniteLimit, ParamValue, ScalarError, TruncationInsufficient,
                      hyper_normalize)

EXIT_BAD_INPUT = 2
EXIT_INDEFINITE = 3
EXIT_VERIFY_FAILED = 4

DEFAULT_CONFIG = {"order": 8, "step_budget": 10_000}


class BadInput(ValueError):
    pass


def read_config(path: str | None) -> dict:
    """Parse a ``key=value`` file; ``#`` starts a comment."""
    cfg = dict(DEFAULT_CONFIG)
    if path is None:
        return cfg
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise BadInput(f"cannot read config: {exc}") from None
    for n, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().replace("-", "_")
        if not sep or key not in DEFAULT_CONFIG:
            raise BadInput(f"{path}:{n}: expected one of {sorted(DEFAULT_CONFIG)} = <int>")
        try:
            cfg[key] = int(value)
        except ValueError:
            raise BadInput(f"{path}:{n}: {value.strip()!r} is not an integer") from None
    return cfg


def _settings(args) -> dict:
    cfg = read_config(args.config)
    if args.order is not None:
        cfg["order"] = args.order
    if args.step_budget is not None:
        cfg["step_budget"] = args.step_budget
    return cfg


def _sigma(args):
    try:
        sigma = resolve_sigma(args.sigma)
    except InvalidPermutation as exc:
        raise BadInput(f"malformed sigma {args.sigma!r}: {exc}") from None
    if getattr(args, "n", None) is not None and sigma.N != args.n:
        raise BadInput(f"sigma has {sigma.N} entries but --n is {args.n}")
    return sigma


def _pairs(text: str | None) -> dict[int, str]:
    """``j1=jt/T,j2=i/c`` -> {1: 'jt/T', 2: 'i/c'}."""
    out = {}
    for item in (text or "").split(","):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        key = key.strip()
        if not sep or not key.startswith("j") or not key[1:].isdigit():
            raise BadInput(f"expected jk=value, got {item!r}")
        out[int(key[1:])] = value.strip()
    return out


def _indices(text: str | None) -> list[int]:
    out = []
    for item in (text or "").split(","):
        item = item.strip()
        if not item:
            continue
        if not item.startswith("j") or not item[1:].isdigit():
            raise BadInput(f"expected a parameter name like j1, got {item!r}")
        out.append(int(item[1:]))
    return out


def _emit(args, doc: dict, text: str, latex: str) -> None:
    if args.format == "json":
        out = ser.dumps(doc)
    elif args.format == "latex":
        out = ser.standalone(latex) if args.standalone else latex
    else:
        out = text
    sys.stdout.write(out.rstrip("\n") + "\n")


# -- commands ----------------------------------------------------------------

def cmd_multiplier(args) -> int:
    sigma = _sigma(args)
    J = minimal_multiplier(sigma) if args.minimal else full_multiplier(sigma)
    sets = _pairs(args.set)
    for k, v in sets.items():
        if v != "1":
            raise BadInput(f"--set only fixes parameters to 1, got j{k}={v}")
        if not 1 <= k < sigma.N:
            raise BadInput(f"j{k} is not a parameter for N={sigma.N}")
    J = J.reduce(sets)
    doc = ser.multiplier_document(sigma, J, args.minimal)
    exps = " ".join(f"j_{{{k}}}" + (f"^{{{e}}}" if e != 1 else "") for k, e in J.exps) or "1"
    _emit(args, doc, str(J), f"$J = {exps}$")
    return 0


def cmd_relations(args) -> int:
    cfg = _settings(args)
    sigma = _sigma(args)
    J = minimal_multiplier(sigma) if args.multiplier == "minimal" else full_multiplier(sigma)
    R = build_relations(CKSpaceSpec(sigma, J), step_budget=cfg["step_budget"])
    subs = _pairs(args.sub)
    contract = _indices(args.contract)
    for k in list(subs) + contract:
        if not 1 <= k < sigma.N:
            raise BadInput(f"j{k} is not a parameter for N={sigma.N}")
    if subs or contract:
        assignment = {}
        for k in sorted(set(subs) | set(contract)):
            try:
                value = hyper_normalize(subs[k]) if k in subs else ONE
            except (ScalarError, SyntaxError, ValueError) as exc:
                raise BadInput(f"cannot parse j{k}={subs[k]!r}: {exc}") from None
            assignment[k] = ParamValue(value, f"j{k}" if k in contract else None)
        try:
            R = contract_relations(R, assignment, cfg["order"])
        except IndefiniteLimit as exc:
            print(f"indefinite limit: {exc}", file=sys.stderr)
            return EXIT_INDEFINITE
    _emit(args, ser.relations_document(R), ser.rule_set_to_text(R), ser.rule_set_to_latex(R))
    return 0


def _specialize(table: CommutatorTable, family_arg: str) -> CommutatorTable:
    """Fix ``jt`` for ``ds``/``ads``; other spellings keep it symbolic."""
    value = JT_VALUES.get(family_arg.lower())
    if value is None:
        return table

    def fix(e):
        poly = e.poly.map_coefficients(lambda c: c.map_units({"jt": value}))
        alias = None
        if e.alias is not None:
            alias = {m: c.map_units({"jt": value}) for m, c in e.alias.items()}
            alias = {m: c for m, c in alias.items() if c}
        return replace(e, poly=poly, alias=alias)

    right = None if table.right is None else [fix(e) for e in table.right]
    return CommutatorTable(table.spec, [fix(e) for e in table.mixed], right,
                           [fix(e) for e in table.connections])


def cmd_kinematics(args) -> int:
    try:
        spec = kinematics_spec(args.family, args.sigma)
    except InvalidPermutation as exc:
        raise BadInput(str(exc)) from None
    if args.catalog:
        try:
            spec, table = catalog(args.family, args.sigma)
        except UnknownCombination as exc:
            print(f"error: {exc.args[0]}", file=sys.stderr)
            return EXIT_BAD_INPUT
        text = "\n".join([f"{table.family} {table.sigma} [{table.source}]"]
                         + [f"  {e.text}" for e in table.entries])
        latex = "\\begin{verbatim}\n" + text + "\n\\end{verbatim}"
        _emit(args, ser.catalog_document(spec, table), text, latex)
        return 0
    t = _specialize(derive_table(spec), args.family)
    _emit(args, ser.table_document(t), ser.table_to_text(t), ser.table_to_latex(t))
    return 0


def cmd_classify(args) -> int:
    c = classify(args.family, with_signs=args.with_signs)
    lines = [f"{c.family}: {c.count} classes"]
    for cls in c.classes:
        tag = "  (commutative)" if cls[0] in c.commutative() else ""
        lines.append("  {" + ", ".join(cls) + "}" + tag)
    text = "\n".join(lines)
    latex = "\\begin{itemize}\n" + "\n".join(
        "\\item " + ", ".join(cls) for cls in c.classes) + "\n\\end{itemize}"
    _emit(args, ser.classification_document(c), text, latex)
    return 0


def cmd_verify(args) -> int:
    report = verify(args.family)
    _emit(args, ser.report_document(report), ser.report_to_text(report), ser.report_to_latex(report))
    return 0 if report.ok else EXIT_VERIFY_FAILED


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "latex"), default="text")
    common.add_argument("--standalone", action="store_true", help="wrap LaTeX in a document")
    common.add_argument("--config", help="key=value file with order and step_budget")
    common.add_argument("--order", type=int, help="series truncation order")
    common.add_argument("--step-budget", type=int, help="rewrite step budget")

    p = argparse.ArgumentParser(prog="ckquant", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("multiplier", parents=[common], help="full or minimal multiplier J")
    m.add_argument("--n", type=int)
    m.add_argument("--sigma", required=True)
    m.add_argument("--minimal", action="store_true")
    m.add_argument("--set", help="parameters fixed to 1, e.g. j3=1,j4=1")
    m.set_defaults(func=cmd_multiplier)

    for name in ("relations", "contract"):
        r = sub.add_parser(name, parents=[common], help="exchange relations of the quantum space")
        r.add_argument("--n", type=int)
        r.add_argument("--sigma", required=True)
        r.add_argument("--multiplier", choices=("full", "minimal"), default="full")
        r.add_argument("--contract", help="contracted parameters, e.g. j1,j2")
        r.add_argument("--sub", help='values, e.g. "j1=jt/T,j2=i/c,j3=1,j4=1"')
        r.set_defaults(func=cmd_relations)

    k = sub.add_parser("kinematics", parents=[common], help="commutator table of a kinematics")
    k.add_argument("--family", required=True)
    k.add_argument("--sigma", required=True)
    g = k.add_mutually_exclusive_group()
    g.add_argument("--derive", action="store_true", help="derive from the relations (default)")
    g.add_argument("--catalog", action="store_true", help="show the published table")
    k.set_defaults(func=cmd_kinematics)

    c = sub.add_parser("classify", parents=[common], help="equivalence classes of a family")
    c.add_argument("--family", required=True)
    c.add_argument("--with-signs", action="store_true", help="also allow r_k -> -r_k")
    c.set_defaults(func=cmd_classify)

    v = sub.add_parser("verify", parents=[common], help="check derived tables against the catalog")
    v.add_argument("--family", default="all")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (BadInput, UnknownFamily, UnknownCombination, InvalidPermutation,
            IndexOutOfRange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (StepBudgetExceeded, TruncationInsufficient) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
