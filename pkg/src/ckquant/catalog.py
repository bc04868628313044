"""Published commutator tables of the N=5 kinematics, stored as source data.

Every entry is an identity ``lhs == rhs`` over the aliases ``t, r1, r2, r3``
(right generators) and ``th, rh1, rh2, rh3`` (left generators).  ``[a, b]``
denotes ``a b - b a``.  In curved tables the trigonometric or hyperbolic
functions take the argument ``K v`` (or ``K v / 2``) where ``K`` is the
table's own rescaled multiplier, related to ``J`` by ``J = eta K``.

Entries are checked against the rewriting engine by :func:`verify`; the
catalog is never edited to match the engine.  Where a printed relation is
known to be garbled, an ``emended`` form is stored next to the verbatim one
and the report says which of the two holds.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from typing import Mapping

from .kinematics import (ALIAS_ORDER, KinematicsSpec, aliases, kinematics_spec,
                         localized_rule_set, resolve_family, rule_set)
from .multiplier import resolve_sigma, sigma_name
from .ncalgebra import (NCPoly, NotClearable, clear_inverses, format_poly, normal_order,
                         verify_identity)
from .scalars import I, ONE, HyperScalar, ScalarError


class UnknownCombination(LookupError):
    pass


class CatalogSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Entry:
    text: str
    emended: str | None = None
    note: str = ""
    suggested: str | None = None   # engine-derived reading; reported, never counted as a pass


@dataclass(frozen=True)
class CatalogTable:
    family: str
    sigma: str
    source: str               # "table", "table and connections" or "prose"
    eta: str | None           # "i" or "-1"; None for flat (function-free) tables
    entries: tuple
    note: str = ""


# -- expression evaluation ---------------------------------------------------

def _functions(eta: str | None) -> dict:
    """Values of the table's functions of ``K v`` in the engine's ``s, ch``.

    With ``J = i K`` the circular functions of ``K v`` become hyperbolic
    functions of ``J v``; with ``J = -K`` only the sines flip sign.
    """
    C, S = HyperScalar.cosh_full(), HyperScalar.sinh_full()
    s, ch = HyperScalar.s(), HyperScalar.ch()
    mi = HyperScalar.const(-I)
    if eta == "i":
        return {("cos", "full"): C, ("sin", "full"): mi * S,
                ("cos", "half"): ch, ("sin", "half"): mi * s}
    if eta == "-1":
        return {("cosh", "full"): C, ("sinh", "full"): -S,
                ("cosh", "half"): ch, ("sinh", "half"): -s}
    return {}


def _angle(node: ast.AST) -> str:
    text = ast.unparse(node).replace(" ", "")
    if text in ("K*v", "Kv"):
        return "full"
    if text in ("K*v/2", "Kv/2"):
        return "half"
    raise CatalogSyntaxError(f"unsupported argument {text!r}")


_SCALAR_NAMES = {"c", "T", "R", "jt"}


class _Evaluator:
    def __init__(self, names: Mapping[str, NCPoly], eta: str | None):
        self.names = names
        self.funcs = _functions(eta)

    def __call__(self, node):
        method = getattr(self, "_" + type(node).__name__, None)
        if method is None:
            raise CatalogSyntaxError(f"unsupported syntax: {ast.unparse(node)}")
        return method(node)

    def _Expression(self, node):
        return self(node.body)

    def _Constant(self, node):
        if isinstance(node.value, int):
            return NCPoly.scalar(HyperScalar.const(node.value))
        raise CatalogSyntaxError(f"bad constant {node.value!r}")

    def _Name(self, node):
        n = node.id
        if n in self.names:
            return self.names[n]
        if n == "i":
            return NCPoly.scalar(HyperScalar.const(I))
        if n == "v":
            return NCPoly.scalar(HyperScalar.vpow(1))
        if n in _SCALAR_NAMES:
            return NCPoly.scalar(HyperScalar.unit(n))
        raise CatalogSyntaxError(f"unknown name {n!r}")

    def _UnaryOp(self, node):
        val = self(node.operand)
        if isinstance(node.op, ast.USub):
            return -val
        return val

    def _List(self, node):
        if len(node.elts) != 2:
            raise CatalogSyntaxError("commutator needs two arguments")
        a, b = self(node.elts[0]), self(node.elts[1])
        return a * b - b * a

    def _Call(self, node):
        fn = node.func.id
        key = (fn, _angle(node.args[0]))
        if key not in self.funcs:
            raise CatalogSyntaxError(f"{fn} is not defined for this table")
        return NCPoly.scalar(self.funcs[key])

    def _BinOp(self, node):
        if isinstance(node.op, ast.Pow):
            base = self(node.left)
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise CatalogSyntaxError("integer exponents only")
            n = node.right.value
            if n < 0:
                return NCPoly.scalar(_as_scalar(base) ** n)
            return base ** n
        left, right = self(node.left), self(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            return left * NCPoly.scalar(_as_scalar(right).inverse())
        raise CatalogSyntaxError(f"unsupported operator in {ast.unparse(node)}")


def _as_scalar(p: NCPoly) -> HyperScalar:
    if set(p.terms) - {()}:
        raise CatalogSyntaxError("only scalars can be divided or raised to negative powers")
    return p.terms.get((), HyperScalar())


def parse_identity(text: str, names: Mapping[str, NCPoly], eta: str | None = None
                   ) -> tuple[NCPoly, NCPoly]:
    """Parse ``lhs == rhs`` into two polynomials over the given aliases."""
    tree = ast.parse(text, mode="eval").body
    if not (isinstance(tree, ast.Compare) and len(tree.ops) == 1
            and isinstance(tree.ops[0], ast.Eq)):
        raise CatalogSyntaxError(f"expected 'lhs == rhs': {text!r}")
    ev = _Evaluator(names, eta)
    return ev(tree.left), ev(tree.comparators[0])


def free_aliases() -> dict[str, NCPoly]:
    """Aliases as free letters, for comparing tables syntactically."""
    out = {}
    for a in ALIAS_ORDER:
        out[a] = NCPoly.word(a)
        h = a[0] + "h" + a[1:]
        out[h] = NCPoly.word(h)
    return out


# -- the tables --------------------------------------------------------------

def _flat(*pairs, hats=None):
    """Commutator list for a function-free table; unlisted pairs commute."""
    given = dict(pairs)
    out = []
    for i, a in enumerate(ALIAS_ORDER):
        for b in ALIAS_ORDER[i + 1:]:
            if (a, b) in given:
                out.append(Entry(f"[{a},{b}] == {given[a, b]}"))
            elif (b, a) in given:
                out.append(Entry(f"[{b},{a}] == {given[b, a]}"))
            else:
                out.append(Entry(f"[{a},{b}] == 0"))
    for a in ALIAS_ORDER:
        h = a[0] + "h" + a[1:]
        spec = (hats or {}).get(a)
        if isinstance(spec, Entry):
            out.append(spec)
        else:
            out.append(Entry(f"{h} == {spec or a}"))
    return tuple(out)


_DS_HAT = (
    # commutators
    Entry("th*r1 == rh1*(t*cos(K*v) + i*r3*(1/c)*sin(K*v))"),
    Entry("th*r2 == rh2*(t*cos(K*v) + i*r3*(1/c)*sin(K*v))"),
    Entry("th*r3 - rh3*t == 2*i*(-(jt**2/(c**2*T**2))*rh1*r1*cos(K*v)"
          " + (1 - (jt**2/(c**2*T**2))*rh2*r2)*cos(K*v/2))*(c*T**2/jt**2)*sin(K*v/2)"),
    Entry("rh1*r3 == (rh3*cos(K*v) - i*th*c*sin(K*v))*r1"),
    Entry("rh2*r3 == (rh3*cos(K*v) - i*th*c*sin(K*v))*r2"),
    Entry("rh1*r2 == (rh2*cos(K*v) - i*th*(c*T/jt)*sin(K*v))*r1"),
    # connections
    Entry("th == t*cos(K*v) + i*r3*(1/c)*sin(K*v)"),
    Entry("r1 == rh1*(cos(K*v) + i*r2*(jt/(c*T))*sin(K*v))"),
    Entry("rh2 - r2 == 2*i*(jt/(c*T))*rh1*r1*sin(K*v/2)"),
    Entry("rh3 == r3*cos(K*v) + i*t*c*sin(K*v)"),
)

_DS_CHECK = (
    # commutators
    Entry("rh1*t == th*(r1*cosh(K*v) + i*r2*sinh(K*v))"),
    Entry("th*r2 == (rh2*cosh(K*v) + i*rh1*sinh(K*v))*t"),
    Entry("th*r3 == (rh3*cosh(K*v) + (c*T/jt)*sinh(K*v))*t"),
    Entry("rh1*r2 - r2*rh1 == 2*i*th*t*c**2*sinh(K*v/2)",
          suggested="rh1*r2 - rh2*r1 == 2*i*th*t*c**2*sinh(K*v/2)"),
    Entry("rh1*r3 == (rh3*cosh(K*v) + (c*T/jt)*sinh(K*v))*r1"),
    Entry("rh2*r3 == (rh3*cosh(K*v) + (c*T/jt)*sinh(K*v))*r2"),
    # connections
    Entry("t == th*(cosh(K*v) - (jt/(c*T))*r3*sinh(K*v))"),
    Entry("r1 == rh1*(cosh(K*v) - (jt/(c*T))*r3*sinh(K*v))"),
    Entry("r2 == rh2*(cosh(K*v) - (jt/(c*T))*r3*sinh(K*v))"),
    Entry("rh3 - r3 == (2/jt)*c*T*(th*t*cosh(K*v)"
          " - (jt**2/(c**2*T**2))*(rh1*r1 + rh2*r2)*cosh(K*v/2))*sinh(K*v/2)"),
)

_DS_TILDE = (
    # commutators
    Entry("th*r1 == rh1*(t*cosh(K*v) - r3*(1/c)*sinh(K*v))"),
    Entry("th*r2 == rh2*(t*cosh(K*v) - r3*(1/c)*sinh(K*v))"),
    Entry("th*r3 - rh3*t == -2*(cosh(K*v) - (jt**2/(c**2*T**2))*(rh1*r1 + rh2*r2)"
          "*cosh(K*v/2))*(c*T**2/jt**2)*sinh(K*v/2)"),
    Entry("rh1*r3 == (rh3*cosh(K*v) + th*c*sinh(K*v))*r1"),
    Entry("rh2*r3 == (rh3*cosh(K*v) + th*c*sinh(K*v))*r2"),
    Entry("rh1*r2 - rh2*r1 == -2*i*(c**2*T**2/jt**2)*sinh(K*v/2)"),
    # connections
    Entry("th == t*cosh(K*v) - r3*(1/c)*sinh(K*v)"),
    Entry("rh1 == r1*cosh(K*v) + i*r2*sinh(K*v)"),
    Entry("rh2 == r2*cosh(K*v) - i*r1*sinh(K*v)"),
    Entry("rh3 == r3*cosh(K*v) - t*c*sinh(K*v)"),
)

_DS_I = (
    # commutators
    Entry("rh1*t == th*(r1*cosh(K*v) + i*r2*sinh(K*v))"),
    Entry("th*r2 == (rh2*cosh(K*v) + i*rh1*sinh(K*v))",
          emended="th*r2 == (rh2*cosh(K*v) + i*rh1*sinh(K*v))*t",
          note="trailing generator t restored"),
    Entry("rh3*t == (th*cosh(K*v) + i*(T/jt)*sinh(K*v))*r3"),
    Entry("rh1*r3 == rh3*(r1*cosh(K*v) + i*r2*sinh(K*v))"),
    Entry("rh3*r2 == (rh2*cosh(K*v) + i*rh1*sinh(K*v))*r3"),
    Entry("rh1*r2 - rh2*r1 == 2*i*(-(jt**2/(c**2*T**2))*rh3*r3*cosh(K*v)"
          " + (1 + (jt**2/T**2)*th*t)*cosh(K*v/2))*(c**2*T**2/jt**2)*sinh(K*v/2)"),
    # connections
    Entry("rh1 == r1*cosh(K*v) + i*r2*sinh(K*v)"),
    Entry("r2 == rh2*cosh(K*v) + i*rh1*sinh(K*v)"),
    Entry("r3 == rh3*(cosh(K*v) + i*(jt/T)*t*sinh(K*v))"),
    Entry("t - th == 2*i*rh3*r3*(jt/(c**2*T))*sinh(K*v/2)"),
)

_DS_II = (
    # commutators
    Entry("rh1*t == th*(r1*cosh(K*v) + i*r3*sinh(K*v))"),
    Entry("th*r2 == (rh2*cosh(K*v) + i*(c*T/jt)*sinh(K*v))*t"),
    Entry("th*r3 == (rh3*cosh(K*v) + i*rh1*sinh(K*v))*t"),
    Entry("rh1*r2 == rh2*(r1*cosh(K*v) + i*r3*sinh(K*v))"),
    Entry("rh2*r3 == (rh3*cosh(K*v) + i*rh1*sinh(K*v))*r2"),
    Entry("rh1*r3 - rh3*r1 == 2*i*((jt**2/T**2)*th*t*cosh(K*v)"
          " + (1 - (jt**2/(c**2*T**2))*rh2*r2)*cosh(K*v/2))*(c**2*T**2/jt**2)*sinh(K*v/2)"),
    # connections
    Entry("rh1 == r1*cosh(K*v) + i*r3*sinh(K*v)"),
    Entry("rh2 == r2*cosh(K*v) + 2*th*t*jt*(c/T)*sinh(K*v/2)"),
    Entry("r3 == rh3*cosh(K*v) + i*rh1*sinh(K*v)"),
    Entry("t == th*cosh(K*v) - th*r2*(jt/(c*T))*sinh(K*v)"),
)

_DS_III = (
    # commutators
    Entry("rh1*t == th*(r1*cosh(K*v) + i*r3*sinh(K*v))"),
    Entry("th*r2 - rh2*t == -2*(c*T**2/jt**2)*sinh(K*v)"),
    Entry("th*r3 == (rh3*cosh(K*v) + i*rh1*sinh(K*v))*t"),
    Entry("rh1*r2 == rh2*(r1*cosh(K*v) + i*r3*sinh(K*v))"),
    Entry("rh2*r3 == (rh3*cosh(K*v) + i*rh1*sinh(K*v))*r2"),
    Entry("rh1*r3 - rh3*r1 == 2*i*(cosh(K*v) + (jt**2/T**2)*(th*t - (1/c**2)*rh2*r2)"
          "*cosh(K*v/2))*(c**2*T**2/jt**2)*sinh(K*v/2)"),
    # connections
    Entry("rh1 == r1*cosh(K*v) + i*r3*sinh(K*v)"),
    Entry("r2 == rh2*cosh(K*v) + c*th*sinh(K*v)"),
    Entry("r3 == rh3*cosh(K*v) + i*rh1*sinh(K*v)"),
    Entry("th == t*cosh(K*v) - r2*(1/c)*sinh(K*v)"),
)

_SL = "(1 - t**2)"
_NT = "(1 + (jt**2/T**2)*t**2)"

TABLES: tuple[CatalogTable, ...] = (
    CatalogTable("deSitter", "sigma-hat", "table and connections", "i", _DS_HAT),
    CatalogTable("deSitter", "sigma-check", "table and connections", "-1", _DS_CHECK),
    CatalogTable("deSitter", "sigma-tilde", "table and connections", "-1", _DS_TILDE),
    CatalogTable("deSitter", "sigma-I", "table and connections", "-1", _DS_I),
    CatalogTable("deSitter", "sigma-II", "table and connections", "-1", _DS_II),
    CatalogTable("deSitter", "sigma-III", "table and connections", "-1", _DS_III),

    CatalogTable("Minkowski", "sigma-tilde", "table", None,
                 _flat((("t", "r3"), "-v/c"), (("r1", "r2"), "-i*v"))),
    CatalogTable("Minkowski", "sigma-hat", "table", None, _flat((("t", "r3"), "i*v"))),
    CatalogTable("Minkowski", "sigma-I", "table", None, _flat((("r1", "r2"), "i*v"))),
    CatalogTable("Minkowski", "sigma-II", "table", None, _flat((("r1", "r3"), "i*v"))),
    CatalogTable("Minkowski", "sigma-III", "table", None,
                 _flat((("t", "r2"), "-v/c"), (("r1", "r3"), "i*v"))),
    CatalogTable("Minkowski", "sigma-check", "table", None,
                 _flat((("t", "r3"), f"(v/c)*t*{_SL}"), (("r2", "r3"), f"(v/c)*r2*{_SL}"),
                       (("r1", "r3"), f"(v/c)*r1*{_SL}"), hats={"r3": "r3 - (v/c)*t**2"})),

    CatalogTable("Newton", "sigma-tilde", "table", None, _flat((("r1", "r2"), "-i*v"))),
    CatalogTable("Newton", "sigma-check", "table", None,
                 _flat((("r1", "r2"), "i*jt*(v/T)*t**2"))),
    CatalogTable("Newton", "sigma-I", "table", None, _flat((("r1", "r2"), f"i*v*{_NT}"))),
    CatalogTable("Newton", "sigma-II", "table", None, _flat((("r1", "r3"), f"i*v*{_NT}"))),
    CatalogTable("Newton", "sigma-III", "table", None, _flat((("r1", "r3"), f"i*v*{_NT}")),
                 note="printed as identical to sigma-II"),
    CatalogTable("Newton", "sigma-hat", "table", None,
                 _flat((("t", "r3"), f"i*v*{_NT}"), (("r1", "r2"), "-i*jt*(v/T)*t*r1"),
                       hats={"r3": Entry("rh3 == r3 + i*jt**2*(v/T**2)",
                                         emended="rh3 == r3 + i*jt**2*(v/T**2)*t",
                                         note="generator factor t restored")})),

    CatalogTable("Galilei", "sigma-check", "prose", None, _flat()),
    CatalogTable("Galilei", "sigma-hat", "prose", None, _flat((("t", "r3"), "i*v"))),
    CatalogTable("Galilei", "sigma-tilde", "prose", None, _flat((("r1", "r2"), "-i*v")),
                 note="prose gives [r1,r2] = +-iv; the sign of the corresponding Minkowski and Newton tables is used"),
    CatalogTable("Galilei", "sigma-I", "prose", None, _flat((("r1", "r2"), "i*v"))),
    CatalogTable("Galilei", "sigma-II", "prose", None, _flat((("r1", "r3"), "i*v"))),
    CatalogTable("Galilei", "sigma-III", "prose", None, _flat((("r1", "r3"), "i*v"))),

    CatalogTable("Carroll", "sigma-hat", "table", None,
                 _flat((("r1", "t"), "i*v*(1 + (jt**2/R**2)*(r1**2 + r2**2 + r3**2))"),
                       hats={"t": "t + i*(jt**2/R**2)*v*r1"})),
    CatalogTable("Carroll", "sigma-pp", "table", None,
                 _flat((("t", "r1"), "i*v*(jt**3/R**3)*r2**2*r1"),
                       (("t", "r3"), "i*v*(jt**3/R**3)*r2**2*r3"),
                       (("t", "r2"), "i*v*(jt/R)*(1 + (jt**2/R**2)*r2**2)*r2"),
                       hats={"t": "t - i*(jt**3/R**3)*v*r2**2"})),
    CatalogTable("Carroll", "sigma-ppp", "table", None,
                 _flat((("r1", "r2"), "i*v*(1 + (jt**2/R**2)*(t**2 + r1**2 + r3**2))"),
                       hats={"r2": "r2 + i*(jt**2/R**2)*v*r1"})),

    CatalogTable("Carroll0", "sigma-pp", "prose", None, tuple(
        e for e in _flat() if e.text.startswith("["))),
    CatalogTable("Carroll0", "sigma-hat", "prose", None, tuple(
        e for e in _flat((("r1", "t"), "i*v")) if e.text.startswith("["))),
    CatalogTable("Carroll0", "sigma-ppp", "prose", None, tuple(
        e for e in _flat((("r1", "r2"), "i*v")) if e.text.startswith("["))),
)


def combinations() -> list[tuple[str, str]]:
    return [(t.family, t.sigma) for t in TABLES]


def catalog(family: str, sigma) -> tuple[KinematicsSpec, CatalogTable]:
    family = resolve_family(family)
    name = sigma if isinstance(sigma, str) and not sigma[0].isdigit() else None
    name = name or sigma_name(resolve_sigma(sigma))
    for t in TABLES:
        if t.family == family and t.sigma == name:
            return kinematics_spec(family, name), t
    raise UnknownCombination(f"no published table for ({family}, {sigma})")


# -- verification -------------------------------------------------------------

@dataclass
class EntryResult:
    family: str
    sigma: str
    source: str
    text: str
    status: str            # "pass", "pass-emended" or "fail"
    note: str = ""
    residual: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


@dataclass
class Report:
    results: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list[EntryResult]:
        return [r for r in self.results if not r.ok]

    def counts(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.results:
            out[r.status] = out.get(r.status, 0) + 1
        return out


def _holds(text: str, spec: KinematicsSpec, eta) -> tuple[bool, NCPoly]:
    names = aliases(spec)
    lhs, rhs = parse_identity(text, names, eta)
    L = localized_rule_set(spec)
    R = L if L is not None else rule_set(spec)
    try:
        ok = verify_identity(lhs, rhs, R, modulo_sphere=R.sphere is not None)
    except NotClearable as exc:
        return False, f"undecidable without x1^-1: {exc}"
    if ok:
        return True, ""
    diff = lhs - rhs
    if L is None:
        diff = clear_inverses(diff)
    return False, format_poly(normal_order(diff, R), R.rank)


def verify_table(table: CatalogTable) -> list[EntryResult]:
    spec = kinematics_spec(table.family, table.sigma)
    out = []
    for e in table.entries:
        ok, residual = _holds(e.text, spec, table.eta)
        status, note = ("pass", "") if ok else ("fail", "")
        if not ok and e.emended:
            ok2, res2 = _holds(e.emended, spec, table.eta)
            if ok2:
                status, note, residual = "pass-emended", f"{e.note}: {e.emended}", ""
        if not ok and status == "fail" and e.suggested:
            holds, _ = _holds(e.suggested, spec, table.eta)
            note = f"engine reading {'holds' if holds else 'also fails'}: {e.suggested}"
        out.append(EntryResult(table.family, table.sigma, table.source, e.text, status, note,
                               residual))
    return out


def verify(family: str = "all") -> Report:
    fam = None if family == "all" else resolve_family(family)
    report = Report()
    for t in TABLES:
        if fam is None or t.family == fam:
            report.results.extend(verify_table(t))
    return report


# -- syntactic comparison of published tables ----------------------------------

def table_relations(table: CatalogTable) -> dict[tuple, NCPoly]:
    """Commutators of the (function-free) table keyed by ordered alias pair."""
    out = {}
    names = free_aliases()
    for e in table.entries:
        tree = ast.parse(e.text, mode="eval").body
        left = tree.left
        if isinstance(left, ast.List):
            a, b = (ast.unparse(x) for x in left.elts)
            _, rhs = parse_identity(e.text, names, table.eta)
            if ALIAS_ORDER.index(a) > ALIAS_ORDER.index(b):
                a, b, rhs = b, a, -rhs
            out[a, b] = rhs
    return out


def rename(p: NCPoly, perm: Mapping[str, str]) -> NCPoly:
    full = {}
    for a, b in perm.items():
        full[a] = NCPoly.word(b)
        full[a[0] + "h" + a[1:]] = NCPoly.word(b[0] + "h" + b[1:])
    return p.substitute(full)


def tables_related(ta: CatalogTable, tb: CatalogTable, perm: Mapping[str, str]) -> bool:
    """True when renaming ``ta``'s generators by ``perm`` yields ``tb`` literally."""
    ra, rb = table_relations(ta), table_relations(tb)
    mapped = {}
    for (a, b), rhs in ra.items():
        x, y = perm.get(a, a), perm.get(b, b)
        rhs = rename(rhs, perm)
        if ALIAS_ORDER.index(x) > ALIAS_ORDER.index(y):
            x, y, rhs = y, x, -rhs
        mapped[x, y] = rhs
    return mapped == rb


__all__ = [
    "TABLES", "CatalogTable", "Entry", "catalog", "combinations", "verify", "verify_table",
    "Report", "EntryResult", "parse_identity", "UnknownCombination", "tables_related",
    "table_relations", "free_aliases",
]
