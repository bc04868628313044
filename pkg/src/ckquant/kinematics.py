"""Physical substitutions, derived commutator tables, limits and classification.

A kinematics is the quantum sphere for N=5 with the contraction parameters
replaced by physical ones.  Standard families use ``j1 = jt/T`` and
``j2 = i/c``; Carroll families use ``j1 = jt/R`` and ``j4 -> 0``.  A limit
``T -> oo`` (say) is the contraction of ``j1`` and is realized by tagging
``j1`` with the formal infinitesimal ``eps_T``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .ckspace import (CARROLL_ROLES, STANDARD_ROLES, CKSpaceSpec, build_relations,
                      contract_relations, hat, limit_unit)
from .multiplier import NAMED_SIGMAS, Permutation, full_multiplier, resolve_sigma, sigma_name
from .ncalgebra import (INV, X1, ExchangeRuleSet, NCPoly, NotLocalizable, gen, localize,
                        normal_order)
from .scalars import (I, ONE, ZERO, HyperScalar, ParamMonomial, ParamValue,
                      format_scalar)


class LimitNotApplicable(ValueError):
    pass


class UnknownFamily(ValueError):
    pass


FAMILIES = ("deSitter", "Minkowski", "Newton", "Galilei", "Carroll", "Carroll0")

FAMILY_ALIASES = {
    "ds": "deSitter", "ads": "deSitter", "desitter": "deSitter",
    "minkowski": "Minkowski", "newton": "Newton", "galilei": "Galilei",
    "carroll": "Carroll", "carroll0": "Carroll0",
}

# value of jt selecting the curvature sign; None keeps jt symbolic
JT_VALUES = {"ds": HyperScalar.const(I), "ads": ONE}

STANDARD_SIGMAS = ("sigma-hat", "sigma-check", "sigma-tilde", "sigma-I", "sigma-II", "sigma-III")
CARROLL_SIGMAS = ("sigma-hat", "sigma-pp", "sigma-ppp")

# (length, time) dimensions of the unit symbols
_DIMS = {"T": (0, 1), "c": (1, -1), "R": (1, 0)}


def resolve_family(name: str) -> str:
    if name in FAMILIES:
        return name
    try:
        return FAMILY_ALIASES[name.lower()]
    except KeyError:
        raise UnknownFamily(f"unknown family {name!r}") from None


def _u(name: str, e: int = 1) -> HyperScalar:
    return HyperScalar.unit(name, e)


@dataclass(frozen=True)
class PhysicalSubstitution:
    """Values of ``j1..j4``; ``physical`` holds the uncontracted readings.

    A contracted parameter ``j_k = u * eps_L`` has ``physical[k] = u / L`` so
    that dimensions are read off the same formula in every family.
    """

    assignment: tuple  # ((k, ParamValue), ...)
    physical: tuple    # ((k, HyperScalar), ...)

    def as_dict(self) -> dict[int, ParamValue]:
        return dict(self.assignment)

    @property
    def contracted(self) -> tuple[str, ...]:
        return tuple(sorted(pv.label for _, pv in self.assignment if pv.label))

    def unit_params(self) -> list[int]:
        """Parameters fixed to 1 (they drop out of the reduced multiplier)."""
        return [k for k, pv in self.assignment if pv.label is None and pv.value == ONE]

    def reduced_multiplier(self, J: ParamMonomial) -> ParamMonomial:
        return J.reduce(self.unit_params())

    def dimension(self, J: ParamMonomial) -> tuple[int, int]:
        """(length, time) exponents of ``v``, which carries the inverse units of ``J``."""
        phys = dict(self.physical)
        length = time = 0
        for k, e in J.exps:
            for (units, *_), _c in phys[k].items():
                for name, ue in units:
                    if name in _DIMS:
                        dl, dt = _DIMS[name]
                        length -= dl * ue * e
                        time -= dt * ue * e
        return length, time

    def dimension_string(self, J: ParamMonomial) -> str:
        return format_dimension(*self.dimension(J))


def format_dimension(length: int, time: int) -> str:
    """Render ``[length]^a [time]^b``, trading ``length/time`` for velocity."""
    vel = 0
    if time < 0 and length > 0:
        vel = min(-time, length)
        length -= vel
        time += vel
    parts = []
    for name, e in (("length", length), ("velocity", vel), ("time", time)):
        if e == 1:
            parts.append(f"[{name}]")
        elif e:
            sup = str(e).translate(str.maketrans("-0123456789", "⁻⁰¹²³⁴⁵⁶⁷⁸⁹"))
            parts.append(f"[{name}]{sup}")
    return "".join(parts) or "[1]"


def family_substitution(family: str) -> PhysicalSubstitution:
    family = resolve_family(family)
    jt = _u("jt")
    pv = ParamValue
    one = pv(ONE)
    if family in ("Carroll", "Carroll0"):
        j1 = pv(jt, "R") if family == "Carroll0" else pv(jt * _u("R", -1))
        assignment = {1: j1, 2: one, 3: one, 4: pv(ONE, "j4")}
        physical = {1: jt * _u("R", -1), 2: ONE, 3: ONE, 4: ONE}
    else:
        flat = family in ("Minkowski", "Galilei")
        slow = family in ("Newton", "Galilei")
        j1 = pv(jt, "T") if flat else pv(jt * _u("T", -1))
        ic = HyperScalar.const(I)
        j2 = pv(ic, "c") if slow else pv(ic * _u("c", -1))
        assignment = {1: j1, 2: j2, 3: one, 4: one}
        physical = {1: jt * _u("T", -1), 2: ic * _u("c", -1), 3: ONE, 4: ONE}
    return PhysicalSubstitution(tuple(sorted(assignment.items())), tuple(sorted(physical.items())))


@dataclass(frozen=True)
class KinematicsSpec:
    family: str
    sigma: Permutation
    J: ParamMonomial
    substitution: PhysicalSubstitution
    roles: tuple  # ((alias, generator index), ...)

    @property
    def name(self) -> str:
        return f"{self.family}({sigma_name(self.sigma) or self.sigma})"

    @property
    def dimension_string(self) -> str:
        return self.substitution.dimension_string(self.J)

    def role_map(self) -> dict[str, int]:
        return dict(self.roles)


def kinematics_spec(family: str, sigma) -> KinematicsSpec:
    family = resolve_family(family)
    sigma = resolve_sigma(sigma)
    if sigma.N != 5:
        raise ValueError("kinematics are defined for N=5")
    sub = family_substitution(family)
    roles = CARROLL_ROLES if family.startswith("Carroll") else STANDARD_ROLES
    J = sub.reduced_multiplier(full_multiplier(sigma))
    return KinematicsSpec(family, sigma, J, sub, tuple(roles.items()))


# -- limits -----------------------------------------------------------------

_LIMITS = {
    ("deSitter", "T"): "Minkowski",
    ("deSitter", "c"): "Newton",
    ("Minkowski", "c"): "Galilei",
    ("Newton", "T"): "Galilei",
    ("Carroll", "R"): "Carroll0",
}


def apply_limit(spec: KinematicsSpec, which: str) -> KinematicsSpec:
    """Re-tag the parameter carrying ``which`` as contracted."""
    which = which.replace("->oo", "").replace("→∞", "").strip()
    target = _LIMITS.get((spec.family, which))
    if target is None:
        raise LimitNotApplicable(f"{which} -> oo does not apply to {spec.family}")
    return kinematics_spec(target, spec.sigma)


# -- algebras ---------------------------------------------------------------

@lru_cache(maxsize=None)
def _base_relations(sigma: Permutation) -> ExchangeRuleSet:
    return build_relations(CKSpaceSpec(sigma))


@lru_cache(maxsize=None)
def rule_set(spec: KinematicsSpec, order: int = 8) -> ExchangeRuleSet:
    """Relations of the kinematics: substituted and, where needed, contracted."""
    return contract_relations(_base_relations(spec.sigma), spec.substitution.as_dict(), order)


@lru_cache(maxsize=None)
def localized_rule_set(spec: KinematicsSpec) -> ExchangeRuleSet | None:
    """Rule set with ``x1^-1`` adjoined, or ``None`` when the exchange matrix
    of ``x1`` is not invertible over the scalar ring."""
    try:
        return localize(rule_set(spec))
    except NotLocalizable:
        return None


def aliases(spec: KinematicsSpec) -> dict[str, NCPoly]:
    out = {}
    for alias, a in spec.roles:
        out[alias] = NCPoly.word(gen(a), INV)
        out[hat(alias)] = NCPoly.word(INV, gen(a))
    return out


def alias_names(spec: KinematicsSpec) -> dict[str, str]:
    """Generator name -> right alias name (``x2 -> t`` for standard roles)."""
    return {gen(a): alias for alias, a in spec.roles}


# -- tables -----------------------------------------------------------------

ALIAS_ORDER = ("t", "r1", "r2", "r3")
PAIRS = tuple(itertools.combinations(ALIAS_ORDER, 2))


def _mixed_alias_form(p: NCPoly, names: Mapping[str, str]) -> dict[tuple, HyperScalar]:
    """Read a quadratic ``x``-polynomial ``p`` as ``x1^-1 p x1^-1`` in aliases.

    ``x_c x_d -> hat(c) d``, ``x1 x_d -> d``, ``x_c x1 -> hat(c)``, ``x1 x1 -> 1``.
    """
    out: dict[tuple, HyperScalar] = {}
    for w, c in p.items():
        if len(w) != 2:
            raise ValueError(f"not quadratic: {w}")
        a, b = w
        mono = []
        if a != X1:
            mono.append(hat(names[a]))
        if b != X1:
            mono.append(names[b])
        key = tuple(mono)
        out[key] = out.get(key, ZERO) + c
    return {k: v for k, v in out.items() if v}


def right_alias_form(p: NCPoly, L: ExchangeRuleSet, spec: KinematicsSpec,
                     budget: int = 200) -> dict[tuple, HyperScalar] | None:
    """Express a degree-zero normal form as a polynomial in right generators.

    Leading-word elimination: the word ``x_a ... x_b x1^-k`` is matched by the
    product of right aliases ``a ... b``.  Returns ``None`` when some word does
    not fit that shape.
    """
    names = alias_names(spec)
    right = aliases(spec)
    p = normal_order(p, L)
    out: dict[tuple, HyperScalar] = {}
    for _ in range(budget):
        if p.is_zero():
            return {k: v for k, v in out.items() if v}
        w = max(p.terms, key=lambda w: (len(w), w))
        k = sum(1 for x in w if x == INV)
        head = w[: len(w) - k]
        if w[len(w) - k:] != (INV,) * k or len(head) != k or X1 in head:
            return None
        mono = tuple(names[x] for x in head)
        prod = NCPoly.scalar(ONE)
        for alias in mono:
            prod = prod * right[alias]
        nf = normal_order(prod, L)
        lead = nf.terms.get(w)
        if lead is None or not lead.is_monomial():
            return None
        c = p.terms[w] * lead.inverse()
        out[mono] = out.get(mono, ZERO) + c
        p = p - nf * c
    return None


def format_alias_poly(d: Mapping[tuple, HyperScalar]) -> str:
    if not d:
        return "0"
    parts = []
    for mono in sorted(d, key=lambda m: (len(m), m)):
        c = format_scalar(d[mono])
        if not mono:
            parts.append(c)
            continue
        word = " ".join(mono)
        if c == "1":
            parts.append(word)
        elif c == "-1":
            parts.append("-" + word)
        else:
            parts.append(f"({c}) {word}")
    return " + ".join(parts).replace("+ -", "- ")


@dataclass
class TableEntry:
    lhs: str
    poly: NCPoly                  # normal form in x-words
    alias: dict | None = None     # alias monomial -> scalar

    @property
    def rhs(self) -> str:
        return format_alias_poly(self.alias) if self.alias is not None else str(self.poly)


@dataclass
class CommutatorTable:
    """Derived relations of one kinematics.

    ``mixed`` holds ``hat(a) b - hat(b) a`` for every pair and ``hat(a) - a``
    for every generator, both read through ``x1^-1 (...) x1^-1``.  ``right``
    holds ``[a, b]`` in right generators when ``x1`` can be inverted.
    """

    spec: KinematicsSpec
    mixed: list = field(default_factory=list)
    right: list | None = None
    connections: list = field(default_factory=list)

    def nonzero(self) -> dict[str, str]:
        src = self.right if self.right is not None else self.mixed
        return {e.lhs: e.rhs for e in src if not e.poly.is_zero()}


def derive_table(spec: KinematicsSpec) -> CommutatorTable:
    R = rule_set(spec)
    names = alias_names(spec)
    role = spec.role_map()
    table = CommutatorTable(spec)
    for a, b in PAIRS:
        xa, xb = gen(role[a]), gen(role[b])
        nf = normal_order(NCPoly.word(xa, xb) - NCPoly.word(xb, xa), R)
        table.mixed.append(TableEntry(f"{hat(a)} {b} - {hat(b)} {a}", nf,
                                      _mixed_alias_form(nf, names)))
    for a in ALIAS_ORDER:
        xa = gen(role[a])
        nf = normal_order(NCPoly.word(xa, X1) - NCPoly.word(X1, xa), R)
        table.connections.append(TableEntry(f"{hat(a)} - {a}", nf, _mixed_alias_form(nf, names)))
    L = localized_rule_set(spec)
    if L is not None:
        al = aliases(spec)
        table.right = []
        for a, b in PAIRS:
            nf = normal_order(al[a] * al[b] - al[b] * al[a], L)
            table.right.append(TableEntry(f"[{a},{b}]", nf, right_alias_form(nf, L, spec)))
    return table


# -- comparison of rule sets -------------------------------------------------

def relabeling(spec: KinematicsSpec, perm: Mapping[str, str],
               signs: Mapping[str, int] | None = None) -> dict[str, NCPoly]:
    """Generator substitution induced by renaming aliases (``x1`` fixed)."""
    role = spec.role_map()
    signs = signs or {}
    out = {}
    for alias, target in perm.items():
        out[gen(role[alias])] = NCPoly.word(gen(role[target]), coeff=signs.get(target, 1))
    return out


def transports(A: ExchangeRuleSet, B: ExchangeRuleSet, mapping: Mapping[str, NCPoly]) -> bool:
    """True when every relation of ``A``, renamed by ``mapping``, holds in ``B``."""
    for (a, b), rhs in A.rules.items():
        lhs = NCPoly.word(a, b).substitute(mapping)
        if not normal_order(lhs - rhs.substitute(mapping), B).is_zero():
            return False
    return True


def isomorphic(sa: KinematicsSpec, sb: KinematicsSpec, perm: Mapping[str, str],
               signs: Mapping[str, int] | None = None) -> bool:
    A, B = rule_set(sa), rule_set(sb)
    fwd = relabeling(sa, perm, signs)
    inv = {v: k for k, v in perm.items()}
    back = relabeling(sb, inv, {inv[k]: s for k, s in (signs or {}).items()})
    return transports(A, B, fwd) and transports(B, A, back)


def space_relabelings(with_signs: bool = False) -> Iterable[tuple[dict, dict]]:
    space = ("r1", "r2", "r3")
    sign_choices = itertools.product((1, -1), repeat=3) if with_signs else [(1, 1, 1)]
    sign_choices = list(sign_choices)
    for image in itertools.permutations(space):
        perm = dict(zip(space, image))
        perm["t"] = "t"
        for sg in sign_choices:
            yield perm, dict(zip(space, sg))


@dataclass
class Classification:
    family: str
    classes: list  # list of lists of sigma names

    @property
    def count(self) -> int:
        return len(self.classes)

    def commutative(self) -> list[str]:
        return [c[0] for c in self.classes if len(c) == 1 and _is_commutative(self.family, c[0])]


def _is_commutative(family: str, name: str) -> bool:
    spec = kinematics_spec(family, name)
    t = derive_table(spec)
    entries = t.right if t.right is not None else t.mixed
    return all(e.poly.is_zero() for e in entries)


def family_sigmas(family: str) -> tuple[str, ...]:
    family = resolve_family(family)
    return CARROLL_SIGMAS if family.startswith("Carroll") else STANDARD_SIGMAS


def classify(family: str, sigmas: Iterable[str] | None = None,
             with_signs: bool = False) -> Classification:
    """Partition the family's permutations under relabelings of ``r1, r2, r3``.

    Time is never relabeled.  Two kinematics are equivalent when a relabeling
    maps every defining relation of one onto a consequence of the other's.
    """
    family = resolve_family(family)
    names = list(sigmas or family_sigmas(family))
    specs = {n: kinematics_spec(family, n) for n in names}
    classes: list[list[str]] = []
    for n in names:
        for cls in classes:
            rep = specs[cls[0]]
            if any(isomorphic(specs[n], rep, perm, signs)
                   for perm, signs in space_relabelings(with_signs)):
                cls.append(n)
                break
        else:
            classes.append([n])
    return Classification(family, classes)


# -- limit coherence --------------------------------------------------------

def sequential_limit(sigma, first: str, second: str) -> ExchangeRuleSet:
    """de Sitter -> (first) -> (second) by contracting then sending a unit to infinity."""
    start = kinematics_spec("deSitter", sigma)
    mid = apply_limit(start, first)
    return limit_unit(rule_set(mid), second)


def limits_commute(sigma) -> bool:
    a = sequential_limit(sigma, "T", "c")
    b = sequential_limit(sigma, "c", "T")
    direct = rule_set(kinematics_spec("Galilei", sigma))
    return a.rules == b.rules == direct.rules


__all__ = [
    "FAMILIES", "PhysicalSubstitution", "KinematicsSpec", "CommutatorTable", "TableEntry",
    "family_substitution", "kinematics_spec", "apply_limit", "rule_set",
    "localized_rule_set", "aliases", "derive_table", "classify", "Classification",
    "limits_commute", "sequential_limit", "LimitNotApplicable", "UnknownFamily",
    "resolve_family", "format_dimension", "isomorphic", "STANDARD_SIGMAS", "CARROLL_SIGMAS",
    "NAMED_SIGMAS", "JT_VALUES", "family_sigmas", "alias_names", "right_alias_form",
    "format_alias_poly",
]
