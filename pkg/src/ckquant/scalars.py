"""Exact scalar arithmetic for quantum Cayley-Klein relations.

Three layers live here:

* :class:`GaussQ` -- Gaussian rationals ``a + b i`` with ``a, b`` in Q.
* :class:`ParamMonomial` -- products of contraction parameters ``j_k``.
* :class:`HyperScalar` -- finite sums of
  ``coeff * units * params * v^p * s^a * ch^b`` where ``s = sinh(Jv/2)`` and
  ``ch = cosh(Jv/2)``.  The canonical form keeps ``b`` in ``{0, 1}`` by
  rewriting ``ch^2 -> 1 + s^2``; full-angle functions never appear.

Contraction limits are computed with :func:`substitute_and_grade` and
:func:`take_limit`: contracted parameters become formal infinitesimals with
an integer degree, the hyperbolic functions are expanded as truncated Taylor
series, and the limit keeps exactly the degree-zero part.
"""

from __future__ import annotations

import ast
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping

# Unit symbols recognised by the parser. ``jt`` is the dimensionless sign
# parameter (1 for anti de Sitter, i for de Sitter).
UNIT_SYMBOLS = ("jt", "c", "T", "R")


class ScalarError(ValueError):
    pass


class NotInvertible(ScalarError):
    pass


class IndefiniteLimit(ArithmeticError):
    """A graded term has a negative degree, so its limit diverges."""

    def __init__(self, message: str, degree: Mapping[str, int] | None = None):
        super().__init__(message)
        self.degree = dict(degree or {})


class TruncationInsufficient(ArithmeticError):
    pass


class GaussQ:
    """Exact Gaussian rational."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, x) -> "GaussQ":
        if isinstance(x, GaussQ):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to GaussQ")

    def __add__(self, other):
        if not isinstance(other, (GaussQ, int, Fraction)):
            return NotImplemented
        other = GaussQ.coerce(other)
        return GaussQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, (GaussQ, int, Fraction)):
            return NotImplemented
        return self + (-GaussQ.coerce(other))

    def __rsub__(self, other):
        return GaussQ.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (GaussQ, int, Fraction)):
            return NotImplemented
        other = GaussQ.coerce(other)
        return GaussQ(self.re * other.re - self.im * other.im,
                      self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def inverse(self) -> "GaussQ":
        n = self.re * self.re + self.im * self.im
        if n == 0:
            raise ZeroDivisionError("GaussQ division by zero")
        return GaussQ(self.re / n, -self.im / n)

    def __truediv__(self, other):
        return self * GaussQ.coerce(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = GaussQ(1)
        for _ in range(n):
            out = out * self
        return out

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = GaussQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussQ({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            if self.im == 1:
                return "i"
            if self.im == -1:
                return "-i"
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        im = abs(self.im)
        return f"({self.re}{sign}{'' if im == 1 else im}i)"


I = GaussQ(0, 1)


def _merge(a: tuple, b: tuple, sign: int = 1) -> tuple:
    """Add exponent tuples ``((key, exp), ...)``, dropping zeros."""
    d = dict(a)
    for k, e in b:
        d[k] = d.get(k, 0) + sign * e
    return tuple(sorted((k, e) for k, e in d.items() if e))


@dataclass(frozen=True)
class ParamMonomial:
    """Monomial ``prod_k j_k^{e_k}``; zero exponents are never stored."""

    exps: tuple = ()

    def __post_init__(self):
        clean = tuple(sorted((int(k), int(e)) for k, e in self.exps if e))
        object.__setattr__(self, "exps", clean)

    @classmethod
    def of(cls, mapping: Mapping[int, int] | None = None, **kw) -> "ParamMonomial":
        d = dict(mapping or {})
        for name, e in kw.items():
            d[int(name.lstrip("j"))] = e
        return cls(tuple(d.items()))

    def exponent(self, k: int) -> int:
        return dict(self.exps).get(k, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.exps)

    def __mul__(self, other: "ParamMonomial") -> "ParamMonomial":
        return ParamMonomial(_merge(self.exps, other.exps))

    def __truediv__(self, other: "ParamMonomial") -> "ParamMonomial":
        return ParamMonomial(_merge(self.exps, other.exps, -1))

    def __pow__(self, n: int) -> "ParamMonomial":
        return ParamMonomial(tuple((k, e * n) for k, e in self.exps))

    def union(self, other: "ParamMonomial") -> "ParamMonomial":
        d = self.as_dict()
        for k, e in other.exps:
            d[k] = max(d.get(k, 0), e)
        return ParamMonomial(tuple(d.items()))

    def divides(self, other: "ParamMonomial") -> bool:
        o = other.as_dict()
        return all(o.get(k, 0) >= e for k, e in self.exps)

    def reduce(self, unit_params: Iterable[int]) -> "ParamMonomial":
        """Set the listed parameters to 1."""
        drop = set(unit_params)
        return ParamMonomial(tuple((k, e) for k, e in self.exps if k not in drop))

    def is_one(self) -> bool:
        return not self.exps

    def __str__(self):
        if not self.exps:
            return "1"
        return " ".join(f"j{k}" if e == 1 else f"j{k}^{e}" for k, e in self.exps)


def union(m1: ParamMonomial, m2: ParamMonomial) -> ParamMonomial:
    return m1.union(m2)


@dataclass(frozen=True)
class UnitScalar:
    """Gaussian-rational coefficient times a monomial in unit symbols."""

    coeff: GaussQ = field(default_factory=lambda: GaussQ(1))
    units: tuple = ()

    def __post_init__(self):
        coeff = GaussQ.coerce(self.coeff)
        object.__setattr__(self, "coeff", coeff)
        units = tuple(sorted((u, e) for u, e in self.units if e)) if coeff else ()
        object.__setattr__(self, "units", units)

    def __mul__(self, other: "UnitScalar") -> "UnitScalar":
        return UnitScalar(self.coeff * other.coeff, _merge(self.units, other.units))

    def to_hyper(self) -> "HyperScalar":
        return HyperScalar({(self.units, (), 0, 0, 0): self.coeff})


# -- HyperScalar ------------------------------------------------------------

# term key: (units, params, vpow, spow, chpow)
_ONE_KEY = ((), (), 0, 0, 0)


def _accumulate(out: dict, key: tuple, coeff: GaussQ) -> None:
    units, params, vp, sp, cp = key
    if cp >= 2:
        # ch^cp = (1 + s^2)^(cp // 2) * ch^(cp % 2)
        q, r = divmod(cp, 2)
        for t in range(q + 1):
            _accumulate(out, (units, params, vp, sp + 2 * t, r), coeff * comb(q, t))
        return
    if cp < 0 or sp < 0:
        raise ScalarError("negative powers of s or ch are not representable")
    new = out.get(key, GaussQ(0)) + coeff
    if new:
        out[key] = new
    else:
        out.pop(key, None)


class HyperScalar:
    """Canonical polynomial in ``s``, ``ch`` over Laurent monomials in units,
    parameters and ``v`` with Gaussian-rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        out: dict = {}
        for key, coeff in (terms or {}).items():
            coeff = GaussQ.coerce(coeff)
            if coeff:
                _accumulate(out, key, coeff)
        self._terms = out
        self._hash = None

    # constructors
    @classmethod
    def const(cls, x) -> "HyperScalar":
        if isinstance(x, HyperScalar):
            return x
        return cls({_ONE_KEY: GaussQ.coerce(x)})

    @classmethod
    def unit(cls, name: str, exp: int = 1) -> "HyperScalar":
        return cls({(((name, exp),), (), 0, 0, 0): 1})

    @classmethod
    def param(cls, k: int, exp: int = 1) -> "HyperScalar":
        return cls({((), ((k, exp),), 0, 0, 0): 1})

    @classmethod
    def from_monomial(cls, m: ParamMonomial, coeff=1) -> "HyperScalar":
        return cls({((), m.exps, 0, 0, 0): coeff})

    @classmethod
    def vpow(cls, n: int = 1) -> "HyperScalar":
        return cls({((), (), n, 0, 0): 1})

    @classmethod
    def s(cls) -> "HyperScalar":
        return cls({((), (), 0, 1, 0): 1})

    @classmethod
    def ch(cls) -> "HyperScalar":
        return cls({((), (), 0, 0, 1): 1})

    @classmethod
    def cosh_full(cls) -> "HyperScalar":
        """cosh(Jv) = 1 + 2 s^2."""
        return cls({_ONE_KEY: 1, ((), (), 0, 2, 0): 2})

    @classmethod
    def sinh_full(cls) -> "HyperScalar":
        """sinh(Jv) = 2 s ch."""
        return cls({((), (), 0, 1, 1): 2})

    # protocol
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, HyperScalar):
            try:
                other = HyperScalar.const(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = HyperScalar.const(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            new = out.get(k, GaussQ(0)) + c
            if new:
                out[k] = new
            else:
                out.pop(k, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-HyperScalar.const(other))

    def __rsub__(self, other):
        return HyperScalar.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, HyperScalar):
            other = HyperScalar.const(other)
        if not self._terms or not other._terms:
            return ZERO
        out: dict = {}
        for (u1, p1, v1, s1, c1), a in self._terms.items():
            for (u2, p2, v2, s2, c2), b in other._terms.items():
                key = (_merge(u1, u2), _merge(p1, p2), v1 + v2, s1 + s2, c1 + c2)
                _accumulate(out, key, a * b)
        return _raw(out)

    __rmul__ = __mul__

    def is_monomial(self) -> bool:
        """Single term free of ``s`` and ``ch``: these are the units of the ring."""
        if len(self._terms) != 1:
            return False
        (key,) = self._terms
        return key[3] == 0 and key[4] == 0

    def inverse(self) -> "HyperScalar":
        if not self.is_monomial():
            raise NotInvertible(f"{self} is not an invertible scalar")
        ((u, p, vp, _, _), c), = self._terms.items()
        return _raw({(tuple((a, -e) for a, e in u), tuple((k, -e) for k, e in p),
                      -vp, 0, 0): c.inverse()})

    def __truediv__(self, other):
        return self * HyperScalar.const(other).inverse()

    def __rtruediv__(self, other):
        return HyperScalar.const(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        for _ in range(n):
            out = out * self
        return out

    def has_hyperbolic(self) -> bool:
        return any(k[3] or k[4] for k in self._terms)

    def params_used(self) -> set[int]:
        return {k for key in self._terms for k, _ in key[1]}

    def units_used(self) -> set[str]:
        return {u for key in self._terms for u, _ in key[0]}

    def map_units(self, mapping: Mapping[str, "HyperScalar"]) -> "HyperScalar":
        """Replace unit symbols by (invertible) scalars, e.g. ``jt -> i``."""
        out = ZERO
        for (u, p, vp, sp, cp), c in self._terms.items():
            factor = HyperScalar({((tuple(x for x in u if x[0] not in mapping)),
                                   p, vp, sp, cp): c})
            for name, e in u:
                if name in mapping:
                    factor = factor * HyperScalar.const(mapping[name]) ** e
            out = out + factor
        return out

    def __repr__(self):
        return f"HyperScalar({self})"

    def __str__(self):
        return format_scalar(self)


def _raw(terms: dict) -> HyperScalar:
    h = HyperScalar.__new__(HyperScalar)
    h._terms = terms
    h._hash = None
    return h


ZERO = HyperScalar()
ONE = HyperScalar.const(1)


def _fmt_factor(name: str, e: int) -> str:
    return name if e == 1 else f"{name}^{e}"


def format_scalar(x: HyperScalar) -> str:
    """Deterministic plain-text rendering."""
    if not x._terms:
        return "0"
    parts = []
    for key in sorted(x._terms, key=_term_sort_key):
        units, params, vp, sp, cp = key
        coeff = x._terms[key]
        factors = [_fmt_factor(u, e) for u, e in units]
        factors += [_fmt_factor(f"j{k}", e) for k, e in params]
        if vp:
            factors.append(_fmt_factor("v", vp))
        if sp:
            factors.append(_fmt_factor("s", sp))
        if cp:
            factors.append(_fmt_factor("ch", cp))
        cs = str(coeff)
        if not factors:
            parts.append(cs)
        elif cs == "1":
            parts.append("*".join(factors))
        elif cs == "-1":
            parts.append("-" + "*".join(factors))
        else:
            parts.append(cs + "*" + "*".join(factors))
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def _term_sort_key(key):
    units, params, vp, sp, cp = key
    return (sp, cp, vp, params, units)


# -- parsing ----------------------------------------------------------------

def _angle(node: ast.AST) -> str:
    text = ast.unparse(node).replace(" ", "").replace("*", "")
    if text in ("Jv",):
        return "full"
    if text in ("Jv/2",):
        return "half"
    raise ScalarError(f"unsupported hyperbolic argument {text!r}")


def _eval(node: ast.AST) -> HyperScalar:
    if isinstance(node, ast.Expression):
        return _eval(node.body)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return HyperScalar.const(node.value)
    if isinstance(node, ast.Name):
        name = node.id
        if name in ("i", "I"):
            return HyperScalar.const(I)
        if name == "s":
            return HyperScalar.s()
        if name == "ch":
            return HyperScalar.ch()
        if name == "v":
            return HyperScalar.vpow(1)
        if name in UNIT_SYMBOLS:
            return HyperScalar.unit(name)
        if name.startswith("j") and name[1:].isdigit():
            return HyperScalar.param(int(name[1:]))
        raise ScalarError(f"unknown symbol {name!r}")
    if isinstance(node, ast.UnaryOp):
        val = _eval(node.operand)
        if isinstance(node.op, ast.USub):
            return -val
        if isinstance(node.op, ast.UAdd):
            return val
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            exp = node.right
            sign = 1
            if isinstance(exp, ast.UnaryOp) and isinstance(exp.op, ast.USub):
                sign, exp = -1, exp.operand
            if not (isinstance(exp, ast.Constant) and isinstance(exp.value, int)):
                raise ScalarError("exponents must be integer literals")
            return _eval(node.left) ** (sign * exp.value)
        left, right = _eval(node.left), _eval(node.right)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if right.is_monomial() and not right.has_hyperbolic():
                return left * right.inverse()
            raise NotInvertible(f"cannot divide by {right}")
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and len(node.args) == 1:
        fn, angle = node.func.id, _angle(node.args[0])
        table = {
            ("cosh", "full"): HyperScalar.cosh_full,
            ("sinh", "full"): HyperScalar.sinh_full,
            ("cosh", "half"): HyperScalar.ch,
            ("sinh", "half"): HyperScalar.s,
        }
        if (fn, angle) in table:
            return table[fn, angle]()
    raise ScalarError(f"unsupported expression: {ast.unparse(node)}")


def hyper_normalize(expr: str | HyperScalar) -> HyperScalar:
    """Parse a hyperbolic expression into canonical form.

    Accepts ``s``, ``ch`` (half-angle), ``cosh(Jv)``, ``sinh(Jv)``,
    ``cosh(Jv/2)``, ``sinh(Jv/2)``, ``v``, ``j1..jN``, unit symbols
    ``jt, c, T, R``, the imaginary unit ``i`` and ``+ - * / **``.

    >>> str(hyper_normalize("cosh(Jv)**2 - sinh(Jv)**2"))
    '1'
    """
    if isinstance(expr, HyperScalar):
        return expr
    return _eval(ast.parse(expr.replace("^", "**"), mode="eval"))


# -- grading and limits -----------------------------------------------------

@dataclass(frozen=True)
class ParamValue:
    """Value assigned to a contraction parameter.

    ``label`` is ``None`` for a plain (unit) value; otherwise the parameter
    becomes ``value * eps_label`` with ``eps_label -> 0`` in the limit.
    """

    value: HyperScalar
    label: str | None = None

    @property
    def contracted(self) -> bool:
        return self.label is not None


def _subst_monomial(params: tuple, assignment: Mapping[int, ParamValue]):
    """Return (scalar factor, remaining params, degree dict)."""
    factor = ONE
    rest = []
    degree: dict[str, int] = {}
    for k, e in params:
        pv = assignment.get(k)
        if pv is None:
            rest.append((k, e))
            continue
        factor = factor * pv.value ** e
        if pv.label is not None:
            degree[pv.label] = degree.get(pv.label, 0) + e
    return factor, tuple(rest), {k: d for k, d in degree.items() if d}


def _deg_key(d: Mapping[str, int]) -> tuple:
    return tuple(sorted((k, v) for k, v in d.items() if v))


@dataclass(frozen=True)
class GradedSeries:
    """Scalars tagged with degree vectors in formal infinitesimals."""

    terms: tuple  # ((degree_key, HyperScalar), ...)
    order: int = 0

    @classmethod
    def from_dict(cls, d: Mapping[tuple, HyperScalar], order: int = 0) -> "GradedSeries":
        items = tuple(sorted(((k, v) for k, v in d.items() if v), key=lambda kv: kv[0]))
        return cls(items, order)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def min_degree(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for key, _ in self.terms:
            for label, d in key:
                out[label] = min(out.get(label, 0), d)
        return out


def _series_coeffs(spow: int, chpow: int, order: int) -> list[Fraction]:
    """Coefficients of ``sinh(y)^spow * cosh(y)^chpow`` in powers of y up to ``order``."""
    sinh = [Fraction(0)] * (order + 1)
    cosh = [Fraction(0)] * (order + 1)
    for m in range(order + 1):
        if m % 2:
            sinh[m] = Fraction(1, factorial(m))
        else:
            cosh[m] = Fraction(1, factorial(m))
    out = [Fraction(0)] * (order + 1)
    out[0] = Fraction(1)
    for poly, times in ((sinh, spow), (cosh, chpow)):
        for _ in range(times):
            new = [Fraction(0)] * (order + 1)
            for a, ca in enumerate(out):
                if not ca:
                    continue
                for b in range(order + 1 - a):
                    if poly[b]:
                        new[a + b] += ca * poly[b]
            out = new
    return out


def required_order(x: HyperScalar, assignment: Mapping[int, ParamValue],
                   multiplier: ParamMonomial) -> int:
    """Smallest series order (in powers of ``Jv/2``) that captures every term
    of non-positive degree after substitution."""
    _, _, jdeg = _subst_monomial(multiplier.exps, assignment)
    if not jdeg:
        return 0
    need = 0
    for (u, p, vp, sp, cp), _ in x.items():
        if not (sp or cp):
            continue
        _, _, pdeg = _subst_monomial(p, assignment)
        for label, dj in jdeg.items():
            if dj > 0:
                pk = pdeg.get(label, 0)
                if pk < 0:
                    need = max(need, (-pk) // dj)
    return need


def substitute_and_grade(x: HyperScalar, assignment: Mapping[int, ParamValue],
                         multiplier: ParamMonomial, order: int = 8) -> GradedSeries:
    """Substitute parameter values into ``x`` and grade by infinitesimal degree.

    When the multiplier ``J`` picks up a positive degree, ``s`` and ``ch`` are
    expanded in powers of ``y = Jv/2`` through ``order``.  Terms of higher
    order carry strictly positive degree in some infinitesimal and cannot
    affect the limit; :class:`TruncationInsufficient` is raised otherwise.
    """
    jfactor, jrest, jdeg = _subst_monomial(multiplier.exps, assignment)
    expand = bool(jdeg)
    if expand:
        if any(d < 0 for d in jdeg.values()):
            raise ScalarError("multiplier has negative degree")
        need = required_order(x, assignment, multiplier)
        if need > order:
            raise TruncationInsufficient(
                f"series order {order} below the sufficiency bound {need}")
        # y = Jv/2 with J = jfactor * (remaining params) * eps^jdeg
        y = jfactor * HyperScalar.from_monomial(ParamMonomial(jrest)) * HyperScalar.vpow(1) \
            * HyperScalar.const(Fraction(1, 2))
    out: dict[tuple, HyperScalar] = {}

    def add(deg: dict, val: HyperScalar):
        key = _deg_key(deg)
        out[key] = out.get(key, ZERO) + val

    for (u, p, vp, sp, cp), c in x.items():
        factor, rest, pdeg = _subst_monomial(p, assignment)
        base = HyperScalar({(u, rest, vp, 0, 0): c}) * factor
        if not expand or not (sp or cp):
            add(pdeg, base * HyperScalar({((), (), 0, sp, cp): 1}))
            continue
        coeffs = _series_coeffs(sp, cp, order)
        ypow = ONE
        for m, cm in enumerate(coeffs):
            if m:
                ypow = ypow * y
            if not cm:
                continue
            deg = dict(pdeg)
            for label, dj in jdeg.items():
                deg[label] = deg.get(label, 0) + m * dj
            add(deg, base * ypow * HyperScalar.const(cm))
    return GradedSeries.from_dict(out, order)


def take_limit(x: GradedSeries) -> HyperScalar:
    """Sum of degree-zero terms; any negative degree is an indefinite limit."""
    total = ZERO
    for key, val in x.terms:
        neg = {label: d for label, d in key if d < 0}
        if neg:
            raise IndefiniteLimit(
                "negative degree " + ", ".join(f"eps_{k}^{d}" for k, d in sorted(neg.items()))
                + f" on coefficient {val}", dict(key))
        if not key:
            total = total + val
    return total


def contract_scalar(x: HyperScalar, assignment: Mapping[int, ParamValue],
                    multiplier: ParamMonomial, order: int = 8) -> HyperScalar:
    return take_limit(substitute_and_grade(x, assignment, multiplier, order))


def grade_units(x: HyperScalar, symbol: str) -> GradedSeries:
    """Grade by inverse powers of a unit symbol (``symbol -> infinity``)."""
    out: dict[tuple, HyperScalar] = {}
    for (u, p, vp, sp, cp), c in x.items():
        if sp or cp:
            raise ScalarError("unit limits require hyperbolic-free coefficients")
        e = dict(u).get(symbol, 0)
        key = _deg_key({symbol: -e})
        rest = tuple(t for t in u if t[0] != symbol)
        out[key] = out.get(key, ZERO) + HyperScalar({(rest, p, vp, 0, 0): c})
    return GradedSeries.from_dict(out)
