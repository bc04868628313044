"""Quantum Cayley-Klein spaces: relations, invariant form and contractions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .multiplier import Permutation, full_multiplier, interval
from .ncalgebra import (INV, X1, ExchangeRuleSet, NCPoly, gen, normal_order)
from .scalars import (I, ONE, ZERO, HyperScalar, IndefiniteLimit, ParamMonomial,
                      ParamValue, contract_scalar, grade_units, take_limit)


class NoUnitCoordinate(ValueError):
    pass


@dataclass(frozen=True)
class CKSpaceSpec:
    sigma: Permutation
    J: ParamMonomial | None = None
    epsilon_sign: int = 1

    def __post_init__(self):
        if self.J is None:
            object.__setattr__(self, "J", full_multiplier(self.sigma))
        if any(e not in (0, 1, 2) for _, e in self.J.exps):
            raise ValueError(f"multiplier exponents must be 0, 1 or 2: {self.J}")
        if self.epsilon_sign not in (1, -1):
            raise ValueError("epsilon_sign must be +1 or -1")

    @property
    def N(self) -> int:
        return self.sigma.N


def _iv(a: int) -> HyperScalar:
    """``(1, a)`` as a scalar."""
    return HyperScalar.from_monomial(interval(1, a))


def position_order(N: int) -> list[int]:
    """Positions from the innermost shell outwards, left member first."""
    n = N // 2
    out = [n + 1] if N % 2 else []
    depth_first = range(n, 0, -1)
    for k in depth_first:
        out += [k, N + 1 - k]
    return out


def _depth(p: int, N: int) -> int:
    return min(p, N + 1 - p)


def conjugate_commutator(spec: CKSpaceSpec, k: int) -> NCPoly:
    """``[x_{sigma_k}, x_{sigma_k'}]`` for ``k <= n``."""
    sigma, N = spec.sigma, spec.N
    n = N // 2
    C = HyperScalar.cosh_full()
    S = HyperScalar.sinh_full()
    kp = N + 1 - k
    denom = (_iv(sigma[k]) * _iv(sigma[kp])).inverse()
    out = NCPoly()
    if N % 2:
        c0 = sigma[n + 1]
        coeff = (HyperScalar.const(2 * spec.epsilon_sign) * I * HyperScalar.s()
                 * C ** (n - k) * _iv(c0) ** 2 * denom)
        out = out + NCPoly({(gen(c0), gen(c0)): coeff})
    for m in range(k + 1, n + 1):
        mp = N + 1 - m
        w = HyperScalar.const(I) * S * C ** (m - k - 1) * denom
        out = out + NCPoly({(gen(sigma[m]), gen(sigma[m])): w * _iv(sigma[m]) ** 2,
                            (gen(sigma[mp]), gen(sigma[mp])): w * _iv(sigma[mp]) ** 2})
    return out


def build_relations(spec: CKSpaceSpec, step_budget: int = 10_000) -> ExchangeRuleSet:
    """Exchange rules of the quantum space, ordered innermost-first.

    For an outer position ``o`` (partner ``o'``) and a deeper position ``x``::

        x_o  x_x -> cosh(Jv) x_x x_o  - i R sinh(Jv) x_x x_o'
        x_o' x_x -> cosh(Jv) x_x x_o' + i R^-1 sinh(Jv) x_x x_o

    with ``R = (1, sigma_o') / (1, sigma_o)`` (images of positions), and the
    conjugate pair is ordered through its commutator.
    """
    sigma, N = spec.sigma, spec.N
    order = position_order(N)
    rank = {gen(sigma[p]): i for i, p in enumerate(order)}
    gens = tuple(gen(sigma[p]) for p in order)
    C = HyperScalar.cosh_full()
    S = HyperScalar.sinh_full()
    rules: dict = {}
    names: dict = {}
    for p in range(1, N + 1):
        for q in range(1, N + 1):
            a, b = gen(sigma[p]), gen(sigma[q])
            if p == q or rank[a] < rank[b]:
                continue
            if q == N + 1 - p:
                k = q  # q is the left member
                rules[a, b] = NCPoly.word(b, a) - conjugate_commutator(spec, k)
                names[a, b] = f"[x{sigma[k]},x{sigma[p]}] (pair k={k})"
                continue
            # p is the outer position
            assert _depth(p, N) < _depth(q, N)
            o = min(p, N + 1 - p)
            op = N + 1 - o
            R = _iv(sigma[op]) * _iv(sigma[o]).inverse()
            if p == o:
                rhs = NCPoly({(b, a): C, (b, gen(sigma[op])): -I * R * S})
            else:
                rhs = NCPoly({(b, a): C, (b, gen(sigma[o])): I * R.inverse() * S})
            rules[a, b] = rhs
            names[a, b] = f"x{sigma[p]} x{sigma[q]} (positions {p},{q})"
    inv = build_invariant(spec)
    return ExchangeRuleSet(gens=gens, rank=rank, rules=rules, step_budget=step_budget,
                           multiplier=spec.J, sphere=(inv.poly, inv.value), names=names,
                           meta={"sigma": sigma})


@dataclass(frozen=True)
class InvariantForm:
    """``inv(j)`` scaled by ``cosh(Jv/2)`` to clear its only denominator.

    ``poly == value`` is the sphere relation ``inv(j) = 1``.  ``shells`` keeps
    the unscaled weights as ``(generator, interval^2, numerator, denominator)``.
    """

    poly: NCPoly
    value: HyperScalar
    shells: tuple

    def weight(self, generator: str) -> tuple[HyperScalar, HyperScalar]:
        for g, _, num, den in self.shells:
            if g == generator:
                return num, den
        raise KeyError(generator)


def build_invariant(spec: CKSpaceSpec) -> InvariantForm:
    sigma, N = spec.sigma, spec.N
    n = N // 2
    C = HyperScalar.cosh_full()
    ch = HyperScalar.ch()
    shells = []
    if N % 2:
        c0 = sigma[n + 1]
        shells.append((gen(c0), _iv(c0) ** 2,
                       HyperScalar.const(spec.epsilon_sign) * C ** n, ch))
    for k in range(1, n + 1):
        for pos in (k, N + 1 - k):
            shells.append((gen(sigma[pos]), _iv(sigma[pos]) ** 2, C ** (k - 1), ONE))
    poly = NCPoly()
    for g, iv2, num, den in shells:
        scale = num if den == ch else num * ch
        poly = poly + NCPoly({(g, g): iv2 * scale})
    return InvariantForm(poly=poly, value=ch, shells=tuple(shells))


# -- contraction ------------------------------------------------------------

def contract_relations(R: ExchangeRuleSet, assignment: Mapping[int, ParamValue],
                       order: int = 8) -> ExchangeRuleSet:
    """Substitute parameter values and take the contraction limit of every rule."""
    J = R.multiplier

    def lim(c):
        return contract_scalar(c, assignment, J, order)

    rules = {}
    for key, rhs in R.rules.items():
        try:
            rules[key] = rhs.map_coefficients(lim)
        except IndefiniteLimit as exc:
            raise IndefiniteLimit(f"rule {R.names.get(key, key)}: {exc}", exc.degree) from None
    sphere = None
    if R.sphere is not None:
        try:
            sphere = (R.sphere[0].map_coefficients(lim), lim(R.sphere[1]))
        except IndefiniteLimit:
            sphere = None
    meta = dict(R.meta, assignment=dict(assignment))
    return ExchangeRuleSet(gens=R.gens, rank=dict(R.rank), rules=rules,
                           step_budget=R.step_budget, multiplier=R.multiplier,
                           sphere=sphere, names=dict(R.names), meta=meta)


def limit_unit(R: ExchangeRuleSet, symbol: str) -> ExchangeRuleSet:
    """Send a unit symbol (``T``, ``c`` or ``R``) to infinity in every rule."""

    def lim(c):
        return take_limit(grade_units(c, symbol))

    rules = {}
    for key, rhs in R.rules.items():
        try:
            rules[key] = rhs.map_coefficients(lim)
        except IndefiniteLimit as exc:
            raise IndefiniteLimit(f"rule {R.names.get(key, key)}: {exc}", exc.degree) from None
    meta = dict(R.meta)
    meta["unit_limits"] = meta.get("unit_limits", ()) + (symbol,)
    return ExchangeRuleSet(gens=R.gens, rank=dict(R.rank), rules=rules,
                           step_budget=R.step_budget, multiplier=R.multiplier,
                           sphere=None, names=dict(R.names), meta=meta)


# -- Beltrami coordinates ---------------------------------------------------

STANDARD_ROLES = {"t": 2, "r1": 3, "r2": 4, "r3": 5}
CARROLL_ROLES = {"r1": 2, "r2": 3, "r3": 4, "t": 5}


def hat(alias: str) -> str:
    return alias[0] + "h" + alias[1:]


def beltrami_generators(sigma: Permutation, roles: Mapping[str, int] = STANDARD_ROLES
                        ) -> dict[str, NCPoly]:
    """Right (``x_a x1^-1``) and left (``x1^-1 x_a``) aliases.

    >>> sorted(beltrami_generators(Permutation((2, 1, 3, 4, 5))))[:2]
    ['r1', 'r2']
    """
    if 1 not in sigma.images:
        raise NoUnitCoordinate("no position carries x1")
    out = {}
    for alias, a in roles.items():
        if a == 1 or a > sigma.N:
            raise NoUnitCoordinate(f"{alias} cannot be built from x{a}")
        out[alias] = NCPoly.word(gen(a), INV)
        out[hat(alias)] = NCPoly.word(INV, gen(a))
    return out


def expand_aliases(p: NCPoly, aliases: Mapping[str, NCPoly]) -> NCPoly:
    return p.substitute(aliases)


def is_invariant_central(spec: CKSpaceSpec, R: ExchangeRuleSet | None = None) -> bool:
    from .ncalgebra import is_central

    R = R or build_relations(spec)
    return is_central(build_invariant(spec).poly, R)


__all__ = [
    "CKSpaceSpec", "build_relations", "build_invariant", "contract_relations",
    "limit_unit", "beltrami_generators", "expand_aliases", "InvariantForm",
    "STANDARD_ROLES", "CARROLL_ROLES", "position_order", "NoUnitCoordinate",
    "normal_order", "X1", "ZERO",
]
