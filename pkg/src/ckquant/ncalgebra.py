"""Noncommutative polynomials, exchange-rule normal ordering and localization.

Words are tuples of generator labels.  Cartesian generators are ``"x1"`` ..
``"xN"``; the adjoined inverse of ``x1`` is :data:`INV`.  An
:class:`ExchangeRuleSet` orients the quadratic relations of an algebra
against a total order on generators; :func:`normal_order` rewrites
leftmost-first until no out-of-order pair is left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .scalars import ONE, ZERO, HyperScalar, NotInvertible

X1 = "x1"
INV = "x1^-1"


class NCAlgebraError(Exception):
    pass


class StepBudgetExceeded(NCAlgebraError):
    pass


class MissingRule(NCAlgebraError):
    pass


class NotLocalizable(NCAlgebraError):
    pass


class NotClearable(NCAlgebraError):
    pass


def gen(k: int) -> str:
    return f"x{k}"


class NCPoly:
    """Finite sum of scalar-weighted words; immutable."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | None = None):
        out: dict = {}
        for word, c in (terms or {}).items():
            c = HyperScalar.const(c)
            word = tuple(word)
            new = out.get(word, ZERO) + c
            if new:
                out[word] = new
            else:
                out.pop(word, None)
        self._terms = out

    @classmethod
    def word(cls, *letters: str, coeff=1) -> "NCPoly":
        return cls({tuple(letters): coeff})

    @classmethod
    def scalar(cls, c) -> "NCPoly":
        return cls({(): c})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self, rank: Mapping[str, int] | None = None):
        key = (lambda w: (len(w), [rank.get(x, 99) for x in w], w)) if rank else (lambda w: (len(w), w))
        return [(w, self._terms[w]) for w in sorted(self._terms, key=key)]

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            other = _as_poly(other)
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        other = _as_poly(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            new = out.get(w, ZERO) + c
            if new:
                out[w] = new
            else:
                out.pop(w, None)
        return _raw(out)

    __radd__ = __add__

    def __neg__(self):
        return _raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            out: dict = {}
            for w1, c1 in self._terms.items():
                for w2, c2 in other._terms.items():
                    w = w1 + w2
                    new = out.get(w, ZERO) + c1 * c2
                    if new:
                        out[w] = new
                    else:
                        out.pop(w, None)
            return _raw(out)
        c = HyperScalar.const(other)
        return _raw({w: v * c for w, v in self._terms.items() if v * c})

    def __rmul__(self, other):
        if isinstance(other, NCPoly):
            return other * self
        c = HyperScalar.const(other)
        return _raw({w: c * v for w, v in self._terms.items() if c * v})

    def __pow__(self, n: int):
        out = NCPoly.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def map_coefficients(self, f) -> "NCPoly":
        return NCPoly({w: f(c) for w, c in self._terms.items()})

    def substitute(self, mapping: Mapping[str, "NCPoly"]) -> "NCPoly":
        """Replace letters by polynomials (alias expansion, relabelling)."""
        out = NCPoly()
        for w, c in self._terms.items():
            term = NCPoly.scalar(c)
            for x in w:
                term = term * mapping[x] if x in mapping else term * NCPoly.word(x)
            out = out + term
        return out

    def letters(self) -> set[str]:
        return {x for w in self._terms for x in w}

    def __repr__(self):
        return f"NCPoly({self})"

    def __str__(self):
        return format_poly(self)


def _raw(terms: dict) -> NCPoly:
    p = NCPoly.__new__(NCPoly)
    p._terms = terms
    return p


def _as_poly(x) -> NCPoly:
    if isinstance(x, NCPoly):
        return x
    return NCPoly.scalar(x)


def format_poly(p: NCPoly, rank: Mapping[str, int] | None = None) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for w, c in p.sorted_items(rank):
        word = " ".join(w)
        cs = str(c)
        if not w:
            parts.append(f"({cs})")
        elif cs == "1":
            parts.append(word)
        else:
            parts.append(f"({cs}) {word}")
    return " + ".join(parts)


class _Counter:
    __slots__ = ("steps", "budget")

    def __init__(self, budget: int):
        self.steps = 0
        self.budget = budget

    def tick(self):
        self.steps += 1
        if self.steps > self.budget:
            raise StepBudgetExceeded(f"more than {self.budget} rule applications")


@dataclass
class ExchangeRuleSet:
    """Oriented quadratic rewrite rules ``a b -> rhs`` for ``rank[a] > rank[b]``.

    When ``localized`` is true the set also carries rules moving :data:`INV`
    to the right and the cancellations ``x1 x1^-1 = x1^-1 x1 = 1``.
    """

    gens: tuple
    rank: dict
    rules: dict
    step_budget: int = 10_000
    multiplier: object = None
    sphere: tuple | None = None  # (poly, value): poly == value on the sphere
    localized: bool = False
    names: dict = field(default_factory=dict)
    meta: dict = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def order_key(self, w: tuple):
        return [self.rank[x] for x in w]

    def reducible(self, a: str, b: str) -> bool:
        if self.localized and {a, b} == {X1, INV}:
            return True
        return self.rank[a] > self.rank[b]

    def rule(self, a: str, b: str) -> NCPoly:
        if self.localized and {a, b} == {X1, INV}:
            return NCPoly.scalar(1)
        try:
            return self.rules[a, b]
        except KeyError:
            raise MissingRule(f"no rule for {a} {b}") from None

    def nf_word(self, word: tuple, counter: _Counter) -> dict:
        cached = self._cache.get(word)
        if cached is not None:
            return cached
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a == b or not self.reducible(a, b):
                continue
            counter.tick()
            out: dict = {}
            for w, c in self.rule(a, b).items():
                for w2, c2 in self.nf_word(word[:i] + w + word[i + 2:], counter).items():
                    new = out.get(w2, ZERO) + c * c2
                    if new:
                        out[w2] = new
                    else:
                        out.pop(w2, None)
            self._cache[word] = out
            return out
        out = {word: ONE}
        self._cache[word] = out
        return out

    def map_rules(self, f, **changes) -> "ExchangeRuleSet":
        rules = {k: v.map_coefficients(f) for k, v in self.rules.items()}
        sphere = self.sphere
        if sphere is not None:
            sphere = (sphere[0].map_coefficients(f), f(sphere[1]))
        kw = dict(gens=self.gens, rank=dict(self.rank), rules=rules,
                  step_budget=self.step_budget, multiplier=self.multiplier,
                  sphere=sphere, localized=self.localized, names=dict(self.names),
                  meta=dict(self.meta))
        kw.update(changes)
        return ExchangeRuleSet(**kw)


def normal_order(p: NCPoly, R: ExchangeRuleSet) -> NCPoly:
    """Rewrite to the unique normal form, leftmost pair first."""
    counter = _Counter(R.step_budget)
    out: dict = {}
    for word, c in _as_poly(p).items():
        for w, c2 in R.nf_word(word, counter).items():
            new = out.get(w, ZERO) + c * c2
            if new:
                out[w] = new
            else:
                out.pop(w, None)
    return _raw(out)


def commutator(x: NCPoly, y: NCPoly, R: ExchangeRuleSet) -> NCPoly:
    return normal_order(x * y - y * x, R)


def is_central(x: NCPoly, R: ExchangeRuleSet) -> bool:
    return all(commutator(x, NCPoly.word(g), R).is_zero() for g in R.gens)


def is_normal(word: tuple, R: ExchangeRuleSet) -> bool:
    return all(a == b or not R.reducible(a, b) for a, b in zip(word, word[1:]))


# -- localization -----------------------------------------------------------

def _det(m: list[list[HyperScalar]]) -> HyperScalar:
    n = len(m)
    if n == 1:
        return m[0][0]
    total = ZERO
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def matrix_inverse(m: list[list[HyperScalar]]) -> list[list[HyperScalar]]:
    """Inverse over the scalar ring; the determinant must be a unit."""
    n = len(m)
    det = _det(m)
    try:
        dinv = det.inverse()
    except NotInvertible:
        raise NotLocalizable(f"determinant {det} is not invertible") from None
    inv = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
            cof = _det(minor) if minor else ONE
            inv[j][i] = cof * dinv if (i + j) % 2 == 0 else -cof * dinv
    return inv


def localize(R: ExchangeRuleSet) -> ExchangeRuleSet:
    """Adjoin ``x1^-1`` and reorder so that ``x1``, ``x1^-1`` sort last.

    Writes ``x1 x_b = sum_c L[b][c] x_c x1 + P_b`` with ``P_b`` free of ``x1``
    and derives ``x1^-1 x_d`` from the inverse of ``L``.  Raises
    :class:`NotLocalizable` when ``L`` is not invertible or the ``P``-parts
    feed back on themselves (the rewrite would not terminate).
    """
    if R.localized:
        return R
    if X1 not in R.gens:
        raise NotLocalizable("x1 is not a generator")
    others = sorted((g for g in R.gens if g != X1), key=R.rank.get)
    # coordinates on degree-2 words that contain x1
    def coords(p: NCPoly) -> dict:
        vec = {}
        for w, c in p.items():
            if X1 in w:
                b = w[0] if w[1] == X1 else w[1]
                vec[b] = vec.get(b, ZERO) + c
        return vec

    X = {b: normal_order(NCPoly.word(X1, b), R) for b in R.gens}
    Y = {c: normal_order(NCPoly.word(c, X1), R) for c in R.gens}
    basis = list(R.gens)
    Ymat = [[coords(Y[c]).get(b, ZERO) for b in basis] for c in basis]
    Xmat = [[coords(X[b]).get(c, ZERO) for c in basis] for b in basis]
    Yinv = matrix_inverse(Ymat)
    n = len(basis)
    # L = Xmat * Yinv (rows indexed by b, columns by c)
    L = [[sum((Xmat[i][k] * Yinv[k][j] for k in range(n)), ZERO) for j in range(n)]
         for i in range(n)]
    P = {}
    for i, b in enumerate(basis):
        rest = X[b] - sum((NCPoly({(): L[i][j]}) * Y[c] for j, c in enumerate(basis)), NCPoly())
        rest = normal_order(rest, R)
        if any(X1 in w for w in rest.terms):
            raise NotLocalizable(f"x1 {b} does not split")
        P[b] = rest

    new_rank = {g: i for i, g in enumerate(others)}
    new_rank[X1] = len(others)
    new_rank[INV] = len(others) + 1
    rules = {}
    names = {}
    for (a, b), rhs in R.rules.items():
        if X1 not in (a, b):
            rules[a, b] = rhs
            names[a, b] = R.names.get((a, b), f"{a} {b}")
    # x1 x_b -> sum_c L[b][c] x_c x1 + P_b
    for i, b in enumerate(basis):
        if b == X1:
            continue
        rhs = P[b]
        for j, c in enumerate(basis):
            if L[i][j]:
                rhs = rhs + NCPoly({(c, X1): L[i][j]})
        rules[X1, b] = rhs
        names[X1, b] = f"x1 {b} (reordered)"
    # x_b x1 is already ordered; rules for x1^-1 x_d
    idx = {g: i for i, g in enumerate(basis)}
    sub = [idx[g] for g in others]
    M = [[L[i][j] for j in sub] for i in sub]
    Minv = matrix_inverse(M)
    deps: dict[str, set] = {}
    for a, d in enumerate(others):
        rhs = NCPoly()
        used = set()
        for k, c in enumerate(others):
            coef = Minv[a][k]
            if not coef:
                continue
            term = NCPoly.word(c, INV) - NCPoly.scalar(L[idx[c]][idx[X1]])
            pc = P[c]
            if pc:
                term = term - NCPoly.word(INV) * pc * NCPoly.word(INV)
                used |= pc.letters()
            rhs = rhs + NCPoly.scalar(coef) * term
        rules[INV, d] = rhs
        names[INV, d] = f"x1^-1 {d}"
        deps[d] = used
    _check_acyclic(deps)
    return ExchangeRuleSet(gens=R.gens, rank=new_rank, rules=rules,
                           step_budget=R.step_budget, multiplier=R.multiplier,
                           sphere=R.sphere, localized=True, names=names,
                           meta=dict(R.meta, base=R))


def _check_acyclic(deps: Mapping[str, set]) -> None:
    state: dict[str, int] = {}

    def visit(x):
        if state.get(x) == 1:
            raise NotLocalizable(f"x1^-1 rules are cyclic through {x}")
        if state.get(x) == 2:
            return
        state[x] = 1
        for y in deps.get(x, ()):
            visit(y)
        state[x] = 2

    for x in deps:
        visit(x)


def clear_inverses(p: NCPoly) -> NCPoly:
    """Multiply by ``x1`` on both sides and cancel ``x1 x1^-1`` pairs.

    Works for degree-zero terms of the shape (left generator)(right
    generator); anything else raises :class:`NotClearable`.
    """
    out = NCPoly()
    for w, c in p.items():
        stack: list[str] = []
        for x in (X1,) + w + (X1,):
            if stack and {stack[-1], x} == {X1, INV}:
                stack.pop()
            else:
                stack.append(x)
        if INV in stack:
            raise NotClearable(f"word {' '.join(w)} keeps an inverse after clearing")
        out = out + NCPoly({tuple(stack): c})
    return out


def reduce_mod_sphere(p: NCPoly, R: ExchangeRuleSet, pivot: str | None = None,
                      rounds: int = 32) -> NCPoly:
    """Pseudo-reduce a normal form modulo ``sphere_poly = sphere_value``.

    The pivot generator ``g`` (default: highest rank with a ``g g`` term)
    supplies the oriented rule ``a g g -> value - rest``; multiplying by the
    central scalar ``a`` does not change membership in the ideal because the
    scalar ring is a domain.
    """
    if R.sphere is None:
        raise NCAlgebraError("rule set has no sphere relation")
    sp, value = R.sphere
    sp = normal_order(sp, R)
    squares = [w for w in sp.terms if len(w) == 2 and w[0] == w[1] and w[0] != INV]
    if pivot is None:
        pivot = max((w[0] for w in squares), key=lambda g: R.rank[g])
    gg = (pivot, pivot)
    if gg not in sp.terms:
        raise NCAlgebraError(f"pivot {pivot} does not appear squared")
    a = sp.terms[gg]
    rest = sp - NCPoly({gg: a})
    repl = NCPoly.scalar(value) - rest
    p = normal_order(p, R)
    for _ in range(rounds):
        hits = {w: c for w, c in p.items() if _find(w, gg) >= 0}
        if not hits:
            return p
        keep = p - NCPoly(hits)
        new = keep * a
        for w, c in hits.items():
            i = _find(w, gg)
            new = new + NCPoly.word(*w[:i]) * repl * NCPoly.word(*w[i + 2:]) * c
        p = normal_order(new, R)
    return p


def _find(w: tuple, pat: tuple) -> int:
    for i in range(len(w) - 1):
        if w[i:i + 2] == pat:
            return i
    return -1


def verify_identity(lhs: NCPoly, rhs: NCPoly, R: ExchangeRuleSet,
                    modulo_sphere: bool = False, pivot: str | None = None) -> bool:
    """Decide ``lhs == rhs`` in the algebra (optionally on the sphere)."""
    diff = _as_poly(lhs) - _as_poly(rhs)
    if not R.localized and INV in diff.letters():
        diff = clear_inverses(diff)
    nf = normal_order(diff, R)
    if nf.is_zero():
        return True
    if modulo_sphere and R.sphere is not None:
        return reduce_mod_sphere(nf, R, pivot).is_zero()
    return False


def critical_pairs(R: ExchangeRuleSet, letters: Iterable[str] | None = None):
    """Yield ``(word, left_result, right_result)`` for every overlap ``a b c``."""
    letters = list(letters or R.gens)
    if R.localized and INV not in letters:
        letters.append(INV)
    for a in letters:
        for b in letters:
            if a == b or not R.reducible(a, b):
                continue
            for c in letters:
                if b == c or not R.reducible(b, c):
                    continue
                left = normal_order(R.rule(a, b) * NCPoly.word(c), R)
                right = normal_order(NCPoly.word(a) * R.rule(b, c), R)
                yield (a, b, c), left, right


def check_confluence(R: ExchangeRuleSet, letters: Iterable[str] | None = None) -> list:
    """Return the overlaps whose two reductions disagree (empty when confluent)."""
    return [(w, l, r) for w, l, r in critical_pairs(R, letters) if l != r]


def random_words(gens: list[str], length: int, count: int, rng) -> list[tuple]:
    return [tuple(rng.choice(gens) for _ in range(length)) for _ in range(count)]


__all__ = [
    "INV", "X1", "NCPoly", "ExchangeRuleSet", "normal_order", "commutator",
    "is_central", "localize", "verify_identity", "clear_inverses",
    "reduce_mod_sphere", "critical_pairs", "check_confluence",
    "StepBudgetExceeded", "MissingRule", "NotLocalizable", "NotClearable",
]
