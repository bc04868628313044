"""Minimal and non-minimal multipliers of the deformation parameter.

The deformation parameter transforms as ``z = J v``.  ``J`` has to absorb
every negative power of a contraction parameter that the commutation
relations acquire when the parameters go nilpotent.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

from .scalars import ParamMonomial


class IndexOutOfRange(ValueError):
    pass


class InvalidPermutation(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    """Permutation ``sigma = (sigma_1, ..., sigma_N)`` of ``1..N`` (one-based)."""

    images: tuple

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise InvalidPermutation(f"{imgs} is not a permutation of 1..{len(imgs)}")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        try:
            return cls(tuple(int(x) for x in text.replace(" ", "").strip("()").split(",")))
        except ValueError as exc:
            raise InvalidPermutation(str(exc)) from exc

    @property
    def N(self) -> int:
        return len(self.images)

    @property
    def n(self) -> int:
        return self.N // 2

    def __getitem__(self, k: int) -> int:
        """``sigma_k`` for one-based position ``k``."""
        return self.images[k - 1]

    def conj(self, k: int) -> int:
        """Position ``k' = N + 1 - k``."""
        return self.N + 1 - k

    def position(self, label: int) -> int:
        return self.images.index(label) + 1

    def pair(self, k: int) -> tuple[int, int]:
        """Images of the pair ``(k, k')`` with the smaller one first."""
        a, b = self[k], self[self.conj(k)]
        return (a, b) if a < b else (b, a)

    def pair_range(self) -> range:
        # for even N the innermost pair (n, n+1) has no indefinite ratio
        return range(1, self.n + 1) if self.N % 2 else range(1, self.n)

    def __str__(self):
        return "(" + ",".join(map(str, self.images)) + ")"


def interval(a: int, b: int, N: int | None = None) -> ParamMonomial:
    """Interval product ``(a, b) = j_min ... j_{max-1}``; ``(a, a) = 1``."""
    if a < 1 or b < 1 or (N is not None and (a > N or b > N)):
        raise IndexOutOfRange(f"interval ({a},{b}) outside 1..{N}")
    lo, hi = min(a, b), max(a, b)
    return ParamMonomial(tuple((l, 1) for l in range(lo, hi)))


def minimal_multiplier(sigma: Permutation) -> ParamMonomial:
    """Union of ``(sigma_k, sigma_k')`` over the conjugate pairs."""
    parts = [interval(sigma[k], sigma[sigma.conj(k)], sigma.N) for k in range(1, sigma.n + 1)]
    return reduce(ParamMonomial.union, parts, ParamMonomial())


def branch_index(sigma: Permutation, k: int) -> int:
    """Smallest image inside the ``k``-th shell.

    Every deeper pair contributes its smaller image; for odd ``N`` the
    central image ``sigma_{n+1}`` is part of the minimum as well.
    """
    if k not in sigma.pair_range():
        raise IndexOutOfRange(f"k={k} outside {list(sigma.pair_range())}")
    pool = [sigma.pair(m)[0] for m in range(k + 1, sigma.n + 1)]
    if sigma.N % 2:
        pool.append(sigma[sigma.n + 1])
    if not pool:
        raise IndexOutOfRange(f"empty shell for k={k}")
    return min(pool)


def compensative(sigma: Permutation, k: int) -> ParamMonomial:
    """Factor cancelling the indefinite ratio of the ``k``-th commutator."""
    i_k = branch_index(sigma, k)
    lo, hi = sigma.pair(k)
    N = sigma.N
    if i_k < lo:
        return interval(i_k, lo, N) ** 2 * interval(lo, hi, N)
    if i_k < hi:
        return interval(i_k, hi, N)
    return ParamMonomial()


def full_multiplier(sigma: Permutation) -> ParamMonomial:
    """Non-minimal multiplier ``J = J0 U (U_k J1^(k))``."""
    J = minimal_multiplier(sigma)
    for k in sigma.pair_range():
        J = J.union(compensative(sigma, k))
    return J


# Named permutations of the N=5 catalog.
NAMED_SIGMAS: dict[str, Permutation] = {
    "identity": Permutation((1, 2, 3, 4, 5)),
    "sigma-hat": Permutation((2, 1, 3, 4, 5)),
    "sigma-check": Permutation((1, 3, 2, 4, 5)),
    "sigma-tilde": Permutation((2, 3, 1, 4, 5)),
    "sigma-I": Permutation((3, 1, 5, 2, 4)),
    "sigma-II": Permutation((3, 1, 2, 4, 5)),
    "sigma-III": Permutation((3, 2, 1, 4, 5)),
    "sigma-pp": Permutation((2, 1, 3, 5, 4)),
    "sigma-ppp": Permutation((2, 3, 1, 5, 4)),
}


def resolve_sigma(text: str | Sequence[int] | Permutation) -> Permutation:
    if isinstance(text, Permutation):
        return text
    if not isinstance(text, str):
        return Permutation(tuple(text))
    if text in NAMED_SIGMAS:
        return NAMED_SIGMAS[text]
    return Permutation.parse(text)


def sigma_name(sigma: Permutation) -> str | None:
    for name, p in NAMED_SIGMAS.items():
        if p == sigma:
            return name
    return None
