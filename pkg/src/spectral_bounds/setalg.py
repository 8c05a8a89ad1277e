"""Finite operator sets and the word algebra over them.

Sets are index-ordered multisets: duplicates are kept and every enumeration is
lexicographic in member indices, so reports are reproducible.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Sequence

import numpy as np

from .core import NonNegMatrix, WeightVector, nonneg, weighted_hadamard_mean

DEFAULT_BUDGET = 10**6
BUDGET_ENV = "SPECTRAL_BOUNDS_BUDGET"


class BudgetExceeded(RuntimeError):
    def __init__(self, needed: int, budget: int):
        super().__init__(f"enumeration needs {needed} words, budget is {budget}")
        self.needed = needed
        self.budget = budget


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    value = int(raw)
    if value < 1:
        raise ValueError(f"{BUDGET_ENV} must be a positive integer")
    return value


def check_budget(needed: int, budget: int | None):
    budget = default_budget() if budget is None else budget
    if needed > budget:
        raise BudgetExceeded(needed, budget)


@dataclass(frozen=True, eq=False)
class OperatorSet:
    members: tuple[NonNegMatrix, ...]
    label: str | None = None

    def __post_init__(self):
        mats = tuple(nonneg(M) for M in self.members)
        if not mats:
            raise ValueError("an operator set needs at least one member")
        n = mats[0].shape[0]
        for M in mats:
            if M.shape != (n, n):
                raise ValueError(f"members must be square and {n}x{n}, got {M.shape}")
        object.__setattr__(self, "members", mats)

    @property
    def dim(self) -> int:
        return self.members[0].shape[0]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def stack(self) -> np.ndarray:
        return np.stack(self.members)


@dataclass(frozen=True)
class ProductWord:
    """Member indices of a product ``M[i_1] M[i_2] ... M[i_l]``.

    ``sources`` names the set each factor is drawn from; ``None`` means every
    factor comes from the first (or only) set.
    """

    indices: tuple[int, ...]
    sources: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        if not self.indices:
            raise ValueError("a product word has length >= 1")
        if self.sources is not None:
            object.__setattr__(self, "sources", tuple(int(s) for s in self.sources))
            if len(self.sources) != len(self.indices):
                raise ValueError("sources and indices must have equal length")

    def __len__(self):
        return len(self.indices)


def _product(mats: Sequence[np.ndarray]) -> NonNegMatrix:
    out = reduce(lambda X, Y: X @ Y, mats)
    out = np.array(out, dtype=float)
    out.setflags(write=False)
    return out


def set_product(Psi: OperatorSet, Sigma: OperatorSet) -> OperatorSet:
    if Psi.dim != Sigma.dim:
        raise ValueError(f"set_product: dimensions differ ({Psi.dim} vs {Sigma.dim})")
    return OperatorSet(tuple(A @ B for A in Psi for B in Sigma))


def chain_product(sets: Sequence[OperatorSet]) -> OperatorSet:
    """``sets[0] sets[1] ... sets[-1]`` as a single set."""
    return reduce(set_product, sets)


def set_power(
    Sigma: OperatorSet, m: int, budget: int | None = None
) -> Iterator[tuple[ProductWord, NonNegMatrix]]:
    """Lazily enumerate ``Sigma^m`` as ``(word, product)`` pairs."""
    if m < 1:
        raise ValueError("power must be >= 1")
    check_budget(len(Sigma) ** m, budget)
    return _enumerate_power(Sigma, m)


def _enumerate_power(Sigma, m):
    # prefix products are cached so each word costs one multiplication
    prefix: list[np.ndarray] = []
    last: tuple[int, ...] = ()
    for idx in itertools.product(range(len(Sigma)), repeat=m):
        common = 0
        while common < len(last) and last[common] == idx[common]:
            common += 1
        del prefix[common:]
        for pos in range(common, m):
            M = Sigma[idx[pos]]
            prefix.append(M if pos == 0 else prefix[-1] @ M)
        last = idx
        out = np.array(prefix[-1], dtype=float)
        out.setflags(write=False)
        yield ProductWord(idx), out


def set_power_set(Sigma: OperatorSet, m: int, budget: int | None = None) -> OperatorSet:
    return OperatorSet(tuple(M for _, M in set_power(Sigma, m, budget)))


def set_hadamard_mean(sets: Sequence[OperatorSet], w: WeightVector) -> OperatorSet:
    if len(sets) != len(w):
        raise ValueError(f"{len(sets)} sets but {len(w)} weights")
    dims = {S.dim for S in sets}
    if len(dims) != 1:
        raise ValueError(f"sets have differing dimensions {sorted(dims)}")
    return OperatorSet(
        tuple(weighted_hadamard_mean(combo, w) for combo in itertools.product(*sets))
    )


def word_matrix(sets: Sequence[OperatorSet] | OperatorSet, word: ProductWord) -> NonNegMatrix:
    if isinstance(sets, OperatorSet):
        sets = [sets]
    sources = word.sources or (0,) * len(word)
    factors = []
    for s, i in zip(sources, word.indices):
        if not 0 <= s < len(sets):
            raise IndexError(f"set index {s} out of range for {len(sets)} sets")
        if not 0 <= i < len(sets[s]):
            raise IndexError(f"member index {i} out of range for set {s} of size {len(sets[s])}")
        factors.append(sets[s][i])
    return _product(factors)
