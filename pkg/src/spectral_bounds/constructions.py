"""Structural constructions: block-cyclic operators, cyclic word products,
the truncated shift family, and midpoint discretization of kernels."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .core import NonNegMatrix, nonneg
from .setalg import OperatorSet


def _check_square_family(mats):
    if not mats:
        raise ValueError("need at least one matrix")
    n = mats[0].shape[0]
    for M in mats:
        if M.shape != (n, n):
            raise ValueError(f"all matrices must be square {n}x{n}, got {M.shape}")
    return n


def block_cyclic(mats: Sequence[NonNegMatrix]) -> NonNegMatrix:
    """The ``nk x nk`` matrix with ``A_1..A_{k-1}`` on the block superdiagonal
    and ``A_k`` in the bottom-left corner. For ``k = 1`` this is ``A_1``."""
    n = _check_square_family(mats)
    k = len(mats)
    if k == 1:
        return nonneg(mats[0])
    T = np.zeros((n * k, n * k))
    for i, A in enumerate(mats):
        r, c = i, (i + 1) % k
        T[r * n : (r + 1) * n, c * n : (c + 1) * n] = A
    return nonneg(T)


def block_cyclic_kth_power_blocks(mats: Sequence[NonNegMatrix]) -> list[NonNegMatrix]:
    """Diagonal blocks of ``T^k``; these are the cyclic products
    ``A_1...A_k, A_2...A_k A_1, ..., A_k A_1...A_{k-1}``."""
    n = _check_square_family(mats)
    k = len(mats)
    Tk = np.linalg.matrix_power(block_cyclic(mats), k)
    return [nonneg(Tk[i * n : (i + 1) * n, i * n : (i + 1) * n]) for i in range(k)]


def cyclic_products(mats: Sequence[NonNegMatrix]) -> list[NonNegMatrix]:
    k = len(mats)
    out = []
    for i in range(k):
        P = mats[i]
        for j in range(1, k):
            P = P @ mats[(i + j) % k]
        out.append(nonneg(P))
    return out


def cyclic_word_products(
    sets: Sequence[OperatorSet], words, k: int | None = None
) -> list[NonNegMatrix]:
    """Products ``B_1..B_m`` from the decomposition of a word of the Hadamard
    geometric mean set of length ``m k``.

    ``words[i][j][t]`` is the member index drawn from ``sets[t]`` for the
    ``j``-th factor of block ``i``. Then

        B_s = prod_i  A[i,0,s] A[i,1,s+1] ... A[i,m-1,s+m-1]   (set indices mod m)

    so ``B_s`` lies in ``(S_s S_{s+1} ... S_{s-1})^k``.
    """
    m = len(sets)
    idx = np.asarray(words, dtype=int)
    if idx.ndim != 3 or idx.shape[1:] != (m, m):
        raise ValueError(f"index tensor must have shape (k, {m}, {m}), got {idx.shape}")
    if k is not None and idx.shape[0] != k:
        raise ValueError(f"index tensor has {idx.shape[0]} blocks, expected k={k}")
    for t, S in enumerate(sets):
        col = idx[:, :, t]
        if col.min() < 0 or col.max() >= len(S):
            raise ValueError(f"member index out of range for set {t} of size {len(S)}")
    out = []
    for s in range(m):
        B = None
        for i in range(idx.shape[0]):
            for j in range(m):
                t = (s + j) % m
                F = sets[t][idx[i, j, t]]
                B = F if B is None else B @ F
        out.append(nonneg(B))
    return out


def truncated_shift_family(n: int, count: int) -> OperatorSet:
    """``{A_1, ..., A_count}`` with ``A_k e_k = e_{k+1}`` and ``A_k e_j = 0`` otherwise."""
    if n < 1 or count < 1:
        raise ValueError("n and count must be positive")
    if count >= n:
        raise ValueError(f"count must be <= n - 1, got count={count}, n={n}")
    mats = []
    for k in range(count):
        A = np.zeros((n, n))
        A[k + 1, k] = 1.0
        mats.append(A)
    return OperatorSet(tuple(mats), label=f"shift(n={n},count={count})")


@dataclass(frozen=True)
class KernelSpec:
    """A non-negative kernel ``a(x, y)`` on the unit square.

    The evaluator is called with numpy arrays and must be safe to call
    concurrently.
    """

    evaluator: Callable[[np.ndarray, np.ndarray], np.ndarray]
    name: str = "kernel"


BUILTIN_KERNELS = {
    "constant": KernelSpec(lambda x, y: np.ones(np.broadcast(x, y).shape), "constant"),
    "gauss": KernelSpec(lambda x, y: np.exp(-((x - y) ** 2)), "gauss"),
    "product": KernelSpec(lambda x, y: x * y, "product"),
    "hilbert": KernelSpec(lambda x, y: 1.0 / (x + y + 1.0), "hilbert"),
}


def midpoints(n: int) -> np.ndarray:
    return (np.arange(n) + 0.5) / n


def kernel_discretize(spec: KernelSpec | str, n: int) -> NonNegMatrix:
    """Midpoint-rule matrix ``M(i, j) = a(x_i, x_j) / n`` of the integral operator."""
    if isinstance(spec, str):
        try:
            spec = BUILTIN_KERNELS[spec]
        except KeyError:
            raise ValueError(
                f"unknown kernel {spec!r}; expected one of {sorted(BUILTIN_KERNELS)}"
            ) from None
    if n < 1:
        raise ValueError("grid size must be positive")
    x = midpoints(n)
    X, Y = np.meshgrid(x, x, indexing="ij")
    vals = np.asarray(spec.evaluator(X, Y), dtype=float)
    if vals.shape != (n, n):
        vals = np.broadcast_to(vals, (n, n))
    bad = ~np.isfinite(vals) | (vals < 0)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise ValueError(
            f"kernel {spec.name!r} returned {float(vals[i, j])!r} at (x={float(x[i])!r}, y={float(x[j])!r})"
        )
    return nonneg(vals / n)

