"""Non-negative matrix arithmetic: Hadamard operations, products, norms, Perron roots.

Matrices are plain ``float64`` numpy arrays that have passed :func:`nonneg`;
they are returned read-only so they can be shared freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .perron import DEFAULT_RTOL, PerronConvergenceError, perron_enclosure

NonNegMatrix = np.ndarray

NORM_IDS = ("row-sum", "col-sum", "spectral")
WEIGHT_MODES = ("exact-one", "at-least-one")
WEIGHT_SUM_TOL = 1e-12

__all__ = [
    "NORM_IDS",
    "NonNegMatrix",
    "PerronConvergenceError",
    "WeightVector",
    "entrywise_leq",
    "hadamard_power",
    "hadamard_product",
    "matmul",
    "nonneg",
    "operator_norm",
    "perron_bracket",
    "spectral_radius",
    "weighted_hadamard_mean",
]


def nonneg(entries, rows: int | None = None, cols: int | None = None) -> NonNegMatrix:
    """Validate and freeze a non-negative matrix.

    ``entries`` may be a nested list/array, or a flat row-major sequence when
    ``rows`` and ``cols`` are given.
    """
    a = np.array(entries, dtype=float)
    if rows is not None or cols is not None:
        if rows is None or cols is None:
            raise ValueError("rows and cols must be given together")
        if rows < 1 or cols < 1:
            raise ValueError("rows and cols must be positive")
        if a.size != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {a.size}")
        a = a.reshape(rows, cols)
    if a.ndim != 2 or a.shape[0] < 1 or a.shape[1] < 1:
        raise ValueError(f"expected a non-empty 2-d matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    if np.any(a < 0):
        raise ValueError("matrix entries must be non-negative")
    a = a + 0.0  # normalises -0.0
    a.setflags(write=False)
    return a


def _frozen(a: np.ndarray) -> NonNegMatrix:
    a.setflags(write=False)
    return a


def _same_shape(A, B, what):
    if A.shape != B.shape:
        raise ValueError(f"{what}: shape mismatch {A.shape} vs {B.shape}")


@dataclass(frozen=True)
class WeightVector:
    """Positive Hadamard exponents with a sum constraint.

    ``at-least-one`` is only meaningful for matrices: the set and operator
    results need the weights to sum to exactly one.
    """

    weights: tuple[float, ...]
    mode: str = "exact-one"

    def __post_init__(self):
        w = tuple(float(a) for a in self.weights)
        object.__setattr__(self, "weights", w)
        if not w:
            raise ValueError("weight vector must be non-empty")
        if self.mode not in WEIGHT_MODES:
            raise ValueError(f"unknown weight mode {self.mode!r}; expected one of {WEIGHT_MODES}")
        if any(not np.isfinite(a) or a <= 0 for a in w):
            raise ValueError("weights must be finite and positive")
        total = sum(w)
        if self.mode == "exact-one" and abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"exact-one weights sum to {total!r}")
        if self.mode == "at-least-one" and total < 1.0 - WEIGHT_SUM_TOL:
            raise ValueError(f"at-least-one weights sum to {total!r} < 1")

    @classmethod
    def uniform(cls, m: int) -> "WeightVector":
        return cls((1.0 / m,) * m)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    @property
    def total(self) -> float:
        return sum(self.weights)


def hadamard_product(A: NonNegMatrix, B: NonNegMatrix) -> NonNegMatrix:
    _same_shape(A, B, "hadamard_product")
    return _frozen(np.multiply(A, B))


def hadamard_power(A: NonNegMatrix, alpha: float) -> NonNegMatrix:
    """Entrywise ``A(i,j) ** alpha`` with ``0 ** alpha = 0``."""
    if not alpha > 0:
        raise ValueError(f"Hadamard exponent must be positive, got {alpha!r}")
    return _frozen(np.power(A, alpha))


def weighted_hadamard_mean(mats: Sequence[NonNegMatrix], w: WeightVector) -> NonNegMatrix:
    if len(mats) != len(w):
        raise ValueError(f"{len(mats)} matrices but {len(w)} weights")
    out = np.power(mats[0], w.weights[0])
    for M, a in zip(mats[1:], w.weights[1:]):
        _same_shape(mats[0], M, "weighted_hadamard_mean")
        out = out * np.power(M, a)
    return _frozen(out)


def matmul(A: NonNegMatrix, B: NonNegMatrix) -> NonNegMatrix:
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"matmul: inner dimensions differ {A.shape} @ {B.shape}")
    return _frozen(A @ B)


def perron_bracket(A: NonNegMatrix, rtol: float = DEFAULT_RTOL) -> tuple[float, float]:
    """Collatz-Wielandt bracket ``(lower, upper)`` around the Perron root of ``A``."""
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"spectral radius needs a square matrix, got shape {A.shape}")
    lo, hi = perron_enclosure(A[None], rtol)
    return float(lo[0]), float(hi[0])


def spectral_radius(A: NonNegMatrix, rtol: float = DEFAULT_RTOL) -> float:
    lo, hi = perron_bracket(A, rtol)
    return 0.5 * (lo + hi)


def operator_norm(A: NonNegMatrix, norm_id: str = "row-sum", rtol: float = DEFAULT_RTOL) -> float:
    """Induced norm of ``A``.

    For non-negative matrices the supremum can be taken over the positive
    cone, which is why the row/column sums are attained at the all-ones vector.
    """
    if norm_id == "row-sum":
        return float(A.sum(axis=1).max())
    if norm_id == "col-sum":
        return float(A.sum(axis=0).max())
    if norm_id == "spectral":
        return float(norms(A[None], "spectral", rtol)[0])
    raise ValueError(f"unknown norm {norm_id!r}; expected one of {NORM_IDS}")


def norms(mats: np.ndarray, norm_id: str, rtol: float = DEFAULT_RTOL) -> np.ndarray:
    """Vectorised :func:`operator_norm` over a stack ``(N, r, c)``."""
    mats = np.asarray(mats)
    if norm_id == "row-sum":
        return mats.sum(axis=2).max(axis=1)
    if norm_id == "col-sum":
        return mats.sum(axis=1).max(axis=1)
    if norm_id == "spectral":
        lo, hi = spectral_norm_bracket(mats, rtol)
        return 0.5 * (lo + hi)
    raise ValueError(f"unknown norm {norm_id!r}; expected one of {NORM_IDS}")


def spectral_norm_bracket(mats: np.ndarray, rtol: float = DEFAULT_RTOL):
    """Bracket on the largest singular value of each matrix in a stack.

    Each matrix is first scaled by a power of two that brings its largest
    entry into [0.5, 1), so forming the Gram matrix can neither underflow nor
    overflow, and undoing the scale is exact.
    """
    mats = np.asarray(mats, dtype=float)
    top = mats.max(axis=(1, 2))
    _, exp = np.frexp(np.where(top > 0, top, 1.0))
    scaled = np.ldexp(mats, -exp[:, None, None])
    gram = np.einsum("nki,nkj->nij", scaled, scaled)
    lo, hi = perron_enclosure(gram, rtol)
    return np.ldexp(np.sqrt(lo), exp), np.ldexp(np.sqrt(hi), exp)


def entrywise_leq(A: NonNegMatrix, B: NonNegMatrix, tol: float = 0.0) -> bool:
    _same_shape(A, B, "entrywise_leq")
    return bool(np.all(A <= B + tol * np.maximum(1.0, B)))
