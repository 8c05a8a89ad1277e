"""Batched Perron-root computation with Collatz-Wielandt enclosures.

Every matrix in a stack is split into the strongly connected components of its
support graph. The spectral radius of a non-negative matrix is the maximum of
the spectral radii of those irreducible diagonal blocks, and an irreducible
block has a strictly positive Perron vector, so the Collatz-Wielandt quotients
``(Ax)_i / x_i`` of a shifted power iteration close onto the root from both
sides. Acyclic support graphs (nilpotent matrices) give exactly zero.
"""

from __future__ import annotations

import math

import numpy as np

DEFAULT_RTOL = 1e-9
MAX_ITER = 1_000_000


class PerronConvergenceError(RuntimeError):
    """Raised when the enclosure did not reach the requested width."""

    def __init__(self, message, lower, upper):
        super().__init__(message)
        self.lower = lower
        self.upper = upper


def _cycle_classes(pattern: np.ndarray) -> np.ndarray:
    """cls[b, i, j] is True iff i and j lie on a common cycle of graph b."""
    n = pattern.shape[-1]
    reach = pattern.copy()
    for _ in range(max(1, math.ceil(math.log2(n))) + 1):
        reach = reach | (reach @ reach)
    return reach & reach.transpose(0, 2, 1)


def perron_enclosure(mats, rtol: float = DEFAULT_RTOL, max_iter: int = MAX_ITER):
    """Return ``(lower, upper)`` arrays bracketing the spectral radius of each matrix.

    ``mats`` has shape ``(N, n, n)`` and must be entrywise non-negative. The
    bracket satisfies ``upper - lower <= rtol * upper`` on return.
    """
    mats = np.asarray(mats, dtype=float)
    if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
        raise ValueError(f"expected a stack of square matrices, got shape {mats.shape}")
    N, n, _ = mats.shape
    lower = np.zeros(N)
    upper = np.zeros(N)
    if N == 0:
        return lower, upper
    if n == 1:
        v = mats[:, 0, 0].copy()
        return v, v.copy()

    cls = _cycle_classes(mats > 0)
    first = np.argmax(cls, axis=2)
    on_cycle = np.diagonal(cls, axis1=1, axis2=2)
    rep = on_cycle & (first == np.arange(n)[None, :])
    b_idx, i_idx = np.nonzero(rep)
    if b_idx.size == 0:
        return lower, upper

    masks = cls[b_idx, i_idx, :]
    A = mats[b_idx] * (masks[:, :, None] & masks[:, None, :])
    x = masks.astype(float)
    p_lo = np.zeros(b_idx.size)
    p_hi = np.zeros(b_idx.size)
    active = np.arange(b_idx.size)

    for _ in range(max_iter):
        Aa, xa, ma = A[active], x[active], masks[active]
        y = np.einsum("pij,pj->pi", Aa, xa)
        q = y / np.where(ma, xa, 1.0)
        lo = np.where(ma, q, np.inf).min(axis=1)
        hi = np.where(ma, q, -np.inf).max(axis=1)
        p_lo[active] = lo
        p_hi[active] = hi
        done = hi - lo <= rtol * hi
        keep = ~done
        if not keep.any():
            active = active[:0]
            break
        # shifting by the current lower bound breaks periodicity of imprimitive blocks
        xa = y[keep] + lo[keep, None] * xa[keep]
        xa /= xa.max(axis=1, keepdims=True)
        active = active[keep]
        x[active] = xa

    np.maximum.at(lower, b_idx, p_lo)
    np.maximum.at(upper, b_idx, p_hi)
    if active.size:
        raise PerronConvergenceError(
            f"Perron iteration did not converge to rtol={rtol} in {max_iter} steps",
            lower,
            upper,
        )
    return lower, upper


def spectral_radii(mats, rtol: float = DEFAULT_RTOL) -> np.ndarray:
    lo, hi = perron_enclosure(mats, rtol)
    return 0.5 * (lo + hi)
