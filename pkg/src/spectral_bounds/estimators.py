"""Finite-depth brackets for the generalized and joint spectral radius.

For a finite set ``S`` and depth ``d``::

    lower = max_{l <= d} max_{A in S^l} rho(A) ** (1/l)   <= rho(S)
    upper = min_{l <= d} max_{A in S^l} ||A|| ** (1/l)    >= rho_hat(S)

The lower bound is valid because the generalized spectral radius is a
supremum over all lengths. The upper bound is valid because the level maxima
of the norm are submultiplicative, so the limit defining the joint spectral
radius equals the infimum over lengths.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .core import NORM_IDS, spectral_norm_bracket
from .perron import DEFAULT_RTOL, perron_enclosure
from .setalg import OperatorSet, ProductWord, check_budget

BRACKET_TOL = 1e-9
_CHUNK = 50_000


@dataclass(frozen=True)
class SpectralEstimate:
    lower: float
    upper: float
    depth_lower: int
    depth_upper: int
    norm_id: str
    argmax_word: ProductWord
    upper_length: int = 1

    def to_dict(self) -> dict:
        return {
            "lower": self.lower,
            "upper": self.upper,
            "depth_lower": self.depth_lower,
            "depth_upper": self.depth_upper,
            "norm": self.norm_id,
            "argmax_word": list(self.argmax_word.indices),
            "upper_length": self.upper_length,
        }


@dataclass
class _Level:
    length: int
    words: np.ndarray  # (N, length) member indices, lexicographic
    products: np.ndarray  # (N, n, n), scaled by scale**length; zero products dropped


def words_up_to(size: int, depth: int) -> int:
    return sum(size**l for l in range(1, depth + 1))


def _pow2_scale(Sigma: OperatorSet) -> float:
    # a power of two keeps the rescaling exact in binary floating point
    bound = float(Sigma.stack().sum(axis=2).max())
    if bound == 0.0:
        return 1.0
    return math.ldexp(1.0, -math.ceil(math.log2(bound)))


def _levels(Sigma: OperatorSet, depth: int, scale: float) -> Iterator[_Level]:
    """Level-by-level lexicographic enumeration, skipping words with a zero prefix.

    A zero prefix forces a zero product, which contributes 0 to every maximum
    below, so dropping it is exact rather than a heuristic prune.
    """
    S = Sigma.stack() * scale
    k = len(Sigma)
    words = np.arange(k)[:, None]
    prods = S
    for length in range(1, depth + 1):
        if length > 1:
            prods = np.einsum("wij,kjl->wkil", prods, S).reshape(len(prods) * k, *S.shape[1:])
            words = np.concatenate(
                [np.repeat(words, k, axis=0), np.tile(np.arange(k), len(words))[:, None]], axis=1
            )
        nz = prods.any(axis=(1, 2))
        if not nz.all():
            prods, words = prods[nz], words[nz]
        yield _Level(length, words, prods)


def _chunked_enclosure(mats, rtol):
    lo = np.empty(len(mats))
    hi = np.empty(len(mats))
    for s in range(0, len(mats), _CHUNK):
        lo[s : s + _CHUNK], hi[s : s + _CHUNK] = perron_enclosure(mats[s : s + _CHUNK], rtol)
    return lo, hi


def _upper_norms(prods, norm_id, rtol):
    if norm_id == "row-sum":
        return prods.sum(axis=2).max(axis=1)
    if norm_id == "col-sum":
        return prods.sum(axis=1).max(axis=1)
    if norm_id == "spectral":
        out = np.empty(len(prods))
        for s in range(0, len(prods), _CHUNK):
            out[s : s + _CHUNK] = spectral_norm_bracket(prods[s : s + _CHUNK], rtol)[1]
        return out
    raise ValueError(f"unknown norm {norm_id!r}; expected one of {NORM_IDS}")


@dataclass(frozen=True)
class LevelMaxima:
    """Per-length maxima over ``S^l`` for ``l = 1..depth`` (unrooted, unscaled)."""

    rho: np.ndarray | None
    rho_words: list[ProductWord] | None
    norm: dict[str, np.ndarray]


def level_maxima(
    Sigma: OperatorSet,
    depth: int,
    norm_id: str | Sequence[str] | None = "row-sum",
    with_rho: bool = True,
    budget: int | None = None,
    rtol: float = DEFAULT_RTOL,
) -> LevelMaxima:
    """Maximum certified-lower Perron root and maximum norm(s) at each word length."""
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if norm_id is None:
        norm_ids = ()
    elif isinstance(norm_id, str):
        norm_ids = (norm_id,)
    else:
        norm_ids = tuple(norm_id)
    for nid in norm_ids:
        if nid not in NORM_IDS:
            raise ValueError(f"unknown norm {nid!r}; expected one of {NORM_IDS}")
    check_budget(words_up_to(len(Sigma), depth), budget)
    scale = _pow2_scale(Sigma)
    rho = np.zeros(depth) if with_rho else None
    rho_words = [] if with_rho else None
    nrm = {nid: np.zeros(depth) for nid in norm_ids}
    for lev in _levels(Sigma, depth, scale):
        l = lev.length
        undo = scale**l
        if with_rho:
            word = ProductWord((0,) * l)
            if len(lev.products):
                lo, _ = _chunked_enclosure(lev.products, rtol)
                i = int(np.argmax(lo))
                rho[l - 1] = lo[i] / undo
                if lo[i] > 0:
                    word = ProductWord(lev.words[i])
            rho_words.append(word)
        if len(lev.products):
            for nid in norm_ids:
                nrm[nid][l - 1] = _upper_norms(lev.products, nid, rtol).max() / undo
    return LevelMaxima(rho, rho_words, nrm)


def _root(value: float, l: int) -> float:
    value = float(value)
    return value if l == 1 else value ** (1.0 / l)


def lower_profile(levels: LevelMaxima) -> list[tuple[float, ProductWord]]:
    """Running max of ``rho ** (1/l)``; first word wins ties."""
    best, word = -1.0, None
    out = []
    for l, (r, w) in enumerate(zip(levels.rho, levels.rho_words), start=1):
        v = _root(r, l)
        if v > best:
            best, word = v, w
        out.append((best, word))
    return out


def upper_profile(levels: LevelMaxima, norm_id: str | None = None) -> list[tuple[float, int]]:
    """Running min of ``||.|| ** (1/l)`` with the length attaining it."""
    if norm_id is None:
        (norm_id,) = levels.norm
    best, at = math.inf, 1
    out = []
    for l, v in enumerate(levels.norm[norm_id], start=1):
        v = _root(v, l)
        if v < best:
            best, at = v, l
        out.append((best, at))
    return out


def gsr_lower(
    Sigma: OperatorSet, depth: int, budget: int | None = None, rtol: float = DEFAULT_RTOL
) -> tuple[float, ProductWord]:
    lv = level_maxima(Sigma, depth, norm_id=None, budget=budget, rtol=rtol)
    return lower_profile(lv)[-1]


def jsr_upper(
    Sigma: OperatorSet,
    depth: int,
    norm_id: str = "row-sum",
    budget: int | None = None,
    rtol: float = DEFAULT_RTOL,
) -> float:
    lv = level_maxima(Sigma, depth, norm_id=norm_id, with_rho=False, budget=budget, rtol=rtol)
    return upper_profile(lv)[-1][0]


def _check_bracket(lower, upper):
    if lower > upper + BRACKET_TOL * max(1.0, upper):
        raise RuntimeError(f"bracket inverted: lower {lower!r} > upper {upper!r}")


def profile(
    Sigma: OperatorSet,
    depth: int,
    norm_id: str = "row-sum",
    budget: int | None = None,
    rtol: float = DEFAULT_RTOL,
) -> list[SpectralEstimate]:
    """Estimates at every depth ``1..depth`` from a single enumeration."""
    lv = level_maxima(Sigma, depth, norm_id=norm_id, budget=budget, rtol=rtol)
    out = []
    for d, ((lo, word), (up, at)) in enumerate(zip(lower_profile(lv), upper_profile(lv)), 1):
        _check_bracket(lo, up)
        out.append(SpectralEstimate(lo, up, d, d, norm_id, word, at))
    return out


def estimate(
    Sigma: OperatorSet,
    depth: int,
    norm_id: str = "row-sum",
    budget: int | None = None,
    rtol: float = DEFAULT_RTOL,
) -> SpectralEstimate:
    return profile(Sigma, depth, norm_id, budget, rtol)[-1]


def rescale(Sigma: OperatorSet, c: float) -> OperatorSet:
    if not c > 0:
        raise ValueError(f"rescale factor must be positive, got {c!r}")
    return OperatorSet(tuple(c * M for M in Sigma), Sigma.label)
