"""Randomized verification of the Hadamard mean inequalities.

Each check family turns one inequality into :class:`CheckReport` records.
Set-level inequalities between limit quantities are tested through their
certified surrogate ``lower(LHS) <= upper(RHS)``; statements that are exact
at finite depth (per-word inequalities, proof steps) are asserted directly and
reported through their worst case.

Instances are a pure function of ``(seed, family, trial)`` and serialize to
JSON witnesses that replay bit-for-bit.
"""

from __future__ import annotations

import hashlib
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from typing import Sequence

import numpy as np

from . import estimators
from .constructions import (
    block_cyclic,
    block_cyclic_kth_power_blocks,
    cyclic_products,
    cyclic_word_products,
)
from .core import NORM_IDS, WeightVector, nonneg, norms, weighted_hadamard_mean
from .perron import perron_enclosure
from .setalg import OperatorSet, chain_product, check_budget, set_hadamard_mean

FAMILIES = ("thm2.1", "thm2.2", "thm3.2", "thm3.3", "cor3.4", "block-cyclic")
WITNESS_VERSION = 1
# Perron roots inside checks are resolved far below the check tolerance
PERRON_RTOL = 1e-13
BLOCK_TOL = 1e-10


@dataclass(frozen=True)
class InstanceConfig:
    dim_range: tuple[int, int] = (1, 6)
    set_size_range: tuple[int, int] = (1, 3)
    k_range: tuple[int, int] = (1, 3)
    m_range: tuple[int, int] = (1, 3)
    density: float = 1.0
    entry_scale: float = 1.0
    weight_mode: str = "exact-one"
    seed: int = 0
    trials: int = 100
    depth: int = 4
    rtol: float = 1e-9
    checks: tuple[str, ...] = FAMILIES
    # cap on mean-set words per set-level instance; set sizes shrink to fit
    word_cap: int = 2000
    samples: int = 50
    budget: int | None = None
    kind: str = "random"

    def __post_init__(self):
        for name in ("dim_range", "set_size_range", "k_range", "m_range"):
            lo, hi = getattr(self, name)
            object.__setattr__(self, name, (int(lo), int(hi)))
            if lo < 1 or hi < lo:
                raise ValueError(f"{name} must be a non-empty range of positive integers")
        if not 0 < self.density <= 1:
            raise ValueError("density must lie in (0, 1]")
        if not self.entry_scale > 0:
            raise ValueError("entry_scale must be positive")
        if self.weight_mode not in ("exact-one", "at-least-one"):
            raise ValueError(f"unknown weight mode {self.weight_mode!r}")
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.depth < 1:
            raise ValueError("depth must be >= 1")
        if not self.rtol > 0:
            raise ValueError("rtol must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        unknown = [c for c in self.checks if c not in FAMILIES]
        if unknown:
            raise ValueError(f"unknown check(s) {unknown}; valid: {', '.join(FAMILIES)}")
        if self.kind not in ("random", "identity"):
            raise ValueError(f"unknown instance kind {self.kind!r}")


@dataclass
class Instance:
    family: str
    seed: int
    trial: int
    params: dict
    weights: WeightVector | None = None
    depth: int | None = None
    grid: list[list[np.ndarray]] | None = None
    mats: list[np.ndarray] | None = None
    sets: list[OperatorSet] | None = None
    words: list[np.ndarray] | None = None

    def to_json(self) -> dict:
        def mat(M):
            return np.asarray(M).tolist()

        return {
            "format_version": WITNESS_VERSION,
            "family": self.family,
            "seed": self.seed,
            "trial": self.trial,
            "params": self.params,
            "weights": None
            if self.weights is None
            else {"weights": list(self.weights.weights), "mode": self.weights.mode},
            "depth": self.depth,
            "grid": None if self.grid is None else [[mat(M) for M in row] for row in self.grid],
            "mats": None if self.mats is None else [mat(M) for M in self.mats],
            "sets": None if self.sets is None else [[mat(M) for M in S] for S in self.sets],
            "words": None if self.words is None else [np.asarray(w).tolist() for w in self.words],
        }

    @classmethod
    def from_json(cls, d: dict) -> "Instance":
        if d.get("format_version") != WITNESS_VERSION:
            raise ValueError(f"unsupported witness format_version {d.get('format_version')!r}")
        w = d.get("weights")
        return cls(
            family=d["family"],
            seed=int(d["seed"]),
            trial=int(d["trial"]),
            params=dict(d.get("params") or {}),
            weights=None if w is None else WeightVector(tuple(w["weights"]), w["mode"]),
            depth=d.get("depth"),
            grid=None if d.get("grid") is None else [[nonneg(M) for M in r] for r in d["grid"]],
            mats=None if d.get("mats") is None else [nonneg(M) for M in d["mats"]],
            sets=None
            if d.get("sets") is None
            else [OperatorSet(tuple(S)) for S in d["sets"]],
            words=None if d.get("words") is None else [np.asarray(x, dtype=int) for x in d["words"]],
        )

    def digest(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


@dataclass
class CheckReport:
    check_id: str
    family: str
    seed: int
    trial: int
    params: dict
    lhs: float
    rhs: float
    slack: float
    passed: bool
    rtol: float
    digest: str = ""
    detail: dict = field(default_factory=dict)
    witness: dict | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def normalized_slack(lhs: float, rhs: float) -> float:
    return (rhs - lhs) / max(1.0, abs(rhs))


def _report(inst, check_id, lhs, rhs, rtol, detail=None, two_sided=False):
    lhs, rhs = float(lhs), float(rhs)
    if two_sided:
        slack = -abs(rhs - lhs) / max(1.0, abs(rhs))
    else:
        slack = normalized_slack(lhs, rhs)
    passed = slack >= -rtol
    return CheckReport(
        check_id=check_id,
        family=inst.family,
        seed=inst.seed,
        trial=inst.trial,
        params=dict(inst.params),
        lhs=lhs,
        rhs=rhs,
        slack=slack,
        passed=bool(passed),
        rtol=rtol,
        detail=detail or {},
    )


def _worst(inst, check_id, lhs, rhs, rtol, detail=None):
    """Report the entry of the paired arrays with the smallest normalized slack."""
    lhs = np.ravel(np.asarray(lhs, dtype=float))
    rhs = np.ravel(np.asarray(rhs, dtype=float))
    s = (rhs - lhs) / np.maximum(1.0, np.abs(rhs))
    i = int(np.argmin(s))
    d = {"count": int(lhs.size), "worst_index": i}
    d.update(detail or {})
    return _report(inst, check_id, lhs[i], rhs[i], rtol, d)


def _rho(mats) -> np.ndarray:
    mats = np.asarray(mats, dtype=float)
    lo, hi = perron_enclosure(mats, PERRON_RTOL)
    return 0.5 * (lo + hi)


def _norms(mats, norm_id) -> np.ndarray:
    return np.asarray(norms(np.asarray(mats, dtype=float), norm_id, PERRON_RTOL))


def _weighted_geo(values: Sequence[np.ndarray], weights) -> np.ndarray:
    out = np.power(values[0], weights[0])
    for v, a in zip(values[1:], weights[1:]):
        out = out * np.power(v, a)
    return out


# ---------------------------------------------------------------- instances


def _rng(cfg: InstanceConfig, family: str, trial: int) -> np.random.Generator:
    tag = FAMILIES.index(family)
    return np.random.default_rng(np.random.SeedSequence([cfg.seed, tag, trial]))


def _randint(rng, bounds):
    lo, hi = bounds
    return int(rng.integers(lo, hi + 1))


def random_matrix(rng, n, cfg: InstanceConfig) -> np.ndarray:
    if cfg.kind == "identity":
        return nonneg(np.eye(n))
    mask = rng.random((n, n)) < cfg.density
    vals = cfg.entry_scale * (1.0 - rng.random((n, n)))
    return nonneg(np.where(mask, vals, 0.0))


def random_weights(rng, m, mode) -> WeightVector:
    w = np.exp(rng.uniform(-1.0, 1.0, m))
    w = w / w.sum()
    if mode == "at-least-one":
        w = w * rng.uniform(1.0, 1.5)
    return WeightVector(tuple(float(a) for a in w), mode)


def _fit_sizes(sizes, depth, cap):
    sizes = list(sizes)
    while estimators.words_up_to(math.prod(sizes), depth) > cap and max(sizes) > 1:
        sizes[int(np.argmax(sizes))] -= 1
    return sizes


def random_instance(cfg: InstanceConfig, family: str = "thm2.1", trial: int = 0) -> Instance:
    """Deterministic instance for ``(cfg.seed, family, trial)``."""
    if family not in FAMILIES:
        raise ValueError(f"unknown check family {family!r}")
    rng = _rng(cfg, family, trial)
    n = _randint(rng, cfg.dim_range)
    params = {"dim": n, "density": cfg.density, "entry_scale": cfg.entry_scale, "kind": cfg.kind}
    inst = Instance(family, cfg.seed, trial, params)

    if family == "thm2.1":
        k, m = _randint(rng, cfg.k_range), _randint(rng, cfg.m_range)
        params.update(k=k, m=m)
        inst.grid = [[random_matrix(rng, n, cfg) for _ in range(m)] for _ in range(k)]
        inst.weights = random_weights(rng, m, cfg.weight_mode)
    elif family == "thm2.2":
        m = _randint(rng, cfg.m_range)
        params.update(m=m)
        inst.mats = [random_matrix(rng, n, cfg) for _ in range(m)]
        inst.weights = random_weights(rng, m, cfg.weight_mode)
    elif family == "block-cyclic":
        k = _randint(rng, cfg.k_range)
        params.update(k=k)
        inst.mats = [random_matrix(rng, n, cfg) for _ in range(k)]
    else:
        m = 2 if family == "cor3.4" else _randint(rng, cfg.m_range)
        sizes = [_randint(rng, cfg.set_size_range) for _ in range(m)]
        sizes = _fit_sizes(sizes, cfg.depth, cfg.word_cap)
        params.update(m=m, sizes=sizes)
        inst.depth = cfg.depth
        inst.sets = [
            OperatorSet(tuple(random_matrix(rng, n, cfg) for _ in range(s))) for s in sizes
        ]
        if family == "thm3.2":
            inst.weights = random_weights(rng, m, cfg.weight_mode)
        else:
            kmax = max(1, min(cfg.k_range[1], 2))
            words = []
            for _ in range(cfg.samples):
                k = int(rng.integers(1, kmax + 1))
                words.append(np.stack([rng.integers(0, s, size=(k, m)) for s in sizes], axis=2))
            inst.words = words
    return inst


# ---------------------------------------------------------------- checks


def _digest_all(inst, reports):
    dg = inst.digest()
    for r in reports:
        r.digest = dg
    return reports


def check_mixed_product_inequalities(
    grid: Sequence[Sequence[np.ndarray]], w: WeightVector, rtol: float = 1e-9, inst=None
) -> list[CheckReport]:
    """Product of row-wise Hadamard means versus the Hadamard mean of column products."""
    inst = inst or Instance("thm2.1", 0, 0, {})
    k, m = len(grid), len(grid[0])
    if any(len(row) != m for row in grid):
        raise ValueError("grid rows must all have m entries")
    if len(w) != m:
        raise ValueError(f"grid has {m} columns but {len(w)} weights")
    A = weighted_hadamard_mean(grid[0], w)
    for row in grid[1:]:
        A = A @ weighted_hadamard_mean(row, w)
    cols = []
    for j in range(m):
        P = grid[0][j]
        for i in range(1, k):
            P = P @ grid[i][j]
        cols.append(P)
    bound = weighted_hadamard_mean([nonneg(P) for P in cols], w)
    alphas = w.weights

    reports = [_worst(inst, "thm2.1/entrywise", A, bound, rtol)]
    for nid in NORM_IDS:
        lhs = _norms([A], nid)[0]
        rhs = _weighted_geo(list(_norms(cols, nid)), alphas)
        reports.append(_report(inst, f"thm2.1/norm[{nid}]", lhs, rhs, rtol))
    rho = _rho([A] + cols)
    reports.append(
        _report(inst, "thm2.1/radius", rho[0], _weighted_geo(list(rho[1:]), alphas), rtol)
    )
    return reports


def check_geometric_mean_inequalities(
    mats: Sequence[np.ndarray], w: WeightVector, rtol: float = 1e-9, inst=None
) -> list[CheckReport]:
    inst = inst or Instance("thm2.2", 0, 0, {})
    G = weighted_hadamard_mean(mats, w)
    alphas = w.weights
    reports = []
    for nid in NORM_IDS:
        nv = _norms([G] + list(mats), nid)
        reports.append(
            _report(inst, f"thm2.2/norm[{nid}]", nv[0], _weighted_geo(list(nv[1:]), alphas), rtol)
        )
    rho = _rho([G] + list(mats))
    reports.append(
        _report(inst, "thm2.2/radius", rho[0], _weighted_geo(list(rho[1:]), alphas), rtol)
    )
    return reports


def _all_words(S: OperatorSet, depth: int):
    """Every product of ``S^l``, ``l = 1..depth``, in lexicographic order."""
    base = S.stack()
    prods = base
    for l in range(1, depth + 1):
        if l > 1:
            prods = np.einsum("wij,kjl->wkil", prods, base).reshape(-1, *base.shape[1:])
        yield l, prods


def _component_indices(sizes, l):
    """Map each length-``l`` word of the mean set to the word index in every factor set."""
    S = math.prod(sizes)
    letters = np.stack(np.unravel_index(np.arange(S**l), (S,) * l), axis=1)
    combos = np.unravel_index(letters, sizes)
    return [np.ravel_multi_index(tuple(combos[t].T), (s,) * l) for t, s in enumerate(sizes)]


def check_set_mean_inequalities(
    sets: Sequence[OperatorSet],
    w: WeightVector,
    depth: int,
    rtol: float = 1e-9,
    budget: int | None = None,
    inst=None,
) -> list[CheckReport]:
    inst = inst or Instance("thm3.2", 0, 0, {})
    sizes = [len(S) for S in sets]
    mean = set_hadamard_mean(sets, w)
    check_budget(estimators.words_up_to(len(mean), depth), budget)
    alphas = w.weights

    # per-word rho(word) <= prod rho(component word)^alpha, and the norm analogue
    word_lhs = {key: [] for key in ("rho",) + NORM_IDS}
    word_rhs = {key: [] for key in ("rho",) + NORM_IDS}
    comp_gens = [_all_words(S, depth) for S in sets]
    for (l, prods), *comp in zip(_all_words(mean, depth), *comp_gens):
        comp_prods = [c[1] for c in comp]
        idx = _component_indices(sizes, l)
        for key in ("rho",) + NORM_IDS:
            f = _rho if key == "rho" else (lambda M, nid=key: _norms(M, nid))
            lv = f(prods)
            cv = [f(P)[ix] for P, ix in zip(comp_prods, idx)]
            word_lhs[key].append(lv)
            word_rhs[key].append(_weighted_geo(cv, alphas))
    reports = [
        _worst(
            inst, "thm3.2/word-radius", np.concatenate(word_lhs["rho"]), np.concatenate(word_rhs["rho"]), rtol
        )
    ]
    for nid in NORM_IDS:
        reports.append(
            _worst(
                inst,
                f"thm3.2/word-norm[{nid}]",
                np.concatenate(word_lhs[nid]),
                np.concatenate(word_rhs[nid]),
                rtol,
            )
        )

    lv_mean = estimators.level_maxima(mean, depth, NORM_IDS, budget=budget, rtol=PERRON_RTOL)
    lv_sets = [
        estimators.level_maxima(S, depth, NORM_IDS, with_rho=False, budget=budget, rtol=PERRON_RTOL)
        for S in sets
    ]
    lower, word = estimators.lower_profile(lv_mean)[-1]
    uppers = [
        min(estimators.upper_profile(lv, nid)[-1][0] for nid in NORM_IDS) for lv in lv_sets
    ]
    reports.append(
        _report(
            inst,
            "thm3.2/set-radius",
            lower,
            _weighted_geo(uppers, alphas),
            rtol,
            {"argmax_word": list(word.indices), "set_uppers": uppers},
        )
    )
    # finite-depth consequence of the joint radius inequality: level maxima of
    # the norm obey the per-word bound, hence so do their running minima of roots
    for nid in NORM_IDS:
        chain_l = estimators.upper_profile(lv_mean, nid)
        rhs_levels = _weighted_geo([lv.norm[nid] for lv in lv_sets], alphas)
        roots = [float(v) ** (1.0 / l) for l, v in enumerate(rhs_levels, start=1)]
        reports.append(
            _report(
                inst,
                f"thm3.2/level-norm[{nid}]",
                chain_l[-1][0],
                min(roots),
                rtol,
                {"lhs_chain": [c[0] for c in chain_l], "rhs_levels": roots},
            )
        )
    return reports


def _mean_word_product(sets, word_idx):
    """Product of Hadamard means ``prod_i prod_j mean_t(S_t[idx[i, j, t]])``."""
    m = len(sets)
    P = None
    for i in range(word_idx.shape[0]):
        for j in range(m):
            F = weighted_hadamard_mean(
                [sets[t][word_idx[i, j, t]] for t in range(m)], WeightVector.uniform(m)
            )
            P = F if P is None else P @ F
    return P


def check_main_theorem(
    sets: Sequence[OperatorSet],
    depth: int,
    rtol: float = 1e-9,
    words: Sequence[np.ndarray] | None = None,
    budget: int | None = None,
    inst=None,
) -> list[CheckReport]:
    inst = inst or Instance("thm3.3", 0, 0, {})
    m = len(sets)
    fam = inst.family if inst.family in ("thm3.3", "cor3.4") else "thm3.3"
    w = WeightVector.uniform(m)
    mean = set_hadamard_mean(sets, w)
    chains = [chain_product([sets[(s + j) % m] for j in range(m)]) for s in range(m)]

    lv_mean = estimators.level_maxima(mean, depth, NORM_IDS, budget=budget, rtol=PERRON_RTOL)
    lv_chain = estimators.level_maxima(
        chains[0], depth, NORM_IDS, with_rho=False, budget=budget, rtol=PERRON_RTOL
    )
    lower, word = estimators.lower_profile(lv_mean)[-1]
    upper = min(estimators.upper_profile(lv_chain, nid)[-1][0] for nid in NORM_IDS)
    reports = [
        _report(
            inst,
            f"{fam}/set-radius",
            lower,
            upper ** (1.0 / m),
            rtol,
            {"argmax_word": list(word.indices), "chain_upper": upper},
        )
    ]

    kmax = depth // m
    if kmax >= 1:
        lv_cyc = [
            estimators.level_maxima(
                C, kmax, NORM_IDS, with_rho=False, budget=budget, rtol=PERRON_RTOL
            )
            for C in chains
        ]
        for nid in NORM_IDS:
            lhs = np.array([lv_mean.norm[nid][m * k - 1] ** (1.0 / (m * k)) for k in range(1, kmax + 1)])
            rhs = np.array(
                [
                    _weighted_geo([lv.norm[nid][k - 1] for lv in lv_cyc], [1.0 / m] * m)
                    ** (1.0 / (m * k))
                    for k in range(1, kmax + 1)
                ]
            )
            fekete = [c[0] for c in estimators.upper_profile(lv_mean, nid)]
            monotone = all(b <= a for a, b in zip(fekete, fekete[1:]))
            rep = _worst(inst, f"{fam}/level-norm[{nid}]", lhs, rhs, rtol, {"mean_upper_chain": fekete})
            rep.passed = rep.passed and monotone
            reports.append(rep)

    if words:
        As, Bs = [], []
        for idx in words:
            idx = np.asarray(idx, dtype=int)
            As.append(_mean_word_product(sets, idx))
            Bs.append(cyclic_word_products(sets, idx))
        Bstack = np.asarray([B for bl in Bs for B in bl])
        rho = _rho(np.concatenate([np.asarray(As), Bstack]))
        rho_A = rho[: len(As)]
        rho_B = rho[len(As) :].reshape(len(As), m)
        rhs = np.prod(np.power(rho_B, 1.0 / m), axis=1)
        reports.append(_worst(inst, f"{fam}/decomp-rho", rho_A, rhs, rtol))
        for nid in NORM_IDS:
            nA = _norms(As, nid)
            nB = _norms(Bstack, nid).reshape(len(As), m)
            reports.append(
                _worst(
                    inst,
                    f"{fam}/decomp-norm[{nid}]",
                    nA,
                    np.prod(np.power(nB, 1.0 / m), axis=1),
                    rtol,
                )
            )
        maj = [weighted_hadamard_mean(bl, w) for bl in Bs]
        reports.append(
            _worst(inst, f"{fam}/decomp-entrywise", np.asarray(As), np.asarray(maj), rtol)
        )
    return reports


def check_block_cyclic_identity(mats: Sequence[np.ndarray], rtol: float = 1e-8, inst=None):
    inst = inst or Instance("block-cyclic", 0, 0, {})
    k = len(mats)
    T = block_cyclic(mats)
    direct = cyclic_products(mats)
    rho = _rho_mixed([T, direct[0]])
    report = _report(inst, "block-cyclic/radius", rho[0] ** k, rho[1], rtol, two_sided=True)
    blocks = block_cyclic_kth_power_blocks(mats)
    err = max(
        float(np.max(np.abs(B - D) / np.maximum(1.0, np.abs(D)))) for B, D in zip(blocks, direct)
    )
    blk = _report(inst, "block-cyclic/blocks", err, 0.0, BLOCK_TOL, {"max_rel_error": err}, True)
    return [report, blk]


def _rho_mixed(mats):
    # matrices of differing sizes cannot share a stack
    return np.array([_rho([M])[0] for M in mats])


def run_checks(inst: Instance, rtol: float, budget: int | None = None) -> list[CheckReport]:
    fam = inst.family
    if fam == "thm2.1":
        reps = check_mixed_product_inequalities(inst.grid, inst.weights, rtol, inst)
    elif fam == "thm2.2":
        reps = check_geometric_mean_inequalities(inst.mats, inst.weights, rtol, inst)
    elif fam == "block-cyclic":
        reps = check_block_cyclic_identity(inst.mats, rtol, inst)
    elif fam == "thm3.2":
        reps = check_set_mean_inequalities(inst.sets, inst.weights, inst.depth, rtol, budget, inst)
    elif fam in ("thm3.3", "cor3.4"):
        reps = check_main_theorem(inst.sets, inst.depth, rtol, inst.words, budget, inst)
    else:
        raise ValueError(f"unknown check family {fam!r}")
    _digest_all(inst, reps)
    for r in reps:
        r.detail.setdefault("finite_sets", True)
        if not r.passed:
            r.witness = dict(inst.to_json(), rtol=rtol)
    return reps


def replay(witness: dict, rtol: float | None = None) -> list[CheckReport]:
    """Re-run the checks recorded in a witness file."""
    inst = Instance.from_json(witness)
    return run_checks(inst, witness.get("rtol", 1e-9) if rtol is None else rtol)


# ---------------------------------------------------------------- suite


@dataclass
class SuiteResult:
    reports: list[CheckReport]
    summary: dict

    @property
    def failures(self) -> list[CheckReport]:
        return [r for r in self.reports if not r.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 1


def summarize(reports: Sequence[CheckReport]) -> dict:
    out: dict[str, dict] = {}
    for r in reports:
        s = out.setdefault(r.check_id, {"passed": 0, "failed": 0, "min_slack": math.inf})
        s["passed" if r.passed else "failed"] += 1
        s["min_slack"] = min(s["min_slack"], r.slack)
    return dict(sorted(out.items()))


def _run_trial(cfg: InstanceConfig, trial: int) -> list[CheckReport]:
    reps = []
    for fam in cfg.checks:
        reps.extend(run_checks(random_instance(cfg, fam, trial), cfg.rtol, cfg.budget))
    return reps


def run_suite(cfg: InstanceConfig, threads: int = 1) -> SuiteResult:
    trials = range(cfg.trials)
    if threads > 1:
        with ThreadPoolExecutor(threads) as pool:
            per_trial = list(pool.map(lambda t: _run_trial(cfg, t), trials))
    else:
        per_trial = [_run_trial(cfg, t) for t in trials]
    reports = [r for reps in per_trial for r in reps]
    return SuiteResult(reports, summarize(reports))


def with_checks(cfg: InstanceConfig, checks: Sequence[str]) -> InstanceConfig:
    return replace(cfg, checks=tuple(checks))
