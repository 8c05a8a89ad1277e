"""Acceptance criteria 1-9 at their stated tolerances and time limits.

Every criterion records one PASS/FAIL line, printed in the pytest terminal
summary, before its assertions run.
"""

import time
from dataclasses import replace

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from oracles import rho_2x2
from spectral_bounds.constructions import truncated_shift_family
from spectral_bounds.core import NORM_IDS, spectral_radius
from spectral_bounds.estimators import estimate, jsr_upper, profile, rescale
from spectral_bounds.setalg import OperatorSet
from spectral_bounds.verifier import FAMILIES, InstanceConfig, run_suite

pytestmark = pytest.mark.acceptance

TOL = 1e-9


def record(number, title, ok, elapsed, limit, detail):
    within = elapsed <= limit
    status = "PASS" if ok and within else "FAIL"
    line = (
        f"[{status}] criterion {number}: {title} | {detail} | "
        f"{elapsed:.1f}s (limit {limit:.0f}s)"
    )
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok and within


def suite(configs):
    reports = []
    for cfg in configs:
        reports.extend(run_suite(cfg).reports)
    return reports


def worst(reports, prefix=""):
    picked = [r for r in reports if r.check_id.startswith(prefix)]
    return min(r.slack for r in picked), picked


def test_criterion_1_mixed_products():
    t = time.perf_counter()
    base = InstanceConfig(checks=("thm2.1",), k_range=(1, 3), m_range=(1, 3), dim_range=(1, 6),
                          trials=500, seed=1)
    reports = suite([replace(base, density=0.3), replace(base, density=1.0)])
    elapsed = time.perf_counter() - t
    instances = len({(r.params["density"], r.trial) for r in reports})
    ids = {r.check_id for r in reports}
    low, _ = worst(reports)
    ok = instances == 1000 and low >= -TOL and len(ids) == 5 and all(r.passed for r in reports)
    assert record(1, "mixed-product inequalities", ok, elapsed, 30,
                  f"{instances} instances, {len(reports)} reports, min slack {low:+.2e}")


def test_criterion_2_geometric_means():
    t = time.perf_counter()
    base = InstanceConfig(checks=("thm2.2",), m_range=(1, 4), dim_range=(1, 6), seed=2)
    configs = [
        replace(base, density=0.3, trials=350),
        replace(base, density=1.0, trials=350),
        replace(base, density=0.3, trials=150, weight_mode="at-least-one", seed=3),
        replace(base, density=1.0, trials=150, weight_mode="at-least-one", seed=3),
    ]
    reports = suite(configs)
    elapsed = time.perf_counter() - t
    instances = len({(r.params["density"], r.seed, r.trial) for r in reports})
    low, _ = worst(reports)
    ok = instances == 1000 and low >= -TOL and all(r.passed for r in reports)
    assert record(2, "weighted geometric-mean inequalities", ok, elapsed, 20,
                  f"{instances} instances (300 with weight sum in [1, 1.5]), min slack {low:+.2e}")


def test_criterion_3_block_cyclic():
    t = time.perf_counter()
    base = InstanceConfig(checks=("block-cyclic",), k_range=(1, 4), dim_range=(1, 5),
                          trials=250, seed=4, rtol=1e-8)
    reports = suite([replace(base, density=0.3), replace(base, density=1.0)])
    elapsed = time.perf_counter() - t
    rho_low, rho = worst(reports, "block-cyclic/radius")
    blocks = [r for r in reports if r.check_id == "block-cyclic/blocks"]
    block_err = max(r.lhs for r in blocks)
    ok = len(rho) == 500 and rho_low >= -1e-8 and block_err <= 1e-10
    assert record(3, "block-cyclic radius and block identity", ok, elapsed, 20,
                  f"{len(rho)} instances, worst radius gap {-rho_low:.2e}, "
                  f"worst block error {block_err:.2e}")


def test_criterion_4_per_word_set_means():
    t = time.perf_counter()
    cfg = InstanceConfig(checks=("thm3.2",), m_range=(2, 3), set_size_range=(1, 3),
                         dim_range=(1, 4), depth=4, trials=200, seed=5, word_cap=10_000)
    reports = suite([cfg])
    elapsed = time.perf_counter() - t
    low, word_checks = worst(reports, "thm3.2/word-")
    per_word = [r for r in word_checks if r.check_id == "thm3.2/word-radius"]
    words = sum(r.detail["count"] for r in per_word)
    ok = len(per_word) == 200 and low >= -TOL and all(r.passed for r in reports)
    assert record(4, "per-word set-mean inequality", ok, elapsed, 60,
                  f"{len(per_word)} instances, {words} words, min slack {low:+.2e}")


def test_criterion_5_set_products():
    t = time.perf_counter()
    base = InstanceConfig(m_range=(2, 3), set_size_range=(1, 3), dim_range=(1, 4), depth=6,
                          trials=100, seed=6, word_cap=20_000, samples=50, k_range=(1, 2))
    reports = suite([replace(base, checks=("thm3.3",)), replace(base, checks=("cor3.4",))])
    elapsed = time.perf_counter() - t
    set_radius = [r for r in reports if r.check_id.endswith("/set-radius")]
    decomp = [r for r in reports if "/decomp-" in r.check_id]
    sampled = min(r.detail["count"] for r in decomp if r.check_id.endswith("decomp-rho"))
    low = min(r.slack for r in set_radius + decomp)
    ok = (
        len(set_radius) == 200
        and sampled >= 50
        and low >= -TOL
        and all(r.passed for r in reports)
    )
    assert record(5, "set-level bracket and proof decomposition", ok, elapsed, 120,
                  f"{len(set_radius)} instances, >= {sampled} sampled words each, min slack {low:+.2e}")


def test_criterion_6_shift_gap():
    t = time.perf_counter()
    est = estimate(truncated_shift_family(8, 7), 7, "row-sum")
    elapsed = time.perf_counter() - t
    ok = est.lower == 0.0 and est.upper == 1.0
    assert record(6, "truncated shift bracket", ok, elapsed, 5,
                  f"bracket [{est.lower!r}, {est.upper!r}] at depth 7")


def test_criterion_7_scalar_exactness():
    t = time.perf_counter()
    cfg = InstanceConfig(dim_range=(1, 1), trials=20, seed=7, depth=4, samples=20,
                         checks=FAMILIES)
    weighted = replace(cfg, weight_mode="at-least-one", checks=("thm2.1", "thm2.2", "thm3.2"))
    reports = suite([cfg, replace(cfg, density=0.5), weighted])
    elapsed = time.perf_counter() - t
    worst_abs = max(abs(r.slack) for r in reports)
    families = {r.family for r in reports}
    ok = worst_abs <= 1e-12 and families == set(FAMILIES)
    assert record(7, "scalar exactness", ok, elapsed, 5,
                  f"{len(reports)} reports over {len(families)} families, max |slack| {worst_abs:.1e}")


def test_criterion_8_estimator_contracts():
    t = time.perf_counter()
    rng = np.random.default_rng(8)
    problems = []
    for i in range(200):
        size, n, depth = int(rng.integers(1, 4)), int(rng.integers(1, 5)), int(rng.integers(1, 6))
        density = (0.4, 1.0)[i % 2]
        S = OperatorSet(tuple(rng.random((n, n)) * (rng.random((n, n)) < density)
                              for _ in range(size)))
        c = float(np.exp(rng.uniform(-3, 3)))
        for nid in NORM_IDS:
            prof = profile(S, depth, nid)
            lows = [e.lower for e in prof]
            ups = [e.upper for e in prof]
            if lows != sorted(lows) or ups != sorted(ups, reverse=True):
                problems.append((i, nid, "monotone"))
            if max(lows) > min(ups) + TOL * max(1.0, min(ups)):
                problems.append((i, nid, "bracket"))
            scaled = estimate(rescale(S, c), depth, nid)
            for got, ref in ((scaled.lower, c * prof[-1].lower), (scaled.upper, c * prof[-1].upper)):
                if abs(got - ref) > 1e-12 * abs(ref):
                    problems.append((i, nid, "homogeneity"))
    grng = np.random.default_rng(0)
    gelfand_worst, drawn = 0.0, 0
    while drawn < 50:
        A = grng.random((4, 4))
        r = spectral_radius(A, 1e-13)
        if r < 0.1:
            continue
        drawn += 1
        up = jsr_upper(OperatorSet((A,)), 40, "spectral")
        gelfand_worst = max(gelfand_worst, abs(up - r) / r)
    elapsed = time.perf_counter() - t
    ok = not problems and gelfand_worst <= 1e-2
    assert record(8, "estimator contracts", ok, elapsed, 60,
                  f"200 sets x 3 norms, {len(problems)} violations, "
                  f"Gelfand depth-40 worst rel gap {gelfand_worst:.2e} (spectral norm)"), problems[:5]


def test_criterion_9_perron_oracles():
    t = time.perf_counter()
    rng = np.random.default_rng(9)
    worst_2x2 = 0.0
    for _ in range(1000):
        M = rng.random((2, 2)) * 10.0 ** rng.uniform(-3, 3)
        ref = rho_2x2(M)
        worst_2x2 = max(worst_2x2, abs(spectral_radius(M) - ref) / ref)
    worst_tri = 0.0
    for _ in range(100):
        n = int(rng.integers(2, 7))
        U = np.triu(rng.random((n, n)))
        ref = float(np.diag(U).max())
        worst_tri = max(worst_tri, abs(spectral_radius(U) - ref) / ref)
    elapsed = time.perf_counter() - t
    ok = worst_2x2 <= 1e-9 and worst_tri <= 1e-9
    assert record(9, "Perron root against closed forms", ok, elapsed, 5,
                  f"2x2 worst rel err {worst_2x2:.1e}, triangular worst rel err {worst_tri:.1e}")
