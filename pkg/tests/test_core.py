import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import rho_2x2, rho_eig, spectral_norm_grid
from spectral_bounds.core import (
    NORM_IDS,
    WeightVector,
    entrywise_leq,
    hadamard_power,
    hadamard_product,
    matmul,
    nonneg,
    operator_norm,
    perron_bracket,
    spectral_radius,
    weighted_hadamard_mean,
)
from spectral_bounds.perron import PerronConvergenceError, perron_enclosure

from conftest import nonneg_matrices, square_pairs


A2 = nonneg([[1, 2], [3, 4]])


def test_nonneg_rejects_invalid():
    with pytest.raises(ValueError):
        nonneg([[1, -1], [0, 0]])
    with pytest.raises(ValueError):
        nonneg([[1, np.nan]])
    with pytest.raises(ValueError):
        nonneg([1, 2, 3], rows=2, cols=2)
    assert nonneg([1, 2, 3, 4], rows=2, cols=2).tolist() == [[1, 2], [3, 4]]


def test_matrices_are_read_only():
    with pytest.raises(ValueError):
        nonneg([[1.0]])[0, 0] = 2.0


@pytest.mark.parametrize(
    "weights, mode",
    [((0.5, 0.6), "exact-one"), ((0.2, 0.3), "at-least-one"), ((1.0, 0.0), "exact-one"), ((1.0,), "other")],
)
def test_weight_vector_validation(weights, mode):
    with pytest.raises(ValueError):
        WeightVector(weights, mode)


def test_weight_vector_modes():
    assert WeightVector((0.5, 0.5)).total == 1.0
    assert WeightVector((0.5, 0.4, 0.3), "at-least-one").total == pytest.approx(1.2)
    assert WeightVector.uniform(3).weights == (1 / 3,) * 3


def test_hadamard_product_examples():
    out = hadamard_product(A2, nonneg([[5, 6], [7, 8]]))
    assert out.tolist() == [[5, 12], [21, 32]]
    assert np.array_equal(hadamard_product(A2, np.ones((2, 2))), A2)
    assert not hadamard_product(A2, np.zeros((2, 2))).any()
    with pytest.raises(ValueError):
        hadamard_product(A2, np.ones((3, 3)))


def test_hadamard_power_examples():
    assert hadamard_power(nonneg([[4, 9], [0, 1]]), 0.5).tolist() == [[2, 3], [0, 1]]
    assert np.array_equal(hadamard_power(A2, 1.0), A2)
    assert not hadamard_power(np.zeros((3, 3)), 0.3).any()
    for bad in (0.0, -1.0):
        with pytest.raises(ValueError):
            hadamard_power(A2, bad)


def test_weighted_mean_examples():
    w3 = WeightVector.uniform(3)
    assert np.allclose(weighted_hadamard_mean([A2, A2, A2], w3), A2, rtol=1e-14)
    half = WeightVector((0.5, 0.5))
    assert weighted_hadamard_mean([nonneg([[4]]), nonneg([[16]])], half).tolist() == [[8]]
    out = weighted_hadamard_mean([nonneg([[1, 4], [9, 0]]), nonneg([[4, 1], [1, 16]])], half)
    assert out.tolist() == [[2, 2], [3, 0]]
    with pytest.raises(ValueError):
        weighted_hadamard_mean([A2], half)
    with pytest.raises(ValueError):
        weighted_hadamard_mean([A2, np.ones((3, 3))], half)


def test_matmul_examples():
    assert np.array_equal(matmul(np.eye(2), A2), A2)
    assert matmul(nonneg([[0, 1], [0, 0]]), nonneg([[0, 0], [1, 0]])).tolist() == [[1, 0], [0, 0]]
    assert not matmul(A2, np.zeros((2, 2))).any()
    with pytest.raises(ValueError):
        matmul(A2, np.ones((3, 2)))


def test_operator_norm_examples():
    assert operator_norm(A2, "row-sum") == 7
    assert operator_norm(A2, "col-sum") == 6
    for nid in NORM_IDS:
        assert operator_norm(np.eye(4), nid) == pytest.approx(1.0, rel=1e-12)
    # brute-force maximization over directions gives 2
    expected = spectral_norm_grid([[0, 2], [0, 0]])
    assert expected == pytest.approx(2.0, abs=1e-9)
    assert operator_norm(nonneg([[0, 2], [0, 0]]), "spectral") == pytest.approx(2.0, rel=1e-12)
    with pytest.raises(ValueError):
        operator_norm(A2, "frobenius")


def test_spectral_radius_examples():
    for n in (1, 3, 7):
        assert spectral_radius(np.eye(n)) == 1.0
    assert spectral_radius(nonneg([[0, 1], [0, 0]])) == 0.0
    assert spectral_radius(A2) == pytest.approx((5 + math.sqrt(33)) / 2, rel=1e-9)
    with pytest.raises(ValueError):
        spectral_radius(np.ones((2, 3)))


def test_bracket_contains_value():
    lo, hi = perron_bracket(A2, 1e-12)
    exact = rho_2x2(A2)
    assert lo <= exact * (1 + 1e-15) and exact <= hi * (1 + 1e-15)
    assert hi - lo <= 1e-12 * hi


@pytest.mark.parametrize(
    "M",
    [
        [[0, 1], [1, 0]],  # period 2
        [[0, 1, 0], [0, 0, 1], [2, 0, 0]],  # period 3
        [[2, 1], [0, 1]],  # reducible
        [[1, 1], [0, 1]],  # Jordan block
        [[0, 1, 0], [0, 0, 1], [0, 0, 0]],  # nilpotent
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 3], [0, 0, 1, 0]],
    ],
)
def test_spectral_radius_hard_structures(M):
    assert spectral_radius(nonneg(M), 1e-12) == pytest.approx(rho_eig(M), rel=1e-11, abs=1e-300)


def test_convergence_error_carries_enclosure():
    with pytest.raises(PerronConvergenceError) as info:
        perron_enclosure(np.array([[[1.0, 1.0], [1.0, 2.0]]]), rtol=1e-300, max_iter=3)
    assert info.value.lower[0] <= info.value.upper[0]


def test_entrywise_leq_examples():
    assert entrywise_leq(A2, A2, 0.0)
    assert entrywise_leq(np.zeros((2, 2)), A2, 0.0)
    assert not entrywise_leq(nonneg([[2]]), nonneg([[1]]), 0.0)
    assert entrywise_leq(nonneg([[1 + 1e-13]]), nonneg([[1]]), 1e-12)


def test_spectral_radius_matches_closed_form_2x2(rng):
    for _ in range(200):
        M = rng.random((2, 2)) * 10
        assert spectral_radius(M) == pytest.approx(rho_2x2(M), rel=1e-9)


@given(square_pairs())
def test_hadamard_product_commutes(pair):
    A, B = pair
    assert np.array_equal(hadamard_product(A, B), hadamard_product(B, A))


@given(square_pairs(), st.floats(0.1, 3.0), st.floats(0.1, 3.0))
def test_hadamard_power_composes(pair, a, b):
    A, _ = pair
    lhs = hadamard_power(hadamard_power(A, a), b)
    rhs = hadamard_power(A, a * b)
    assert np.allclose(lhs, rhs, rtol=1e-12, atol=0)


@given(square_pairs(), st.floats(0.05, 0.95))
def test_am_gm_domination(pair, a):
    A, B = pair
    w = WeightVector((a, 1 - a))
    mean = weighted_hadamard_mean([A, B], w)
    assert entrywise_leq(mean, a * A + (1 - a) * B, 1e-12)


@given(nonneg_matrices())
def test_rho_below_every_norm(A):
    r = spectral_radius(A)
    for nid in NORM_IDS:
        assert r <= operator_norm(A, nid) * (1 + 1e-9) + 1e-300


@given(nonneg_matrices(), st.floats(0.0, 100.0))
def test_homogeneity(A, c):
    r, cr = spectral_radius(A, 1e-13), spectral_radius(c * A, 1e-13)
    assert cr == pytest.approx(c * r, rel=1e-12, abs=1e-300)
    for nid in ("row-sum", "col-sum"):
        assert operator_norm(c * A, nid) == pytest.approx(c * operator_norm(A, nid), rel=1e-12)
    s = operator_norm(A, "spectral", 1e-13)
    assert operator_norm(c * A, "spectral", 1e-13) == pytest.approx(c * s, rel=1e-12, abs=1e-300)


@given(square_pairs())
def test_rho_ab_equals_rho_ba(pair):
    A, B = pair
    ab, ba = spectral_radius(A @ B), spectral_radius(B @ A)
    assert ab == pytest.approx(ba, rel=1e-9, abs=1e-12 * max(1.0, ab))


@given(nonneg_matrices(max_n=6))
def test_rho_agrees_with_lapack(A):
    assert spectral_radius(A, 1e-12) == pytest.approx(rho_eig(A), rel=1e-8, abs=1e-8)


@pytest.mark.parametrize("scale", [1e-200, 1e-150, 1.0, 1e150, 1e200])
def test_spectral_norm_survives_extreme_scales(scale):
    A = np.array([[3.0, 1.0], [0.0, 2.0]])
    ref = np.linalg.norm(A, 2)
    assert operator_norm(scale * A, "spectral", 1e-13) == pytest.approx(scale * ref, rel=1e-12)
