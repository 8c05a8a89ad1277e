"""Certified finite-depth bounds on the generalized and joint spectral radius
of finite sets of non-negative matrices, and randomized verification of
Hadamard geometric mean inequalities."""

__version__ = "0.1.0"

from .core import (
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
from .estimators import SpectralEstimate, estimate, gsr_lower, jsr_upper, rescale
from .setalg import (
    BudgetExceeded,
    OperatorSet,
    ProductWord,
    set_hadamard_mean,
    set_power,
    set_product,
    word_matrix,
)
