import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import settings, strategies as st
from hypothesis.extra import numpy as hnp

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

FIXTURES = Path(__file__).parent / "fixtures"

entries = st.one_of(
    st.just(0.0),
    st.floats(min_value=1e-3, max_value=10.0, allow_nan=False, allow_infinity=False),
)


def nonneg_matrices(n=None, max_n=5):
    dim = st.just(n) if n is not None else st.integers(1, max_n)
    return dim.flatmap(lambda k: hnp.arrays(np.float64, (k, k), elements=entries))


@st.composite
def square_pairs(draw, max_n=5):
    n = draw(st.integers(1, max_n))
    A = draw(hnp.arrays(np.float64, (n, n), elements=entries))
    B = draw(hnp.arrays(np.float64, (n, n), elements=entries))
    return A, B


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


# one summary line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
