import numpy as np
import pytest
from hypothesis import strategies as st

from cloning import qmath


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


angles = st.tuples(
    st.floats(0, np.pi, allow_nan=False), st.floats(0, 2 * np.pi, allow_nan=False)
)


def state_from_angles(t, p):
    return np.array([np.cos(t / 2), np.exp(1j * p) * np.sin(t / 2)])


def haar_states(n, seed=0):
    rng = np.random.default_rng(seed)
    return [qmath.random_pure_qubit(rng) for _ in range(n)]
