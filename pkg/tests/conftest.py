import numpy as np
import pytest

from ucgl.stokes import derive_root_sets


@pytest.fixture(scope="session")
def roots():
    """Derived root sets for ranks 1..4, shared across the session."""
    return {n: derive_root_sets(n) for n in range(1, 5)}


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)


def rand_s(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def rand_palindromic_s(rng, n):
    s = np.zeros(n, dtype=complex)
    half = rng.standard_normal((n + 1) // 2)
    for i in range((n + 1) // 2):
        s[i] = half[i]
        s[n - 1 - i] = half[i]
    return s
