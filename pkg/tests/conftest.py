from __future__ import annotations

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from hermhull import _kernels
from hermhull.gf import tower_for_q

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session", autouse=True)
def warm_jit() -> None:
    """Compile the numba kernels once so timing-sensitive tests see steady state."""
    for q in (2, 3):
        F = tower_for_q(q)
        G = np.array([[1, 0, 1], [0, 1, 1]])
        _kernels.support_min_weight(F, _kernels.scaled_rows(F, G), 2)
        _kernels.dependent_set_exists(F, G.T, 2)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


# One line per acceptance criterion, filled in by tests/test_acceptance.py.
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter) -> None:
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
