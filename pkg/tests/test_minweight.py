from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermhull import _kernels
from hermhull.errors import BudgetExceeded
from hermhull.gf import tower_for_q
from hermhull.la import kernel_basis
from hermhull.minweight import (
    brute_force_min_weight,
    certify_at_least,
    information_sets,
    min_weight_certificate,
)

from .helpers import random_matrix

EXACT = ("exhaustive", "information-set", "dual-columns")


@st.composite
def small_codes(draw):
    q = draw(st.sampled_from((2, 3)))
    F = tower_for_q(q)
    k = draw(st.integers(1, 3))
    n = draw(st.integers(k + 1, 8))
    seed = draw(st.integers(0, 2**32 - 1))
    return F, random_matrix(F, np.random.default_rng(seed), k, n)


@given(small_codes())
def test_every_method_matches_brute_force(FG):
    F, G = FG
    d = brute_force_min_weight(F, G)
    for method in EXACT + ("auto",):
        assert min_weight_certificate(F, G, method=method).d == d


@given(small_codes(), st.sampled_from(EXACT))
def test_backends_agree(FG, method):
    F, G = FG
    a = min_weight_certificate(F, G, method=method, backend="numba")
    b = min_weight_certificate(F, G, method=method, backend="numpy")
    assert a == b


@settings(max_examples=20)
@given(small_codes(), st.integers(1, 3))
def test_kernels_agree_on_raw_inputs(FG, w):
    F, G = FG
    MG = _kernels.scaled_rows(F, G)
    Hc = np.ascontiguousarray(kernel_basis(F, G).T)
    exact = _kernels.support_min_weight(F, MG, w, 0, backend="numba")
    assert exact == _kernels.support_min_weight(F, MG, w, 0, backend="numpy")
    # With an early stop, either backend may report any weight under the threshold.
    a = _kernels.support_min_weight(F, MG, w, 2, backend="numba")
    b = _kernels.support_min_weight(F, MG, w, 2, backend="numpy")
    assert a == b == exact if exact > 2 else max(a, b) <= 2 and min(a, b) >= exact
    assert _kernels.dependent_set_exists(F, Hc, w, backend="numba") == _kernels.dependent_set_exists(
        F, Hc, w, backend="numpy"
    )


def test_information_sets_are_systematic(rng):
    F = tower_for_q(4)
    G = random_matrix(F, rng, 3, 10)
    sets = information_sets(F, G)
    assert sum(s.fresh for s in sets) <= 10
    for s in sets:
        assert np.array_equal(s.gen[:, list(s.support)], np.eye(3, dtype=np.int64))


def test_certify_at_least(rng):
    F = tower_for_q(3)
    G = random_matrix(F, rng, 2, 7)
    d = brute_force_min_weight(F, G)
    assert certify_at_least(F, G, d).d == d
    with pytest.raises(ValueError):
        certify_at_least(F, G, d + 1)
    with pytest.raises(BudgetExceeded):
        certify_at_least(F, G, d, budget=1)


def test_budget_and_argument_guards(rng):
    F = tower_for_q(5)
    G = random_matrix(F, rng, 4, 12)
    with pytest.raises(BudgetExceeded):
        min_weight_certificate(F, G, budget=100, method="exhaustive")
    with pytest.raises(BudgetExceeded):
        min_weight_certificate(F, G, budget=10, method="information-set")
    with pytest.raises(ValueError):
        min_weight_certificate(F, G, method="guess")
    with pytest.raises(ValueError):
        min_weight_certificate(F, np.vstack([G, G[:1]]))
    assert min_weight_certificate(F, np.zeros((0, 3), dtype=np.int64)).d == 0


def test_backend_override_is_respected(monkeypatch):
    F = tower_for_q(3)
    monkeypatch.setenv("HERMHULL_DISABLE_NUMBA", "1")
    assert _kernels.backend_for(F) == "numpy"
    monkeypatch.setenv("HERMHULL_DISABLE_NUMBA", "0")
    assert _kernels.backend_for(F) == ("numba" if _kernels.HAVE_NUMBA else "numpy")
    # Odd characteristic above the table limit stays on numpy.
    assert _kernels.backend_for(tower_for_q(67)) == "numpy"


def test_information_set_on_a_larger_code(rng):
    """A [12,4] code over GF(25): information-set against dual-columns."""
    F = tower_for_q(5)
    G = random_matrix(F, rng, 4, 12)
    a = min_weight_certificate(F, G, method="information-set")
    b = min_weight_certificate(F, G, method="dual-columns")
    assert a.d == b.d
    assert a.info_ranks and sum(a.info_ranks) <= 12
