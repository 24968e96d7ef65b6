from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermhull.code import hull, is_self_orthogonal, weight_certificate
from hermhull.errors import (
    BadDivisibility,
    DoesNotDivide,
    HypothesisFails,
    KTooLarge,
    NormConditionFails,
    NotEnoughZeroLambdas,
)
from hermhull.gf import tower_for_q
from hermhull.lines import (
    applicable_branches,
    build_Gi,
    drop_zero_columns,
    expand_dimension,
    explicit_set,
    find_multipliers,
    gamma_profile,
    grs_code,
    h_derivative,
    h_derivative_closed_form,
    hull_pipeline,
    multicoset_set,
    multipliers,
    residues,
    so_bound,
    subgroup,
    unity_set,
)
from hermhull.minweight import brute_force_min_weight


def unity_params():
    """(q, n) with n - 1 dividing q^2 - 1."""
    out = []
    for q in (2, 3, 4, 5, 7):
        out += [(q, d + 1) for d in range(2, q * q) if (q * q - 1) % d == 0]
    return out


UNITY = unity_params()
MULTICOSET = [(3, 4, 1), (5, 3, 1), (5, 6, 1), (5, 12, 1), (7, 8, 1), (7, 24, 1), (9, 5, 1), (9, 40, 1), (11, 12, 1)]


@pytest.mark.parametrize("q,n", UNITY)
def test_closed_form_derivative_on_unity_sets(q, n):
    S = unity_set(tower_for_q(q), n)
    assert np.array_equal(h_derivative(S), h_derivative_closed_form(S))


@pytest.mark.parametrize("q,N,t", MULTICOSET)
def test_closed_form_derivative_on_multicosets(q, N, t):
    S = multicoset_set(tower_for_q(q), N, t)
    assert S.n == N * (t + 1) + 1
    assert np.array_equal(h_derivative(S), h_derivative_closed_form(S))


def test_norm_condition_is_enforced():
    # alpha_1^N = w^6 lies outside GF(7), whose nonzero elements are powers of w^8.
    with pytest.raises(NormConditionFails):
        multicoset_set(tower_for_q(7), 6, 1)


def test_three_coset_set():
    F = tower_for_q(7)
    S = multicoset_set(F, 8, 2, a=3)
    assert S.n == 25
    assert np.array_equal(h_derivative(S), h_derivative_closed_form(S))
    with pytest.raises(BadDivisibility):
        multicoset_set(F, 8, 2, a=5)


@pytest.mark.parametrize("q,n", UNITY)
def test_residue_multipliers_give_self_orthogonal_grs(q, n):
    F = tower_for_q(q)
    S = unity_set(F, n)
    v = multipliers(S)
    assert np.array_equal(F.norm(v), residues(S))
    for k in range(1, so_bound(n, q) + 1):
        assert is_self_orthogonal(grs_code(S, v, k))


@given(st.sampled_from([p for p in UNITY if p[1] <= 9]), st.integers(1, 3))
def test_grs_is_mds(qn, k):
    q, n = qn
    S = unity_set(tower_for_q(q), n)
    if k > n or tower_for_q(q).order ** k > 5000:
        return
    C = grs_code(S, np.ones(n, dtype=np.int64), k)
    assert brute_force_min_weight(C.tower, C.gen) == n - k + 1 == C.d


@pytest.mark.parametrize("q,n,k,i", [(3, 9, 2, 3), (4, 16, 3, 4), (5, 13, 2, 5), (5, 25, 4, 5), (7, 17, 2, 7)])
def test_build_Gi_is_self_orthogonal_with_consistent_gamma(q, n, k, i):
    F = tower_for_q(q)
    S = unity_set(F, n)
    E = build_Gi(S, multipliers(S), k, i)
    assert (E.code.n, E.code.k) == (n + i, k + i)
    assert is_self_orthogonal(E.code)
    prof = gamma_profile(E)
    assert prof.ok, prof.failures
    assert E.I == tuple(r for r in range(1, i + 1) if E.lambdas[r - 1])
    P = drop_zero_columns(E)
    assert (P.n, P.k) == (n + len(E.I), k + i) and is_self_orthogonal(P)
    H = hull_pipeline(E)
    assert hull(H).ell == k + i - len(E.I)


def test_expand_dimension():
    F = tower_for_q(7)
    S = unity_set(F, 17)
    E = build_Gi(S, multipliers(S), 2, 7)
    C = expand_dimension(E)
    assert (C.n, C.k) == (17, 3) and is_self_orthogonal(C)
    assert weight_certificate(C).d >= C.d_lower
    E1 = build_Gi(S, multipliers(S), 2, 1)
    with pytest.raises(NotEnoughZeroLambdas):
        expand_dimension(E1)


def test_find_multipliers_prefers_all_ones_when_valid():
    F = tower_for_q(3)
    S = unity_set(F, 9)
    v = find_multipliers(S, 2)
    assert v is not None and is_self_orthogonal(grs_code(S, v, 2))


def test_find_multipliers_on_fifteen_points():
    F = tower_for_q(8)
    H = subgroup(F, 7)
    S = explicit_set(F, np.concatenate([H, F.mul(F.w, H), [0]]))
    v = find_multipliers(S, 4)
    assert v is not None
    assert is_self_orthogonal(grs_code(S, v, 4))


def test_strict_mode_and_guards():
    F = tower_for_q(5)
    S = unity_set(F, 9)
    v = np.ones(9, dtype=np.int64)
    assert applicable_branches(S, 2, 2) == []
    with pytest.raises(HypothesisFails):
        build_Gi(S, v, 2, 2, strict=True)
    with pytest.raises(KTooLarge):
        build_Gi(S, v, 5, 5)
    with pytest.raises(DoesNotDivide):
        unity_set(F, 6)
    with pytest.raises(BadDivisibility):
        multicoset_set(F, 5, 1)
    with pytest.raises(ValueError):
        explicit_set(F, [1, 1, 2])
    assert build_Gi(S, v, 2, 0).code.k == 2
