from __future__ import annotations

import numpy as np
import pytest

from hermhull.code import is_self_orthogonal, weight_certificate
from hermhull.curves import (
    CurveSpec,
    ag_code,
    elliptic_points,
    elliptic_spec,
    elliptic_table_count,
    enumerate_places,
    point_count,
    rr_basis,
    so_degree_bound,
    trace_one_elements,
)
from hermhull.errors import DimensionDrop, GenusRange, HypothesisFails
from hermhull.gf import make_tower

SPECS = [
    CurveSpec("hyperelliptic", 2),
    CurveSpec("hyperelliptic", 4),
    CurveSpec("hermitian", 2),
    CurveSpec("hermitian", 3),
    CurveSpec("hermitian", 4),
    CurveSpec("quotient", 5, {"t": 2}),
    CurveSpec("quotient", 5, {"t": 3}),
    CurveSpec("quotient", 7, {"t": 4}),
    elliptic_spec(4, 0, 0),
]


def brute_points(spec: CurveSpec) -> set[tuple[int, int]]:
    """Double loop over GF(q^2)^2, scalar arithmetic only."""
    F = spec.tower
    pts = set()
    for x in range(F.order):
        for y in range(F.order):
            lhs, rhs = spec.sides(np.array([x]), np.array([y]))
            if lhs[0] == rhs[0]:
                pts.add((x, y))
    return pts


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.family}-{s.q}-{s.params}")
def test_places_match_brute_force(spec):
    P = enumerate_places(spec)
    assert set(zip(P.xs.tolist(), P.ys.tolist())) == brute_points(spec)
    assert len(set(zip(P.xs.tolist(), P.ys.tolist()))) == len(P)


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.family}-{s.q}-{s.params}")
def test_hasse_weil(spec):
    Q = spec.tower.order
    N = point_count(spec)
    assert abs(N - (Q + 1)) <= 2 * spec.genus * spec.q


@pytest.mark.parametrize("q", (2, 3, 4, 5))
def test_hermitian_is_maximal(q):
    spec = CurveSpec("hermitian", q)
    assert point_count(spec) == q**3 + 1 == q * q + 1 + 2 * spec.genus * q


@pytest.mark.parametrize("m", (2, 4, 6))
def test_elliptic_counts_against_listed_formula(m):
    b = int(trace_one_elements(m)[0])
    assert elliptic_points(m, 0, 0)[1] == elliptic_table_count(m, "zero")
    assert elliptic_points(m, b, 0)[1] == elliptic_table_count(m, "b")
    assert elliptic_points(m, 0, b)[1] == elliptic_table_count(m, "c")
    assert make_tower(2, m // 2).order == 2**m


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.family}-{s.q}-{s.params}")
def test_rr_basis_counts_and_pole_orders(spec):
    g = spec.genus
    px, py = spec.pole_orders
    for k in range(2 * g + 1, 2 * g + 6):
        B = rr_basis(spec, k)
        assert len(B) == k - g
        orders = [i * px + j * py for i, j in B]
        assert len(set(orders)) == len(orders) and max(orders) <= k - 1
    if g:
        with pytest.raises(GenusRange):
            rr_basis(spec, 2 * g - 1)


@pytest.mark.parametrize("spec", SPECS[:6], ids=lambda s: f"{s.family}-{s.q}-{s.params}")
def test_codes_below_the_bound_are_self_orthogonal(spec):
    n = len(enumerate_places(spec))
    top = so_degree_bound(spec, n)
    for k in range(2 * spec.genus, top + 1):
        if 2 * spec.genus - 2 >= k - 1:
            continue
        C = ag_code(spec, k)
        assert C.k == k - spec.genus
        assert is_self_orthogonal(C)


def test_small_code_distance_respects_bound():
    spec = CurveSpec("hermitian", 3)
    C = ag_code(spec, 6)
    assert (C.n, C.k) == (27, 3)
    assert weight_certificate(C).d >= C.d_lower == 22


def test_guards_and_json():
    with pytest.raises(HypothesisFails):
        CurveSpec("hyperelliptic", 3)
    with pytest.raises(HypothesisFails):
        CurveSpec("quotient", 5, {"t": 4})
    with pytest.raises(HypothesisFails):
        elliptic_spec(3)
    with pytest.raises(ValueError):
        CurveSpec("parabola", 3)
    spec = CurveSpec("quotient", 5, {"t": 3})
    assert CurveSpec.from_json(spec.to_json()) == spec
    with pytest.raises(DimensionDrop):
        # Restricting to a single x-value leaves too few points for k - g = 4.
        ag_code(CurveSpec("hermitian", 3), 7, restrict=[0])
