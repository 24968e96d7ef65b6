from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermhull import gf
from hermhull.errors import NonPrime, NotInSubfield, SizeExceeded
from hermhull.gf import FieldTower, find_modulus, make_tower, tower_for_q

QS = (2, 3, 4, 5, 7, 8, 9, 11, 16)

# Frozen after an independent search over all monic candidates.
MODULI = {
    2: (1, 1, 1),
    3: (2, 1, 1),
    4: (1, 1, 0, 0, 1),
    5: (2, 1, 1),
    7: (3, 1, 1),
    8: (1, 1, 0, 0, 0, 0, 1),
    9: (2, 1, 0, 0, 1),
    11: (7, 1, 1),
    16: (1, 0, 1, 1, 1, 0, 0, 0, 1),
}


def poly_mul_mod(F: FieldTower, a: int, b: int) -> int:
    """Schoolbook product of two codes, reduced by the modulus: the oracle."""
    p, d = F.p, F.degree
    da = [(a // p**i) % p for i in range(d)]
    db = [(b // p**i) % p for i in range(d)]
    prod = [0] * (2 * d - 1)
    for i, x in enumerate(da):
        for j, y in enumerate(db):
            prod[i + j] = (prod[i + j] + x * y) % p
    for top in range(2 * d - 2, d - 1, -1):
        c = prod[top]
        if c:
            for i, m in enumerate(F.modulus[:-1]):
                prod[top - d + i] = (prod[top - d + i] - c * m) % p
            prod[top] = 0
    return sum(c * p**i for i, c in enumerate(prod[:d]))


def elements(q: int):
    return st.integers(0, q * q - 1)


@pytest.mark.parametrize("q", QS)
def test_modulus_is_frozen(q):
    assert tower_for_q(q).modulus == MODULI[q]


def test_find_modulus_orders_by_reversed_digits():
    # x^2 + x + 1 is the only primitive quadratic over GF(2).
    assert find_modulus(2, 2) == (1, 1, 1)
    # Over GF(3), x^2 + x + 2 precedes x^2 + 2x + 2 under the ordering.
    assert find_modulus(3, 2) == (2, 1, 1)


@pytest.mark.parametrize("q", (2, 3, 4, 5, 9))
def test_mul_matches_polynomial_oracle(q):
    F = tower_for_q(q)
    a = np.arange(F.order)
    table = F.mul(a[:, None], a[None, :])
    for x in range(F.order):
        for y in range(0, F.order, max(1, F.order // 17)):
            assert table[x, y] == poly_mul_mod(F, x, y)


@pytest.mark.parametrize("q", QS)
def test_log_tables_are_a_bijection(q):
    F = tower_for_q(q)
    assert sorted(F.exp.tolist()) == list(range(1, F.order))
    assert F.log[0] == -1
    assert np.all(F.exp[F.log[1:]] == np.arange(1, F.order))


@given(st.sampled_from(QS), st.data())
def test_field_axioms(q, data):
    F = tower_for_q(q)
    a, b, c = (data.draw(elements(q)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.div(F.mul(a, b), a) == b


@given(st.sampled_from(QS), st.data())
def test_frobenius_and_norm(q, data):
    F = tower_for_q(q)
    a, b = data.draw(elements(q)), data.draw(elements(q))
    assert F.frobenius(F.frobenius(a)) == a
    assert F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b))
    assert F.norm(a) == F.mul(a, F.frobenius(a))
    assert F.is_subfield(F.norm(a))
    assert F.norm(F.mul(a, b)) == F.mul(F.norm(a), F.norm(b))


@pytest.mark.parametrize("q", QS)
def test_subfield_has_q_elements(q):
    F = tower_for_q(q)
    sub = F.subfield_elements()
    assert sub.size == q and sub[0] == 0
    assert int(np.count_nonzero(F.is_subfield(np.arange(F.order)))) == q
    # Closed under both operations.
    assert np.all(F.is_subfield(F.add(sub[:, None], sub[None, :])))
    assert np.all(F.is_subfield(F.mul(sub[:, None], sub[None, :])))


@pytest.mark.parametrize("q", QS)
def test_solve_norm_inverts_norm_with_least_log(q):
    F = tower_for_q(q)
    for u in F.subfield_elements()[1:].tolist():
        x = F.solve_norm(u)
        assert F.norm(x) == u
        roots = [y for y in range(1, F.order) if F.norm(y) == u]
        assert len(roots) == q + 1
        assert F.log[x] == min(F.log[y] for y in roots)
    with pytest.raises(NotInSubfield):
        F.solve_norm(0)


def test_solve_norm_rejects_non_subfield():
    F = tower_for_q(3)
    with pytest.raises(NotInSubfield):
        F.solve_norm(F.w)


@given(st.sampled_from(QS), st.data())
def test_pow_agrees_with_repeated_multiplication(q, data):
    F = tower_for_q(q)
    a = data.draw(elements(q))
    e = data.draw(st.integers(0, 3 * F.order))
    acc = 1
    for _ in range(e % (F.order - 1) + (F.order - 1 if e >= F.order - 1 and a == 0 else 0)):
        acc = F.mul(acc, a)
    if a == 0:
        assert F.pow(a, e) == (1 if e == 0 else 0)
    else:
        assert F.pow(a, e) == acc
        assert F.mul(F.pow(a, -e), F.pow(a, e)) == 1


def test_vectorised_ops_broadcast():
    F = tower_for_q(5)
    a = np.arange(25).reshape(5, 5)
    assert F.mul(a, 1).tolist() == a.tolist()
    assert F.add(a, np.zeros(5, dtype=np.int64)).shape == (5, 5)
    assert F.sum(a, axis=0).shape == (5,)
    M = F.random(np.random.default_rng(1), (3, 4))
    N = F.random(np.random.default_rng(2), (4, 2))
    expect = [[0, 0], [0, 0], [0, 0]]
    for i in range(3):
        for j in range(2):
            s = 0
            for t in range(4):
                s = F.add(s, F.mul(M[i, t], N[t, j]))
            expect[i][j] = s
    assert F.matmul(M, N).tolist() == expect


def test_digit_addition_matches_table():
    """q = 37 exceeds the table size, so addition goes through digits."""
    F = tower_for_q(37)
    assert F.add_table is None
    rng = np.random.default_rng(0)
    a, b = rng.integers(0, F.order, 500), rng.integers(0, F.order, 500)
    lhs = F.add(a, b)
    da, db = F.digits[a], F.digits[b]
    assert np.array_equal(lhs, ((da + db) % 37) @ F.powers)


def test_absolute_trace_is_additive_onto_gf_p():
    F = make_tower(2, 2)
    x = np.arange(F.order)
    t = np.asarray(F.absolute_trace(x))
    assert set(t.tolist()) == {0, 1}
    assert int(t.sum()) == F.order // 2


def test_json_round_trip_and_equality():
    F = tower_for_q(9)
    G = FieldTower.from_json(F.to_json())
    assert G == F and hash(G) == hash(F)
    assert make_tower(3, 2) is F


def test_guards():
    with pytest.raises(NonPrime):
        make_tower(4, 1)
    with pytest.raises(SizeExceeded):
        make_tower(2, 11)
    with pytest.raises(ValueError):
        tower_for_q(6)
    with pytest.raises(ZeroDivisionError):
        tower_for_q(3).inv(0)


def test_module_level_wrappers():
    F = tower_for_q(4)
    assert gf.frobenius(F, 5) == F.frobenius(5)
    assert gf.norm(F, 5) == F.norm(5)
    assert gf.is_subfield(F, 1)
    assert gf.solve_norm(F, 1) == F.solve_norm(1)
