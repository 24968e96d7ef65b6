"""Exact arithmetic in the tower GF(p) < GF(q) < GF(q^2), q = p^m.

Elements of GF(q^2) are stored as plain integers ("codes"): the code of
``c_0 + c_1 x + ... + c_{2m-1} x^{2m-1}`` is ``sum(c_i * p**i)``.  The class
methods accept scalars or integer numpy arrays and broadcast like numpy
ufuncs.  Multiplication goes through discrete-log tables, addition through a
full addition table for small fields and through base-p digits otherwise.
"""

from __future__ import annotations

import functools
from collections.abc import Sequence
from typing import Any

import numpy as np

from .errors import NonPrime, NotInSubfield, SizeExceeded

MAX_ORDER = 1 << 20
ADD_TABLE_MAX = 1 << 10


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _x_power_cycle(p: int, lower: Sequence[int], order: int) -> list[int] | None:
    """Codes of x^0, x^1, ... modulo ``x^d + sum(lower[i] x^i)``.

    Returns None unless x has multiplicative order exactly ``order - 1``,
    which also proves the modulus irreducible (a reducible modulus leaves at
    most ``order - 2`` units).
    """
    d = len(lower)
    if lower[0] == 0:
        return None
    coeffs = [1] + [0] * (d - 1)
    powers = [p**i for i in range(d)]
    out = [1]
    for j in range(1, order - 1):
        top = coeffs[-1]
        coeffs = [0] + coeffs[:-1]
        if top:
            coeffs = [(c - top * f) % p for c, f in zip(coeffs, lower)]
        code = sum(c * w for c, w in zip(coeffs, powers))
        if code == 1:
            return None
        out.append(code)
    return out


def find_modulus(p: int, degree: int) -> tuple[int, ...]:
    """Smallest monic primitive polynomial of the given degree over GF(p).

    Candidates are ordered by reading ``(c_{d-1}, ..., c_0)`` as a base-p
    number.  The result lists ``(c_0, ..., c_{d-1}, 1)``.
    """
    order = p**degree
    for lower_code in range(1, order):
        lower = [(lower_code // p**i) % p for i in range(degree)]
        if _x_power_cycle(p, lower, order) is not None:
            return tuple(lower) + (1,)
    raise AssertionError(f"no primitive polynomial of degree {degree} over GF({p})")


class FieldTower:
    """GF(q^2) with q = p^m, together with its subfield GF(q).

    Build instances through :func:`make_tower`; they are immutable and may be
    shared freely.
    """

    def __init__(self, p: int, m: int, modulus: Sequence[int]) -> None:
        if not _is_prime(p):
            raise NonPrime(f"characteristic {p} is not prime")
        if m < 1:
            raise ValueError("extension exponent m must be positive")
        degree = 2 * m
        order = p**degree
        if order > MAX_ORDER:
            raise SizeExceeded(f"GF({p}^{degree}) has {order} elements, more than {MAX_ORDER}")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != degree + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree 2m")
        cycle = _x_power_cycle(p, modulus[:-1], order)
        if cycle is None:
            raise ValueError(f"modulus {modulus} is not primitive over GF({p})")

        self.p = p
        self.m = m
        self.q = p**m
        self.degree = degree
        self.order = order
        self.modulus = modulus

        n1 = order - 1
        exp = np.array(cycle, dtype=np.int64)
        log = np.full(order, -1, dtype=np.int64)
        log[exp] = np.arange(n1)
        self.exp = exp
        self.log = log
        # Branch-free multiplication: log(0) points past every real exponent sum.
        self._zero_log = 2 * n1
        self._log_ext = np.where(log < 0, self._zero_log, log)
        self._exp_ext = np.zeros(4 * n1 + 1, dtype=np.int64)
        self._exp_ext[: 2 * n1] = np.concatenate([exp, exp])

        self.powers = np.array([p**i for i in range(degree)], dtype=np.int64)
        codes = np.arange(order)
        self.digits = ((codes[:, None] // self.powers[None, :]) % p).astype(np.int64)
        self._neg = ((-self.digits) % p) @ self.powers
        self._inv = np.zeros(order, dtype=np.int64)
        self._inv[exp] = exp[(-np.arange(n1)) % n1]
        self.add_table: np.ndarray | None = None
        if order <= ADD_TABLE_MAX:
            s = (self.digits[:, None, :] + self.digits[None, :, :]) % p
            self.add_table = (s @ self.powers).astype(np.int64)
        for arr in (self.exp, self.log, self._log_ext, self._exp_ext, self.digits, self._neg, self._inv):
            arr.setflags(write=False)
        if self.add_table is not None:
            self.add_table.setflags(write=False)

    # -- identity --------------------------------------------------------

    def __repr__(self) -> str:
        return f"FieldTower(p={self.p}, m={self.m}, modulus={list(self.modulus)})"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldTower)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    @property
    def w(self) -> int:
        """The primitive element (the class of the indeterminate)."""
        return int(self.exp[1 % (self.order - 1)])

    # -- element helpers -------------------------------------------------

    def element(self, j: Any) -> Any:
        """w ** j for integer (array) j."""
        return self.exp[np.asarray(j) % (self.order - 1)]

    def elements(self) -> np.ndarray:
        return np.arange(self.order, dtype=np.int64)

    def nonzero(self) -> np.ndarray:
        return np.arange(1, self.order, dtype=np.int64)

    def subfield_elements(self) -> np.ndarray:
        """All of GF(q), zero first then ascending discrete log."""
        return np.concatenate([[0], self.element(np.arange(0, self.order - 1, self.q + 1))])

    def to_coeffs(self, x: int) -> list[int]:
        return [int(c) for c in self.digits[int(x)]]

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(coeffs)}")
        return int(sum((int(c) % self.p) * int(w) for c, w in zip(coeffs, self.powers)))

    def random(self, rng: np.random.Generator, shape: Any = None, nonzero: bool = False) -> Any:
        lo = 1 if nonzero else 0
        return rng.integers(lo, self.order, size=shape, dtype=np.int64)

    # -- arithmetic (elementwise, broadcasting) ---------------------------

    def add(self, a: Any, b: Any) -> Any:
        if self.add_table is not None:
            return self.add_table[a, b]
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return ((self.digits[a] + self.digits[b]) % self.p) @ self.powers

    def neg(self, a: Any) -> Any:
        return self._neg[a]

    def sub(self, a: Any, b: Any) -> Any:
        return self.add(a, self._neg[b])

    def mul(self, a: Any, b: Any) -> Any:
        return self._exp_ext[self._log_ext[a] + self._log_ext[b]]

    def inv(self, a: Any) -> Any:
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("zero has no inverse")
        return self._inv[a]

    def div(self, a: Any, b: Any) -> Any:
        return self.mul(a, self.inv(b))

    def pow(self, a: Any, e: Any) -> Any:
        """a ** e with 0 ** 0 = 1; e may be a non-negative integer array."""
        a = np.asarray(a)
        e = np.asarray(e)
        if np.any(e < 0):
            a = self.inv(a)
            e = -e
        l = self._log_ext[a]
        out = self.exp[(np.where(l == self._zero_log, 0, l) * (e % (self.order - 1))) % (self.order - 1)]
        out = np.where(a == 0, np.where(e == 0, 1, 0), out)
        return out if out.ndim else int(out)

    def sum(self, a: Any, axis: int | None = None) -> Any:
        a = np.asarray(a)
        if self.p == 2:
            if axis is None:
                return int(np.bitwise_xor.reduce(a.ravel())) if a.size else 0
            return np.bitwise_xor.reduce(a, axis=axis) if a.shape[axis] else np.zeros(
                np.delete(a.shape, axis), dtype=np.int64
            )
        d = self.digits[a]
        if axis is None:
            return int((d.reshape(-1, self.degree).sum(axis=0) % self.p) @ self.powers)
        ax = axis if axis >= 0 else a.ndim + axis
        return (d.sum(axis=ax) % self.p) @ self.powers

    def matmul(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if A.shape[1] == 0:
            return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
        return self.sum(self.mul(A[:, :, None], B[None, :, :]), axis=1)

    def dot(self, x: np.ndarray, y: np.ndarray) -> int:
        return int(self.sum(self.mul(np.asarray(x), np.asarray(y))))

    # -- tower structure ---------------------------------------------------

    def frobenius(self, x: Any) -> Any:
        """x ** q: the conjugation of GF(q^2) over GF(q)."""
        return self.pow(x, self.q)

    def norm(self, x: Any) -> Any:
        """x ** (q + 1), which always lies in GF(q)."""
        return self.pow(x, self.q + 1)

    def is_subfield(self, x: Any) -> Any:
        x = np.asarray(x)
        l = self.log[x]
        out = (x == 0) | (l % (self.q + 1) == 0)
        return out if out.ndim else bool(out)

    def solve_norm(self, u: int) -> int:
        """The v of least discrete log with v ** (q + 1) == u."""
        u = int(u)
        if u == 0 or not self.is_subfield(u):
            raise NotInSubfield(f"{self.to_coeffs(u)} is not a nonzero element of GF({self.q})")
        return int(self.exp[int(self.log[u]) // (self.q + 1)])

    def absolute_trace(self, x: Any) -> Any:
        """Trace from GF(q^2) down to GF(p), returned as an element code."""
        x = np.asarray(x)
        acc = np.zeros_like(x)
        for i in range(self.degree):
            acc = self.add(acc, self.pow(x, self.p**i))
        return acc if np.ndim(acc) else int(acc)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict[str, Any]:
        return {"p": self.p, "m": self.m, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> FieldTower:
        tower = make_tower(int(obj["p"]), int(obj["m"]))
        if "modulus" in obj and tuple(obj["modulus"]) != tower.modulus:
            return cls(int(obj["p"]), int(obj["m"]), obj["modulus"])
        return tower


@functools.lru_cache(maxsize=None)
def make_tower(p: int, m: int) -> FieldTower:
    """The canonical tower GF(p) < GF(p^m) < GF(p^(2m))."""
    if not _is_prime(p):
        raise NonPrime(f"characteristic {p} is not prime")
    if m < 1:
        raise ValueError("extension exponent m must be positive")
    if p ** (2 * m) > MAX_ORDER:
        raise SizeExceeded(f"GF({p}^{2 * m}) exceeds {MAX_ORDER} elements")
    return FieldTower(p, m, find_modulus(p, 2 * m))


def tower_for_q(q: int) -> FieldTower:
    """Tower for GF(q^2) given the prime power q."""
    for p in range(2, q + 1):
        if q % p == 0:
            break
    else:
        raise NonPrime(f"{q} is not a prime power")
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1 or not _is_prime(p):
        raise NonPrime(f"{q} is not a prime power")
    return make_tower(p, m)


# Module-level spellings of the tower operations.


def frobenius(tower: FieldTower, x: Any) -> Any:
    return tower.frobenius(x)


def norm(tower: FieldTower, x: Any) -> Any:
    return tower.norm(x)


def solve_norm(tower: FieldTower, u: int) -> int:
    return tower.solve_norm(u)


def is_subfield(tower: FieldTower, x: Any) -> Any:
    return tower.is_subfield(x)
