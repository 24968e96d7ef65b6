"""Rational points and one-point AG codes on a few curves over GF(q^2).

Families (all with a single place O at infinity):

* ``elliptic``:        y^2 + y = x^3 + b x + c over GF(2^m), m even
* ``hyperelliptic``:   y^2 + y = x^(q+1), q a power of 2
* ``hermitian``:       y^q + y = x^(q+1)
* ``quotient``:        y^q + y = x^((q+1)/t), q odd, 1 < t < q+1, t | q+1

L((k-1)O) is spanned by the monomials x^i y^j whose pole order at O is at
most k-1 (with j below the degree of the curve in y).  Code multipliers
come from the residues of dx/h(x), h vanishing on the x-coordinates used.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from . import la
from .code import LinearCode
from .errors import DimensionDrop, GenusRange, HypothesisFails, NotInSubfield
from .gf import FieldTower, make_tower, tower_for_q
from .lines import explicit_set, residues

FAMILIES = ("elliptic", "hyperelliptic", "hermitian", "quotient")


@dataclass(frozen=True)
class CurveSpec:
    family: str
    q: int
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        q = self.q
        if self.family in ("elliptic", "hyperelliptic") and q & (q - 1):
            raise HypothesisFails(f"{self.family} curves here need q a power of 2, got {q}")
        if self.family == "quotient":
            t = int(self.params.get("t", 0))
            if q % 2 == 0 or not 1 < t < q + 1 or (q + 1) % t:
                raise HypothesisFails(f"quotient curve needs odd q and 1 < t < q+1 dividing q+1 (q={q}, t={t})")

    @property
    def tower(self) -> FieldTower:
        return tower_for_q(self.q)

    @property
    def genus(self) -> int:
        q = self.q
        if self.family == "elliptic":
            return 1
        if self.family == "hyperelliptic":
            return q // 2
        if self.family == "hermitian":
            return q * (q - 1) // 2
        t = int(self.params["t"])
        return (q - 1) * (q + 1 - t) // (2 * t)

    @property
    def pole_orders(self) -> tuple[int, int]:
        """Pole orders of x and y at O."""
        q = self.q
        return {
            "elliptic": (2, 3),
            "hyperelliptic": (2, q + 1),
            "hermitian": (q, q + 1),
            "quotient": (q, (q + 1) // int(self.params.get("t", 1))),
        }[self.family]

    @property
    def y_degree(self) -> int:
        return 2 if self.family in ("elliptic", "hyperelliptic") else self.q

    def sides(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """(left, right) of the defining equation, y-part on the left."""
        F = self.tower
        q = self.q
        if self.family in ("elliptic", "hyperelliptic"):
            lhs = F.add(F.mul(y, y), y)
        else:
            lhs = F.add(F.pow(y, q), y)
        if self.family == "elliptic":
            b, c = int(self.params.get("b", 0)), int(self.params.get("c", 0))
            rhs = F.add(F.add(F.pow(x, 3), F.mul(b, x)), c)
        elif self.family == "quotient":
            rhs = F.pow(x, (q + 1) // int(self.params["t"]))
        else:
            rhs = F.pow(x, q + 1)
        return lhs, rhs

    def to_json(self) -> dict[str, Any]:
        return {"family": self.family, "q": self.q, "params": dict(self.params)}

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> CurveSpec:
        return cls(obj["family"], int(obj["q"]), dict(obj.get("params", {})))


def elliptic_spec(m: int, b: int = 0, c: int = 0) -> CurveSpec:
    """y^2 + y = x^3 + bx + c over GF(2^m); m must be even so GF(2^m) = GF(q^2)."""
    if m < 2 or m % 2:
        raise HypothesisFails(f"GF(2^{m}) is represented as GF(q^2), so m must be even")
    return CurveSpec("elliptic", 2 ** (m // 2), {"m": m, "b": int(b), "c": int(c)})


@dataclass(frozen=True)
class PlaceSet:
    """Affine rational points grouped by x, in (log x, y) order with x = 0 last."""

    xs: np.ndarray
    ys: np.ndarray

    def __len__(self) -> int:
        return int(self.xs.size)

    def x_values(self) -> np.ndarray:
        return np.unique(self.xs)


def enumerate_places(spec: CurveSpec, restrict: Any = None) -> PlaceSet:
    """All affine points over GF(q^2), optionally only above the x-values in ``restrict``."""
    F = spec.tower
    ally = np.arange(F.order, dtype=np.int64)
    if restrict is None:
        cand = ally
    else:
        cand = np.unique(np.asarray(restrict, dtype=np.int64))
    nz = cand[cand != 0]
    cand = np.concatenate([nz[np.argsort(F.log[nz], kind="stable")], cand[cand == 0]])
    lhs, _ = spec.sides(np.zeros_like(ally), ally)
    order = np.argsort(lhs, kind="stable")
    sorted_lhs = lhs[order]
    _, rhs = spec.sides(cand, np.zeros_like(cand))
    lo = np.searchsorted(sorted_lhs, rhs, side="left")
    hi = np.searchsorted(sorted_lhs, rhs, side="right")
    xs, ys = [], []
    for x, a, b in zip(cand.tolist(), lo.tolist(), hi.tolist()):
        sols = np.sort(order[a:b])
        xs.extend([x] * sols.size)
        ys.extend(sols.tolist())
    xs_arr, ys_arr = np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64)
    l, r = spec.sides(xs_arr, ys_arr)
    assert np.array_equal(l, r)
    return PlaceSet(xs_arr, ys_arr)


def point_count(spec: CurveSpec) -> int:
    """Rational points including O."""
    return len(enumerate_places(spec)) + 1


def elliptic_points(m: int, b: int = 0, c: int = 0) -> tuple[PlaceSet, int]:
    """Affine points of y^2 + y = x^3 + bx + c over GF(2^m) and the total N (with O)."""
    P = enumerate_places(elliptic_spec(m, b, c))
    return P, len(P) + 1


def elliptic_table_count(m: int, kind: str) -> int:
    """Point counts listed for y^2+y = x^3 ("zero"), + bx with Tr(b)=1 ("b"), + c with Tr(c)=1 ("c")."""
    if m % 2:
        raise ValueError("m must be even")
    q = 2**m
    r = 2 ** (m // 2)
    if kind == "zero":
        return q + 1 - 2 * r if m % 4 == 0 else q + 1 + 2 * r
    if kind == "b":
        return q + 1
    if kind == "c":
        return q + 1 + 2 * r if m % 4 == 0 else q + 1 - 2 * r
    raise ValueError(f"unknown row kind {kind!r}")


def trace_one_elements(m: int) -> np.ndarray:
    """Elements of GF(2^m) with absolute trace 1."""
    F = make_tower(2, m // 2)
    allx = np.arange(F.order)
    return allx[np.asarray(F.absolute_trace(allx)) == 1]


# -- Riemann-Roch spaces and codes ------------------------------------------------------


def rr_basis(spec: CurveSpec, k: int) -> list[tuple[int, int]]:
    """Exponents (i, j) of monomials x^i y^j spanning L((k-1)O)."""
    g = spec.genus
    m = k - 1
    if not 2 * g - 2 < m:
        raise GenusRange(f"deg G = {m} must exceed 2g - 2 = {2 * g - 2}")
    px, py = spec.pole_orders
    out = [(i, j) for j in range(spec.y_degree) for i in range(m // px + 1) if i * px + j * py <= m]
    out.sort(key=lambda ij: (ij[0] * px + ij[1] * py, ij[1]))
    if len(out) != m + 1 - g:
        raise AssertionError(f"monomial count {len(out)} differs from deg G + 1 - g = {m + 1 - g}")
    return out


def so_degree_bound(spec: CurveSpec, n: int) -> int:
    """Largest k with (q+1)(k-1) <= n + 2g - 2, the pole-order self-orthogonality test."""
    return (n + 2 * spec.genus - 2) // (spec.q + 1) + 1


def residue_multipliers(spec: CurveSpec, places: PlaceSet) -> np.ndarray:
    """v_P with v_P^(q+1) = Res_P(dx/h), h the product of (x - a) over the x-values."""
    F = spec.tower
    xvals = places.x_values()
    S = explicit_set(F, xvals)
    res = dict(zip(S.alphas.tolist(), residues(S).tolist()))
    out = []
    for idx, x in enumerate(places.xs.tolist()):
        r = res[x]
        if not F.is_subfield(r):
            raise NotInSubfield(f"residue above x = {x} is not in GF({F.q})", index=idx)
        out.append(F.solve_norm(r))
    return np.array(out, dtype=np.int64)


def evaluation_matrix(spec: CurveSpec, places: PlaceSet, basis: list[tuple[int, int]]) -> np.ndarray:
    F = spec.tower
    rows = [F.mul(F.pow(places.xs, i), F.pow(places.ys, j)) for i, j in basis]
    return np.vstack(rows) if rows else np.zeros((0, len(places)), dtype=np.int64)


def ag_code(
    spec: CurveSpec, k: int, v: Any = None, restrict: Any = None, places: PlaceSet | None = None
) -> LinearCode:
    """One-point code v * C_L(D, (k-1)O) of dimension k - g and d >= n - (k-1)."""
    F = spec.tower
    if places is None:
        places = enumerate_places(spec, restrict)
    basis = rr_basis(spec, k)
    v = residue_multipliers(spec, places) if v is None else np.asarray(v, dtype=np.int64)
    if v.shape != (len(places),):
        raise ValueError("multiplier vector length must equal the number of places")
    M = F.mul(evaluation_matrix(spec, places, basis), v[None, :])
    r = la.rank(F, M)
    if r != k - spec.genus:
        raise DimensionDrop(f"evaluation rank {r} is below k - g = {k - spec.genus}")
    n = len(places)
    gram_rank = la.rank(F, la.gram_hermitian(F, M))
    step = (
        f"one-point AG code on {spec.family} q={spec.q} {spec.params or ''} deg G={k - 1}, "
        f"n={n}, Gram rank {gram_rank}"
    )
    return LinearCode(F, M, (step,), d_lower=max(1, n - (k - 1)))
