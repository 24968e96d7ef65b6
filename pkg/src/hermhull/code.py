"""Linear codes over GF(q^2): Hermitian duals and hulls, hull adjustment,
puncturing, shortening and exact minimum distance."""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from . import la
from .errors import EllOutOfRange, NoNormDefect, NotSelfOrthogonal, NotSystematic, SOutOfRange, ZeroScalar
from .gf import FieldTower
from .minweight import DEFAULT_BUDGET, WeightCertificate, min_weight_certificate


@dataclass(frozen=True, eq=False)
class LinearCode:
    """Row space of a full-row-rank generator matrix.

    ``d`` is the exact minimum distance when it has been certified, and
    ``d_lower`` a proven lower bound (equal to ``d`` once that is known).
    """

    tower: FieldTower
    gen: np.ndarray
    provenance: tuple[str, ...] = ()
    d: int | None = None
    d_lower: int | None = None
    d_method: str | None = None
    _cert: list[WeightCertificate] = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self) -> None:
        G = la.as_matrix(self.gen)
        G.setflags(write=False)
        object.__setattr__(self, "gen", G)
        if self.k > self.n:
            raise ValueError(f"dimension {self.k} exceeds length {self.n}")
        if self.k and la.rank(self.tower, G) != self.k:
            raise ValueError("generator matrix does not have full row rank")
        if self.d is not None and self.d_lower is None:
            object.__setattr__(self, "d_lower", self.d)

    @classmethod
    def from_rows(cls, F: FieldTower, rows: Any, provenance: Iterable[str] = (), **kw: Any) -> LinearCode:
        """Code spanned by ``rows``, which need not be independent."""
        return cls(F, la.row_basis(F, rows), tuple(provenance), **kw)

    @property
    def n(self) -> int:
        return int(self.gen.shape[1])

    @property
    def k(self) -> int:
        return int(self.gen.shape[0])

    @property
    def q(self) -> int:
        return self.tower.q

    def __repr__(self) -> str:
        d = self.d if self.d is not None else (f">={self.d_lower}" if self.d_lower else "?")
        return f"LinearCode[{self.n},{self.k},{d}]_{{{self.q}^2}}"

    def params(self) -> tuple[int, int, int | None]:
        return self.n, self.k, self.d

    def derive(self, gen: Any, step: str, **kw: Any) -> LinearCode:
        """A new code whose provenance extends this one's by ``step``."""
        kw.setdefault("d", None)
        kw.setdefault("d_lower", None)
        kw.setdefault("d_method", None)
        return LinearCode(self.tower, gen, self.provenance + (step,), **kw)

    def with_distance(self, d: int, method: str) -> LinearCode:
        return replace(self, d=d, d_lower=d, d_method=method, _cert=list(self._cert))

    def same_space(self, other: LinearCode) -> bool:
        return self.tower == other.tower and la.same_row_space(self.tower, self.gen, other.gen)


@dataclass(frozen=True)
class HullReport:
    ell: int
    hull_gen: np.ndarray
    rank_ggd: int


# -- duality -------------------------------------------------------------------


def gram(C: LinearCode) -> np.ndarray:
    return la.gram_hermitian(C.tower, C.gen)


def is_self_orthogonal(C: LinearCode) -> bool:
    return not np.any(gram(C))


def hermitian_dual(C: LinearCode) -> LinearCode:
    """C^{perp_h}; a zero-dimensional result has an empty generator."""
    F = C.tower
    K = la.kernel_basis(F, C.gen)
    return C.derive(F.frobenius(K).reshape(K.shape), "hermitian dual")


def hull(C: LinearCode) -> HullReport:
    """Hull dimension by two independent routes, checked against each other."""
    F = C.tower
    if C.k == 0:
        return HullReport(0, C.gen, 0)
    GG = gram(C)
    r = la.rank(F, GG)
    Y = la.left_kernel(F, GG)
    hull_gen = la.row_basis(F, F.matmul(Y, C.gen)) if Y.shape[0] else np.zeros((0, C.n), dtype=np.int64)
    direct = la.intersect_row_spaces(F, C.gen, hermitian_dual(C).gen)
    if direct.shape[0] != C.k - r or hull_gen.shape[0] != C.k - r:
        raise AssertionError(
            f"hull oracles disagree: k - rank(GG^+) = {C.k - r}, intersection {direct.shape[0]}"
        )
    return HullReport(C.k - r, hull_gen, r)


def hull_dimension_direct(C: LinearCode) -> int:
    """dim(C ∩ C^{perp_h}) from the explicit intersection only."""
    return int(la.intersect_row_spaces(C.tower, C.gen, hermitian_dual(C).gen).shape[0])


# -- monomial transformations ------------------------------------------------------


def scale_coords(C: LinearCode, v: Sequence[int]) -> LinearCode:
    """The code v·C = {(v_1 c_1, ..., v_n c_n)}."""
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (C.n,):
        raise ValueError(f"scaling vector must have length {C.n}")
    zero = np.flatnonzero(v == 0)
    if zero.size:
        raise ZeroScalar(int(zero[0]))
    return C.derive(
        C.tower.mul(C.gen, v[None, :]), "scaled coordinates", d=C.d, d_lower=C.d_lower, d_method=C.d_method
    )


def norm_defect_scalar(F: FieldTower) -> int:
    """The nonzero element of least log whose norm differs from 1."""
    if F.q == 2:
        raise NoNormDefect("every nonzero element of GF(4) has norm 1")
    return F.w  # w^(q+1) = 1 would force (q^2 - 1) | (q + 1)


def adjust_hull(C: LinearCode, ell: int) -> LinearCode:
    """Monomially equivalent copy of a self-orthogonal C with hull dimension ell.

    With G in reduced echelon form, scaling the first k - ell pivot
    coordinates by lam turns GG^+ = 0 into diag(lam^(q+1) - 1, ..., 0, ...).
    """
    F = C.tower
    if not 0 <= ell <= C.k:
        raise EllOutOfRange(f"ell={ell} is outside [0, {C.k}]")
    if not is_self_orthogonal(C):
        raise NotSelfOrthogonal("hull adjustment needs a Hermitian self-orthogonal code")
    if ell == C.k:
        return C
    lam = norm_defect_scalar(F)
    R, piv = la.rref(F, C.gen)
    cols = piv[: C.k - ell]
    v = np.ones(C.n, dtype=np.int64)
    v[cols] = lam
    step = f"hull adjusted to {ell}: coordinates {list(cols)} scaled by w^{int(F.log[lam])}"
    return C.derive(F.mul(R[: C.k], v[None, :]), step, d=C.d, d_lower=C.d_lower, d_method=C.d_method)


def search_hull(C: LinearCode, ell: int, max_scalars: int = 4) -> LinearCode:
    """Monomially equivalent copy of any C with hull dimension ell, found by search.

    Tries scaling subsets of the echelon pivot columns (smallest subsets
    first) by the first few scalars of norm != 1.  Works when C is not
    self-orthogonal; the hull of every candidate is recomputed.
    """
    F = C.tower
    if not 0 <= ell <= C.k:
        raise EllOutOfRange(f"ell={ell} is outside [0, {C.k}]")
    if hull(C).ell == ell:
        return C
    R, piv = la.rref(F, C.gen)
    R = R[: C.k]
    lams = [x for x in F.nonzero().tolist() if F.norm(x) != 1][:max_scalars]
    if not lams:
        raise NoNormDefect("every nonzero element of GF(4) has norm 1")
    for lam in lams:
        for r in range(1, C.k + 1):
            for cols in itertools.combinations(piv, r):
                v = np.ones(C.n, dtype=np.int64)
                v[list(cols)] = lam
                G = F.mul(R, v[None, :])
                if C.k - la.rank(F, la.gram_hermitian(F, G)) == ell:
                    step = f"hull searched to {ell}: coordinates {list(cols)} scaled by w^{int(F.log[lam])}"
                    return C.derive(G, step, d=C.d, d_lower=C.d_lower, d_method=C.d_method)
    raise EllOutOfRange(f"no pivot-column scaling reaches hull dimension {ell}")


def puncture(C: LinearCode, coords: Iterable[int]) -> LinearCode:
    """Delete the given coordinates; the dimension is whatever rank remains."""
    drop = sorted(set(int(c) for c in coords))
    if any(c < 0 or c >= C.n for c in drop):
        raise IndexError(f"coordinates {drop} out of range for length {C.n}")
    if not drop:
        return C
    keep = [c for c in range(C.n) if c not in set(drop)]
    G = la.row_basis(C.tower, C.gen[:, keep])
    # Zero columns carry no weight, so only the others can lower the distance.
    live = int(np.count_nonzero(np.any(C.gen[:, drop] != 0, axis=0)))
    step = f"punctured coordinates {drop}"
    if G.shape[0] < C.k:
        return C.derive(G, step)
    if live == 0 and C.d is not None:
        return C.derive(G, step, d=C.d, d_method=C.d_method)
    lower = None if C.d_lower is None else max(1, C.d_lower - live)
    return C.derive(G, step, d_lower=lower)


def shorten_rowcol(C: LinearCode, s: int, require_systematic: bool = False) -> LinearCode:
    """Drop the last s rows of the echelon generator and their pivot columns.

    On (I_k | A) this deletes the last s rows and the s columns that become
    zero.  The result is an [n - s, k - s] subcode-on-fewer-coordinates;
    self-orthogonality and the MDS property carry over.
    """
    F = C.tower
    if not 1 <= s <= C.k - 1:
        raise SOutOfRange(f"s={s} is outside [1, {C.k - 1}]")
    R, piv = la.rref(F, C.gen)
    if require_systematic and not (
        piv == list(range(C.k)) and np.array_equal(C.gen[:, : C.k], np.eye(C.k, dtype=np.int64))
    ):
        raise NotSystematic("generator is not of the form (I_k | A)")
    k2 = C.k - s
    drop = piv[k2:]
    keep = [c for c in range(C.n) if c not in set(drop)]
    G = R[:k2][:, keep]
    d = d_lower = None
    if C.d is not None and C.d == C.n - C.k + 1:
        d = C.d  # (n - s) - (k - s) + 1
    elif C.d_lower is not None:
        d_lower = C.d_lower
    return C.derive(G, f"shortened: removed last {s} rows and pivot columns {list(drop)}", d=d, d_lower=d_lower,
                    d_method="MDS shortening" if d is not None else None)


# -- distance --------------------------------------------------------------------------


def min_weight(C: LinearCode, budget: int = DEFAULT_BUDGET, method: str = "auto") -> int:
    return weight_certificate(C, budget, method).d


def weight_certificate(C: LinearCode, budget: int = DEFAULT_BUDGET, method: str = "auto") -> WeightCertificate:
    if C._cert and method == "auto":
        return C._cert[0]
    cert = min_weight_certificate(C.tower, C.gen, budget, method)
    if C.d is not None and cert.d != C.d:
        raise AssertionError(f"stored distance {C.d} but search certifies {cert.d}")
    if C.d_lower is not None and cert.d < C.d_lower:
        raise AssertionError(f"certified distance {cert.d} is below the proven bound {C.d_lower}")
    if method == "auto":
        C._cert.append(cert)
    return cert


def certify(C: LinearCode, budget: int = DEFAULT_BUDGET) -> LinearCode:
    """Copy of C with its exact distance filled in."""
    if C.d is not None:
        return C
    cert = weight_certificate(C, budget)
    return C.with_distance(cert.d, cert.method)


def classify_distance(C: LinearCode, budget: int = DEFAULT_BUDGET) -> tuple[str, int]:
    """("MDS" | "AMDS" | "other", d) against the Singleton bound n - k + 1."""
    d = C.d if C.d is not None else min_weight(C, budget)
    singleton = C.n - C.k + 1
    if d > singleton:
        raise AssertionError(f"distance {d} exceeds the Singleton bound {singleton}")
    if d == singleton:
        return "MDS", d
    if d == singleton - 1:
        return "AMDS", d
    return "other", d


# -- serialization ------------------------------------------------------------------------


def code_to_json(C: LinearCode, hull_ell: int | None = None) -> dict[str, Any]:
    out: dict[str, Any] = {
        "field": C.tower.to_json(),
        "n": C.n,
        "k": C.k,
        "generator": la.matrix_to_json(C.tower, C.gen),
        "provenance": list(C.provenance),
    }
    if C.d is not None:
        out["d"] = C.d
        out["d_method"] = C.d_method
    if C.d_lower is not None:
        out["d_lower"] = C.d_lower
    if hull_ell is not None:
        out["hull_ell"] = hull_ell
    return out


def code_from_json(obj: dict[str, Any]) -> LinearCode:
    F = FieldTower.from_json(obj["field"])
    G = la.matrix_from_json(F, obj["generator"])
    C = LinearCode(
        F, G, tuple(obj.get("provenance", ())), d=obj.get("d"), d_lower=obj.get("d_lower"), d_method=obj.get("d_method")
    )
    if C.n != int(obj["n"]) or C.k != int(obj["k"]):
        raise ValueError("n/k fields do not match the generator matrix")
    return C
