"""Entanglement-assisted quantum code parameters from classical hull data."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Any

from .code import HullReport, LinearCode, hermitian_dual, hull, weight_certificate
from .errors import BoundViolated
from .minweight import DEFAULT_BUDGET

TAGS = ("MDS", "AMDS", "other", "unclassified")
CSV_FIELDS = ("q", "n", "k_classical", "d", "ell", "n_q", "k_q", "d_q", "c", "tag", "provenance")


@dataclass(frozen=True)
class EaqeccParams:
    """[[n, kq, d; c]]_q.  ``exact`` is False when d is only a lower bound."""

    n: int
    kq: int
    d: int
    c: int
    q: int
    exact: bool = True

    def __post_init__(self) -> None:
        if self.kq < 0 or not 0 <= self.c <= self.n:
            raise ValueError(f"invalid parameters {self}")

    def __str__(self) -> str:
        d = str(self.d) if self.exact else f">={self.d}"
        return f"[[{self.n},{self.kq},{d};{self.c}]]_{self.q}"

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.n, self.kq, self.d, self.c

    @property
    def tag(self) -> str:
        return singleton_classify(self)

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "k": self.kq, "d": self.d, "c": self.c, "q": self.q, "exact": self.exact,
                "tag": self.tag}


def _distance(C: LinearCode, budget: int) -> tuple[int, bool]:
    if C.d is not None:
        return C.d, True
    if C.d_lower is not None and budget <= 0:
        return C.d_lower, False
    return weight_certificate(C, budget).d, True


def dual_distance(C: LinearCode, budget: int = DEFAULT_BUDGET) -> tuple[int, bool]:
    """(d of C^{perp_h}, exact).  MDS codes have MDS duals, so d' = k + 1 there."""
    if C.d is not None and C.d == C.n - C.k + 1:
        return C.k + 1, True
    D = hermitian_dual(C)
    if D.k == 0:
        return C.n + 1, True
    return weight_certificate(D, budget).d, True


def derive_pair(
    C: LinearCode,
    hull_info: HullReport | int | None = None,
    d_dual: int | tuple[int, bool] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> tuple[EaqeccParams, EaqeccParams]:
    """[[n, k-ell, d; n-k-ell]] from C and [[n, n-k-ell, d'; k-ell]] from its dual.

    Distances not supplied are taken from C or certified by search;
    ``budget=0`` accepts C's proven lower bound instead.
    """
    if hull_info is None:
        ell = hull(C).ell
    else:
        ell = hull_info.ell if isinstance(hull_info, HullReport) else int(hull_info)
    n, k, q = C.n, C.k, C.q
    d, d_exact = _distance(C, budget)
    if d_dual is None:
        dd, dd_exact = dual_distance(C, budget)
    elif isinstance(d_dual, tuple):
        dd, dd_exact = d_dual
    else:
        dd, dd_exact = int(d_dual), True
    first = EaqeccParams(n, k - ell, d, n - k - ell, q, d_exact)
    second = EaqeccParams(n, n - k - ell, dd, k - ell, q, dd_exact)
    return first, second


def singleton_classify(P: EaqeccParams) -> str:
    """Tag against 2(d-1) <= n + c - k, which is only claimed for d <= (n+2)/2."""
    if not P.exact or 2 * P.d > P.n + 2:
        return "unclassified"
    lhs, rhs = 2 * (P.d - 1), P.n + P.c - P.kq
    if lhs > rhs:
        raise BoundViolated(f"{P} violates 2(d-1) <= n + c - k ({lhs} > {rhs})")
    if lhs == rhs:
        return "MDS"
    if lhs == rhs - 2:
        return "AMDS"
    return "other"


def csv_row(C: LinearCode, ell: int, P: EaqeccParams, provenance: str = "") -> dict[str, Any]:
    d = C.d if C.d is not None else (f">={C.d_lower}" if C.d_lower is not None else "")
    return {
        "q": P.q,
        "n": C.n,
        "k_classical": C.k,
        "d": d,
        "ell": ell,
        "n_q": P.n,
        "k_q": P.kq,
        "d_q": P.d if P.exact else f">={P.d}",
        "c": P.c,
        "tag": P.tag,
        "provenance": provenance or " | ".join(C.provenance),
    }


def rows_to_csv(rows: list[dict[str, Any]], fields: tuple[str, ...] = CSV_FIELDS) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()
