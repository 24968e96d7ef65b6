"""Exact minimum Hamming weight of a linear code.

Three certified methods are available:

* ``exhaustive``: every projective message of the given generator;
* ``information-set``: Brouwer-Zimmermann enumeration over a chain of
  information sets, stopping once the lower bound meets the best weight;
* ``dual-columns``: the least number of linearly dependent columns of a
  parity-check matrix, found by iterative deepening.

``auto`` takes the exhaustive path when ``Q**k`` fits the budget (Q the field
size) and otherwise whichever of the other two has the smaller projected
cost.  All methods return the same number.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import _kernels
from .errors import BudgetExceeded
from .gf import FieldTower
from .la import kernel_basis, rank, rref

DEFAULT_BUDGET = 1 << 28
METHODS = ("auto", "exhaustive", "information-set", "dual-columns")


@dataclass(frozen=True)
class WeightCertificate:
    d: int
    method: str
    work: int
    info_ranks: tuple[int, ...] = ()

    def to_json(self) -> dict[str, object]:
        return {"d": self.d, "method": self.method, "work": self.work, "info_ranks": list(self.info_ranks)}


@dataclass(frozen=True)
class InfoSet:
    gen: np.ndarray  # systematic on ``support``
    support: tuple[int, ...]
    fresh: int  # information positions not covered by earlier sets


def information_sets(F: FieldTower, G: np.ndarray) -> list[InfoSet]:
    """Greedy chain of information sets with disjoint fresh parts."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    covered: list[int] = []
    out: list[InfoSet] = []
    while True:
        fresh = [c for c in range(n) if c not in set(covered)]
        if not fresh:
            break
        _, piv = rref(F, G[:, fresh])
        if not piv:
            break
        new = [fresh[p] for p in piv]
        order = new + covered + [c for c in fresh if c not in set(new)]
        _, piv2 = rref(F, G[:, order])
        support = [order[p] for p in piv2]
        assert len(support) == k, "generator must have full row rank"
        order = support + [c for c in range(n) if c not in set(support)]
        R, _ = rref(F, G[:, order])
        gen = np.empty_like(G)
        gen[:, order] = R
        out.append(InfoSet(gen, tuple(order[:k]), len(new)))
        covered.extend(new)
    return out


def _bz_lower_bound(k: int, ranks: list[int], w: int) -> int:
    """Lower bound on unseen codewords after all messages of weight <= w."""
    return sum(max(0, w + 1 - (k - r)) for r in ranks)


def _bz_plan(k: int, ranks: list[int], Q: int, target: int) -> tuple[int, int]:
    """(message weight needed, enumeration work) to certify distance ``target``."""
    work = 0
    for w in range(1, k + 1):
        work += len(ranks) * comb(k, w) * (Q - 1) ** (w - 1)
        if _bz_lower_bound(k, ranks, w) >= target:
            return w, work
    return k, work


def _columns_plan(n: int, target: int) -> int:
    return sum(comb(n, w) for w in range(1, target + 1))


def _exhaustive(F: FieldTower, G: np.ndarray, backend: str | None) -> int:
    k, n = G.shape
    MG = _kernels.scaled_rows(F, G)
    best = n + 1
    for w in range(1, k + 1):
        best = _kernels.support_min_weight(F, MG, w, stop=0, best=best, backend=backend)
    return best


def _information_set(
    F: FieldTower, sets: list[InfoSet], budget: int, backend: str | None
) -> tuple[int, int]:
    k, n = sets[0].gen.shape
    Q = F.order
    ranks = [s.fresh for s in sets]
    tables = [_kernels.scaled_rows(F, s.gen) for s in sets]
    best = n + 1
    work = 0
    lower = 1
    for w in range(1, k + 1):
        step = len(sets) * comb(k, w) * (Q - 1) ** (w - 1)
        if work + step > budget:
            raise BudgetExceeded(
                f"information-set search needs more than {budget} codewords "
                f"(certified {lower} <= d <= {best})"
            )
        work += step
        for MG in tables:
            best = _kernels.support_min_weight(F, MG, w, stop=lower, best=best, backend=backend)
            if best <= lower:
                return best, work
        lower = max(lower, min(best, _bz_lower_bound(k, ranks, w)))
        if lower >= best:
            return best, work
    return best, work


def _dual_columns(
    F: FieldTower, G: np.ndarray, budget: int, backend: str | None, upper: int
) -> tuple[int, int]:
    k, n = G.shape
    H = kernel_basis(F, G)
    Hc = np.ascontiguousarray(H.T)
    work = 0
    for w in range(1, upper + 1):
        work += comb(n, w)
        if work > budget:
            raise BudgetExceeded(f"column-dependency search needs more than {budget} subsets (d >= {w})")
        if _kernels.dependent_set_exists(F, Hc, w, backend=backend):
            return w, work
    return upper, work


def min_weight_certificate(
    F: FieldTower,
    G: np.ndarray,
    budget: int = DEFAULT_BUDGET,
    method: str = "auto",
    backend: str | None = None,
) -> WeightCertificate:
    """Exact minimum weight of the row space of G (full row rank)."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    if k == 0:
        return WeightCertificate(0, "empty", 0)
    if rank(F, G) != k:
        raise ValueError("generator matrix must have full row rank")
    Q = F.order
    if method == "auto" and Q**k <= budget:
        method = "exhaustive"
    if method == "exhaustive":
        work = (Q**k - 1) // (Q - 1)
        if work > budget:
            raise BudgetExceeded(f"exhaustive search needs {work} codewords, budget {budget}")
        return WeightCertificate(_exhaustive(F, G, backend), "exhaustive", work)

    sets = information_sets(F, G)
    ranks = [s.fresh for s in sets]
    # Weight-one messages give an inexpensive upper bound to plan with.
    upper = min(int((s.gen != 0).sum(axis=1).min()) for s in sets)
    if method == "auto":
        _, bz_work = _bz_plan(k, ranks, Q, upper)
        col_work = _columns_plan(n, upper)
        method = "dual-columns" if col_work < bz_work else "information-set"
    if method == "dual-columns":
        d, work = _dual_columns(F, G, budget, backend, upper)
        return WeightCertificate(d, "dual-columns", work)
    d, work = _information_set(F, sets, budget, backend)
    return WeightCertificate(d, "information-set", work, tuple(ranks))


def certify_at_least(
    F: FieldTower, G: np.ndarray, target: int, budget: int = DEFAULT_BUDGET, backend: str | None = None
) -> WeightCertificate:
    """Prove d >= target: no target-1 or fewer parity-check columns are dependent."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    Hc = np.ascontiguousarray(kernel_basis(F, G).T)
    work = 0
    for w in range(1, target):
        work += comb(n, w)
        if work > budget:
            raise BudgetExceeded(f"proving d >= {target} needs more than {budget} column subsets")
        if _kernels.dependent_set_exists(F, Hc, w, backend=backend):
            raise ValueError(f"the code has a word of weight {w} < {target}")
    return WeightCertificate(target, "lower-bound (dual-columns)", work)


def min_weight(F: FieldTower, G: np.ndarray, budget: int = DEFAULT_BUDGET, method: str = "auto") -> int:
    return min_weight_certificate(F, G, budget, method).d


def brute_force_min_weight(F: FieldTower, G: np.ndarray) -> int:
    """Reference oracle: every message, no shortcuts.  Tiny codes only."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    msgs = np.indices((F.order,) * k).reshape(k, -1).T[1:]
    words = F.matmul(msgs, G)
    return int((words != 0).sum(axis=1).min())
