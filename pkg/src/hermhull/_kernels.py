"""Hot loops of the minimum-weight search, compiled with numba when possible.

Two kernels are provided, each in a compiled and a pure-numpy flavour with
identical results:

``support_min_weight``
    Least weight among codewords ``sum_t c_t * row_t`` whose message has
    exactly ``w`` nonzero coefficients, the first of them equal to 1.
``dependent_set_exists``
    Whether some ``w`` columns of a parity-check matrix are linearly
    dependent.

Set ``HERMHULL_DISABLE_NUMBA=1`` to force the numpy versions.  Compiled
kernels need an addition table, so fields of odd characteristic larger than
``NUMBA_MAX_ORDER`` always take the numpy path.
"""

from __future__ import annotations

import itertools
import os

import numpy as np

from .gf import FieldTower

NUMBA_MAX_ORDER = 1 << 12

try:  # pragma: no cover - exercised implicitly by the import
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False


def numba_enabled() -> bool:
    flag = os.environ.get("HERMHULL_DISABLE_NUMBA", "").strip().lower()
    return HAVE_NUMBA and flag in ("", "0", "false", "no")


def backend_for(F: FieldTower, backend: str | None = None) -> str:
    """Resolve "auto"/None to "numba" or "numpy" for this field."""
    if backend in ("numba", "numpy"):
        if backend == "numba" and not HAVE_NUMBA:
            raise RuntimeError("numba is not installed")
        return backend
    if not numba_enabled():
        return "numpy"
    if F.p != 2 and F.order > NUMBA_MAX_ORDER:
        return "numpy"
    return "numba"


# -- field tables for compiled code -------------------------------------------


_TABLES: dict[FieldTower, tuple[np.ndarray, ...]] = {}


def field_tables(F: FieldTower) -> tuple[np.ndarray, ...]:
    """(add, log_ext, exp_ext, inv, neg, xor_flag) as contiguous arrays."""
    if F not in _TABLES:
        if F.p == 2:
            add = np.zeros((1, 1), dtype=np.int32)
        else:
            a = np.arange(F.order)
            add = F.add(a[:, None], a[None, :]).astype(np.int32)
        _TABLES[F] = (
            add,
            np.ascontiguousarray(F._log_ext),
            np.ascontiguousarray(F._exp_ext),
            np.ascontiguousarray(F._inv),
            np.ascontiguousarray(F._neg),
            np.array([1 if F.p == 2 else 0], dtype=np.int64),
        )
    return _TABLES[F]


def scaled_rows(F: FieldTower, G: np.ndarray) -> np.ndarray:
    """MG[t, a, :] = a * G[t, :] for every field element a."""
    G = np.asarray(G, dtype=np.int64)
    return np.ascontiguousarray(
        F.mul(np.arange(F.order)[None, :, None], G[:, None, :]).astype(np.int32)
    )


# -- compiled kernels -----------------------------------------------------------


def _support_min_weight_py(MG, w, addt, xor, stop, best):  # pragma: no cover - compiled
    k, Q, n = MG.shape
    idx = np.empty(w, np.int64)
    coef = np.empty(w, np.int64)
    acc = np.empty((w, n), np.int32)
    for t in range(w):
        idx[t] = t
    while True:
        for t in range(w):
            coef[t] = 1
        for j in range(n):
            acc[0, j] = MG[idx[0], 1, j]
        for t in range(1, w):
            for j in range(n):
                a = acc[t - 1, j]
                b = MG[idx[t], 1, j]
                acc[t, j] = (a ^ b) if xor else addt[a, b]
        while True:
            wt = 0
            for j in range(n):
                if acc[w - 1, j] != 0:
                    wt += 1
                    if wt >= best:
                        break
            if wt < best:
                best = wt
                if best <= stop:
                    return best
            t = w - 1
            while t >= 1 and coef[t] == Q - 1:
                t -= 1
            if t < 1:
                break
            coef[t] += 1
            for u in range(t + 1, w):
                coef[u] = 1
            for u in range(t, w):
                for j in range(n):
                    a = acc[u - 1, j]
                    b = MG[idx[u], coef[u], j]
                    acc[u, j] = (a ^ b) if xor else addt[a, b]
        t = w - 1
        while t >= 0 and idx[t] == k - w + t:
            t -= 1
        if t < 0:
            return best
        idx[t] += 1
        for u in range(t + 1, w):
            idx[u] = idx[u - 1] + 1


def _dependent_set_exists_py(Hc, w, addt, xor, log_ext, exp_ext, inv, neg):  # pragma: no cover
    n, r = Hc.shape
    if w > n:
        return False
    basis = np.zeros((w, r), np.int64)
    piv = np.zeros(w, np.int64)
    cand = np.zeros(w, np.int64)
    vec = np.zeros(r, np.int64)
    t = 0
    cand[0] = 0
    while t >= 0:
        if cand[t] > n - (w - t):
            t -= 1
            if t >= 0:
                cand[t] += 1
            continue
        for j in range(r):
            vec[j] = Hc[cand[t], j]
        for l in range(t):
            f = vec[piv[l]]
            if f != 0:
                nf = neg[f]
                for j in range(r):
                    b = basis[l, j]
                    if b != 0:
                        prod = exp_ext[log_ext[nf] + log_ext[b]]
                        a = vec[j]
                        vec[j] = (a ^ prod) if xor else addt[a, prod]
        p = -1
        for j in range(r):
            if vec[j] != 0:
                p = j
                break
        if p < 0:
            return True
        if t == w - 1:
            cand[t] += 1
            continue
        s = inv[vec[p]]
        for j in range(r):
            basis[t, j] = exp_ext[log_ext[vec[j]] + log_ext[s]] if vec[j] != 0 else 0
        piv[t] = p
        t += 1
        cand[t] = cand[t - 1] + 1
    return False


if HAVE_NUMBA:
    _support_min_weight_nb = numba.njit(cache=True, nogil=True)(_support_min_weight_py)
    _dependent_set_exists_nb = numba.njit(cache=True, nogil=True)(_dependent_set_exists_py)


# -- numpy fallbacks ------------------------------------------------------------

_CHUNK = 1 << 16


def _support_min_weight_np(F: FieldTower, MG: np.ndarray, w: int, stop: int, best: int) -> int:
    k, Q, n = MG.shape
    MG = MG.astype(np.int64)
    # Vectorize the trailing levels, loop over the leading ones.
    vec_levels = 0
    while vec_levels < w - 1 and (Q - 1) ** (vec_levels + 1) <= _CHUNK:
        vec_levels += 1
    loop_levels = w - 1 - vec_levels
    for idx in itertools.combinations(range(k), w):
        head, tail = idx[: 1 + loop_levels], idx[1 + loop_levels :]
        tail_sum = np.zeros((1, n), dtype=np.int64)
        for t in tail:
            tail_sum = F.add(tail_sum[:, None, :], MG[t, 1:][None, :, :]).reshape(-1, n)
        for coefs in itertools.product(range(1, Q), repeat=loop_levels):
            base = MG[head[0], 1]
            for t, c in zip(head[1:], coefs):
                base = F.add(base, MG[t, c])
            words = F.add(tail_sum, base[None, :])
            wt = int((words != 0).sum(axis=1).min())
            if wt < best:
                best = wt
                if best <= stop:
                    return best
    return best


def _dependent_set_exists_np(F: FieldTower, Hc: np.ndarray, w: int) -> bool:
    from .la import rank

    n, r = Hc.shape
    if w > n:
        return False
    for idx in itertools.combinations(range(n), w):
        if rank(F, Hc[list(idx)]) < w:
            return True
    return False


# -- dispatch -------------------------------------------------------------------


def support_min_weight(
    F: FieldTower, MG: np.ndarray, w: int, stop: int = 0, best: int | None = None, backend: str | None = None
) -> int:
    """Least weight over messages of support size w (or ``best`` if smaller).

    Stops as soon as a weight ``<= stop`` is seen; the value returned is then
    some weight ``<= stop``, not necessarily the least, and may differ between
    backends.  ``MG`` comes from :func:`scaled_rows`.
    """
    k, Q, n = MG.shape
    if best is None:
        best = n + 1
    if w < 1 or w > k:
        return best
    if backend_for(F, backend) == "numba":
        add, *_, xor = field_tables(F)
        return int(_support_min_weight_nb(MG, w, add, bool(xor[0]), stop, best))
    return _support_min_weight_np(F, MG, w, stop, best)


def dependent_set_exists(F: FieldTower, Hc: np.ndarray, w: int, backend: str | None = None) -> bool:
    """Whether some w rows of ``Hc`` (the columns of a parity-check matrix) are dependent."""
    Hc = np.ascontiguousarray(np.asarray(Hc, dtype=np.int64))
    if w < 1:
        return False
    if Hc.shape[1] == 0:
        return w <= Hc.shape[0]
    if backend_for(F, backend) == "numba":
        add, log_ext, exp_ext, inv, neg, xor = field_tables(F)
        return bool(_dependent_set_exists_nb(Hc, w, add, bool(xor[0]), log_ext, exp_ext, inv, neg))
    return _dependent_set_exists_np(F, Hc, w)
