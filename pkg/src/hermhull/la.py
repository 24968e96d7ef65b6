"""Dense exact linear algebra over GF(q^2).

Matrices are 2-D ``int64`` numpy arrays of element codes; every function takes
the :class:`~hermhull.gf.FieldTower` they live in as its first argument.
Nothing here mutates its inputs.
"""

from __future__ import annotations

from typing import Any

import numpy as np

from .gf import FieldTower


def as_matrix(M: Any, cols: int | None = None) -> np.ndarray:
    A = np.asarray(M, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape(1, -1) if A.size else np.zeros((0, cols or 0), dtype=np.int64)
    if A.ndim != 2:
        raise ValueError(f"expected a matrix, got shape {A.shape}")
    return A


def rref(F: FieldTower, M: Any) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form and its (strictly increasing) pivot columns.

    Zero rows are kept at the bottom, so the output has the input's shape.
    """
    A = as_matrix(M).copy()
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        if A[r, c] != 1:
            A[r] = F.mul(A[r], F.inv(A[r, c]))
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = F.sub(A[others], F.mul(A[others, c][:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A, pivots


def rank(F: FieldTower, M: Any) -> int:
    A = as_matrix(M)
    if A.size == 0:
        return 0
    return len(rref(F, A)[1])


def row_basis(F: FieldTower, M: Any) -> np.ndarray:
    """The nonzero rows of rref(M): a canonical basis of the row space."""
    A = as_matrix(M)
    R, piv = rref(F, A)
    return R[: len(piv)]


def kernel_basis(F: FieldTower, M: Any) -> np.ndarray:
    """Rows spanning the right null space {x : M x^T = 0}."""
    A = as_matrix(M)
    cols = A.shape[1]
    R, piv = rref(F, A) if A.shape[0] else (A, [])
    free = [c for c in range(cols) if c not in set(piv)]
    K = np.zeros((len(free), cols), dtype=np.int64)
    for row, f in enumerate(free):
        K[row, f] = 1
        for i, pc in enumerate(piv):
            K[row, pc] = F.neg(R[i, f])
    return K


def left_kernel(F: FieldTower, M: Any) -> np.ndarray:
    """Rows spanning {y : y M = 0}."""
    return kernel_basis(F, as_matrix(M).T)


def conj_transpose(F: FieldTower, M: Any) -> np.ndarray:
    """M-dagger: transpose with every entry raised to the q-th power."""
    A = as_matrix(M)
    return np.ascontiguousarray(F.frobenius(A.T)).reshape(A.shape[1], A.shape[0])


def hermitian_inner(F: FieldTower, x: Any, y: Any) -> int:
    """sum_i x_i * y_i^q."""
    return F.dot(np.asarray(x), F.frobenius(np.asarray(y)))


def gram_hermitian(F: FieldTower, G: Any) -> np.ndarray:
    """G G-dagger; entry (i, j) is the Hermitian product of rows i and j."""
    A = as_matrix(G)
    return F.matmul(A, conj_transpose(F, A))


def same_row_space(F: FieldTower, A: Any, B: Any) -> bool:
    RA, RB = row_basis(F, A), row_basis(F, B)
    return RA.shape == RB.shape and bool(np.array_equal(RA, RB))


def contains_rows(F: FieldTower, A: Any, V: Any) -> bool:
    """Whether every row of V lies in the row space of A."""
    A, V = as_matrix(A), as_matrix(V)
    if V.shape[0] == 0:
        return True
    return rank(F, np.vstack([A, V])) == rank(F, A)


def intersect_row_spaces(F: FieldTower, A: Any, B: Any) -> np.ndarray:
    """A basis (in rref) of rowspace(A) ∩ rowspace(B)."""
    A, B = row_basis(F, A), row_basis(F, B)
    if A.shape[0] == 0 or B.shape[0] == 0:
        return np.zeros((0, max(A.shape[1], B.shape[1])), dtype=np.int64)
    # (u, w) with uA + wB = 0 gives uA in both spaces.
    Y = left_kernel(F, np.vstack([A, B]))
    if Y.shape[0] == 0:
        return np.zeros((0, A.shape[1]), dtype=np.int64)
    return row_basis(F, F.matmul(Y[:, : A.shape[0]], A))


def systematic_form(F: FieldTower, G: Any) -> tuple[np.ndarray, list[int]]:
    """(I_k | A) form of a full-row-rank G and the column order producing it.

    Returns ``(S, perm)`` with ``S == rref(G)[:, perm]`` and ``perm`` the
    pivot columns followed by the remaining columns in order.  ``perm`` is
    the identity exactly when G's leading k columns are independent.
    """
    R, piv = rref(F, G)
    k = len(piv)
    rest = [c for c in range(R.shape[1]) if c not in set(piv)]
    perm = list(piv) + rest
    return R[:k][:, perm], perm


def inverse(F: FieldTower, M: Any) -> np.ndarray:
    A = as_matrix(M)
    k = A.shape[0]
    if A.shape != (k, k):
        raise ValueError("only square matrices have inverses")
    R, piv = rref(F, np.hstack([A, np.eye(k, dtype=np.int64)]))
    if piv[:k] != list(range(k)):
        raise ZeroDivisionError("matrix is singular")
    return R[:, k:]


def matrix_to_json(F: FieldTower, M: Any) -> dict[str, Any]:
    A = as_matrix(M)
    return {
        "rows": int(A.shape[0]),
        "cols": int(A.shape[1]),
        "entries": [[F.to_coeffs(x) for x in row] for row in A.tolist()],
    }


def matrix_from_json(F: FieldTower, obj: dict[str, Any]) -> np.ndarray:
    rows, cols = int(obj["rows"]), int(obj["cols"])
    A = np.zeros((rows, cols), dtype=np.int64)
    for i, row in enumerate(obj["entries"]):
        if len(row) != cols:
            raise ValueError(f"row {i} has {len(row)} entries, expected {cols}")
        for j, coeffs in enumerate(row):
            A[i, j] = F.from_coeffs(coeffs)
    if len(obj["entries"]) != rows:
        raise ValueError("row count does not match entries")
    return A
