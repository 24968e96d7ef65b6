"""Genus-zero constructions: generalized Reed-Solomon codes on subsets of
GF(q^2) whose multipliers come from residues of dx/h(x), and their extension
by extra rows and lambda-scaled columns.

Throughout, S is an :class:`EvaluationSet`, ``v`` a multiplier vector and
``k`` the GRS dimension.  Row ``j`` of a GRS generator is ``(v_i * a_i**j)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Any

import numpy as np

from . import la
from .code import LinearCode, hull, is_self_orthogonal, puncture
from .errors import (
    BadDivisibility,
    DoesNotDivide,
    HypothesisFails,
    KTooLarge,
    NormConditionFails,
    NormUnsolvable,
    NotEnoughZeroLambdas,
    NotInSubfield,
    NotSelfOrthogonal,
)
from .gf import FieldTower


@dataclass(frozen=True, eq=False)
class EvaluationSet:
    """Ordered distinct evaluation points, nonzero ones by ascending log, 0 last."""

    tower: FieldTower
    alphas: np.ndarray
    kind: str = "explicit"
    params: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        a = np.asarray(self.alphas, dtype=np.int64)
        if a.ndim != 1 or len(np.unique(a)) != a.size:
            raise ValueError("evaluation points must be distinct")
        a.setflags(write=False)
        object.__setattr__(self, "alphas", a)

    @property
    def n(self) -> int:
        return int(self.alphas.size)

    def __len__(self) -> int:
        return self.n

    def describe(self) -> str:
        extra = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()) if k not in ("betas",))
        return f"{self.kind} set of {self.n} points" + (f" ({extra})" if extra else "")


def _ordered(F: FieldTower, pts: np.ndarray) -> np.ndarray:
    pts = np.asarray(pts, dtype=np.int64)
    nz = pts[pts != 0]
    nz = nz[np.argsort(F.log[nz], kind="stable")]
    return np.concatenate([nz, pts[pts == 0]])


def subgroup(F: FieldTower, order: int) -> np.ndarray:
    """The cyclic subgroup of GF(q^2)* of the given order, by ascending log."""
    if (F.order - 1) % order:
        raise DoesNotDivide(f"{order} does not divide {F.order - 1}")
    step = (F.order - 1) // order
    return F.element(np.arange(order) * step)


def unity_set(F: FieldTower, n: int) -> EvaluationSet:
    """The (n-1)-th roots of unity followed by 0."""
    if n < 2 or (F.order - 1) % (n - 1):
        raise DoesNotDivide(f"n - 1 = {n - 1} does not divide q^2 - 1 = {F.order - 1}")
    pts = np.concatenate([subgroup(F, n - 1), [0]])
    return EvaluationSet(F, pts, "unity", {"n": n})


def multicoset_set(F: FieldTower, N: int, t: int, a: int | None = None) -> EvaluationSet:
    """U_N together with t further cosets of U_N, plus 0.

    Without ``a`` the cosets are alpha_j U_N for the least-log representatives
    alpha_j = g^j of V_N / U_N, where V_N = <g>, g = w^((q-1)/n1) and
    n1 = gcd(N, q - 1).  With ``a`` in {3, 4} (and N = q + 1, t = 2) the
    cosets are beta_1 U_N and beta_2 U_N with beta_1 of order dividing
    2(q+1) outside U_N and beta_2 of order dividing a(q+1) outside U_{2(q+1)}.
    In both cases alpha_j^N must lie in GF(q); the norm preimages
    beta_j with beta_j^(q+1) = alpha_j^N are recorded.
    """
    q, Q = F.q, F.order
    if N < 1 or (Q - 1) % N:
        raise BadDivisibility(f"N = {N} does not divide q^2 - 1 = {Q - 1}")
    if t == 0 and a is None:
        S = unity_set(F, N + 1)
        return EvaluationSet(F, S.alphas, "unity", {"n": N + 1, "N": N, "t": 0})
    U = subgroup(F, N)
    if a is None:
        n1 = gcd(N, q - 1)
        n2 = N // n1
        if (q + 1) % n2:
            raise BadDivisibility(f"n2 = {n2} does not divide q + 1")
        tmax = (q + 1) // n2 - 1
        if not 1 <= t <= tmax:
            raise BadDivisibility(f"t = {t} is outside [1, {tmax}]")
        g_log = (q - 1) // n1
        rep_logs = [j * g_log for j in range(1, t + 1)]
    else:
        if a not in (3, 4) or (q - 1) % a:
            raise BadDivisibility(f"a = {a} must be 3 or 4 and divide q - 1 = {q - 1}")
        if N != q + 1 or t != 2:
            raise BadDivisibility("the a-shaped set needs N = q + 1 and t = 2")
        rep_logs = [(q - 1) // 2, (q - 1) // a]
    reps = [int(F.element(e)) for e in rep_logs]
    a_vals = [int(F.pow(r, N)) for r in reps]
    betas = []
    for j, (r, av) in enumerate(zip(reps, a_vals)):
        if not F.is_subfield(av):
            raise NormConditionFails(f"alpha_{j + 1}^N = w^{int(F.log[av])} is not in GF({q})")
        betas.append(F.solve_norm(av))
    pts = np.concatenate([U] + [F.mul(r, U) for r in reps] + [np.array([0])])
    if len(np.unique(pts)) != pts.size:
        raise BadDivisibility("cosets are not distinct")
    params: dict[str, Any] = {"N": N, "t": t, "reps": reps, "betas": betas}
    if a is not None:
        params["a"] = a
    return EvaluationSet(F, _ordered(F, pts), "multicoset", params)


def explicit_set(F: FieldTower, alphas: Any) -> EvaluationSet:
    return EvaluationSet(F, np.asarray(alphas, dtype=np.int64), "explicit")


# -- residues and multipliers ---------------------------------------------------------


def h_derivative(S: EvaluationSet) -> np.ndarray:
    """h'(alpha_i) = prod_{j != i} (alpha_i - alpha_j) for h = prod (x - alpha)."""
    F = S.tower
    a = S.alphas
    diff = F.sub(a[:, None], a[None, :])
    np.fill_diagonal(diff, 1)
    logs = F.log[diff].sum(axis=1) % (F.order - 1)
    return F.element(logs)


def h_derivative_closed_form(S: EvaluationSet) -> np.ndarray:
    """h' from the structure of unity and multicoset sets.

    With h = x * prod_j (x^N - c_j) (c_0 = 1, c_j = alpha_j^N) a root z of
    x^N = c_j gives h'(z) = N c_j prod_{i != j} (c_j - c_i), and h'(0) is
    prod_j (-c_j).  Unity sets are the case of a single coset.
    """
    F = S.tower
    a = S.alphas
    if S.kind == "unity":
        n = S.n
        out = np.full(n, (n - 1) % F.p, dtype=np.int64)  # n - 1 is a unit since it divides q^2 - 1
        out[a == 0] = F.neg(1)
        return out
    if S.kind != "multicoset":
        raise ValueError("closed form only exists for unity and multicoset sets")
    N = S.params["N"]
    c = [1] + [int(F.pow(r, N)) for r in S.params["reps"]]
    Nf = N % F.p
    vals = []
    for j, cj in enumerate(c):
        val = F.mul(Nf, cj)
        for i, ci in enumerate(c):
            if i != j:
                val = F.mul(val, F.sub(cj, ci))
        vals.append(int(val))
    out = np.empty(S.n, dtype=np.int64)
    powN = F.pow(a, N)
    for j, cj in enumerate(c):
        out[(a != 0) & (powN == cj)] = vals[j]
    zero = 1
    for cj in c:
        zero = F.mul(zero, F.neg(cj))
    out[a == 0] = zero
    return out


def residues(S: EvaluationSet) -> np.ndarray:
    """Residues 1/h'(alpha_i) of dx/h(x) at the evaluation points."""
    return S.tower.inv(h_derivative(S))


def multipliers(S: EvaluationSet) -> np.ndarray:
    """v with v_i^(q+1) equal to the i-th residue (least-log choice)."""
    F = S.tower
    res = residues(S)
    bad = np.flatnonzero(~np.asarray(F.is_subfield(res)))
    if bad.size:
        i = int(bad[0])
        raise NotInSubfield(f"residue at point {i} is not in GF({F.q})", index=i)
    return np.array([F.solve_norm(r) for r in res.tolist()], dtype=np.int64)


# -- GRS codes -----------------------------------------------------------------------


def grs_matrix(S: EvaluationSet, v: Any, exponents: Any) -> np.ndarray:
    F = S.tower
    e = np.asarray(exponents, dtype=np.int64)
    return F.mul(np.asarray(v, dtype=np.int64)[None, :], F.pow(S.alphas[None, :], e[:, None]))


def grs_code(S: EvaluationSet, v: Any, k: int) -> LinearCode:
    """[n, k, n - k + 1] code with generator rows (v_i alpha_i^j), 0 <= j < k."""
    if not 1 <= k <= S.n:
        raise KTooLarge(f"k = {k} must lie in [1, {S.n}]")
    v = np.asarray(v, dtype=np.int64)
    if v.shape != (S.n,) or np.any(v == 0):
        raise ValueError("multipliers must be n nonzero elements")
    G = grs_matrix(S, v, range(k))
    return LinearCode(S.tower, G, (f"GRS k={k} on {S.describe()}",), d=S.n - k + 1, d_method="GRS")


def check_so(C: LinearCode) -> bool:
    """Whether C is Hermitian self-orthogonal (zero Gram matrix)."""
    return is_self_orthogonal(C)


def so_bound(n: int, q: int) -> int:
    """Largest k allowed by the residue self-orthogonality condition."""
    return (n + q - 1) // (q + 1)


def find_multipliers(S: EvaluationSet, k: int, seed: int = 0, trials: int = 10_000) -> np.ndarray | None:
    """Search for v making grs_code(S, v, k) Hermitian self-orthogonal.

    Looks for u in (GF(q)*)^n with sum_i u_i alpha_i^(a + b q) = 0 for all
    0 <= a, b < k, then takes v_i = solve_norm(u_i).  The solution space is
    stable under conjugation, so traces of a kernel basis span it over GF(q).
    Returns None when no everywhere-nonzero vector turns up.
    """
    F = S.tower
    q = F.q
    if not 1 <= k <= S.n:
        raise KTooLarge(f"k = {k} must lie in [1, {S.n}]")
    exps = sorted({a + b * q for a in range(k) for b in range(k)})
    M = F.pow(S.alphas[None, :], np.array(exps)[:, None])
    K = la.kernel_basis(F, M)
    if K.shape[0] == 0:
        return None
    spans = []
    for c in (1, F.w):
        cK = F.mul(c, K)
        spans.append(F.add(cK, F.frobenius(cK)))
    B = la.row_basis(F, np.vstack(spans))
    assert np.all(F.is_subfield(B))

    def accept(u: np.ndarray) -> np.ndarray | None:
        if np.any(u == 0):
            return None
        v = np.array([F.solve_norm(x) for x in u.tolist()], dtype=np.int64)
        return v if check_so(grs_code(S, v, k)) else None

    ones = np.ones(S.n, dtype=np.int64)
    if la.contains_rows(F, B, ones):
        found = accept(ones)
        if found is not None:
            return found
    rng = np.random.default_rng(seed)
    sub = F.subfield_elements()
    for _ in range(trials):
        coeffs = sub[rng.integers(0, sub.size, size=B.shape[0])]
        found = accept(F.matmul(coeffs[None, :], B)[0])
        if found is not None:
            return found
    return None


# -- embeddings ------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class EmbedResult:
    code: LinearCode
    lambdas: np.ndarray
    I: tuple[int, ...]
    S: EvaluationSet
    v: np.ndarray
    k: int
    i: int
    branch: str | None = None

    def to_json(self) -> dict[str, Any]:
        from .code import code_to_json

        F = self.code.tower
        return {
            "code": code_to_json(self.code, hull_ell=self.code.k),
            "lambdas": [F.to_coeffs(x) for x in self.lambdas.tolist()],
            "lambda_logs": [None if x == 0 else int(F.log[x]) for x in self.lambdas.tolist()],
            "I": list(self.I),
            "k": self.k,
            "i": self.i,
            "branch": self.branch,
        }


def applicable_branches(S: EvaluationSet, k: int, i: int) -> list[str]:
    """Which sufficient conditions for the i-row extension hold."""
    q, n = S.tower.q, S.n
    out: list[str] = []
    if not (1 <= k <= so_bound(n, q) and 0 <= i <= q):
        return out
    if S.kind == "unity":
        if (k * (q + 1)) % (n - 1) == 0:
            out.append("unity: (n-1) | k(q+1)")
        if ((k + 1) * (q + 1)) % (n - 1) == 0 and i <= 2:
            out.append("unity: (n-1) | (k+1)(q+1), i <= 2")
    if S.kind == "multicoset" and "a" in S.params and k == 3:
        out.append(f"three cosets of U_(q+1), a = {S.params['a']}")
    if q % 2 == 1 and 2 <= k and 2 * (k + q) <= n:
        out.append("odd q: k + q <= n/2")
    return out


def norm_sum(S: EvaluationSet, v: Any, e: int) -> int:
    """sum_j v_j^(q+1) alpha_j^((q+1) e)."""
    F = S.tower
    terms = F.mul(F.norm(np.asarray(v, dtype=np.int64)), F.pow(S.alphas, (F.q + 1) * e))
    return int(F.sum(terms))


def build_Gi(S: EvaluationSet, v: Any, k: int, i: int, strict: bool = False) -> EmbedResult:
    """Extend grs_code(S, v, k) by i rows v*alpha^(k-1+r) with lambda_r in a new column.

    lambda_r solves lambda^(q+1) = -S_r with S_r = norm_sum(S, v, k-1+r)
    (least log; 0 when S_r = 0).  The zero Gram matrix is always checked.
    With ``strict`` the call also refuses inputs outside the known
    sufficient conditions.
    """
    F = S.tower
    v = np.asarray(v, dtype=np.int64)
    base = grs_code(S, v, k)
    if i == 0:
        return EmbedResult(base, np.zeros(0, dtype=np.int64), (), S, v, k, 0, None)
    if i < 0 or k + i > S.n:
        raise KTooLarge(f"k + i = {k + i} exceeds n = {S.n}")
    branches = applicable_branches(S, k, i)
    if strict and not branches:
        raise HypothesisFails(f"no known sufficient condition covers q={F.q}, n={S.n}, k={k}, i={i}")
    lambdas = np.zeros(i, dtype=np.int64)
    for r in range(1, i + 1):
        s = norm_sum(S, v, k - 1 + r)
        if s == 0:
            continue
        if not F.is_subfield(s):
            raise NormUnsolvable(f"S_{r} is not in GF({F.q})", r)
        lambdas[r - 1] = F.solve_norm(F.neg(s))
    n = S.n
    G = np.zeros((k + i, n + i), dtype=np.int64)
    G[:, :n] = grs_matrix(S, v, range(k + i))
    for r in range(1, i + 1):
        G[k - 1 + r, n + r - 1] = lambdas[r - 1]
    I = tuple(r for r in range(1, i + 1) if lambdas[r - 1] != 0)
    step = f"extended by i={i} rows; I={list(I)}; " + ("; ".join(branches) if branches else "no listed hypothesis")
    code = LinearCode(F, G, base.provenance + (step,), d_lower=n - k - i + 1)
    if not check_so(code):
        raise NotSelfOrthogonal(f"extension with i={i} is not Hermitian self-orthogonal ({step})")
    return EmbedResult(code, lambdas, I, S, v, k, i, branches[0] if branches else None)


def embed_step(S: EvaluationSet, v: Any, k: int, strict: bool = False) -> LinearCode:
    """The [n+1, k+1] self-orthogonal extension (one extra row and column)."""
    if strict and k > so_bound(S.n, S.tower.q):
        raise HypothesisFails(f"k = {k} exceeds floor((n+q-1)/(q+1)) = {so_bound(S.n, S.tower.q)}")
    return build_Gi(S, v, k, 1).code


@dataclass(frozen=True)
class GammaProfile:
    gamma: tuple[int, ...]
    failures: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def gamma_profile(E: EmbedResult) -> GammaProfile:
    """gamma_e = -sum_j v_j^(q+1) alpha_j^((q+1) e) and the four structural checks.

    For a self-orthogonal extension this equals <g,g>_h minus the GRS part for
    each row, i.e. lambda^(q+1) on the extra rows.
    """
    F = E.code.tower
    q, k, i = F.q, E.k, E.i
    top = k - 1 + max(i, 1) + q - 1
    gamma = [int(F.neg(norm_sum(E.S, E.v, e))) for e in range(top + 1)]
    fails: list[str] = []
    if any(gamma[e] for e in range(k)):
        fails.append("gamma_0..gamma_(k-1) not all zero")
    for t in range(1, k):
        if gamma[t] != gamma[t + q - 1]:
            fails.append(f"gamma_{t} != gamma_{t + q - 1}")
    for j in range(1, i + 1):
        e = k - 1 + j
        if gamma[e] != int(F.norm(E.lambdas[j - 1])):
            fails.append(f"gamma_{e} != lambda_{j}^(q+1)")
        if gamma[e] != gamma[e + q - 1]:
            fails.append(f"gamma_{e} != gamma_{e + q - 1}")
    if len(E.I) > q - k + 1:
        fails.append(f"#I = {len(E.I)} exceeds q - k + 1 = {q - k + 1}")
    return GammaProfile(tuple(gamma), tuple(fails))


def expand_dimension(E: EmbedResult) -> LinearCode:
    """[n, 2k-1, >= n-k-q+2] subcode: the GRS rows plus k-1 rows whose lambda is 0.

    The last i columns vanish on the chosen rows and are punctured.
    """
    F = E.code.tower
    q, k, n = F.q, E.k, E.S.n
    base = grs_code(E.S, E.v, k)
    if k == 1:
        return base
    zero_rows = [r for r in range(1, E.i + 1) if E.lambdas[r - 1] == 0]
    if len(zero_rows) < k - 1:
        raise NotEnoughZeroLambdas(f"need {k - 1} rows with lambda = 0, found {len(zero_rows)}")
    chosen = zero_rows[-(k - 1) :]
    exps = list(range(k)) + [k - 1 + r for r in chosen]
    G = grs_matrix(E.S, E.v, exps)
    step = f"subcode with exponents {exps} (zero-lambda rows {chosen}), extra columns punctured"
    C = LinearCode(F, G, base.provenance + (step,), d_lower=n - k - q + 2)
    if not check_so(C):
        raise NotSelfOrthogonal(step)
    return C


def drop_zero_columns(E: EmbedResult) -> LinearCode:
    """Delete the extra columns whose lambda is 0: an [n + #I, k + i] self-orthogonal code."""
    n = E.S.n
    zero = [n + r - 1 for r in range(1, E.i + 1) if E.lambdas[r - 1] == 0]
    return puncture(E.code, zero)


def hull_pipeline(E: EmbedResult) -> LinearCode:
    """Puncture the i extra columns: an [n, k+i] GRS code with hull dimension k+i-#I."""
    n, ki = E.S.n, E.k + E.i
    C = puncture(E.code, range(n, n + E.i))
    if C.k != ki:
        raise AssertionError(f"punctured rank {C.k} differs from k + i = {ki}")
    C = C.with_distance(n - ki + 1, "GRS")
    expected = ki - len(E.I)
    ell = hull(C).ell
    if ell != expected:
        raise AssertionError(f"hull dimension {ell} differs from k + i - #I = {expected}")
    return C
