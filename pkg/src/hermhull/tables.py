"""Regeneration of the published tables of self-orthogonal codes, elliptic
point counts and entanglement-assisted quantum codes.

Each row is rebuilt by running its construction and compared with the
printed entry.  Status values:

``verified``      every printed number reproduced, distances certified
``bound-only``    matches, but a distance is known (printed or here) only as a bound
``mismatch``      the construction runs but disagrees with the printed entry
``unreproduced``  the construction failed or a certificate ran out of budget
``external``      the row rests on a construction outside this package
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from .code import LinearCode, adjust_hull, hermitian_dual, hull, search_hull, shorten_rowcol, weight_certificate
from .curves import CurveSpec, ag_code, elliptic_points, elliptic_table_count, trace_one_elements
from .eaqecc import EaqeccParams, derive_pair, singleton_classify
from .errors import BudgetExceeded, HermHullError
from .gf import tower_for_q
from .lines import (
    EmbedResult,
    EvaluationSet,
    build_Gi,
    check_so,
    drop_zero_columns,
    explicit_set,
    find_multipliers,
    grs_code,
    hull_pipeline,
    multicoset_set,
    multipliers,
    subgroup,
    unity_set,
)
from .minweight import DEFAULT_BUDGET, certify_at_least

STATUSES = ("verified", "bound-only", "mismatch", "unreproduced", "external")
TABLES = ("I", "II", "II-points", "III", "IV", "V")


@dataclass
class TableRow:
    table: str
    row: str
    listed: str
    ours: str = ""
    status: str = "unreproduced"
    note: str = ""
    certificates: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        cert = ";".join(f"{k}={v}" for k, v in self.certificates.items())
        return {"table": self.table, "row": self.row, "listed": self.listed, "ours": self.ours,
                "status": self.status, "note": self.note, "certificates": cert}


CSV_COLUMNS = ("table", "row", "listed", "ours", "status", "note", "certificates")


# -- printed entries ------------------------------------------------------------------

_QUANTUM = re.compile(r"^\[\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(>=)?\s*(\d+)\s*;\s*(\d+)\s*\]\]$")


def parse_quantum(text: str) -> tuple[int, int, int, int, bool] | None:
    """(n, k, d, c, d_is_bound) from "[[n,k,d;c]]" or "[[n,k,>=d;c]]"; None if garbled."""
    m = _QUANTUM.match(text.strip())
    if not m:
        return None
    n, k, bound, d, c = m.groups()
    return int(n), int(k), int(d), int(c), bound is not None


def compare_quantum(listed: str, P: EaqeccParams) -> tuple[str, str]:
    parsed = parse_quantum(listed)
    if parsed is None:
        return "mismatch", f"printed entry {listed!r} is not a parameter tuple"
    n, k, d, c, bound = parsed
    if (n, k, c) != (P.n, P.kq, P.c):
        return "mismatch", f"(n, k, c) = {(P.n, P.kq, P.c)} here"
    if bound or not P.exact:
        if P.d >= d:
            return "bound-only", ""
        if not P.exact:
            return "bound-only", f"only d >= {P.d} is proven here"
        return "mismatch", f"certified d = {P.d} is below the printed bound"
    if P.d != d:
        return "mismatch", f"d = {P.d} here"
    return "verified", ""


def _q(n: int, k: int, d: int | str, c: int) -> str:
    return f"[[{n},{k},{d};{c}]]"


# Tables I and II: (q, set, k, rows), each row (i, code, punctured code or None, I).
# Sets: ("unity", n) or ("three-cosets", n, a).
SO_TABLES: dict[str, list[tuple[int, tuple, int, list[tuple]]]] = {
    "I": [
        (2, ("unity", 4), 1, [(1, "5,2,4", None, (1,)), (2, "6,3,4", None, (1, 2))]),
        (3, ("unity", 5), 1, [(1, "6,2,5", None, (1,)), (2, "7,3,4", None, (1, 2)), (3, "8,4,4", None, (1, 2, 3))]),
        (3, ("unity", 9), 2, [(1, "10,3,8", None, (1,)), (2, "11,4,6", "10,4,6", (1,)),
                              (3, "12,5,6", "11,5,6", (1, 3))]),
        (4, ("unity", 6), 1, [(1, "7,2,6", None, (1,)), (2, "8,3,6", None, (1, 2)), (3, "9,4,6", None, (1, 2, 3)),
                              (4, "10,5,6", None, (1, 2, 3, 4))]),
        (4, ("unity", 16), 3, [(1, "17,4,14", None, (1,)), (2, "18,5,12", "17,5,12", (1,)),
                               (3, "19,6,11", "17,6,11", (1,)), (4, "20,7,11", "18,7,11", (1, 4))]),
    ],
    "II": [
        (5, ("unity", 7), 1, [(1, "8,2,7", None, (1,)), (2, "9,3,6", None, (1, 2)), (3, "10,4,5", None, (1, 2, 3)),
                              (4, "11,5,5", None, (1, 2, 3, 4)), (5, "12,6,5", None, (1, 2, 3, 4, 5))]),
        (5, ("unity", 9), 2, [(1, "10,3,7", "9,3,7", ()), (2, "11,4,6", "9,4,6", ())]),
        (5, ("unity", 13), 2, [(1, "14,3,12", None, (1,)), (2, "15,4,10", "14,4,10", (1,)),
                               (3, "16,5,10", "15,5,10", (1, 3)), (4, "17,6,8", "15,6,8", (1, 3)),
                               (5, "18,7,8", "16,7,8", (1, 3, 5))]),
        (5, ("three-cosets", 19, 4), 3, [(1, "20,4,17", None, (1,)), (2, "21,5,16", None, (1, 2)),
                                         (3, "22,6,14", "21,6,14", (1, 2)), (4, "23,7,13", "21,7,13", (1, 2)),
                                         (5, "24,8,13", "22,8,13", (1, 2, 5))]),
        (5, ("unity", 25), 4, [(1, "26,5,22", "26,5,22", (1,)), (2, "27,6,20", "26,6,20", (1,)),
                               (3, "28,7,19", "26,7,19", (1,)), (4, "29,8,18", "26,8,18", (1,)),
                               (5, "30,9,18", "27,9,18", (1, 5))]),
        (7, ("unity", 13), 2, [(1, "14,3,11", "13,3,11", ()), (2, "15,4,11", "14,4,11", (2,)),
                               (3, "16,5,9", "14,5,9", (2,))]),
        (7, ("unity", 17), 2, [(1, "18,3,16", "18,3,16", (1,)), (2, "19,4,14", "18,4,14", (1,)),
                               (3, "20,5,14", "19,5,14", (1, 3)), (4, "21,6,12", "19,6,12", (1, 3)),
                               (5, "22,7,12", "20,7,12", (1, 3, 5)), (6, "23,8,10", "20,8,10", (1, 3, 5)),
                               (7, "24,9,10", "21,9,10", (1, 3, 5, 7))]),
        (7, ("unity", 25), 3, [(1, "26,4,23", None, (1,)), (2, "27,5,21", "26,5,21", (1,)),
                               (3, "28,6,20", "26,6,20", (1,)), (4, "29,7,20", "27,7,20", (1, 4)),
                               (5, "30,8,18", "27,8,18", (1, 4)), (6, "31,9,17", "27,9,17", (1, 4)),
                               (7, "32,10,>=16", "28,10,>=16", (1, 4, 7))]),
    ],
}


def evaluation_set(q: int, desc: tuple) -> EvaluationSet:
    F = tower_for_q(q)
    if desc[0] == "unity":
        return unity_set(F, desc[1])
    if desc[0] == "three-cosets":
        return multicoset_set(F, q + 1, 2, a=desc[2])
    raise ValueError(f"unknown evaluation set {desc!r}")


def so_multipliers(S: EvaluationSet, k: int, seed: int = 0) -> tuple[np.ndarray, str]:
    """Residue multipliers when they give a self-orthogonal GRS code, else a searched vector."""
    try:
        v = multipliers(S)
        if check_so(grs_code(S, v, k)):
            return v, "residues"
    except HermHullError:
        pass
    v = find_multipliers(S, k, seed=seed)
    if v is None:
        raise HermHullError(f"no self-orthogonal multipliers found for k={k} on {S.describe()}")
    return v, "searched"


def _parse_code(text: str) -> tuple[int, int, int, bool]:
    n, k, d = text.split(",")
    bound = d.startswith(">=")
    return int(n), int(k), int(d.lstrip(">=")), bound


def _fmt_code(C: LinearCode) -> str:
    d = str(C.d) if C.d is not None else f">={C.d_lower}"
    return f"{C.n},{C.k},{d}"


def _certify(C: LinearCode, budget: int) -> LinearCode:
    if C.d is not None:
        return C
    try:
        cert = weight_certificate(C, budget)
    except BudgetExceeded:
        return C
    return C.with_distance(cert.d, cert.method)


def _code_matches(listed: str, C: LinearCode) -> str:
    n, k, d, bound = _parse_code(listed)
    if (n, k) != (C.n, C.k):
        return "mismatch"
    if C.d is None:
        return "bound-only" if C.d_lower is not None and bound and C.d_lower >= d else "unreproduced"
    if bound:
        return "bound-only" if C.d >= d else "mismatch"
    return "verified" if C.d == d else "mismatch"


def row_multipliers(S: EvaluationSet, k: int, top: int, seed: int = 0) -> tuple[np.ndarray, str]:
    """Multipliers for a block of rows with GRS dimension k and extensions up to k + top.

    Residue multipliers are used when they work.  Otherwise the searched
    vector makes as many of the extension rows self-orthogonal as possible.
    """
    v, how = so_multipliers(S, k, seed)
    if how == "residues":
        return v, how
    for kk in range(k + top, k, -1):
        w = find_multipliers(S, kk, seed=seed)
        if w is not None:
            return w, "searched"
    return v, how


def table_so(which: str, budget: int = DEFAULT_BUDGET, seed: int = 0) -> list[TableRow]:
    out: list[TableRow] = []
    for q, desc, k, rows in SO_TABLES[which]:
        S = evaluation_set(q, desc)
        try:
            v, how = row_multipliers(S, k, max(r[0] for r in rows), seed)
        except HermHullError as exc:
            out += [_so_fail(which, q, S, k, i, code, punct, I, str(exc)) for i, code, punct, I in rows]
            continue
        for i, code, punct, I in rows:
            out.append(_so_table_row(which, q, S, v, how, k, i, code, punct, I, budget))
    return out


def _so_label(q: int, S: EvaluationSet, k: int, i: int) -> str:
    return f"q={q} n={S.n} k={k} i={i}"


def _so_listed(code: str, punct: str | None, I: tuple) -> str:
    return f"[{code}] | {'[' + punct + ']' if punct else '-'} | I={{{','.join(map(str, I))}}}"


def _so_fail(which, q, S, k, i, code, punct, I, msg) -> TableRow:
    return TableRow(which, _so_label(q, S, k, i), _so_listed(code, punct, I), status="unreproduced", note=msg)


def _so_table_row(which, q, S, v, how, k, i, code, punct, I, budget) -> TableRow:
    label = _so_label(q, S, k, i)
    listed = _so_listed(code, punct, I)
    try:
        E = build_Gi(S, v, k, i)
    except HermHullError as exc:
        return TableRow(which, label, listed, status="unreproduced", note=f"{type(exc).__name__}: {exc}")
    # The dropped columns are identically zero, so both codes share one distance.
    P = _certify(drop_zero_columns(E), budget)
    C = E.code.with_distance(P.d, P.d_method) if P.d is not None else _certify(E.code, budget)
    ours = f"[{_fmt_code(C)}] | " + (f"[{_fmt_code(P)}]" if P.n != C.n else "-") + f" | I={{{','.join(map(str, E.I))}}}"
    statuses = [_code_matches(code, C)]
    if punct is not None:
        statuses.append(_code_matches(punct, P))
    elif P.n != C.n:
        statuses.append("mismatch")
    notes = []
    if tuple(E.I) != tuple(I):
        statuses.append("mismatch")
        notes.append(f"I = {list(E.I)} here")
    if how == "searched":
        notes.append("multipliers found by search, not from residues")
    if C.d is None or P.d is None:
        notes.append("distance not certified within budget; only the bound n - k - i + 1 is proven")
    if not E.branch:
        notes.append("outside the listed sufficient conditions; self-orthogonality checked directly")
    status = _worst(statuses)
    certs = {"gram_rank": 0, "d_method": C.d_method or "bound", "branch": E.branch or "none"}
    return TableRow(which, label, listed, ours, status, "; ".join(notes), certs)


def _worst(statuses: list[str]) -> str:
    for s in ("mismatch", "unreproduced", "bound-only", "verified"):
        if s in statuses:
            return s
    return "verified"


# -- elliptic point counts --------------------------------------------------------------


def table_points(ms: tuple[int, ...] = (2, 4, 6, 8)) -> list[TableRow]:
    out = []
    for m in ms:
        N, _ = elliptic_points(m)[1], None
        expect = elliptic_table_count(m, "zero")
        out.append(_points_row(m, "y^2+y=x^3", expect, [N]))
        bs = trace_one_elements(m)
        out.append(_points_row(m, "y^2+y=x^3+bx, Tr(b)=1", elliptic_table_count(m, "b"),
                               [elliptic_points(m, b, 0)[1] for b in bs.tolist()]))
        out.append(_points_row(m, "y^2+y=x^3+c, Tr(c)=1", elliptic_table_count(m, "c"),
                               [elliptic_points(m, 0, c)[1] for c in bs.tolist()]))
    return out


def _points_row(m: int, curve: str, expect: int, counts: list[int]) -> TableRow:
    ok = all(c == expect for c in counts)
    seen = sorted(set(counts))
    return TableRow("II-points", f"m={m} {curve}", str(expect), ",".join(map(str, seen)),
                    "verified" if ok else "mismatch", f"{len(counts)} curve(s) enumerated",
                    {"method": "exhaustive enumeration"})


# -- quantum tables ------------------------------------------------------------------------


def _quantum_row(table: str, label: str, listed: str, P: EaqeccParams | None, certs: dict[str, Any],
                 note: str = "") -> TableRow:
    if P is None:
        return TableRow(table, label, listed, status="unreproduced", note=note, certificates=certs)
    status, why = compare_quantum(listed, P)
    tag = singleton_classify(P)
    certs = dict(certs, tag=tag)
    return TableRow(table, label, listed, str(P), status, "; ".join(x for x in (note, why) if x), certs)


def _grs_so(q: int, S: EvaluationSet, k: int) -> LinearCode:
    v, _ = so_multipliers(S, k)
    return grs_code(S, v, k)


def _hull_ladder(C: LinearCode, ells: list[int]) -> dict[int, LinearCode]:
    out = {}
    for ell in ells:
        D = adjust_hull(C, ell) if check_so(C) else search_hull(C, ell)
        got = hull(D).ell
        if got != ell:
            raise AssertionError(f"hull {got} != {ell}")
        out[ell] = D
    return out


def _mds_pair_rows(table: str, q: int, C: LinearCode, ells: list[int], listed: list[str], tag: str,
                   which: int = 1) -> list[TableRow]:
    rows = []
    for ell, text in zip(ells, listed):
        D = _hull_ladder(C, [ell])[ell]
        pair = derive_pair(D, ell, d_dual=C.k + 1 if C.d == C.n - C.k + 1 else None)
        rows.append(_quantum_row(table, f"{tag} ell={ell}", text, pair[which],
                                 {"hull": ell, "d": D.d, "d_method": D.d_method}))
    return rows


_TABLE_III_EXTERNAL: list[tuple[str, int, list[tuple[str, str]]]] = [
    ("[22,5]_{8^2}", 8, [("[[22,16,6;4]]", "[[21,16,5;3]]"), ("[[22,15,6;3]]", "[[21,15,5;2]]")]),
    ("[29,5]_{8^2}", 8, [("[[29,23,6;4]]", "[[28,23,5;3]]"), ("[[29,22,6;3]]", "[[28,22,5;2]]")]),
    ("[36,6]_{8^2}", 8, [("[[36,29,7;5]]", "[[35,29,6;4]]"), ("[[36,28,7;4]]", "[[35,28,6;3]]")]),
    ("[43,6]_{8^2}", 8, [("[[43,36,7;5]]", "[[42,36,6;4]]"), ("[[43,35,7;4]]", "[[42,35,6;3]]")]),
    ("[50,7]_{8^2}", 8, [("[[50,42,8;6]]", "[[49,42,7;5]]"), ("[[50,41,8;5]]", "[[49,41,7;4]]")]),
    ("[57,7]_{8^2}", 8, [("[[57,49,8;6]]", "[[56,49,7;5]]"), ("[[57,48,8;5]]", "[[56,48,7;4]]")]),
    ("[72,7]_{9^2}", 9, [(_q(72, 65 - e, 8, 7 - e), _q(71, 65 - e, 7, 6 - e)) for e in range(1, 7)]),
    ("[96,8]_{11^2}", 11, [(_q(96, 88 - e, 9, 8 - e), _q(95, 88 - e, 8, 7 - e)) for e in range(1, 8)]),
]

# [n,k] with n = q^2 and the extension by i = 2 rows; printed MDS tuple with c = 1.
_TABLE_III_FAMILY = [(4, 3, "[[16,7,6;1]]"), (5, 4, "[[25,14,7;1]]"), (7, 6, "[[49,34,9;1]]"),
                     (8, 7, "[[64,47,10;1]]"), (9, 8, "[[81,62,11;1]]"), (11, 10, "[[121,98,13;1]]")]


def fifteen_point_set(F) -> EvaluationSet:
    """Two cosets of the order-7 subgroup of GF(64)* together with 0."""
    H = subgroup(F, 7)
    pts = np.concatenate([H, F.mul(F.w, H), [0]])
    return explicit_set(F, pts)


def table_III(budget: int = DEFAULT_BUDGET, qs: tuple[int, ...] | None = None) -> list[TableRow]:
    rows: list[TableRow] = []
    if qs is None or 8 in qs:
        F = tower_for_q(8)
        S = fifteen_point_set(F)
        v = find_multipliers(S, 4)
        listed = [("[[15,10,5;3]]", "[[14,10,4;2]]"), ("[[15,9,5;2]]", "[[14,9,4;1]]")]
        if v is None:
            for ell, (a, b) in enumerate(listed, 1):
                for t in (a, b):
                    rows.append(TableRow("III", f"[15,4]_{{8^2}} ell={ell}", t, status="external",
                                         note="no self-orthogonal multipliers found on two cosets of U_7 plus 0"))
        else:
            C = grs_code(S, v, 4)
            note = "GRS on two cosets of U_7 plus 0 with searched multipliers"
            for ell, (a, b) in enumerate(listed, 1):
                D = adjust_hull(C, ell)
                rows.append(_quantum_row("III", f"[15,4]_{{8^2}} ell={ell}", a, derive_pair(D, ell)[1],
                                         {"hull": ell}, note))
                Sh = adjust_hull(shorten_rowcol(C, 1), ell)
                rows.append(_quantum_row("III", f"[14,3]_{{8^2}} ell={ell}", b, derive_pair(Sh, ell)[1],
                                         {"hull": ell}, note + ", shortened once"))
    for label, q, pairs in _TABLE_III_EXTERNAL:
        if qs is not None and q not in qs:
            continue
        for ell, (a, b) in enumerate(pairs, 1):
            for t in (a, b):
                rows.append(TableRow("III", f"{label} ell={ell}", t, status="external",
                                     note="family from a cited construction; not rebuilt here"))
    for q, k, listed in _TABLE_III_FAMILY:
        if qs is not None and q not in qs:
            continue
        rows.append(table_III_family_row(q, k, listed))
    return rows


def table_III_family_row(q: int, k: int, listed: str) -> TableRow:
    F = tower_for_q(q)
    n = q * q
    S = unity_set(F, n)
    v, _ = so_multipliers(S, k)
    E = build_Gi(S, v, k, 2)
    C = hull_pipeline(E)
    ell = C.k - len(E.I)
    P = derive_pair(C, ell, d_dual=C.k + 1)[1]
    return _quantum_row("III", f"[{n},{k}]_{{{q}^2}} i=2", listed, P,
                        {"hull": ell, "I": list(E.I), "d": C.d, "d_method": "GRS"})


# Table IV: n = q^2, k = q - 1, ell = 1 .. k-1, three columns.
_TABLE_IV_OVERRIDES = {
    (7, "amds", 1): "[[50,42,>=8;6]]",
    (8, "short", 2): "[[63,55,87;4]]",
    (11, "amds", 8): "[[122,102,1>=2;4]]",
}


def table_IV_listed(q: int) -> dict[str, list[str]]:
    n, k = q * q, q - 1
    amds_d = {4: "5", 5: "6"}.get(q, f">={q + 1}")
    ells = range(1, k)
    out = {
        "mds": [_q(n, n - k - e, k + 1, k - e) for e in ells],
        "short": [_q(n - 1, n - k - e, k, k - 1 - e) for e in ells],
        "amds": [_q(n + 1, n - k - 1 - e, amds_d, k + 2 - e) for e in ells],
    }
    for (qq, col, e), text in _TABLE_IV_OVERRIDES.items():
        if qq == q:
            out[col][e - 1] = text
    return out


def table_IV(qs: tuple[int, ...] = (4, 5, 7, 8, 9, 11), budget: int = DEFAULT_BUDGET) -> list[TableRow]:
    rows: list[TableRow] = []
    for q in qs:
        F = tower_for_q(q)
        n, k = q * q, q - 1
        listed = table_IV_listed(q)
        ells = list(range(1, k))
        S = unity_set(F, n)
        C = _grs_so(q, S, k)
        rows += _mds_pair_rows("IV", q, C, ells, listed["mds"], f"[{n},{k}]_{{{q}^2}} MDS", 1)
        Sh = shorten_rowcol(C, 1)
        rows += _mds_pair_rows("IV", q, Sh, ells, listed["short"], f"[{n - 1},{k - 1}]_{{{q}^2}} shortened", 1)
        rows += _amds_rows(q, S, C, ells, listed["amds"], budget)
    return rows


def _amds_rows(q: int, S: EvaluationSet, C: LinearCode, ells: list[int], listed: list[str],
               budget: int) -> list[TableRow]:
    k = C.k
    v, _ = so_multipliers(S, k)
    E = build_Gi(S, v, k, 2)
    A = drop_zero_columns(E)
    label = f"[{A.n},{A.k}]_{{{q}^2}} extension"
    D = hermitian_dual(A)
    note = ""
    try:
        cert = weight_certificate(D, budget)
        dd: tuple[int, bool] = (cert.d, True)
        method = cert.method
    except BudgetExceeded:
        target = q + 1
        try:
            cert = certify_at_least(A.tower, D.gen, target, budget)
            dd, method = (target, False), cert.method
        except BudgetExceeded:
            return [TableRow("IV", f"{label} ell={e}", t, status="unreproduced",
                             note="dual distance not certified within budget") for e, t in zip(ells, listed)]
    rows = []
    for ell, text in zip(ells, listed):
        H = adjust_hull(A, ell)
        P = derive_pair(H, ell, d_dual=dd, budget=0)[1]
        rows.append(_quantum_row("IV", f"{label} ell={ell}", text, P,
                                 {"hull": ell, "I": list(E.I), "dual_d_method": method}, note))
    return rows


# Table V: one-point codes on y^2 + y = x^(q+1) beyond the self-orthogonality bound.
def table_V_listed(q: int) -> tuple[int, list[tuple[str, str]]]:
    if q == 4:
        return 8, [(_q(32, 6 - e, 25, 26 - e), _q(31, 5 - e, ">=24", 26 - e)) for e in range(1, 6)]
    if q == 8:
        pairs = [(_q(128, 12 - e, 113, 116 - e), _q(127, 11 - e, ">=112", 116 - e)) for e in range(1, 12)]
        pairs[3] = (pairs[3][0], _q(127, 7, ">=111", 112))
        return 16, pairs
    raise ValueError(q)


def table_V(budget: int = DEFAULT_BUDGET, qs: tuple[int, ...] = (4, 8)) -> list[TableRow]:
    rows: list[TableRow] = []
    for q in qs:
        kk, pairs = table_V_listed(q)
        spec = CurveSpec("hyperelliptic", q)
        C = _certify(ag_code(spec, kk), budget)
        Sh = _certify(shorten_rowcol(C, 1), budget)
        caveat = f"deg G = {kk - 1} exceeds the self-orthogonality range"
        h0, h1 = hull(C).ell, hull(Sh).ell
        for ell, (a, b) in enumerate(pairs, 1):
            for code, text, top, tag in ((C, a, h0, "code"), (Sh, b, h1, "shortened")):
                label = f"[{code.n},{code.k}]_{{{q}^2}} {tag} ell={ell}"
                try:
                    D = search_hull(code, ell)
                except HermHullError as exc:
                    rows.append(TableRow("V", label, text, status="unreproduced",
                                         note=f"{caveat}; {exc} (hull of the unscaled code is {top})"))
                    continue
                P = derive_pair(D, ell, d_dual=(0, False), budget=0)[0]
                rows.append(_quantum_row("V", label, text, P, {"hull": ell, "d_method": code.d_method or "bound"},
                                         caveat + "; hull reached by coordinate search"))
    rows += [TableRow("V", f"[80,9,71]_{{8^2}} ell={e}", t, status="external",
                      note="elliptic-curve family is non-constructive here")
             for e in range(1, 9) for t in (_q(80, 9 - e, 71, 71 - e), _q(79, 8 - e, ">=70", 71 - e))]
    return rows


# -- dispatch -------------------------------------------------------------------------------


def emit_table(which: str, budget: int = DEFAULT_BUDGET, seed: int = 0) -> list[TableRow]:
    builders: dict[str, Callable[[], list[TableRow]]] = {
        "I": lambda: table_so("I", budget, seed),
        "II": lambda: table_so("II", budget, seed),
        "II-points": table_points,
        "III": lambda: table_III(budget),
        "IV": lambda: table_IV(budget=budget),
        "V": lambda: table_V(budget),
    }
    if which not in builders:
        raise ValueError(f"unknown table {which!r}; choose from {TABLES}")
    return builders[which]()
