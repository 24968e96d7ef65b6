"""Command-line entry point: build codes, certify them and regenerate tables.

Exit status is 0 when every asserted certificate holds, 2 when a
construction's hypotheses fail, 3 when a search exceeds its budget and 1
when a certificate check fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from typing import Any

from . import __version__
from .code import (
    LinearCode,
    adjust_hull,
    code_from_json,
    code_to_json,
    gram,
    hull,
    is_self_orthogonal,
    weight_certificate,
)
from .curves import CurveSpec, ag_code, elliptic_spec, enumerate_places
from .eaqecc import csv_row, derive_pair, rows_to_csv
from .errors import BudgetExceeded, HermHullError, HypothesisFails
from .gf import tower_for_q
from .la import rank
from .lines import EvaluationSet, build_Gi, expand_dimension, multicoset_set, unity_set
from .minweight import DEFAULT_BUDGET, METHODS
from .tables import CSV_COLUMNS, TABLES, emit_table, so_multipliers

EXIT_OK, EXIT_CERT, EXIT_HYPOTHESIS, EXIT_BUDGET = 0, 1, 2, 3


class CertificateFailure(Exception):
    pass


# -- helpers -----------------------------------------------------------------------


def _evaluation_set(args: argparse.Namespace) -> EvaluationSet:
    F = tower_for_q(args.q)
    family = args.family or "unity"
    if family == "unity":
        return unity_set(F, args.n)
    if family == "multicoset":
        if args.a is not None:
            return multicoset_set(F, args.q + 1, 2, a=args.a)
        t = args.t if args.t is not None else 1
        if (args.n - 1) % (t + 1):
            raise HypothesisFails(f"n - 1 = {args.n - 1} is not a multiple of t + 1 = {t + 1}")
        return multicoset_set(F, (args.n - 1) // (t + 1), t)
    raise HypothesisFails(f"unknown evaluation-set family {family!r} (use unity or multicoset)")


def _distance_report(C: LinearCode, budget: int, certify: bool) -> dict[str, Any]:
    if C.d is not None:
        return {"d": C.d, "method": C.d_method or "given"}
    if not certify:
        return {"d_lower": C.d_lower, "method": "bound"}
    cert = weight_certificate(C, budget)
    if C.d_lower is not None and cert.d < C.d_lower:
        raise CertificateFailure(f"certified distance {cert.d} is below the proven bound {C.d_lower}")
    return cert.to_json()


def _report(C: LinearCode, budget: int, certify: bool = True) -> dict[str, Any]:
    h = hull(C)
    return {
        "n": C.n,
        "k": C.k,
        "gram_rank": int(rank(C.tower, gram(C))) if C.k else 0,
        "hull_dim": h.ell,
        "self_orthogonal": bool(is_self_orthogonal(C)),
        "distance": _distance_report(C, budget, certify),
    }


def _record(C: LinearCode, args: argparse.Namespace, extra: dict[str, Any] | None = None) -> dict[str, Any]:
    rep = _report(C, args.budget, not args.no_distance)
    rec = {
        "command": args.command,
        "defaults": {"seed": args.seed, "budget": args.budget},
        "code": code_to_json(C, hull_ell=rep["hull_dim"]),
        "report": rep,
    }
    if "d" in rep["distance"]:
        rec["code"]["d"] = rep["distance"]["d"]
    if extra:
        rec.update(extra)
    return rec


def _load(path: str) -> LinearCode:
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    return code_from_json(obj.get("code", obj))


def _emit(obj: Any, args: argparse.Namespace, csv_text: str | None = None) -> None:
    if args.format == "csv":
        if csv_text is None:
            raise HypothesisFails(f"{args.command} has no CSV form; use --format json")
        text = csv_text
    else:
        text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands ---------------------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> int:
    S = _evaluation_set(args)
    v, how = so_multipliers(S, args.k, args.seed)
    from .lines import grs_code

    C = grs_code(S, v, args.k)
    rec = _record(C, args, {"multipliers": how, "evaluation_set": S.describe()})
    _emit(rec, args)
    return EXIT_OK if rec["report"]["self_orthogonal"] else EXIT_CERT


def _embed(args: argparse.Namespace):
    S = _evaluation_set(args)
    v, how = so_multipliers(S, args.k, args.seed)
    return build_Gi(S, v, args.k, args.i), how


def cmd_embed(args: argparse.Namespace) -> int:
    E, how = _embed(args)
    extra = E.to_json()
    extra.pop("code")
    rec = _record(E.code, args, {"embedding": extra, "multipliers": how})
    _emit(rec, args)
    return EXIT_OK if rec["report"]["self_orthogonal"] else EXIT_CERT


def cmd_expand(args: argparse.Namespace) -> int:
    E, how = _embed(args)
    C = expand_dimension(E)
    rec = _record(C, args, {"embedding_I": list(E.I), "multipliers": how})
    _emit(rec, args)
    return EXIT_OK if rec["report"]["self_orthogonal"] else EXIT_CERT


def cmd_hull(args: argparse.Namespace) -> int:
    C = _load(args.input)
    if args.ell is None:
        raise HypothesisFails("--ell is required")
    D = adjust_hull(C, args.ell)
    rec = _record(D, args)
    _emit(rec, args)
    return EXIT_OK if rec["report"]["hull_dim"] == args.ell else EXIT_CERT


def cmd_minweight(args: argparse.Namespace) -> int:
    C = _load(args.input)
    cert = weight_certificate(C, args.budget, args.method)
    _emit({"command": "minweight", "n": C.n, "k": C.k, "certificate": cert.to_json(),
           "defaults": {"seed": args.seed, "budget": args.budget}}, args)
    return EXIT_OK


def cmd_curve(args: argparse.Namespace) -> int:
    family = args.family or "hermitian"
    if family == "elliptic":
        spec = elliptic_spec(args.m if args.m is not None else 2 * (args.q.bit_length() - 1), args.b, args.c)
    else:
        params = {"t": args.t} if family == "quotient" else {}
        spec = CurveSpec(family, args.q, params)
    places = enumerate_places(spec)
    info = {"curve": spec.to_json(), "genus": spec.genus, "pole_orders": list(spec.pole_orders),
            "affine_points": len(places), "points": len(places) + 1}
    if args.k is None:
        _emit({"command": "curve", **info}, args)
        return EXIT_OK
    C = ag_code(spec, args.k, places=places)
    rec = _record(C, args, info)
    _emit(rec, args)
    return EXIT_OK


def cmd_eaqecc(args: argparse.Namespace) -> int:
    C = _load(args.input)
    if args.ell is not None:
        C = adjust_hull(C, args.ell)
    h = hull(C)
    first, second = derive_pair(C, h, budget=args.budget)
    rows = [csv_row(C, h.ell, P, provenance=f"{tag}; " + " | ".join(C.provenance))
            for tag, P in (("from C", first), ("from the dual", second))]
    obj = {"command": "eaqecc", "hull_dim": h.ell,
           "codes": [dict(P.to_json(), source=tag) for tag, P in (("C", first), ("dual", second))]}
    _emit(obj, args, rows_to_csv(rows))
    return EXIT_OK


def cmd_table(args: argparse.Namespace) -> int:
    rows = emit_table(args.which, args.budget, args.seed)
    dicts = [r.to_dict() for r in rows]
    _emit({"command": "table", "table": args.which, "rows": dicts}, args, rows_to_csv(dicts, CSV_COLUMNS))
    return EXIT_OK


COMMANDS = {
    "construct": cmd_construct,
    "embed": cmd_embed,
    "expand": cmd_expand,
    "hull": cmd_hull,
    "minweight": cmd_minweight,
    "curve": cmd_curve,
    "eaqecc": cmd_eaqecc,
    "table": cmd_table,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hermhull", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, help="GF(q^2) is the code alphabet")
    common.add_argument("--n", type=int, help="length of the evaluation set")
    common.add_argument("--k", type=int, help="GRS dimension, or k - 1 = deg G for curves")
    common.add_argument("--i", type=int, default=1, help="number of extension rows")
    common.add_argument("--t", type=int, help="multicoset count, or the quotient-curve divisor")
    common.add_argument("--a", type=int, help="three-coset shape parameter")
    common.add_argument("--ell", type=int, help="target hull dimension")
    common.add_argument("--family", help="unity | multicoset | hyperelliptic | hermitian | quotient | elliptic")
    common.add_argument("--m", type=int, help="elliptic curves: GF(2^m)")
    common.add_argument("--b", type=int, default=0, help="elliptic coefficient b (integer code)")
    common.add_argument("--c", type=int, default=0, help="elliptic coefficient c (integer code)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="enumeration budget")
    common.add_argument("--method", choices=METHODS, default="auto", help="minimum-weight method")
    common.add_argument("--no-distance", action="store_true", help="skip distance certification")
    common.add_argument("--input", help="code record (JSON) to read")
    common.add_argument("--out", help="write here instead of stdout")
    common.add_argument("--format", choices=("json", "csv"), default="json")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "table":
            sp.add_argument("which", choices=TABLES)
    return p


_REQUIRED = {
    "construct": ("q", "n", "k"),
    "embed": ("q", "n", "k"),
    "expand": ("q", "n", "k"),
    "hull": ("input",),
    "minweight": ("input",),
    "curve": ("q",),
    "eaqecc": ("input",),
    "table": (),
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    missing = [f"--{f}" for f in _REQUIRED[args.command] if getattr(args, f) is None]
    if missing:
        parser.error(f"{args.command} needs {', '.join(missing)}")
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HermHullError, ZeroDivisionError) as exc:
        print(f"hypothesis failed ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (CertificateFailure, AssertionError) as exc:
        print(f"certificate failed: {exc}", file=sys.stderr)
        return EXIT_CERT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
