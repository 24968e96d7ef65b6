"""Hermitian self-orthogonal and hull-controlled codes over GF(q^2), and the
entanglement-assisted quantum codes they yield."""

from __future__ import annotations

__version__ = "0.1.0"

from .code import (
    HullReport,
    LinearCode,
    adjust_hull,
    hermitian_dual,
    hull,
    is_self_orthogonal,
    min_weight,
    puncture,
    search_hull,
    shorten_rowcol,
)
from .curves import CurveSpec, ag_code, elliptic_points, enumerate_places, rr_basis
from .eaqecc import EaqeccParams, derive_pair, singleton_classify
from .errors import BudgetExceeded, HermHullError, HypothesisFails
from .gf import FieldTower, make_tower, tower_for_q
from .lines import (
    EmbedResult,
    EvaluationSet,
    build_Gi,
    expand_dimension,
    find_multipliers,
    gamma_profile,
    grs_code,
    hull_pipeline,
    multicoset_set,
    unity_set,
)

__all__ = [
    "BudgetExceeded",
    "CurveSpec",
    "EaqeccParams",
    "EmbedResult",
    "EvaluationSet",
    "FieldTower",
    "HermHullError",
    "HullReport",
    "HypothesisFails",
    "LinearCode",
    "adjust_hull",
    "ag_code",
    "build_Gi",
    "derive_pair",
    "elliptic_points",
    "enumerate_places",
    "expand_dimension",
    "find_multipliers",
    "gamma_profile",
    "grs_code",
    "hermitian_dual",
    "hull",
    "hull_pipeline",
    "is_self_orthogonal",
    "make_tower",
    "min_weight",
    "multicoset_set",
    "puncture",
    "rr_basis",
    "search_hull",
    "shorten_rowcol",
    "singleton_classify",
    "tower_for_q",
    "unity_set",
]
