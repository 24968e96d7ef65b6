"""Time the minimum-weight kernels under numba and under the numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Setting HERMHULL_DISABLE_NUMBA=1 makes the library pick the numpy path by
default; here both backends are requested explicitly so one run compares
them.  The two backends must return the same distance on every case.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hermhull import _kernels
from hermhull.gf import tower_for_q
from hermhull.curves import CurveSpec, ag_code
from hermhull.lines import build_Gi, multipliers, unity_set
from hermhull.minweight import min_weight_certificate


def cases():
    """(label, field, generator, method) for a spread of field sizes and methods."""
    C = ag_code(CurveSpec("hermitian", 4), 12)
    yield "[64,6] GF(16) exhaustive", C.tower, C.gen, "exhaustive"
    F = tower_for_q(5)
    S = unity_set(F, 13)
    yield "[18,7] GF(25) information-set", F, build_Gi(S, multipliers(S), 2, 5).code.gen, "information-set"
    F = tower_for_q(7)
    S = unity_set(F, 17)
    yield "[24,9] GF(49) information-set", F, build_Gi(S, multipliers(S), 2, 7).code.gen, "information-set"
    F = tower_for_q(3)
    S = unity_set(F, 9)
    yield "[12,5] GF(9) dual-columns", F, build_Gi(S, multipliers(S), 2, 3).code.gen, "dual-columns"
    F = tower_for_q(5)
    S = unity_set(F, 13)
    yield "[16,5] GF(25) dual-columns", F, build_Gi(S, multipliers(S), 2, 3).code.gen, "dual-columns"


def best_time(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    # Compile once outside the timed region.
    F = tower_for_q(2)
    min_weight_certificate(F, np.array([[1, 1, 0], [0, 1, 1]]), method="exhaustive", backend="numba")
    min_weight_certificate(F, np.array([[1, 1, 0], [0, 1, 1]]), method="dual-columns", backend="numba")
    print(f"{'case':34s} {'d':>3s} {'numba s':>9s} {'numpy s':>9s} {'speed-up':>9s}")
    for label, F, G, method in cases():
        tn, a = best_time(lambda: min_weight_certificate(F, G, method=method, backend="numba"), args.repeat)
        tp, b = best_time(lambda: min_weight_certificate(F, G, method=method, backend="numpy"), args.repeat)
        assert a.d == b.d, f"{label}: backends disagree ({a.d} vs {b.d})"
        print(f"{label:34s} {a.d:3d} {tn:9.4f} {tp:9.4f} {tp / tn:8.1f}x", flush=True)


if __name__ == "__main__":
    main()
