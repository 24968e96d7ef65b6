"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import numpy as np

from hermhull.gf import FieldTower


def span(F: FieldTower, G: np.ndarray) -> set[tuple[int, ...]]:
    """Every vector of the row space, by enumerating all messages."""
    G = np.asarray(G, dtype=np.int64)
    k, n = G.shape
    if k == 0:
        return {(0,) * n}
    msgs = np.indices((F.order,) * k).reshape(k, -1).T
    return {tuple(r) for r in F.matmul(msgs, G).tolist()}


def span_rank(F: FieldTower, G: np.ndarray) -> int:
    """Rank as log_Q of the number of codewords."""
    size = len(span(F, G))
    r = 0
    while F.order**r < size:
        r += 1
    assert F.order**r == size
    return r


def random_matrix(F: FieldTower, rng: np.random.Generator, k: int, n: int, full_rank: bool = True) -> np.ndarray:
    from hermhull.la import rank

    while True:
        G = F.random(rng, (k, n))
        if not full_rank or rank(F, G) == k:
            return G
