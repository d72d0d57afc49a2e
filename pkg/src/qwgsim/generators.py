"""Seeded random graph generators."""

from __future__ import annotations

import numpy as np

from .graph import Graph

__all__ = ["gen_er", "gen_scale_free", "gen_uniform"]


def _all_pairs(n: int) -> tuple[np.ndarray, np.ndarray]:
    # upper-triangle pairs u<v in lexicographic (row-major) order
    return np.triu_indices(n, k=1)


def gen_er(n: int, p: float, seed) -> Graph:
    """Erdos-Renyi G(n, p): independent Bernoulli(p) per unordered pair."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0,1], got {p}")
    rng = np.random.default_rng(seed)
    iu, ju = _all_pairs(n)
    mask = rng.random(len(iu)) < p
    return Graph(n, tuple(zip(iu[mask].tolist(), ju[mask].tolist())))


def gen_uniform(n: int, e: int, seed) -> Graph:
    """R(n, e): exactly e edges drawn uniformly from all C(n,2) pairs."""
    total = n * (n - 1) // 2
    if not 0 <= e <= total:
        raise ValueError(f"edge count {e} outside [0, {total}]")
    rng = np.random.default_rng(seed)
    iu, ju = _all_pairs(n)
    idx = rng.choice(total, size=e, replace=False)
    return Graph(n, tuple(zip(iu[idx].tolist(), ju[idx].tolist())))


def gen_scale_free(n: int, m: int, seed) -> Graph:
    """Preferential-attachment graph SF(n, m).

    Starts from a complete seed graph K_m; every later node attaches to m
    distinct existing nodes, drawn sequentially without replacement with
    probability proportional to current degree (uniform while all remaining
    weights are zero). Edge count is exactly C(m,2) + m*(n-m).
    """
    if m < 1 or n < m:
        raise ValueError(f"need n >= m >= 1, got n={n}, m={m}")
    rng = np.random.default_rng(seed)
    edges = [(u, v) for u in range(m) for v in range(u + 1, m)]
    deg = np.zeros(n, dtype=np.float64)
    deg[:m] = m - 1
    for new in range(m, n):
        available = np.ones(new, dtype=bool)
        targets = []
        for _ in range(m):
            weights = np.where(available, deg[:new], 0.0)
            s = weights.sum()
            if s > 0:
                t = int(rng.choice(new, p=weights / s))
            else:
                t = int(rng.choice(np.flatnonzero(available)))
            targets.append(t)
            available[t] = False
        for t in targets:
            edges.append((t, new))
            deg[t] += 1
            deg[new] += 1
    return Graph(n, tuple(edges))
