"""Undirected graph container, permutations, and structural queries."""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Edge = tuple[int, int]

__all__ = [
    "Graph",
    "SrgParams",
    "permute",
    "random_permutation",
    "invert_permutation",
    "diameter",
    "remove_random_edges",
    "satisfies_srg",
]


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1; self-loops allowed.

    Each edge is stored once in canonical (min, max) form, sorted; the
    adjacency view is symmetric. A self-loop counts once toward its
    vertex degree (one coin state per incident arc), so the identity
    sum(degrees) == 2*|E| - (#self-loops) holds exactly.
    """

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be non-negative, got {self.n}")
        canon = []
        seen = set()
        for u, v in self.edges:
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            e = (u, v) if u <= v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        canon.sort()
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def self_loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    @cached_property
    def _degrees(self) -> np.ndarray:
        deg = np.zeros(self.n, dtype=np.int64)
        for u, v in self.edges:
            if u == v:
                deg[u] += 1
            else:
                deg[u] += 1
                deg[v] += 1
        return deg

    def degree(self, v: int) -> int:
        return int(self._degrees[v])

    def degree_array(self) -> np.ndarray:
        return self._degrees.copy()

    @cached_property
    def neighbor_lists(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbors per vertex; a self-loop lists the vertex itself once."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                adj[u].append(u)
            else:
                adj[u].append(v)
                adj[v].append(u)
        return tuple(tuple(sorted(nb)) for nb in adj)

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        e = (u, v) if u <= v else (v, u)
        return e in self._edge_set

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.float64)
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def content_key(self) -> int:
        """Stable 64-bit fingerprint of (n, edges), for seed derivation."""
        h = hashlib.sha256()
        h.update(str(self.n).encode())
        for u, v in self.edges:
            h.update(f",{u}-{v}".encode())
        return int.from_bytes(h.digest()[:8], "big")


@dataclass(frozen=True)
class SrgParams:
    """Strongly-regular parameters: k-regular, adjacent pairs share lam
    common neighbours, non-adjacent pairs share mu."""

    n: int
    k: int
    lam: int
    mu: int


def satisfies_srg(g: Graph, params: SrgParams) -> bool:
    """Exhaustively check the strongly-regular conditions.

    Counts common neighbours for every vertex pair directly; conditions on
    pair classes with no members (e.g. mu on a complete graph) hold vacuously.
    """
    if g.n != params.n or g.self_loop_count:
        return False
    deg = g.degree_array()
    if not np.all(deg == params.k):
        return False
    nbrs = [set(nb) for nb in g.neighbor_lists]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = len(nbrs[u] & nbrs[v])
            want = params.lam if g.has_edge(u, v) else params.mu
            if common != want:
                return False
    return True


def _as_permutation(mapping: Sequence[int] | np.ndarray, n: int) -> np.ndarray:
    p = np.asarray(mapping, dtype=np.int64)
    if p.shape != (n,):
        raise ValueError(f"permutation length {p.shape} does not match n={n}")
    if not np.array_equal(np.sort(p), np.arange(n)):
        raise ValueError("mapping is not a bijection on [0, n)")
    return p


def random_permutation(n: int, seed) -> np.ndarray:
    """Uniform random permutation of [0, n), deterministic per seed."""
    return np.random.default_rng(seed).permutation(n).astype(np.int64)


def invert_permutation(mapping: Sequence[int] | np.ndarray) -> np.ndarray:
    p = np.asarray(mapping, dtype=np.int64)
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p))
    return inv


def permute(g: Graph, mapping: Sequence[int] | np.ndarray) -> Graph:
    """Relabel vertices: edge {u,v} maps to {p(u), p(v)}."""
    p = _as_permutation(mapping, g.n)
    return Graph(g.n, tuple((int(p[u]), int(p[v])) for u, v in g.edges))


def diameter(g: Graph) -> int:
    """Largest finite shortest-path distance over all vertex pairs.

    BFS from every vertex. Disconnected graphs report the maximum
    component-internal eccentricity; an edgeless or empty graph gives 0.
    """
    best = 0
    nbrs = g.neighbor_lists
    dist = np.empty(g.n, dtype=np.int64)
    for src in range(g.n):
        dist.fill(-1)
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for w in nbrs[u]:
                if dist[w] < 0:
                    dist[w] = du + 1
                    queue.append(w)
        far = int(dist.max())
        if far > best:
            best = far
    return best


def remove_random_edges(g: Graph, count: int, seed) -> Graph:
    """Drop `count` distinct edges sampled uniformly; vertex set unchanged."""
    if count < 0:
        raise ValueError("count must be non-negative")
    if count > g.edge_count:
        raise ValueError(f"cannot remove {count} edges from a graph with {g.edge_count}")
    rng = np.random.default_rng(seed)
    drop = set(rng.choice(g.edge_count, size=count, replace=False).tolist())
    kept = tuple(e for i, e in enumerate(g.edges) if i not in drop)
    return Graph(g.n, kept)
