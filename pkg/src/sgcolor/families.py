"""Generators for circuits, the K_n^* construction and random signed graphs."""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .sgraph import GraphError, SignedGraph, switch


def circuit(n: int, negatives: Iterable[int] = ()) -> SignedGraph:
    """The cycle 0-1-...-(n-1)-0; edge i joins i and i+1 (mod n)."""
    if n < 3:
        raise GraphError(f"a circuit needs n >= 3, got {n}")
    neg = set(negatives)
    if not neg <= set(range(n)):
        raise GraphError(f"negative edge indices must lie in 0..{n - 1}")
    return SignedGraph(n, tuple((i, (i + 1) % n, -1 if i in neg else 1) for i in range(n)))


def k_star(n: int, sizes: Sequence[int], group: str = "path") -> SignedGraph:
    """Join n all-negative connected groups by all-positive cross edges.

    Groups are paths by default; ``group="clique"`` uses complete groups.
    """
    if n < 1 or len(sizes) != n:
        raise GraphError(f"need n >= 1 group sizes, got n={n}, sizes={list(sizes)}")
    if any(s < 2 for s in sizes):
        raise GraphError("every group needs at least two vertices")
    if group not in ("path", "clique"):
        raise GraphError(f"unknown group shape {group!r}")
    starts = np.concatenate([[0], np.cumsum(sizes)]).tolist()
    label = [i for i, s in enumerate(sizes) for _ in range(s)]
    edges = []
    for i, s in enumerate(sizes):
        a = starts[i]
        if group == "path":
            edges += [(a + j, a + j + 1, -1) for j in range(s - 1)]
        else:
            edges += [(a + x, a + y, -1) for x in range(s) for y in range(x + 1, s)]
    total = starts[-1]
    edges += [(u, v, 1) for u in range(total) for v in range(u + 1, total) if label[u] != label[v]]
    return SignedGraph(total, tuple(edges))


def _rng(seed: int) -> np.random.Generator:
    # counter-based generator keyed by the 64-bit seed
    return np.random.Generator(np.random.Philox(seed & (2**64 - 1)))


def random_signed(n: int, edge_prob: float, neg_prob: float, seed: int) -> SignedGraph:
    """Reproducible random simple signed graph."""
    if not (0 <= edge_prob <= 1 and 0 <= neg_prob <= 1):
        raise GraphError("probabilities must lie in [0, 1]")
    rng = _rng(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            keep, negative = rng.random(2)
            if keep < edge_prob:
                edges.append((u, v, -1 if negative < neg_prob else 1))
    return SignedGraph(n, tuple(edges))


def random_bipartite(left: int, right: int, edge_prob: float, neg_prob: float, seed: int) -> SignedGraph:
    """Random signed graph whose edges all cross between two sides."""
    if not (0 <= edge_prob <= 1 and 0 <= neg_prob <= 1):
        raise GraphError("probabilities must lie in [0, 1]")
    rng = _rng(seed)
    edges = []
    for u in range(left):
        for v in range(left, left + right):
            keep, negative = rng.random(2)
            if keep < edge_prob:
                edges.append((u, v, -1 if negative < neg_prob else 1))
    return SignedGraph(left + right, tuple(edges))


def random_switching(g: SignedGraph, count: int, seed: int) -> tuple[SignedGraph, list[int]]:
    """Apply ``count`` switchings at random vertices; returns the graph and the vertices used."""
    if g.n == 0:
        return g, []
    rng = _rng(seed)
    verts = [int(v) for v in rng.integers(0, g.n, size=count)]
    for v in verts:
        g = switch(g, v)
    return g, verts
