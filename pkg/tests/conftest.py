from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from sgcolor.coloring import KDColoring, verify_kd
from sgcolor.sgraph import SignedGraph


def make(n, *edges):
    """make(3, (0, 1, '-'), (0, 2, '+'), ...)"""
    return SignedGraph(n, tuple((u, v, -1 if s == "-" else 1) for u, v, s in edges))


@pytest.fixture
def uc3():
    # unbalanced triangle: uv negative, uw and vw positive
    return make(3, (0, 1, "-"), (0, 2, "+"), (1, 2, "+"))


@pytest.fixture
def p2_pos():
    return make(2, (0, 1, "+"))


@pytest.fixture
def p2_neg():
    return make(2, (0, 1, "-"))


def random_instance(rng: random.Random, n: int, k: int, d: int, p: float = 0.7):
    """A random coloring and a random signed graph it happens to color validly."""
    colors = tuple(rng.randrange(k) for _ in range(n))
    c = KDColoring(k, d, colors)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                s = rng.choice((1, -1))
                dist = min((colors[u] - s * colors[v]) % k, (s * colors[v] - colors[u]) % k)
                if dist >= d:
                    edges.append((u, v, s))
    g = SignedGraph(n, tuple(edges))
    assert not verify_kd(g, c)
    return g, c


@st.composite
def signed_graphs(draw, min_n=0, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from([0, 1, -1]), min_size=len(pairs), max_size=len(pairs)))
    return SignedGraph(n, tuple((u, v, s) for (u, v), s in zip(pairs, picks) if s))


@st.composite
def signatures_on(draw, g: SignedGraph):
    signs = draw(st.lists(st.sampled_from([1, -1]), min_size=g.m, max_size=g.m))
    return SignedGraph(g.n, tuple((u, v, s) for (u, v, _), s in zip(g.edges, signs)))


def pytest_terminal_summary(terminalreporter):
    results: dict[str, list[bool]] = {}
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", "call") != "call":
                continue
            name = rep.nodeid.split("::")[-1]
            if "test_acceptance.py" in rep.nodeid and name.startswith("test_criterion_"):
                num = name.split("_")[2]
                results.setdefault(num, []).append(outcome == "passed")
    if results:
        terminalreporter.section("acceptance criteria")
        for num in sorted(results, key=int):
            ok = all(results[num])
            terminalreporter.write_line(
                f"criterion {num}: {'PASS' if ok else 'FAIL'} ({sum(results[num])}/{len(results[num])} parts)"
            )


def naive_ok(g: SignedGraph, k: int, d: int, colors) -> bool:
    """Direct check of the (k,d) edge condition, written independently of the library."""
    for u, v, s in g.edges:
        x = (colors[u] - s * colors[v]) % k
        if min(x, k - x) < d:
            return False
    return True
