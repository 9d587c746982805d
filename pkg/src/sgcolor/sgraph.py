"""Signed graphs: representation, switching, balance and text IO."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

Edge = tuple[int, int, int]


class GraphError(ValueError):
    pass


class InvalidVertexError(GraphError):
    pass


class GraphMismatchError(GraphError):
    pass


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None, source: str = "<graph>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


@dataclass(frozen=True)
class SignedGraph:
    """A simple finite graph on vertices ``0..n-1`` with edge signs in {+1, -1}.

    Edges are kept as a sorted tuple of ``(u, v, sign)`` with ``u < v``.
    """

    n: int
    edges: tuple[Edge, ...]
    _adj: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError(f"vertex count must be non-negative, got {self.n}")
        seen = set()
        norm = []
        for u, v, s in self.edges:
            if s not in (1, -1):
                raise GraphError(f"edge {u}-{v} has sign {s}, expected +1 or -1")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if u < 0 or v >= self.n:
                raise InvalidVertexError(f"edge {u}-{v} out of range for n={self.n}")
            if (u, v) in seen:
                raise GraphError(f"parallel edge {u}-{v}")
            seen.add((u, v))
            norm.append((u, v, s))
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u].append((v, s))
            adj[v].append((u, s))
        object.__setattr__(self, "_adj", tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(w, sign)`` pairs for every edge at ``v``."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def underlying(self) -> frozenset[tuple[int, int]]:
        return frozenset((u, v) for u, v, _ in self.edges)

    def sign(self, u: int, v: int) -> int:
        for w, s in self._adj[u]:
            if w == v:
                return s
        raise GraphError(f"no edge {u}-{v}")

    def negated(self) -> "SignedGraph":
        return SignedGraph(self.n, tuple((u, v, -s) for u, v, s in self.edges))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for root in range(self.n):
            if seen[root]:
                continue
            seen[root] = True
            comp = [root]
            queue = deque([root])
            while queue:
                x = queue.popleft()
                for y, _ in self._adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.append(y)
                        queue.append(y)
            comps.append(comp)
        return comps

    def is_bipartite(self) -> bool:
        return is_antibalanced(SignedGraph(self.n, tuple((u, v, 1) for u, v, _ in self.edges)))


def _check_vertex(g: SignedGraph, v: int) -> None:
    if not 0 <= v < g.n:
        raise InvalidVertexError(f"vertex {v} out of range for n={g.n}")


def switch(g: SignedGraph, v: int) -> SignedGraph:
    """Flip the sign of every edge incident to ``v``."""
    _check_vertex(g, v)
    return SignedGraph(g.n, tuple((a, b, -s if v in (a, b) else s) for a, b, s in g.edges))


def switch_set(g: SignedGraph, vertices: Iterable[int]) -> SignedGraph:
    """Switch at every vertex of ``vertices`` (order is irrelevant)."""
    chosen = set(vertices)
    for v in chosen:
        _check_vertex(g, v)
    return SignedGraph(
        g.n,
        tuple((a, b, -s if (a in chosen) != (b in chosen) else s) for a, b, s in g.edges),
    )


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    potential: Optional[tuple[int, ...]] = None
    circuit: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.balanced


def _tree_path(parent: list[int], depth: list[int], u: int, v: int) -> list[int]:
    left, right = [u], [v]
    while depth[u] > depth[v]:
        u = parent[u]
        left.append(u)
    while depth[v] > depth[u]:
        v = parent[v]
        right.append(v)
    while u != v:
        u = parent[u]
        v = parent[v]
        left.append(u)
        right.append(v)
    right.pop()
    return left + right[::-1]


def is_balanced(g: SignedGraph) -> BalanceResult:
    """Decide balance by propagating a ±1 potential along BFS trees.

    Returns the potential ``p`` with ``sign(uv) = p(u) p(v)`` on every edge
    when balanced, otherwise the first unbalanced circuit found, as a vertex
    sequence whose closing edge runs from the last vertex back to the first.
    """
    pot = [0] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if pot[root]:
            continue
        pot[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, s in g.neighbors(x):
                if not pot[y]:
                    pot[y] = pot[x] * s
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    queue.append(y)
                elif pot[y] != pot[x] * s:
                    return BalanceResult(False, circuit=tuple(_tree_path(parent, depth, x, y)))
    return BalanceResult(True, potential=tuple(pot))


def is_antibalanced(g: SignedGraph) -> bool:
    return is_balanced(g.negated()).balanced


def is_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """True iff the two signatures on the same graph differ by switchings."""
    if g1.n != g2.n or g1.underlying() != g2.underlying():
        raise GraphMismatchError("signed graphs have different underlying graphs")
    product = tuple((u, v, s1 * s2) for (u, v, s1), (_, _, s2) in zip(g1.edges, g2.edges))
    return is_balanced(SignedGraph(g1.n, product)).balanced


def normalize(g: SignedGraph) -> tuple[SignedGraph, frozenset[int]]:
    """Switch so that a BFS spanning forest is all-positive.

    Returns the switched graph and the set of vertices switched.
    """
    pot = [0] * g.n
    for root in range(g.n):
        if pot[root]:
            continue
        pot[root] = 1
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y, s in g.neighbors(x):
                if not pot[y]:
                    pot[y] = pot[x] * s
                    queue.append(y)
    switched = frozenset(v for v in range(g.n) if pot[v] == -1)
    return switch_set(g, switched), switched


# --- text format ---------------------------------------------------------


def format_graph(g: SignedGraph) -> str:
    lines = [f"signed {g.n} {g.m}"]
    lines += [f"e {u} {v} {'+' if s > 0 else '-'}" for u, v, s in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str, source: str = "<graph>") -> SignedGraph:
    """Parse the ``signed <n> <m>`` / ``e <u> <v> <+|->`` format."""
    header = None
    edges: list[Edge] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if header is None:
            if len(parts) != 3 or parts[0] != "signed":
                raise ParseError("expected header 'signed <n> <m>'", lineno, source)
            try:
                header = (int(parts[1]), int(parts[2]))
            except ValueError:
                raise ParseError("non-integer in header", lineno, source) from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative count in header", lineno, source)
            continue
        if len(parts) != 4 or parts[0] != "e" or parts[3] not in ("+", "-"):
            raise ParseError(f"expected 'e <u> <v> <+|->', got {line!r}", lineno, source)
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("non-integer vertex index", lineno, source) from None
        n = header[0]
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range for n={n}", lineno, source)
        if u == v:
            raise ParseError(f"loop at vertex {u}", lineno, source)
        if u > v:
            raise ParseError(f"edge endpoints must satisfy u < v, got {u} {v}", lineno, source)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge {u}-{v}", lineno, source)
        seen.add((u, v))
        edges.append((u, v, 1 if parts[3] == "+" else -1))
    if header is None:
        raise ParseError("missing header", None, source)
    if len(edges) != header[1]:
        raise ParseError(f"header declares {header[1]} edges, found {len(edges)}", None, source)
    return SignedGraph(header[0], tuple(edges))
