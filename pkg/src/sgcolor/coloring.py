"""(k,d)-colorings and circular r-colorings, with exact verification."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .arith import circ_dist, format_ratio, parse_ratio
from .sgraph import Edge, ParseError, SignedGraph


class ColoringError(ValueError):
    pass


@dataclass(frozen=True)
class KDColoring:
    k: int
    d: int
    colors: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.d < 1 or self.k < 2 * self.d:
            raise ColoringError(f"need k >= 2d >= 2, got k={self.k}, d={self.d}")
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        for v, c in enumerate(self.colors):
            if not 0 <= c < self.k:
                raise ColoringError(f"color {c} of vertex {v} not in Z_{self.k}")

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.k, self.d)

    def used(self) -> set[int]:
        return set(self.colors)


@dataclass(frozen=True)
class RColoring:
    r: Fraction
    colors: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        r = Fraction(self.r)
        if r < 2:
            raise ColoringError(f"circle length must be >= 2, got {r}")
        colors = tuple(Fraction(c) for c in self.colors)
        for v, c in enumerate(colors):
            if not 0 <= c < r:
                raise ColoringError(f"color {c} of vertex {v} not in [0, {r})")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "colors", colors)


@dataclass(frozen=True)
class Violation:
    edge: Edge
    distance: Union[int, Fraction]
    bound: Union[int, Fraction]


def _check_size(g: SignedGraph, colors: tuple) -> None:
    if len(colors) != g.n:
        raise ColoringError(f"coloring has {len(colors)} entries, graph has {g.n} vertices")


def verify_kd(g: SignedGraph, c: KDColoring) -> list[Violation]:
    """All edges ``vw`` with ``|c(v) - sign * c(w)|_k < d``."""
    _check_size(g, c.colors)
    out = []
    for u, v, s in g.edges:
        dist = circ_dist(c.colors[u] - s * c.colors[v], c.k)
        if dist < c.d:
            out.append(Violation((u, v, s), dist, c.d))
    return out


def verify_r(g: SignedGraph, f: RColoring) -> list[Violation]:
    """All edges whose colors are closer than 1 on the circle of length r.

    Negative edges compare ``f(x)`` with the inverse point ``r - f(y)``.
    """
    _check_size(g, f.colors)
    out = []
    for u, v, s in g.edges:
        dist = circ_dist(f.colors[u] - s * f.colors[v], f.r)
        if dist < 1:
            out.append(Violation((u, v, s), dist, 1))
    return out


def is_valid_kd(g: SignedGraph, c: KDColoring) -> bool:
    return not verify_kd(g, c)


def is_valid_r(g: SignedGraph, f: RColoring) -> bool:
    return not verify_r(g, f)


def missing_inverse_pairs(c: KDColoring) -> list[int]:
    used = c.used()
    return [x for x in range(c.k) if x not in used and (-x) % c.k not in used]


def switch_kd(c: KDColoring, v: int) -> KDColoring:
    """The coloring that stays valid after switching the graph at ``v``."""
    colors = list(c.colors)
    colors[v] = (-colors[v]) % c.k
    return KDColoring(c.k, c.d, tuple(colors))


def switch_r(f: RColoring, v: int) -> RColoring:
    colors = list(f.colors)
    colors[v] = (f.r - colors[v]) % f.r
    return RColoring(f.r, tuple(colors))


# --- text format ---------------------------------------------------------

Coloring = Union[KDColoring, RColoring]


def format_coloring(c: Coloring) -> str:
    if isinstance(c, KDColoring):
        lines = [f"kd {c.k} {c.d}"] + [f"{v} {x}" for v, x in enumerate(c.colors)]
    else:
        lines = [f"r {format_ratio(c.r)}"] + [
            f"{v} {format_ratio(x)}" for v, x in enumerate(c.colors)
        ]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str, source: str = "<coloring>") -> Coloring:
    header = None
    entries: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if header is None:
                if parts[0] == "kd" and len(parts) == 3:
                    header = ("kd", int(parts[1]), int(parts[2]))
                elif parts[0] == "r" and len(parts) == 2:
                    header = ("r", parse_ratio(parts[1]))
                else:
                    raise ParseError("expected 'kd <k> <d>' or 'r <num>/<den>'", lineno, source)
                continue
            if len(parts) != 2:
                raise ParseError(f"expected '<v> <color>', got {line!r}", lineno, source)
            v = int(parts[0])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"malformed line {line!r}", lineno, source) from None
        if v in entries:
            raise ParseError(f"vertex {v} colored twice", lineno, source)
        entries[v] = parts[1]
    if header is None:
        raise ParseError("missing header", None, source)
    if sorted(entries) != list(range(len(entries))):
        raise ParseError("vertices must be exactly 0..n-1", None, source)
    raw_colors = [entries[v] for v in range(len(entries))]
    try:
        if header[0] == "kd":
            return KDColoring(header[1], header[2], tuple(int(x) for x in raw_colors))
        return RColoring(header[1], tuple(parse_ratio(x) for x in raw_colors))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(str(exc), None, source) from None
