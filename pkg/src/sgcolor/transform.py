"""Constructive recoloring operations between (k,d)- and r-colorings.

Every operation takes the graph alongside the coloring so that the result
can be re-verified before it is returned. A precondition failure raises
:class:`TransformError`; an output that fails verification raises
:class:`TransformBug`, which always indicates a defect in this module.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

from .coloring import KDColoring, RColoring, verify_kd, verify_r
from .sgraph import SignedGraph


class TransformError(ValueError):
    """A transform was called outside its preconditions."""


class TransformBug(AssertionError):
    """A transform produced an output violating its own guarantees."""


def _require_valid(g: SignedGraph, c: KDColoring) -> None:
    bad = verify_kd(g, c)
    if bad:
        raise TransformError(f"input is not a valid ({c.k},{c.d})-coloring: {bad[0]}")


def _ensure_valid(g: SignedGraph, c: KDColoring, what: str) -> KDColoring:
    bad = verify_kd(g, c)
    if bad:
        raise TransformBug(f"{what} produced an invalid ({c.k},{c.d})-coloring: {bad[0]}")
    return c


def _below(x: int, removed: Iterable[int]) -> int:
    return sum(1 for y in removed if y < x)


# --- scaling and widening ------------------------------------------------


def scale(g: SignedGraph, c: KDColoring, t: int) -> KDColoring:
    """(k,d) -> (tk,td) by multiplying every color by t."""
    if t < 1:
        raise TransformError(f"scale factor must be >= 1, got {t}")
    _require_valid(g, c)
    out = KDColoring(t * c.k, t * c.d, tuple(t * x for x in c.colors))
    return _ensure_valid(g, out, "scale")


def extend(g: SignedGraph, c: KDColoring, k_new: int) -> KDColoring:
    """(k,d) -> (k_new,d) for k_new > k, shifting the upper half of the circle."""
    if k_new <= c.k:
        raise TransformError(f"k_new={k_new} must exceed k={c.k}")
    _require_valid(g, c)
    half = c.k // 2
    shift = k_new - c.k
    out = KDColoring(k_new, c.d, tuple(x if x <= half else x + shift for x in c.colors))
    return _ensure_valid(g, out, "extend")


def reduce_t(g: SignedGraph, c: KDColoring, k: int, d: int, t: int) -> KDColoring:
    """(tk,td) -> ((t-2)k,(t-2)d) for gcd(k,d) = 1 and t >= 3.

    Colors congruent to 1 (mod t) move down by one and colors congruent to
    t-1 move up by one; the two emptied residue classes are then deleted and
    the remaining colors renumbered in order.
    """
    if t < 3:
        raise TransformError(f"t must be >= 3, got {t}")
    if gcd(k, d) != 1:
        raise TransformError(f"gcd({k},{d}) != 1")
    if c.k != t * k or c.d != t * d:
        raise TransformError(f"coloring is ({c.k},{c.d}), expected ({t * k},{t * d})")
    _require_valid(g, c)
    k_out = (t - 2) * k
    out = []
    for x in c.colors:
        q, j = divmod(x, t)
        if j == 1:
            j = 0
        elif j == t - 1:
            q, j = q + 1, 0
        # x - |{y in A_1 u A_{t-1} : y < x}| for the recolored x = q*t + j
        out.append((q * (t - 2) + j - (1 if j > 1 else 0)) % k_out)
    return _ensure_valid(g, KDColoring(k_out, (t - 2) * d, tuple(out)), "reduce_t")


# --- updating --------------------------------------------------------------


def exception_points(k: int, d: int) -> tuple[int, ...]:
    """Residues of the half-integers (k-2d+1)/2, (k-d+1)/2, (2k-d+1)/2 that are integral.

    Empty when k and d are both even, two points otherwise.
    """
    pts = {(twice // 2) % k for twice in (k - 2 * d + 1, k - d + 1, 2 * k - d + 1) if twice % 2 == 0}
    return tuple(sorted(pts))


def update_once(g: SignedGraph, c: KDColoring, x0: int) -> KDColoring:
    """Update c at x0: recolor x0+d to x0+d-1 and -x0-d to -x0-d+1.

    Requires d >= 2, x0 and -x0 unused, and when x0 is an exception point
    also x0+d and -x0-d unused. Under those conditions the result is a
    valid coloring avoiding x0, x0+d, -x0 and -x0-d. (With d = 1 the
    recolored x0+d-1 would be x0 itself.)
    """
    k, d = c.k, c.d
    if d < 2:
        raise TransformError("updating needs d >= 2")
    x0 %= k
    used = c.used()
    inv = (-x0) % k
    up = (x0 + d) % k
    down = (-x0 - d) % k
    if x0 in used or inv in used:
        raise TransformError(f"color {x0} or its inverse {inv} is used")
    if x0 in exception_points(k, d) and (up in used or down in used):
        raise TransformError(
            f"{x0} is an exception point of ({k},{d}) and {up} or {down} is used"
        )
    _require_valid(g, c)
    new = []
    for x in c.colors:
        if x == up:
            new.append((up - 1) % k)
        elif x == down:
            new.append((down + 1) % k)
        else:
            new.append(x)
    out = _ensure_valid(g, KDColoring(k, d, tuple(new)), "update_once")
    if out.used() & {x0, up, inv, down}:
        raise TransformBug(f"update at {x0} left a freed color in use")
    return out


def update_steps(g: SignedGraph, c: KDColoring, x0: int, steps: int) -> KDColoring:
    """Update at x0, x0+d, ..., x0+(steps-1)d in turn."""
    if steps < 0:
        raise TransformError("steps must be non-negative")
    for i in range(steps):
        x = (x0 + i * c.d) % c.k
        try:
            c = update_once(g, c, x)
        except TransformError as exc:
            raise TransformError(f"step {i} (x={x}): {exc}") from None
    return c


# --- the k > 2n halving and k > 4n descent -------------------------------


def halve(g: SignedGraph, c: KDColoring) -> KDColoring:
    """(2k,2d) -> (k,d) when gcd(k,d) = 1 and k > 2n.

    Picks the smallest odd x0 with x0 and 2k-x0 unused, updates k steps from
    it (this sweeps every odd color onto an even one), and halves.
    """
    if c.k % 2 or c.d % 2:
        raise TransformError(f"expected a (2k,2d)-coloring, got ({c.k},{c.d})")
    k, d = c.k // 2, c.d // 2
    if gcd(k, d) != 1:
        raise TransformError(f"gcd({k},{d}) != 1")
    if k <= 2 * g.n:
        raise TransformError(f"need k > 2n, got k={k}, n={g.n}")
    _require_valid(g, c)
    used = c.used()
    x0 = next(
        (x for x in range(1, c.k, 2) if x not in used and (c.k - x) not in used), None
    )
    if x0 is None:
        raise TransformBug("no free odd inverse pair although k > 2n")
    swept = update_steps(g, c, x0, k)
    if any(x % 2 for x in swept.colors):
        raise TransformBug("odd color survived the k-step update")
    return _ensure_valid(g, KDColoring(k, d, tuple(x // 2 for x in swept.colors)), "halve")


def descent_anchors(k: int, d: int) -> tuple[int, int]:
    """The two exception points (p, q) in the roles used by the descent.

    k even: p = (k-d+1)/2, q = (2k-d+1)/2. k odd: p = (k-2d+1)/2 and q is
    (k-d+1)/2 for even d, (2k-d+1)/2 for odd d. Values are taken mod k.
    """
    if k % 2 == 0:
        p, q = (k - d + 1) // 2, (2 * k - d + 1) // 2
    else:
        p = (k - 2 * d + 1) // 2
        q = (k - d + 1) // 2 if d % 2 == 0 else (2 * k - d + 1) // 2
    return p % k, q % k


def _drop_free_pair(g: SignedGraph, c: KDColoring) -> KDColoring:
    # d = 1: delete one unused pair {a, k-a} of non-self-inverse colors.
    k = c.k
    used = c.used()
    a = next(
        (x for x in range(1, (k + 1) // 2) if x not in used and k - x not in used), None
    )
    if a is None:
        raise TransformBug("no free inverse pair although k > 4n")
    gone = (a, k - a)
    out = KDColoring(k - 2, 1, tuple(x - _below(x, gone) for x in c.colors))
    return _ensure_valid(g, out, "descend")


def _search_smaller(g: SignedGraph, c: KDColoring) -> KDColoring:
    from .solve import feasible

    k, d = c.k, c.d
    pairs = [
        (k2, d2)
        for k2 in range(2, k)
        for d2 in range(1, k2 // 2 + 1)
        if Fraction(k2, d2) < Fraction(k, d)
    ]
    pairs.sort(key=lambda kd: (Fraction(*kd), kd[0]))
    for k2, d2 in pairs:
        out = feasible(g, k2, d2)
        if out is not None:
            return _ensure_valid(g, out, "descend search")
    raise TransformBug(f"no coloring with k' < {k} and ratio below {k}/{d}")


def descend(g: SignedGraph, c: KDColoring) -> KDColoring:
    """(k,d) -> (k',d') with k' < k and k'/d' < k/d, for gcd(k,d) = 1 and k > 4n.

    Frees the anchor p and its inverse by updating along the d-orbit, then
    updates from -p until the orbit reaches p or q; the colors passed over
    (set A, with inverses B) are unused afterwards and get deleted. Which
    anchor is reached and the parity of k select how the survivors are
    renumbered and what d' is.
    """
    k, d, n = c.k, c.d, g.n
    if gcd(k, d) != 1:
        raise TransformError(f"gcd({k},{d}) != 1")
    if k <= 4 * n:
        raise TransformError(f"need k > 4n, got k={k}, n={n}")
    _require_valid(g, c)
    if d == 1:
        # The orbit construction degenerates here (d' would be 0).
        return _drop_free_pair(g, c)

    p, q = descent_anchors(k, d)
    step_of = {(i * d) % k: i for i in range(k)}  # position of x along the d-orbit

    def f(x: int) -> int:
        return step_of[x % k]

    used = c.used()
    span = (f(p) - f(q)) % k
    x0 = None
    for i in range(1, span + 1):
        x = (q + i * d) % k
        if x not in used and (-x) % k not in used:
            x0 = x
            break
    if x0 is None or (-p) % k == q:
        # Gaps in the orbit construction: at k = 4n+1 the arc can be fully
        # blocked, and at k = 3d-2 (d odd) the walk from -p starts on q.
        return _search_smaller(g, c)
    c1 = update_steps(g, c, x0, (f(p) - f(x0)) % k)
    if {p, (-p) % k} & c1.used():
        raise TransformBug("p or -p still used after the first update")

    neg_p = (-p) % k
    r = min(x for x in ((f(p) - f(neg_p)) % k, (f(q) - f(neg_p)) % k) if x > 0)
    c2 = update_steps(g, c1, neg_p, r)

    orbit = [(neg_p + i * d) % k for i in range(r + 1)]
    A = set(orbit)
    B = {(-a) % k for a in A}
    removed = A | B
    if len(A) != r + 1:
        raise TransformBug("orbit segment revisits a color")
    if removed & c2.used():
        raise TransformBug("a color of A or B is still used")
    half = k // 2
    hits_p = orbit[-1] == p

    if k % 2 == 0:
        if hits_p:
            case = "1a"
            if A != B or {0, half} <= A:
                raise TransformBug("case 1a: A is not inverse-closed")
            k2 = k - r - 1
            num = r * d + d - 1
            shift = 0 if 0 not in A else (k - len(A)) // 2

            def rename(x: int) -> int:
                return x - _below(x, A) - shift
        else:
            case = "1b"
            if len(removed) != 2 * (r + 1) or 0 in removed or half in removed:
                raise TransformBug("case 1b: A u B is not r+1 disjoint inverse pairs")
            k2 = k - 2 * (r + 1)
            num = 2 * r * d + 2 * d - 2

            def rename(x: int) -> int:
                return x - _below(x, removed)
    else:
        if {half, half + 1} & removed:
            raise TransformBug("middle pair (k-1)/2, (k+1)/2 lies in A u B")
        if hits_p:
            case = "2a"
            if A != B:
                raise TransformBug("case 2a: A is not inverse-closed")
            k2 = k - r - 2
            num = r * d + 2 * d - 1
            shift = 0 if 0 not in A else (k - len(A)) // 2 - 1

            def rename(x: int) -> int:
                return x - _below(x, A) - shift - (1 if x > half else 0)
        else:
            case = "2b"
            if len(removed) != 2 * (r + 1) or 0 in removed:
                raise TransformBug("case 2b: A u B is not r+1 disjoint inverse pairs")
            k2 = k - 2 * r - 3
            num = 2 * r * d + 3 * d - 2

            def rename(x: int) -> int:
                return x - _below(x, removed) - (1 if x > half else 0)

    if num % k:
        raise TransformBug(f"case {case}: ({num})/{k} is not an integer")
    d2 = d - num // k
    if d2 < 1 or k2 < 2 * d2:
        raise TransformBug(f"case {case}: bad parameters ({k2},{d2})")
    if not (k2 < k and Fraction(k2, d2) < Fraction(k, d)):
        raise TransformBug(f"case {case}: ({k2},{d2}) does not improve on ({k},{d})")
    out = KDColoring(k2, d2, tuple(rename(x) % k2 for x in c2.colors))
    return _ensure_valid(g, out, f"descend case {case}")


# --- retargeting to a larger ratio ---------------------------------------


def retarget(g: SignedGraph, c: KDColoring, k2: int, d2: int) -> KDColoring:
    """(k,d) -> (k2,d2) when k/d < k2/d2, or k/d = k2/d2 with d odd."""
    if d2 < 1 or k2 < 2 * d2:
        raise TransformError(f"need k' >= 2d' >= 2, got ({k2},{d2})")
    k, d = c.k, c.d
    src, dst = Fraction(k, d), Fraction(k2, d2)
    if src > dst:
        raise TransformError(f"ratio {src} exceeds target {dst}")
    if src == dst and d % 2 == 0:
        raise TransformError(f"equal ratios need odd d, got d={d}")
    _require_valid(g, c)

    if d % 2:
        common = gcd(k2, d2)
        k0, d0 = k2 // common, d2 // common
        cur = scale(g, c, d0)
        if cur.k < d * k0:
            cur = extend(g, cur, d * k0)
        for t in range(d, 2, -2):
            cur = reduce_t(g, cur, k0, d0, t)
        return scale(g, cur, common)

    cur = scale(g, c, d2)
    top = k2 * d - 1
    if cur.k < top:
        cur = extend(g, cur, top)
    half = d // 2
    out = []
    for x in cur.colors:
        y = x - top if x > top - half else x
        out.append(((2 * y + d) // (2 * d)) % k2)  # floor(y/d + 1/2)
    return _ensure_valid(g, KDColoring(k2, d2, tuple(out)), "retarget")


# --- (k,d) <-> circular r ------------------------------------------------


def kd_to_r(g: SignedGraph, c: KDColoring) -> RColoring:
    """A (2k,2d)-coloring c gives the circular k/d-coloring c/(2d)."""
    if c.k % 2 or c.d % 2:
        raise TransformError(f"expected a (2k,2d)-coloring, got ({c.k},{c.d})")
    _require_valid(g, c)
    f = RColoring(Fraction(c.k, c.d), tuple(Fraction(x, c.d) for x in c.colors))
    bad = verify_r(g, f)
    if bad:
        raise TransformBug(f"kd_to_r produced an invalid r-coloring: {bad[0]}")
    return f


def r_to_kd(g: SignedGraph, f: RColoring) -> KDColoring:
    """A rational circular k/d-coloring gives a (2k,2d)- or a (k,d)-coloring.

    With m the least common denominator of the colors, f*m*d is an
    (mk,md)-coloring; repeated reduce_t brings it to (k,d) for odd m and to
    (2k,2d) for even m.
    """
    bad = verify_r(g, f)
    if bad:
        raise TransformError(f"input is not a valid circular {f.r}-coloring: {bad[0]}")
    k, d = f.r.numerator, f.r.denominator
    m = lcm(1, *(x.denominator for x in f.colors))
    scaled = tuple(x * m * d for x in f.colors)
    if any(x.denominator != 1 for x in scaled):
        raise TransformBug("scaled colors are not integral")
    cur = _ensure_valid(g, KDColoring(m * k, m * d, tuple(int(x) for x in scaled)), "r_to_kd")
    for t in range(m, 2, -2):
        cur = reduce_t(g, cur, k, d, t)
    return cur
