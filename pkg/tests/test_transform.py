from __future__ import annotations

import random
from fractions import Fraction as F
from math import gcd

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import make, naive_ok, random_instance
from sgcolor.coloring import KDColoring, RColoring, verify_kd, verify_r
from sgcolor.transform import (
    TransformError,
    descend,
    descent_anchors,
    exception_points,
    extend,
    halve,
    kd_to_r,
    r_to_kd,
    reduce_t,
    retarget,
    scale,
    update_once,
    update_steps,
)

UC3_42 = KDColoring(4, 2, (1, 1, 3))
seeds = st.integers(0, 2**32)


@pytest.fixture
def k3_pos():
    return make(3, (0, 1, "+"), (0, 2, "+"), (1, 2, "+"))


# --- examples --------------------------------------------------------------


def test_scale_example(uc3):
    assert scale(uc3, UC3_42, 3) == KDColoring(12, 6, (3, 3, 9))


def test_extend_example(uc3):
    # colors <= k/2 stay, the rest shift by one
    assert extend(uc3, UC3_42, 5) == KDColoring(5, 2, (1, 1, 4))
    with pytest.raises(TransformError):
        extend(uc3, UC3_42, 4)


def test_reduce_t_example(k3_pos):
    assert reduce_t(k3_pos, KDColoring(9, 3, (0, 3, 6)), 3, 1, 3) == KDColoring(3, 1, (0, 1, 2))


def test_reduce_t_scaled_uc3(uc3):
    c = KDColoring(12, 6, (3, 3, 9))
    # 3 = 0*6+3 -> 0*4+2, 9 = 1*6+3 -> 1*4+2
    assert reduce_t(uc3, c, 2, 1, 6) == KDColoring(8, 4, (2, 2, 6))
    with pytest.raises(TransformError):
        reduce_t(uc3, c, 4, 2, 3)


def test_reduce_t_preconditions(uc3):
    with pytest.raises(TransformError):
        reduce_t(uc3, KDColoring(8, 4, (2, 2, 6)), 4, 2, 2)
    with pytest.raises(TransformError):
        reduce_t(uc3, KDColoring(12, 6, (3, 3, 9)), 3, 1, 3)


def test_exception_points():
    assert exception_points(5, 2) == (1, 2)
    assert exception_points(10, 2) == ()
    # k=7, d=3: (k-2d+1)/2 = 1, (k-d+1)/2 = 5/2, (2k-d+1)/2 = 6
    assert exception_points(7, 3) == (1, 6)


def test_update_once_example(p2_pos):
    # up = 2 -> 1, down = -2 = 3 (unused)
    out = update_once(p2_pos, KDColoring(5, 2, (2, 4)), 0)
    assert out == KDColoring(5, 2, (1, 4))


def test_update_once_exception_point_blocked(p2_pos):
    c = KDColoring(5, 2, (3, 0))
    assert 1 in exception_points(5, 2)
    with pytest.raises(TransformError):
        update_once(p2_pos, c, 1)


def test_update_once_needs_free_pair(p2_pos):
    with pytest.raises(TransformError):
        update_once(p2_pos, KDColoring(5, 2, (2, 4)), 1)


def test_update_steps_example(p2_pos):
    c = KDColoring(10, 2, (0, 2))
    assert update_steps(p2_pos, c, 5, 5) == c


def test_update_steps_names_failing_step(p2_pos):
    # step 0 at 4 is fine; step 1 at the exception point 1 finds 2 = -1-2 used
    with pytest.raises(TransformError, match="step 1"):
        update_steps(p2_pos, KDColoring(5, 2, (0, 2)), 4, 2)


def test_update_needs_d_at_least_two(p2_pos):
    with pytest.raises(TransformError):
        update_once(p2_pos, KDColoring(4, 1, (0, 2)), 1)


def test_halve_example(p2_pos):
    assert halve(p2_pos, KDColoring(10, 2, (0, 2))) == KDColoring(5, 1, (0, 1))


def test_halve_preconditions(p2_pos):
    with pytest.raises(TransformError):
        halve(p2_pos, KDColoring(8, 2, (0, 2)))  # k = 4 = 2n
    with pytest.raises(TransformError):
        halve(p2_pos, KDColoring(12, 4, (0, 4)))  # gcd(6, 2) = 2


def test_descend_examples(p2_pos):
    single = make(1)
    assert descend(single, KDColoring(5, 1, (0,))) == KDColoring(3, 1, (0,))
    out = descend(p2_pos, KDColoring(9, 2, (0, 2)))
    assert out.k < 9 and out.ratio < F(9, 2)
    assert not verify_kd(p2_pos, out)


def test_descend_preconditions(p2_pos):
    with pytest.raises(TransformError):
        descend(p2_pos, KDColoring(8, 3, (0, 3)))  # k = 4n
    with pytest.raises(TransformError):
        descend(p2_pos, KDColoring(10, 2, (0, 2)))


def test_descent_anchors():
    assert descent_anchors(10, 3) == (4, 9)
    assert descent_anchors(11, 2) == (4, 5)
    assert descent_anchors(11, 3) == (3, 10)


def test_retarget_examples(uc3):
    assert retarget(uc3, UC3_42, 5, 2) == KDColoring(5, 2, (1, 1, 4))
    c5 = make(5, *[(i, (i + 1) % 5, "+") for i in range(5)])
    out = retarget(c5, KDColoring(5, 2, (0, 2, 4, 1, 3)), 3, 1)
    assert out.k == 3 and out.d == 1 and not verify_kd(c5, out)


def test_retarget_equal_ratio_odd_d(uc3):
    c = KDColoring(7, 3, (1, 2, 5))
    assert not verify_kd(uc3, c)
    out = retarget(uc3, c, 14, 6)
    assert (out.k, out.d) == (14, 6) and not verify_kd(uc3, out)
    with pytest.raises(TransformError):
        retarget(uc3, UC3_42, 2, 1)  # larger ratio source
    with pytest.raises(TransformError):
        retarget(uc3, UC3_42, 6, 3)  # equal ratio, even d


def test_kd_to_r_and_back(uc3):
    f = kd_to_r(uc3, UC3_42)
    assert f == RColoring(2, (F(1, 2), F(1, 2), F(3, 2)))
    assert r_to_kd(uc3, f) == UC3_42


def test_r_to_kd_rejects_invalid(uc3):
    with pytest.raises(TransformError):
        r_to_kd(uc3, RColoring(2, (0, 0, 1)))
    with pytest.raises(TransformError):
        kd_to_r(uc3, KDColoring(5, 2, (1, 1, 4)))


def test_invalid_input_rejected(uc3):
    with pytest.raises(TransformError):
        scale(uc3, KDColoring(4, 2, (0, 0, 2)), 2)


# --- properties --------------------------------------------------------------


def _pair(data, k_lo, k_hi, coprime=False):
    k = data.draw(st.integers(k_lo, k_hi))
    d = data.draw(st.integers(1, k // 2))
    if coprime:
        assume(gcd(k, d) == 1)
    return k, d


@given(seeds, st.integers(1, 6), st.integers(1, 5), st.data())
def test_scale_property(seed, n, t, data):
    k, d = _pair(data, 2, 12)
    g, c = random_instance(random.Random(seed), n, k, d)
    out = scale(g, c, t)
    assert (out.k, out.d) == (t * k, t * d) and naive_ok(g, out.k, out.d, out.colors)


@given(seeds, st.integers(1, 6), st.integers(1, 6), st.data())
def test_extend_property(seed, n, extra, data):
    k, d = _pair(data, 2, 12)
    g, c = random_instance(random.Random(seed), n, k, d)
    out = extend(g, c, k + extra)
    assert naive_ok(g, k + extra, d, out.colors)


@given(seeds, st.integers(1, 6), st.integers(3, 6), st.data())
def test_reduce_t_property(seed, n, t, data):
    k, d = _pair(data, 2, 8, coprime=True)
    g, c = random_instance(random.Random(seed), n, t * k, t * d)
    out = reduce_t(g, c, k, d, t)
    assert (out.k, out.d) == ((t - 2) * k, (t - 2) * d)
    assert naive_ok(g, out.k, out.d, out.colors)


@given(seeds, st.integers(1, 5), st.data())
def test_update_once_property(seed, n, data):
    k, d = _pair(data, 4, 14)
    assume(d >= 2)
    g, c = random_instance(random.Random(seed), n, k, d)
    used = c.used()
    pts = exception_points(k, d)
    ok = [
        x for x in range(k)
        if x not in used and -x % k not in used
        and (x not in pts or not {(x + d) % k, (-x - d) % k} & used)
    ]
    assume(ok)
    x0 = data.draw(st.sampled_from(ok))
    out = update_once(g, c, x0)
    assert naive_ok(g, k, d, out.colors)
    assert not out.used() & {x0, -x0 % k, (x0 + d) % k, (-x0 - d) % k}


@given(seeds, st.integers(1, 5), st.data())
def test_halve_property(seed, n, data):
    k = data.draw(st.integers(2 * n + 1, 2 * n + 8))
    d = data.draw(st.integers(1, k // 2))
    assume(gcd(k, d) == 1)
    g, c = random_instance(random.Random(seed), n, 2 * k, 2 * d)
    out = halve(g, c)
    assert (out.k, out.d) == (k, d) and naive_ok(g, k, d, out.colors)


@settings(max_examples=200)
@given(seeds, st.integers(1, 4), st.data())
def test_descend_property(seed, n, data):
    k = data.draw(st.integers(4 * n + 1, 4 * n + 10))
    d = data.draw(st.integers(1, k // 2))
    assume(gcd(k, d) == 1)
    g, c = random_instance(random.Random(seed), n, k, d)
    out = descend(g, c)
    assert out.k < k and F(out.k, out.d) < F(k, d)
    assert naive_ok(g, out.k, out.d, out.colors)


@given(seeds, st.integers(1, 5), st.data())
def test_retarget_property(seed, n, data):
    k, d = _pair(data, 2, 10)
    k2 = data.draw(st.integers(2, 16))
    d2 = data.draw(st.integers(1, k2 // 2))
    assume(F(k, d) < F(k2, d2) or (F(k, d) == F(k2, d2) and d % 2))
    g, c = random_instance(random.Random(seed), n, k, d)
    out = retarget(g, c, k2, d2)
    assert (out.k, out.d) == (k2, d2) and naive_ok(g, k2, d2, out.colors)


@given(seeds, st.integers(1, 5), st.data())
def test_kd_r_round_trip(seed, n, data):
    k, d = _pair(data, 2, 10)
    g, c = random_instance(random.Random(seed), n, 2 * k, 2 * d)
    f = kd_to_r(g, c)
    assert f.r == F(k, d) and not verify_r(g, f)
    back = r_to_kd(g, f)
    assert back.ratio == F(k, d) and naive_ok(g, back.k, back.d, back.colors)
