import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tftlib import (FieldCtx, brtft_forward, brtft_inverse, eval_points_bitreversed,
                    fft_in_place, multiply_full_fft, multiply_tft, plan_new)
from tftlib import oracle
from tftlib.bridge import poly_degree

SWEEP_SIZES = [1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17, 31, 32, 33, 63, 64, 65,
               86, 100, 127, 128, 129, 171, 255, 256, 257, 300, 500, 512]


def test_brtft_example_f5(ctx5):
    plan = plan_new(3, ctx5)
    a = [1, 2, 3]
    brtft_forward(ctx5, a, plan)
    assert a == [1, 2, 2]  # (f(1), f(4), f(2)) with omega = 2


def test_brtft_full_length_equals_fft(ctx):
    p = ctx.p
    n = 64
    plan = plan_new(n, ctx)
    rng = random.Random(0)
    f = [rng.randrange(p) for _ in range(n)]
    a, b = list(f), list(f)
    brtft_forward(ctx, a, plan)
    fft_in_place(ctx, b, n, plan.omega)
    assert a == b


@pytest.mark.parametrize("n", SWEEP_SIZES)
def test_brtft_is_prefix_of_padded_fft(ctx, n):
    # master equivalence: first n entries of the bit-reversed DFT of the
    # zero-padded input
    p = ctx.p
    plan = plan_new(n, ctx)
    rng = random.Random(n)
    for trial in range(5):
        f = [rng.randrange(p) for _ in range(n)]
        padded = f + [0] * (plan.N - n)
        fft_in_place(ctx, padded, plan.N, plan.omega)
        a = list(f)
        brtft_forward(ctx, a, plan)
        assert a == padded[:n]


@pytest.mark.parametrize("n", SWEEP_SIZES)
def test_brtft_round_trip(ctx, n):
    p = ctx.p
    plan = plan_new(n, ctx)
    rng = random.Random(100 + n)
    f = [rng.randrange(p) for _ in range(n)]
    a = list(f)
    brtft_forward(ctx, a, plan)
    brtft_inverse(ctx, a, plan)
    assert a == f


def test_brtft_n1_identity(ctx):
    plan = plan_new(1, ctx)
    a = [11]
    brtft_forward(ctx, a, plan)
    assert a == [11]  # f(1) for a constant
    brtft_inverse(ctx, a, plan)
    assert a == [11]


def test_brtft_values_match_grid_points(ctx):
    p = ctx.p
    n = 86
    plan = plan_new(n, ctx)
    pts = list(eval_points_bitreversed(plan).points)
    rng = random.Random(5)
    f = [rng.randrange(p) for _ in range(n)]
    want = oracle.eval_batch([f], pts, p)[0]
    a = list(f)
    brtft_forward(ctx, a, plan)
    assert a == want


def test_truncated_beats_padded_at_power_plus_one(ctx):
    # the motivating regime n = 2^k + 1: the truncated inverse pipeline costs
    # far less than transforms at the doubled padded length
    p = ctx.p
    k = 8
    n = (1 << k) + 1
    plan = plan_new(n, ctx)
    rng = random.Random(6)
    f = [rng.randrange(p) for _ in range(n)]
    a = list(f)
    with ctx.count_session() as tft_sess:
        brtft_forward(ctx, a, plan)
        brtft_inverse(ctx, a, plan)
    assert a == f
    padded = f + [0] * (plan.N - n)
    with ctx.count_session() as fft_sess:
        fft_in_place(ctx, padded, plan.N, plan.omega)
    # one padded forward transform alone out-multiplies the whole round trip
    assert tft_sess.mul < 2 * fft_sess.mul
    assert fft_sess.mul > 1.5 * (0.5 * n * math.log2(n))


def test_multiply_full_fft_examples(ctx):
    assert multiply_full_fft(ctx, [1, 1], [1, 1]) == [1, 2, 1]
    f = [3, 0, 7, 9]
    assert multiply_full_fft(ctx, f, [1]) == f
    assert multiply_full_fft(ctx, f, [0]) == [0]


@pytest.mark.parametrize("path", ["cyclotomic", "bitreversed"])
def test_multiply_tft_examples(ctx, path):
    assert multiply_tft(ctx, [1, 1], [1, 1], path) == [1, 2, 1]
    assert multiply_tft(ctx, [4, 5], [0, 0], path) == [0]
    assert multiply_tft(ctx, [2], [3], path) == [6]


def test_multiply_against_schoolbook(ctx):
    p = ctx.p
    rng = random.Random(7)
    degree_pairs = [(0, 0), (1, 0), (3, 2), (8, 8), (17, 14), (40, 23),
                    (64, 63), (100, 99), (128, 128), (150, 150), (200, 100)]
    for df, dg in degree_pairs:
        f = [rng.randrange(p) for _ in range(df)] + [rng.randrange(1, p)]
        g = [rng.randrange(p) for _ in range(dg)] + [rng.randrange(1, p)]
        want = oracle.schoolbook_mul(f, g, p)
        assert multiply_full_fft(ctx, f, g) == want
        assert multiply_tft(ctx, f, g, "cyclotomic") == want
        assert multiply_tft(ctx, f, g, "bitreversed") == want
        for engine in ("sergeev", "mateer"):
            assert multiply_tft(ctx, f, g, "cyclotomic", engine) == want


def test_multiply_commutative_bilinear(ctx):
    p = ctx.p
    rng = random.Random(8)
    f = [rng.randrange(p) for _ in range(30)]
    g = [rng.randrange(p) for _ in range(21)]
    h = [rng.randrange(p) for _ in range(21)]
    assert multiply_tft(ctx, f, g) == multiply_tft(ctx, g, f)
    alpha = rng.randrange(p)
    lhs = multiply_tft(ctx, f, [(alpha * (x + y)) % p for x, y in zip(g, h)])
    fg = multiply_tft(ctx, f, g)
    fh = multiply_tft(ctx, f, h)
    rhs = [alpha * (x + y) % p for x, y in zip(fg, fh)]
    assert lhs == rhs


def test_multiply_power_of_two_degree_beats_full_fft(ctx):
    # product degree exactly 2^k: the padded transform length doubles while
    # the truncated length is 2^k + 1
    p = ctx.p
    rng = random.Random(9)
    for k in (5, 7, 9):
        half = 1 << (k - 1)
        f = [rng.randrange(p) for _ in range(half)] + [1]
        g = [rng.randrange(p) for _ in range(half)] + [1]
        with ctx.count_session() as s_fft:
            want = multiply_full_fft(ctx, f, g)
        with ctx.count_session() as s_tft:
            got = multiply_tft(ctx, f, g, "cyclotomic")
        assert got == want
        assert s_tft.mul < s_fft.mul


def test_multiply_cost_dominated_smoothly(ctx):
    # counted multiplications of the truncated path stay under
    # 1.5 n log2 n + 12 n through the power-of-two boundary
    p = ctx.p
    rng = random.Random(10)
    for n in range(248, 265):
        df = (n - 1) // 2
        f = [rng.randrange(p) for _ in range(df)] + [1]
        g = [rng.randrange(p) for _ in range(n - 2 - df)] + [1]
        with ctx.count_session() as sess:
            multiply_tft(ctx, f, g, "cyclotomic")
        assert sess.mul <= 1.5 * n * math.log2(n) + 12 * n


def test_poly_degree(ctx):
    assert poly_degree([0, 0], ctx.p) == -1
    assert poly_degree([5], ctx.p) == 0
    assert poly_degree([1, 2, 0], ctx.p) == 1
    assert poly_degree([0, ctx.p], ctx.p) == -1  # reduced view


def test_multiply_path_validation(ctx):
    with pytest.raises(ValueError):
        multiply_tft(ctx, [1], [1], "weird")


def test_multiply_beyond_two_adicity_rejected():
    from tftlib import UnsupportedOrderError

    ctx17 = FieldCtx(17)  # roots only up to order 16
    f = [1] * 17
    with pytest.raises(UnsupportedOrderError):
        multiply_full_fft(ctx17, f, f)
    with pytest.raises(UnsupportedOrderError):
        multiply_tft(ctx17, f, f)


@given(st.integers(min_value=1, max_value=160), st.data())
@settings(max_examples=30, deadline=None)
def test_brtft_round_trip_property(n, data):
    ctx = FieldCtx()
    plan = plan_new(n, ctx)
    f = data.draw(st.lists(st.integers(min_value=0, max_value=ctx.p - 1),
                           min_size=n, max_size=n))
    a = list(f)
    brtft_forward(ctx, a, plan)
    brtft_inverse(ctx, a, plan)
    assert a == f
