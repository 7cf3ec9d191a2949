import math

import pytest
from hypothesis import assume, given, strategies as st

from anthyphairesis.arith import (DomainError, SurdContext, format_combination,
                                  isqrt, is_square, ratio_key, surd_add,
                                  surd_floor_div, surd_floor_div_search,
                                  surd_mul, surd_scale, surd_sign, surd_sub)
from oracles import isqrt_bisect, isqrt_brute

C19 = SurdContext(19)
non_square = st.integers(2, 100).filter(lambda N: not is_square(N))
coef = st.integers(-1000, 1000)


def el(m, n, ctx=C19):
    return ctx.element(m, n)


@pytest.mark.parametrize("n, r", [(0, 0), (19, 4), (10**40, 10**20)])
def test_isqrt_examples(n, r):
    assert isqrt(n) == r


def test_isqrt_negative():
    with pytest.raises(DomainError):
        isqrt(-1)


def test_isqrt_small_matches_brute():
    for n in range(2000):
        assert isqrt(n) == isqrt_brute(n)


@given(st.integers(0, 10**80))
def test_isqrt_bracket(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)
    assert r == isqrt_bisect(n)


@pytest.mark.parametrize("N", [0, 1, 4, 9, 100, -3])
def test_context_rejects(N):
    with pytest.raises(DomainError):
        SurdContext(N)


@pytest.mark.parametrize("m, n, s", [(1, -4, 1), (-2, 9, 1), (1, -5, -1),
                                     (0, 0, 0), (0, -3, -1), (2, 0, 1)])
def test_sign_examples(m, n, s):
    assert surd_sign(el(m, n)) == s


def test_linear_examples():
    a, b = C19.a, C19.b
    e1 = surd_sub(a, surd_scale(b, 4))
    assert e1.coefficients() == (1, -4)
    e2 = surd_sub(b, surd_scale(e1, 2))
    assert e2.coefficients() == (-2, 9)
    assert surd_sub(e1, surd_scale(e2, 0)) == e1
    assert surd_add(e1, e2) == el(-1, 5)


def test_mul_examples():
    assert surd_mul(C19.a, C19.a) == el(0, 19)
    assert surd_mul(C19.b, el(326, -1421)) == el(326, -1421)
    # b * e7 == e1 * e6
    assert surd_mul(el(1, -4), el(-39, 170)) == el(326, -1421)


def test_mismatched_contexts():
    x, y = el(1, 0), SurdContext(2).element(1, 0)
    for op in (surd_add, surd_sub, surd_mul, surd_floor_div):
        with pytest.raises(DomainError):
            op(x, y)


@pytest.mark.parametrize("x, y, q", [
    ((1, 0), (0, 1), 4),          # a = 4b + e1
    ((0, 1), (1, -4), 2),         # b = 2e1 + e2
    ((14, -61), (-39, 170), 8),   # e5 = 8e6 + e7
])
def test_floor_div_examples(x, y, q):
    assert surd_floor_div(el(*x), el(*y)) == q
    assert surd_floor_div_search(el(*x), el(*y)) == q


def test_floor_div_rejects_nonpositive():
    with pytest.raises(DomainError):
        surd_floor_div(el(1, -5), C19.b)
    with pytest.raises(DomainError):
        surd_floor_div(C19.b, el(0, 0))


@given(non_square, coef, coef, coef, coef, coef, coef)
def test_mul_commutative_associative(N, m1, n1, m2, n2, m3, n3):
    ctx = SurdContext(N)
    x, y, z = ctx.element(m1, n1), ctx.element(m2, n2), ctx.element(m3, n3)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)


@given(non_square, coef, coef)
def test_sign_agrees_with_float(N, m, n):
    value = m * math.sqrt(N) + n
    assume(abs(value) > 1e-6 * (abs(m) * math.sqrt(N) + abs(n)))
    assert surd_sign(SurdContext(N).element(m, n)) == (1 if value > 0 else -1)


def positive(ctx, m, n):
    x = ctx.element(m, n)
    return x if x.sign() > 0 else -x


@given(non_square, coef, coef, coef, coef)
def test_floor_div_brackets(N, m1, n1, m2, n2):
    ctx = SurdContext(N)
    assume((m1 or n1) and (m2 or n2))
    x, y = positive(ctx, m1, n1), positive(ctx, m2, n2)
    q = surd_floor_div(x, y)
    assert q >= 0
    assert surd_sign(x - y * q) in (0, 1)
    assert surd_sign(x - y * (q + 1)) == -1
    assert q == surd_floor_div_search(x, y)


@given(non_square, st.lists(coef, min_size=8, max_size=8), st.booleans())
def test_ratio_key_matches_cross_multiplication(N, cs, proportional):
    ctx = SurdContext(N)
    x, y, u, v = (ctx.element(cs[i], cs[i + 1]) for i in range(0, 8, 2))
    if proportional:
        # u/v := x/y written over a different common factor
        u, v = x * u, y * u
    assume(y.sign() != 0 and v.sign() != 0)
    assert (ratio_key(x, y) == ratio_key(u, v)) == (x * v == u * y)


@given(non_square, coef, coef, st.integers(1, 50))
def test_ratio_key_scale_invariant(N, m, n, t):
    ctx = SurdContext(N)
    x, y = ctx.element(m, n), ctx.element(n + 1, m)
    assume(y.sign() != 0)
    assert ratio_key(x * t, y * t) == ratio_key(x, y)


def test_big_coefficients_exact():
    # 10**60 coefficients: a float path would lose the sign here
    ctx = SurdContext(2)
    p, q = 1, 1
    for _ in range(200):
        p, q = p + 2 * q, p + q
    # p/q are sqrt(2) convergents, so q*sqrt(2) - p is tiny and alternating
    x = ctx.element(q, -p)
    assert x.sign() == (1 if p * p < 2 * q * q else -1)
    assert abs(p * p - 2 * q * q) == 1


@pytest.mark.parametrize("m, n, text", [
    (1, -4, "a - 4b"), (-2, 9, "9b - 2a"), (326, -1421, "326a - 1421b"),
    (0, 1, "b"), (-1, 0, "-a"), (0, 0, "0"), (3, 2, "3a + 2b"),
])
def test_format_combination(m, n, text):
    assert format_combination(m, n) == text
