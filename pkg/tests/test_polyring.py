import random

import numpy as np
import pytest

from ffdet.characters import chi3_bracket
from ffdet.field_core import ContextMismatchError, field_of_order
from ffdet.polyring import (
    DensePoly,
    build_g,
    build_h,
    congruent_mod_vanishing,
    evaluate,
    formal_derivative,
    pointwise_equiv,
    poly_mod,
    powmod,
    vanishing_poly,
    verify_lemma21,
)
from ffdet.report import PreconditionError

VALID_Q = [5, 11, 17, 23, 29, 41, 47, 53, 59, 71, 83, 89, 101, 107, 113, 125,
           131, 137, 149, 167, 173, 179, 191, 197]


def P(ctx, *coeffs):
    return DensePoly(ctx, list(coeffs))


def test_ring_examples(f5):
    T = DensePoly.gen(f5)
    assert (T + 1) * (T - 1) == P(f5, -1, 0, 1)
    assert poly_mod(T * T, T).is_zero()
    assert poly_mod(DensePoly.monomial(f5, 5), vanishing_poly(f5)) == T
    assert DensePoly(f5, [0, 0]).degree == -1


def test_context_mismatch(f5, f7):
    with pytest.raises(ContextMismatchError):
        DensePoly.gen(f5) + DensePoly.gen(f7)


def test_division_by_zero(f5):
    with pytest.raises(ZeroDivisionError):
        poly_mod(DensePoly.gen(f5), DensePoly(f5))
    with pytest.raises(ZeroDivisionError):
        powmod(DensePoly.gen(f5), 3, DensePoly(f5))


def _naive_mul(a, b, ctx):
    out = [ctx.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


@pytest.mark.parametrize("q", [5, 25, 125])
def test_mul_and_divmod_against_naive(q):
    ctx = field_of_order(q)
    rng = random.Random(q)
    elems = list(ctx.elements())
    for _ in range(20):
        a = [rng.choice(elems) for _ in range(rng.randint(1, 9))]
        b = [rng.choice(elems) for _ in range(rng.randint(1, 6))] + [ctx.one]
        pa, pb = DensePoly(ctx, a), DensePoly(ctx, b)
        assert pa * pb == DensePoly(ctx, _naive_mul(a, b, ctx))
        quot, rem = divmod(pa, pb)
        assert rem.degree < pb.degree
        assert quot * pb + rem == pa


def test_powmod_example(f5):
    quad = P(f5, 1, 1, 1)
    # oracle: multiply out, then fold T^k -> T^(k-4) for k >= 5
    cube = _naive_mul(_naive_mul(quad.coeffs, quad.coeffs, f5), quad.coeffs, f5)
    for k in range(len(cube) - 1, 4, -1):
        cube[k - 4] = cube[k - 4] + cube[k]
        cube[k] = f5.zero
    assert DensePoly(f5, cube) == P(f5, 1, 1, 2, 2, 1)
    assert powmod(quad, 3, vanishing_poly(f5)) == P(f5, 1, 1, 2, 2, 1)


def test_powmod_trivial_exponents(f11):
    base = P(f11, 3, 0, 5, 1)
    mod = vanishing_poly(f11)
    assert powmod(base, 0, mod) == 1
    assert powmod(base, 1, mod) == poly_mod(base, mod)


def test_eval_examples(f5, f125):
    assert evaluate(P(f5, 1, 1, 1), f5(1)) == 3
    assert evaluate(DensePoly(f5), f5(3)) == 0
    for ctx in (f5, f125):
        vanish = vanishing_poly(ctx)
        assert all(evaluate(vanish, x) == 0 for x in ctx.elements())


def test_pointwise_examples(f5):
    T = DensePoly.gen(f5)
    assert pointwise_equiv(DensePoly.monomial(f5, 5), T)
    assert not pointwise_equiv(T, T + 1)
    assert pointwise_equiv(P(f5, 1, 1, 1) ** 3, build_g(f5))


@pytest.mark.parametrize("q", [5, 11, 25, 27, 125])
def test_pointwise_iff_congruent(q):
    ctx = field_of_order(q)
    rng = random.Random(q)
    elems = list(ctx.elements())
    vanish = vanishing_poly(ctx)
    for _ in range(10):
        a = DensePoly(ctx, [rng.choice(elems) for _ in range(rng.randint(1, 2 * q))])
        b = a + rng.choice([DensePoly(ctx), vanish * DensePoly(ctx, [rng.choice(elems)]),
                            DensePoly(ctx, [rng.choice(elems) for _ in range(3)])])
        assert pointwise_equiv(a, b) == congruent_mod_vanishing(a, b)


def test_build_g_q5(f5):
    g = build_g(f5)
    assert g == P(f5, 1, 1, 2, 2, 1)
    assert g.degree == 4


def _g_termwise(ctx):
    # straight transcription of the defining sum, scalar field arithmetic
    q, third = ctx.q, ctx(3).inv()
    coeffs = [ctx.zero] * q
    coeffs[0] = ctx.one
    for k in range(2, q - 1):
        coeffs[k - 1] = coeffs[k - 1] + third * ctx(chi3_bracket(k))
    coeffs[q - 2] = coeffs[q - 2] + third
    coeffs[q - 1] = coeffs[q - 1] - 2 * third
    return coeffs


@pytest.mark.parametrize("q", [5, 11, 17, 125])
def test_build_g_termwise_and_lemma(q):
    ctx = field_of_order(q)
    g = build_g(ctx)
    assert list(g.coeffs) == _g_termwise(ctx)
    quad = P(ctx, 1, 1, 1)
    assert pointwise_equiv(quad ** (q - 2), g)


def test_build_g_rejects_bad_q(f7):
    with pytest.raises(PreconditionError):
        build_g(f7)
    with pytest.raises(PreconditionError):
        build_h(field_of_order(13))


def test_build_h_q5(f5):
    h = build_h(f5)
    assert h == P(f5, 2, 1, 2, 2)
    assert h.degree == 3


@pytest.mark.parametrize("q", [5, 11, 125])
def test_h_agrees_with_g_off_zero(q):
    ctx = field_of_order(q)
    g, h = build_g(ctx), build_h(ctx)
    assert h.degree == q - 2
    for x in ctx.enumerate_nonzero():
        assert g(x) == h(x)
    assert g(ctx.zero) != h(ctx.zero)


def test_formal_derivative(f5, f125):
    assert formal_derivative(P(f5, 3)).is_zero()
    assert formal_derivative(P(f5, 0, 0, 1)) == P(f5, 0, 2)
    for ctx in (f5, f125):
        q = ctx.q
        s = DensePoly.monomial(ctx, q - 1) - 1
        assert formal_derivative(s) == -DensePoly.monomial(ctx, q - 2)


@pytest.mark.parametrize("q", [5, 11, 25, 125])
def test_s_is_product_of_linear_factors(q):
    ctx = field_of_order(q)
    T = DensePoly.gen(ctx)
    s = DensePoly(ctx, [1])
    for a in ctx.enumerate_nonzero():
        s = s * (T - a)
    assert s == DensePoly.monomial(ctx, q - 1) - 1
    ds = formal_derivative(s)
    for a in ctx.enumerate_nonzero():
        assert ds(a) == -a.inv()


@pytest.mark.parametrize("q", [5, 11, 17, 125])
def test_quadratic_coprime_to_vanishing(q):
    ctx = field_of_order(q)
    a, b = P(ctx, 1, 1, 1), vanishing_poly(ctx)
    while not b.is_zero():
        a, b = b, poly_mod(a, b)
    assert a.degree == 0


@pytest.mark.parametrize("q", [5, 11, 125])
def test_verify_lemma21_passes(q):
    rep = verify_lemma21(field_of_order(q))
    assert rep.matched, rep


def test_verify_lemma21_precondition(f7):
    rep = verify_lemma21(f7)
    assert not rep.matched and rep.precondition_failed


def test_eval_array_matches_scalar(f125):
    rng = random.Random(0)
    elems = list(f125.elements())
    f = DensePoly(f125, [rng.choice(elems) for _ in range(12)])
    xs = rng.sample(elems, 10)
    from ffdet.polyring import eval_array
    out = f125.from_array(eval_array(f, f125.to_array(xs)))
    assert out == [f(x) for x in xs]
    assert np.array_equal(f125.to_array(out), eval_array(f, f125.to_array(xs)))
