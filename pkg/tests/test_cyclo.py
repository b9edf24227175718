from __future__ import annotations

import math

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from minroots.cyclo import (
    RingOverflowError,
    chebyshev_D,
    cyclotomic_polynomial,
    embed,
    get_ring,
    lift,
    minimal_polynomial,
    parse_elem,
    set_word_bits,
    sign,
    word_bits,
)

mpmath.mp.dps = 60
X = sympy.Symbol("x")


def _value(el):
    c = 2 * mpmath.cos(mpmath.pi / el.ring.level)
    return sum(a * c ** i for i, a in enumerate(el.c))


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_matches_sympy(n):
    want = sympy.Poly(sympy.cyclotomic_poly(n, X), X).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == [int(a) for a in want]


@pytest.mark.parametrize("L", range(2, 41))
def test_minimal_polynomial_matches_sympy(L):
    want = sympy.Poly(sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / L), X), X).all_coeffs()[::-1]
    assert list(minimal_polynomial(L)) == [int(a) for a in want]


def test_small_minimal_polynomials():
    assert minimal_polynomial(3) == (-1, 1)
    assert minimal_polynomial(4) == (-2, 0, 1)
    assert minimal_polynomial(5) == (-1, -1, 1)
    assert minimal_polynomial(12) == (1, 0, -4, 0, 1)
    assert minimal_polynomial(1) == minimal_polynomial(3)


@pytest.mark.parametrize("k", range(0, 12))
def test_chebyshev_D(k):
    t = 0.37
    d = chebyshev_D(k)
    assert math.isclose(sum(a * (2 * math.cos(t)) ** i for i, a in enumerate(d)), 2 * math.cos(k * t), abs_tol=1e-9)


def test_sqrt2_in_level_four():
    r = get_ring(4)
    s2 = embed(4, r)
    assert s2 * s2 == 2
    assert sign(s2 - 1) == 1
    assert sign(s2 * s2 - 2) == 0


def test_golden_ratio_level_five():
    r = get_ring(5)
    phi = embed(5, r)
    assert phi * phi == phi + 1
    assert sign(phi - 2) == -1
    assert sign(phi * 2 - 3) == 1


def test_level_twelve_contains_sqrt2_and_sqrt3():
    r = get_ring(12)
    assert embed(4, r) ** 2 == 2
    assert embed(6, r) ** 2 == 3
    assert embed(3, r) == 1
    assert embed(2, r) == 0


def test_embed_rejects_nondivisor():
    with pytest.raises(ValueError):
        embed(5, get_ring(12))


def test_lift_is_a_ring_map():
    src, dst = get_ring(5), get_ring(15)
    a = src.from_coeffs((3, -2))
    b = src.from_coeffs((-1, 4))
    assert lift(a * b, dst) == lift(a, dst) * lift(b, dst)
    assert lift(a + b, dst) == lift(a, dst) + lift(b, dst)
    assert lift(src.gen, dst) == embed(5, dst)


def test_render_parse_roundtrip():
    r = get_ring(7)
    a = r.from_coeffs((1, -2, 5))
    assert a.render() == "poly7:1,-2,5"
    assert parse_elem(a.render()) == a
    assert parse_elem("4", r) == r.const(4)


def test_overflow_is_detected():
    old = word_bits()
    try:
        set_word_bits(16)
        r = get_ring(5)
        a = r.from_coeffs((100, 100))
        with pytest.raises(RingOverflowError):
            a * a * a
    finally:
        set_word_bits(old)


levels = st.sampled_from([4, 5, 7, 8, 9, 10, 12, 15, 18, 20, 24, 30])


@st.composite
def elements(draw):
    L = draw(levels)
    r = get_ring(L)
    coeffs = draw(st.lists(st.integers(-50, 50), min_size=r.degree, max_size=r.degree))
    return r.from_coeffs(coeffs)


@given(elements())
@settings(max_examples=300, deadline=None)
def test_sign_matches_high_precision(a):
    v = _value(a)
    want = 0 if not any(a.c) else (1 if v > 0 else -1)
    assert sign(a) == want


@given(elements(), elements())
@settings(max_examples=150, deadline=None)
def test_product_matches_high_precision(a, b):
    if a.ring is not b.ring:
        b = get_ring(a.ring.level).from_coeffs(b.c[: a.ring.degree] + (0,) * max(0, a.ring.degree - len(b.c)))
    got = _value(a * b)
    assert mpmath.almosteq(got, _value(a) * _value(b), abs_eps=mpmath.mpf(10) ** -30)


@given(st.integers(2, 40), st.integers(1, 3))
@settings(max_examples=60, deadline=None)
def test_embed_value(m, k):
    r = get_ring(m * k)
    assert mpmath.almosteq(_value(embed(m, r)), 2 * mpmath.cos(mpmath.pi / m), abs_eps=mpmath.mpf(10) ** -40)


def test_nearly_zero_element_sign():
    # c_5 - 1.618 ... is tiny and positive; product of conjugate-sized terms stresses refinement
    r = get_ring(5)
    phi = r.gen
    a = phi * 1000000 - 1618034
    assert sign(a) == (1 if _value(a) > 0 else -1)
