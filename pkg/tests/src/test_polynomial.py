# This file is part of hkstars: exact star counting for independent sets
# Use of this file is governed by the license in LICENSE.txt.

"""Test the count vector arithmetic in :py:mod:`hkstars.polynomial`

"""
from hypothesis import given, settings
from hypothesis.strategies import integers, lists, none, one_of
from hkstars import polynomial
from hkstars.polynomial import ONE

# pragma pylint: disable=missing-docstring

VECTORS = lists(integers(min_value=0, max_value=10 ** 20), max_size=8).map(
    polynomial.trim)
K_MAX = one_of(none(), integers(min_value=0, max_value=10))


def evaluate(vec, x):
    return sum(c * x ** k for k, c in enumerate(vec))


@given(VECTORS, VECTORS)
def test_add_commutes_and_evaluates(a, b):
    assert polynomial.add(a, b) == polynomial.add(b, a)
    for x in (1, 2, 3):
        assert evaluate(polynomial.add(a, b), x) == evaluate(a, x) + \
            evaluate(b, x)


@given(VECTORS, VECTORS)
@settings(max_examples=200)
def test_multiply_evaluates(a, b):
    for x in (1, 2, 7):
        assert evaluate(polynomial.multiply(a, b), x) == evaluate(a, x) * \
            evaluate(b, x)


@given(VECTORS, VECTORS, K_MAX)
def test_truncation_keeps_low_coefficients(a, b, k_max):
    full = polynomial.multiply(a, b)
    cut = polynomial.multiply(a, b, k_max)
    if k_max is None:
        assert cut == full
    else:
        assert cut == polynomial.trim(full[:k_max + 1])


def test_multiply_big_numbers_exactly():
    big = (1, 10 ** 40)
    assert polynomial.multiply(big, big) == (1, 2 * 10 ** 40, 10 ** 80)


def test_empty_and_unit():
    assert polynomial.multiply((), (1, 2)) == ()
    assert polynomial.product([]) == ONE
    assert polynomial.add((), ()) == ()


@given(VECTORS, K_MAX)
def test_shift_moves_every_coefficient(vec, k_max):
    shifted = polynomial.shift(vec, k_max)
    for k, coeff in enumerate(vec):
        if k_max is None or k + 1 <= k_max:
            assert polynomial.coefficient(shifted, k + 1) == coeff
    assert polynomial.coefficient(shifted, 0) == 0


def test_binomial_is_power_of_one_plus_x():
    for n in range(8):
        assert polynomial.binomial(n) == polynomial.product([(1, 1)] * n)


def test_pad_and_coefficient():
    assert polynomial.pad((1, 2, 3), 2) == (1, 2)
    assert polynomial.pad((), 3) == (0, 0, 0)
    assert polynomial.coefficient((4, 5), -1) == 0
    assert polynomial.coefficient((4, 5), 1) == 5
