from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhsing.arith import (
    DivisorElement,
    IntPolynomial,
    LambdaCombination,
    NegativeMultiplicity,
    NotDivisible,
    NotIntegral,
    cyclotomic_poly,
    divisor_to_poly,
    divisors,
    lambda_mul,
    lambda_to_divisor,
    poly_exact_div,
    poly_product,
    totient,
)

P = IntPolynomial
L = LambdaCombination.generator
ONE = LambdaCombination.unit()


def naive_totient(m):
    from math import gcd

    return sum(1 for k in range(1, m + 1) if gcd(k, m) == 1)


def test_exact_division_examples():
    assert poly_exact_div(P.binomial(4), P.binomial(2)) == P((1, 0, 1))
    assert poly_exact_div(P((0, -1, 0, 1)), P((-1, 1))) == P((0, 1, 1))
    with pytest.raises(NotDivisible):
        poly_exact_div(P.binomial(3), P.binomial(2))


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(P.binomial(2), P(()))


def test_trimming_and_degree():
    assert P((1, 2, 0, 0)) == P((1, 2))
    assert P(()).degree == -1
    assert P((0, 0)).is_zero
    assert P.monomial(3, 5).coefficient(3) == 5


def test_evaluation():
    p = P((1, 2, 3))
    assert p(2) == 1 + 4 + 12
    assert p(Fraction(1, 2)) == Fraction(1) + 1 + Fraction(3, 4)


def test_cyclotomic_examples():
    assert cyclotomic_poly(1) == P((-1, 1))
    assert cyclotomic_poly(8) == P((1, 0, 0, 0, 1))
    assert cyclotomic_poly(6) == P((1, -1, 1))


@pytest.mark.parametrize("k", range(1, 65))
def test_cyclotomic_product_is_binomial(k):
    # t^k - 1 factors over the divisors of k, and each factor has degree phi(m)
    for m in divisors(k):
        assert cyclotomic_poly(m).degree == totient(m) == naive_totient(m)
    assert poly_product(cyclotomic_poly(m) for m in divisors(k)) == P.binomial(k)


def test_lambda_examples():
    assert lambda_mul(L(4), L(8)) == L(8, 4)
    assert lambda_mul(ONE, L(7)) == L(7)
    lhs = (L(2) - ONE) * (L(3) - ONE)
    assert lhs == L(6) - L(2) - L(3) + ONE


def test_lambda_to_divisor_examples():
    assert lambda_to_divisor(L(8) - L(4) + ONE) == DivisorElement.from_mapping({8: 1, 1: 1})
    assert lambda_to_divisor(ONE) == DivisorElement.from_mapping({1: 1})
    assert lambda_to_divisor(L(6)) == DivisorElement.from_mapping({1: 1, 2: 1, 3: 1, 6: 1})


def test_lambda_to_divisor_rejects_fractional():
    with pytest.raises(NotIntegral):
        lambda_to_divisor(L(4, Fraction(1, 3)))


def test_divisor_to_poly_examples():
    assert divisor_to_poly(DivisorElement.from_mapping({8: 1, 1: 1})) == P((1, 0, 0, 0, 1)) * P((-1, 1))
    assert divisor_to_poly(DivisorElement()) == P((1,))
    assert divisor_to_poly(DivisorElement.from_mapping({1: 2})) == P((-1, 1)) ** 2
    with pytest.raises(NegativeMultiplicity):
        divisor_to_poly(DivisorElement.from_mapping({3: -1}))


def test_divisor_str():
    assert str(DivisorElement.from_mapping({8: 1, 1: 1})) == "Phi1*Phi8"


polys = st.lists(st.integers(-6, 6), min_size=1, max_size=7).map(lambda c: P(tuple(c)))
nonzero_polys = polys.filter(lambda p: not p.is_zero)


@given(polys, nonzero_polys)
def test_division_inverts_multiplication(p, q):
    assert poly_exact_div(p * q, q) == p


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p - p).is_zero


small_lambda = st.dictionaries(
    st.integers(1, 24), st.fractions(min_value=-3, max_value=3, max_denominator=4), max_size=3
).map(LambdaCombination.from_mapping)


@given(small_lambda, small_lambda, small_lambda)
@settings(max_examples=150)
def test_lambda_algebra_laws(x, y, z):
    assert lambda_mul(x, y) == lambda_mul(y, x)
    assert lambda_mul(lambda_mul(x, y), z) == lambda_mul(x, lambda_mul(y, z))
    assert lambda_mul(ONE, x) == x == lambda_mul(x, ONE)


@given(st.integers(1, 200))
def test_generator_divisor_has_degree_k(k):
    assert lambda_to_divisor(L(k)).degree == k
