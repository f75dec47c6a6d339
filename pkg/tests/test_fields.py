from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conchoidal.fields import (
    FIELD_Q,
    FIELD_QI,
    GaussianRational,
    fraction_sqrt,
    gaussian_sqrt,
    positively_oriented,
    sqrt_in_field,
    to_scalar,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
gaussians = st.builds(GaussianRational, rationals, rationals)


def test_basic_arithmetic():
    i = GaussianRational(0, 1)
    assert i * i == -1
    assert (GaussianRational(1, 1)) ** 2 == GaussianRational(0, 2)
    assert (GaussianRational(2, 1)) * (GaussianRational(2, -1)) == 5
    assert GaussianRational(3, 4).norm() == 25


def test_division_and_zero():
    a = GaussianRational(1, 2)
    b = GaussianRational(3, -1)
    assert (a / b) * b == a
    with pytest.raises(ZeroDivisionError):
        a / GaussianRational(0, 0)
    assert not GaussianRational(0, 0)
    assert GaussianRational(1, 0) == Fraction(1)


@given(gaussians)
def test_conjugation_involution(q):
    assert q.conjugate().conjugate() == q
    n = q.norm()
    assert n >= 0
    assert (n == 0) == (not q)


@given(gaussians, gaussians)
def test_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a + b == b + a
    assert (a - b) + b == a
    if c:
        assert (a / c) * c == a


def test_fraction_sqrt():
    assert fraction_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert fraction_sqrt(Fraction(2)) is None
    assert fraction_sqrt(Fraction(-1)) is None
    assert fraction_sqrt(Fraction(0)) == 0


@given(gaussians)
def test_gaussian_sqrt_roundtrip(q):
    s = q * q
    r = gaussian_sqrt(s)
    assert r is not None
    assert r * r == s


def test_gaussian_sqrt_nonsquares():
    assert gaussian_sqrt(GaussianRational(2, 0)) is None   # 2 is not a Q(i) square
    assert gaussian_sqrt(GaussianRational(0, 2)) == GaussianRational(1, 1)
    assert gaussian_sqrt(GaussianRational(-5, 12)) == GaussianRational(2, 3)


def test_sqrt_in_field_respects_field():
    assert sqrt_in_field(Fraction(-4), FIELD_Q) is None
    assert sqrt_in_field(Fraction(-4), FIELD_QI) == GaussianRational(0, 2)


def test_sign_orientation():
    assert positively_oriented(Fraction(3))
    assert not positively_oriented(Fraction(-3))
    assert positively_oriented(GaussianRational(0, 1))
    assert not positively_oriented(GaussianRational(0, -1))


def test_to_scalar_field_checks():
    assert to_scalar(2, FIELD_Q) == Fraction(2)
    assert to_scalar(Fraction(1, 2), FIELD_QI) == GaussianRational(Fraction(1, 2))
    with pytest.raises(ValueError):
        to_scalar(GaussianRational(0, 1), FIELD_Q)
