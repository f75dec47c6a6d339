import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conchoidal import MultiPoly, UniPoly, homogeneous_decompose, parse_poly, poly_exact_div, poly_to_text
from conchoidal.errors import NotHomogeneousError
from conchoidal.fields import FIELD_QI, GaussianRational

from helpers import random_poly

VARS = ("x", "y", "z")


def polys(max_degree=3):
    seeds = st.integers(min_value=0, max_value=10 ** 6)
    return seeds.map(lambda s: random_poly(random.Random(s), VARS, max_degree))


@settings(max_examples=60)
@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert (f + g) * h == f * h + g * h
    assert f * g == g * f
    assert f - f == MultiPoly.zero(VARS)
    assert (f * g) * h == f * (g * h)


@settings(max_examples=40)
@given(polys(2), polys(2))
def test_exact_division_of_products(f, g):
    if g.is_zero():
        return
    assert poly_exact_div(f * g, g) == f


def test_exact_div_examples():
    assert poly_exact_div(parse_poly("x^2-y^2"), parse_poly("x-y")) == parse_poly("x+y")
    # the specialized conchoid of the line through A factors off the base circle
    f = parse_poly("x^2*(x^2+y^2-z^2)")
    assert poly_exact_div(f, parse_poly("x^2+y^2-z^2")) == parse_poly("x^2")
    over_qi = poly_exact_div(parse_poly("x^2+1", FIELD_QI), parse_poly("x+i", FIELD_QI))
    assert over_qi == parse_poly("x-i", FIELD_QI)
    assert poly_exact_div(parse_poly("x^2+y^2"), parse_poly("x+y")) is None
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(parse_poly("x"), MultiPoly.zero(VARS))


def test_homogeneous_decompose_examples():
    parts = homogeneous_decompose(parse_poly("x^2+y^2-z^2"))
    assert [poly_to_text(p) for p in parts] == ["x^2 + y^2", "0", "-1"]
    parts = homogeneous_decompose(parse_poly("2*x+3*y+5*z"))
    assert [poly_to_text(p) for p in parts] == ["2*x + 3*y", "5"]
    parts = homogeneous_decompose(parse_poly("z^3"))
    assert [poly_to_text(p) for p in parts] == ["0", "0", "0", "1"]
    with pytest.raises(NotHomogeneousError):
        homogeneous_decompose(parse_poly("x^2+y"))


def test_decompose_reassembles():
    rng = random.Random(5)
    for _ in range(10):
        from helpers import random_form

        f = random_form(rng, rng.randint(1, 4))
        parts = homogeneous_decompose(f)
        d = f.total_degree()
        z = MultiPoly.variable("z", VARS)
        rebuilt = MultiPoly.zero(VARS)
        for h, part in enumerate(reversed(parts)):   # parts = [F_d, ..., F_0]
            rebuilt = rebuilt + part.with_vars(VARS) * z ** (d - h)
        assert rebuilt == f


def test_substitution_and_evaluation():
    f = parse_poly("x^2+y^2-z^2")
    g = f.substitute({"x": parse_poly("x+z")})
    assert g == parse_poly("x^2+2*x*z+y^2")
    val = f.evaluate({"x": Fraction(3), "y": Fraction(4), "z": Fraction(5)})
    assert val == 0
    assert f.partial_eval({"z": Fraction(1)}) == parse_poly("x^2+y^2-1")


def test_monic_and_proportionality():
    f = parse_poly("2*x^2-4*y^2")
    assert poly_to_text(f.monic()) == "x^2 - 2*y^2"
    assert f.proportional_to(parse_poly("x^2-2*y^2"))
    assert not f.proportional_to(parse_poly("x^2+2*y^2"))


def test_homogenize_roundtrip():
    f = parse_poly("x^2+y-3")
    h = f.with_vars(("x", "y")).homogenize("z", 2)
    assert h == parse_poly("x^2+y*z-3*z^2")
    assert h.dehomogenize("z") == f


def test_field_promotion_equality():
    f = parse_poly("x+y")
    assert f == f.promote(FIELD_QI)
    assert hash(f) == hash(f.promote(FIELD_QI))
    g = f.promote(FIELD_QI) * GaussianRational(0, 1)
    assert g.conj() == -g


def test_unipoly_divmod_gcd():
    u = UniPoly([Fraction(-4), Fraction(0), Fraction(1)])      # t^2 - 4
    q, r = u.divmod(UniPoly([Fraction(-2), Fraction(1)]))
    assert q.coeffs == [Fraction(2), Fraction(1)] and r.is_zero()
    a = UniPoly([Fraction(-1), Fraction(0), Fraction(1)])      # t^2 - 1
    b = UniPoly([Fraction(1), Fraction(1)])                    # t + 1
    assert a.gcd(b).coeffs == [Fraction(1), Fraction(1)]
    assert a.eval(Fraction(3)) == 8
    assert a.derivative().coeffs == [Fraction(0), Fraction(2)]


def test_unipoly_deflate():
    u = UniPoly([Fraction(4), Fraction(-4), Fraction(1)])      # (t-2)^2
    d = u.deflate_root(Fraction(2))
    assert d is not None and d.deflate_root(Fraction(2)) is not None
    assert u.deflate_root(Fraction(1)) is None
