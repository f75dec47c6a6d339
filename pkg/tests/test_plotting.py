from fractions import Fraction

import pytest

from conchoidal import PlaneCurve, PlotSpec, render_svg
from conchoidal.fields import FIELD_QI
from conchoidal.plotting import marching_segments

WINDOW = (Fraction(-2), Fraction(2), Fraction(-2), Fraction(2))


def test_circle_produces_closed_loop():
    circle = PlaneCurve.from_text("x^2+y^2-z^2")
    segments = marching_segments(circle, PlotSpec(WINDOW, grid=64))
    assert len(segments) > 0
    # every sampled point lies near the circle
    for x1, y1, x2, y2 in segments:
        for px, py in ((x1, y1), (x2, y2)):
            assert abs(px * px + py * py - 1.0) < 0.2


def test_constant_positive_curveless():
    # z^2 = 0 has empty real affine locus (its affine equation is 1)
    spec = PlotSpec(WINDOW, grid=16)
    curve = PlaneCurve.from_text("x^2+y^2+z^2")   # no real points
    assert marching_segments(curve, spec) == []


def test_limacon_window():
    quartic = PlaneCurve.from_text(
        "4*y^2*z^2 + x^4 + x^2*y^2 - 4*x^3*z - 4*x*y^2*z + 3*x^2*z^2")
    spec = PlotSpec((Fraction(-1), Fraction(5), Fraction(-3), Fraction(3)), grid=64)
    segments = marching_segments(quartic, spec)
    assert len(segments) > 40    # a visible loop


def test_svg_deterministic():
    circle = PlaneCurve.from_text("x^2+y^2-z^2")
    spec = PlotSpec(WINDOW, grid=32)
    a = render_svg(circle, spec)
    b = render_svg(circle, spec)
    assert a == b
    assert a.startswith('<?xml version="1.0"')
    assert 'version="1.1"' in a
    assert "<line" in a


def test_window_validation():
    with pytest.raises(ValueError):
        PlotSpec((Fraction(1), Fraction(1), Fraction(0), Fraction(2)))
    with pytest.raises(ValueError):
        PlotSpec(WINDOW, grid=8)


def test_requires_real_coefficients():
    from conchoidal import parse_poly

    curve = PlaneCurve(parse_poly("x^2+i*y*z", FIELD_QI))
    with pytest.raises(ValueError):
        marching_segments(curve, PlotSpec(WINDOW, grid=16))
