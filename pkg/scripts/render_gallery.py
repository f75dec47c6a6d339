#!/usr/bin/env python3
"""Render the classical gallery: limacons of Pascal and conchoids of
Nicomedes at a few radii, written as SVG files into ./gallery/."""

import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from conchoidal import CircleSpec, PlaneCurve, PlotSpec, conchoidal_transform, render_svg


def main():
    outdir = Path("gallery")
    outdir.mkdir(exist_ok=True)
    window = (Fraction(-3), Fraction(6), Fraction(-4), Fraction(4))
    for r2, tag in [(Fraction(1), "r1"), (Fraction(4), "r2"), (Fraction(9), "r3")]:
        circle = CircleSpec((Fraction(0), Fraction(0)), r2).curve()
        line = PlaneCurve.from_text("x-2*z")
        nicomedes = conchoidal_transform(circle, line)
        path = outdir / f"nicomedes_{tag}.svg"
        path.write_text(render_svg(nicomedes, PlotSpec(window, grid=96)))
        print(f"wrote {path} (degree {nicomedes.degree})")

    unit = CircleSpec((Fraction(0), Fraction(0)), Fraction(1)).curve()
    base_circle = PlaneCurve.from_text("(x-z)^2+y^2-z^2")   # through the origin
    limacon = conchoidal_transform(unit, base_circle)
    path = outdir / "limacon.svg"
    path.write_text(render_svg(limacon, PlotSpec(window, grid=96)))
    print(f"wrote {path} (degree {limacon.degree})")


if __name__ == "__main__":
    main()
