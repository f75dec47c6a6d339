#!/usr/bin/env python3
"""Print iterated-conchoid decompositions and log the observed multiplicity
of the line AP at a shared infinity point against the conjectured lower
bound eps*eta (the proven bound is eps(eta-eps) + eps(eps+1)/2)."""

import random
import sys
from fractions import Fraction
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from conchoidal import (
    CircleSpec,
    MultiPoly,
    PlaneCurve,
    ProjPoint,
    conchoidal_transform,
    iterated_conchoid,
    multiplicity_at,
    parse_poly,
    poly_to_text,
)
from conchoidal.gcd import multiplicity_of_factor


def show_iteration():
    spec = CircleSpec((Fraction(0), Fraction(0)), Fraction(1))
    for text in ("x-3*z", "x^2+2*y^2-9*z^2"):
        C = PlaneCurve.from_text(text)
        div = iterated_conchoid(spec, C, 2)
        print(f"second conchoid of {text}: total degree {div.total_degree()}")
        for comp in div.components:
            print(f"  {comp.label:9s} mult {comp.mult}: {poly_to_text(comp.poly)}")
        print()


def log_infinity_multiplicities(trials=8, seed=2):
    rng = random.Random(seed)
    print("multiplicity of the line AP at a shared point of B, C on the line at")
    print("infinity (observed / proven bound / conjectured product):")
    for _ in range(trials):
        eta = rng.randint(1, 2)
        eps = rng.randint(1, eta)
        B = _through_P(rng, rng.randint(max(2, eta), 3), eta)
        C = _through_P(rng, rng.randint(max(1, eps), 3), eps)
        eta_a = multiplicity_at(B, ProjPoint(1, 0, 0))
        eps_a = multiplicity_at(C, ProjPoint(1, 0, 0))
        if eps_a > eta_a:
            B, C, eta_a, eps_a = C, B, eps_a, eta_a
        T = conchoidal_transform(B, C)
        observed, _ = multiplicity_of_factor(T.equation, parse_poly("y"))
        proven = eps_a * (eta_a - eps_a) + eps_a * (eps_a + 1) // 2
        print(f"  eps={eps_a} eta={eta_a}: observed {observed}, proven {proven}, "
              f"conjectured {eps_a * eta_a}")


def _through_P(rng, degree, mult):
    vars = ("x", "y", "z")
    while True:
        terms = {}
        for i in range(degree + 1):
            for j in range(degree - i + 1):
                k = degree - i - j
                if j + k < mult:
                    continue
                c = Fraction(rng.randint(-4, 4))
                if c:
                    terms[(i, j, k)] = c
        eq = MultiPoly.make(vars, "Q", terms)
        if eq.is_zero() or eq.total_degree() != degree:
            continue
        try:
            curve = PlaneCurve(eq)
        except ValueError:
            continue
        if curve.top_form().is_zero():
            continue
        if multiplicity_at(curve, ProjPoint(1, 0, 0)) == mult:
            return curve


if __name__ == "__main__":
    show_iteration()
    log_infinity_multiplicities()
