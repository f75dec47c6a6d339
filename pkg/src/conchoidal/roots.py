"""Root finding in Q and Q(i), formal square roots, binary form factorization.

Rational roots over Q use divisor enumeration on the content-normalized
integer polynomial.  Over Q(i) the unknown is split as t = u + i*v, the
real/imaginary parts give a bivariate rational system that is reduced to Q
by a resultant and then verified exactly.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd, isqrt
from typing import List, Optional, Tuple

from .fields import (
    FIELD_Q,
    FIELD_QI,
    GaussianRational,
    Scalar,
    as_fraction,
    fraction_sqrt,
    im_part,
    positively_oriented,
    re_part,
    sqrt_in_field,
    to_scalar,
)
from .gcd import squarefree_decompose_uni
from .multipoly import MultiPoly, UniPoly


def _int_divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


# Rational roots of integer polynomials with large endpoints: p-adic lifting
# of roots modulo a prime plus rational reconstruction, instead of divisor
# enumeration (which needs to factor the endpoints).

_DIVISOR_ENUM_LIMIT = 10 ** 12


def _int_poly_mod(coeffs: List[int], p: int) -> List[int]:
    out = [c % p for c in coeffs]
    while out and not out[-1]:
        out.pop()
    return out


def _poly_gcd_mod_p(a: List[int], b: List[int], p: int) -> List[int]:
    a, b = list(a), list(b)
    while b:
        inv = pow(b[-1], p - 2, p)
        db = len(b) - 1
        while len(a) - 1 >= db and a:
            c = (a[-1] * inv) % p
            k = len(a) - 1 - db
            for i in range(db + 1):
                a[k + i] = (a[k + i] - c * b[i]) % p
            while a and not a[-1]:
                a.pop()
        a, b = b, a
    return a


def _deriv_int(coeffs: List[int]) -> List[int]:
    return [i * c for i, c in enumerate(coeffs)][1:]


def _int_content_strip(coeffs: List[int]) -> List[int]:
    g = 0
    for c in coeffs:
        g = int_gcd(g, abs(c))
    return [c // g for c in coeffs] if g > 1 else coeffs


def _int_prs_gcd(a: List[int], b: List[int]) -> List[int]:
    """Primitive gcd of two integer polynomials by a primitive-PRS."""
    a, b = _int_content_strip(list(a)), _int_content_strip(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b, then content strip
        r = list(a)
        db = len(b) - 1
        lcb = b[-1]
        while r and len(r) - 1 >= db:
            lcr = r[-1]
            k = len(r) - 1 - db
            r = [c * lcb for c in r[:-1]]
            for i in range(db):
                r[k + i] -= lcr * b[i]
            while r and not r[-1]:
                r.pop()
        a, b = b, _int_content_strip(r) if r else []
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a


def _int_squarefree_part(coeffs: List[int]) -> List[int]:
    d = _deriv_int(coeffs)
    g = _int_prs_gcd(coeffs, d)
    if len(g) <= 1:
        return list(coeffs)
    # exact quotient over Q; integral by Gauss's lemma on primitive parts
    num = UniPoly([Fraction(c) for c in coeffs], FIELD_Q)
    den = UniPoly([Fraction(c) for c in g], FIELD_Q)
    q, rem = num.divmod(den)
    if not rem.is_zero():
        return list(coeffs)
    out = [Fraction(c) for c in q.coeffs]
    lcm = 1
    for c in out:
        lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
    return _int_content_strip([int(c * lcm) for c in out])


def _roots_mod_p(coeffs: List[int], p: int) -> List[int]:
    cp = _int_poly_mod(coeffs, p)
    return [r for r in range(p) if not _horner_mod(cp, r, p)]


def _horner_mod(coeffs: List[int], x: int, m: int) -> int:
    total = 0
    for c in reversed(coeffs):
        total = (total * x + c) % m
    return total


def _lift_root(coeffs: List[int], r: int, p: int, target: int) -> Optional[int]:
    """Newton-lift a simple root of f mod p to a root mod p**k >= target."""
    dcoeffs = _deriv_int(coeffs)
    modulus = p
    while modulus < target:
        modulus = modulus * modulus
        fr = _horner_mod(coeffs, r, modulus)
        dr = _horner_mod(dcoeffs, r, modulus)
        if dr % p == 0:
            return None
        inv = pow(dr, -1, modulus)
        r = (r - fr * inv) % modulus
    return r


def _rat_reconstruct(a: int, m: int, num_bound: int, den_bound: int
                     ) -> Optional[Fraction]:
    """p/q with p = a*q mod m, |p| <= num_bound, 0 < q <= den_bound."""
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > num_bound:
        qt = r0 // r1
        r0, r1 = r1, r0 - qt * r1
        s0, s1 = s1, s0 - qt * s1
    if r1 == 0 or abs(s1) > den_bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if int_gcd(abs(r1), s1) != 1:
        return None
    return Fraction(r1, s1)


def _rational_roots_big(ints: List[int]) -> List[Fraction]:
    """All rational roots of a primitive integer polynomial whose endpoint
    coefficients are too large for divisor enumeration."""
    w = _int_squarefree_part(ints)
    w = _int_content_strip(w)
    a0, an = abs(w[0]), abs(w[-1])
    target = 2 * a0 * an + 1
    p = 4001
    attempts = 0
    while attempts < 60:
        if an % p and len(_poly_gcd_mod_p(_int_poly_mod(w, p),
                                          _int_poly_mod(_deriv_int(w), p), p)) <= 1:
            break
        p = _next_prime(p)
        attempts += 1
    else:
        # pathological input: fall back to (possibly slow) enumeration
        return []
    found: List[Fraction] = []
    f_frac = UniPoly([Fraction(c) for c in ints], FIELD_Q)
    for r in _roots_mod_p(w, p):
        lifted = _lift_root(w, r, p, target)
        if lifted is None:
            continue
        cand = _rat_reconstruct(lifted, _next_pow(p, target), a0, an)
        if cand is not None and f_frac.eval(cand) == 0:
            found.append(cand)
    return sorted(set(found))


def _next_pow(p: int, target: int) -> int:
    m = p
    while m < target:
        m = m * m
    return m


def _next_prime(p: int) -> int:
    candidate = p + 2
    while True:
        if all(candidate % q for q in range(3, isqrt(candidate) + 1, 2)):
            return candidate
        candidate += 2


def _strip_zero_root(f: UniPoly) -> Tuple[int, UniPoly]:
    k = 0
    coeffs = list(f.coeffs)
    while coeffs and not coeffs[0]:
        coeffs.pop(0)
        k += 1
    return k, UniPoly(coeffs, f.field)


def _rational_roots_q(f: UniPoly) -> List[Tuple[Fraction, int]]:
    out: List[Tuple[Fraction, int]] = []
    k, f = _strip_zero_root(f)
    if k:
        out.append((Fraction(0), k))
    if f.degree() < 1:
        return out
    fracs = [as_fraction(c) for c in f.coeffs]
    if any(q is None for q in fracs):
        raise ValueError("polynomial has non-rational coefficients")
    den = 1
    for q in fracs:
        den = den * q.denominator // int_gcd(den, q.denominator)
    ints = [int(q * den) for q in fracs]
    content = 0
    for c in ints:
        content = int_gcd(content, abs(c))
    ints = [c // content for c in ints]
    a0, an = ints[0], ints[-1]
    if abs(a0) * abs(an) > _DIVISOR_ENUM_LIMIT:
        for cand in _rational_roots_big(ints):
            mult = 0
            g = f
            while True:
                d = g.deflate_root(cand)
                if d is None:
                    break
                g, mult = d, mult + 1
            if mult:
                out.append((cand, mult))
        return sorted(out, key=lambda rm: rm[0])
    for p in _int_divisors(a0):
        for q in _int_divisors(an):
            if int_gcd(p, q) != 1:
                continue
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if f.eval(cand) == 0:
                    mult = 0
                    g = f
                    while True:
                        d = g.deflate_root(cand)
                        if d is None:
                            break
                        g, mult = d, mult + 1
                    out.append((cand, mult))
                    f = g
                    if f.degree() < 1:
                        return sorted(out, key=lambda rm: rm[0])
                    # divisor sets shrink after deflation, but re-testing
                    # against the original a0, an stays sound
    return sorted(out, key=lambda rm: rm[0])


def _re_im_split(f: UniPoly) -> Tuple[MultiPoly, MultiPoly]:
    """f(u + i v) = A(u,v) + i B(u,v) with A, B over Q."""
    uv = ("u", "v")
    s = MultiPoly.make(uv, FIELD_QI, {(1, 0): 1, (0, 1): GaussianRational(0, 1)})
    acc = MultiPoly.zero(uv, FIELD_QI)
    power = MultiPoly.constant(1, uv, FIELD_QI)
    for k, c in enumerate(f.coeffs):
        if k:
            power = power * s
        if c:
            acc = acc + power * c
    a_terms, b_terms = {}, {}
    for exp, c in acc.terms.items():
        r, m = re_part(c), im_part(c)
        if r:
            a_terms[exp] = r
        if m:
            b_terms[exp] = m
    return MultiPoly(uv, FIELD_Q, a_terms), MultiPoly(uv, FIELD_Q, b_terms)


def _mult_of_root(f: UniPoly, root) -> int:
    mult = 0
    g = f
    while True:
        d = g.deflate_root(root)
        if d is None:
            return mult
        g, mult = d, mult + 1


def _common_rational_zeros(A: MultiPoly, B: MultiPoly) -> List[Tuple[Fraction, Fraction]]:
    """Common rational zeros of two bivariate polynomials over Q in (u, v),
    reduced to Q by a resultant in v."""
    from .resultant import sylvester_resultant

    if not A.uses_var("v") or not B.uses_var("v"):
        u_poly = A if not A.uses_var("v") else B
        other = B if u_poly is A else A
        if u_poly.is_constant():
            return []
        zeros = []
        for u0, _ in _rational_roots_q(u_poly.as_unipoly("u")):
            rest = other.partial_eval({"u": u0})
            if rest.is_zero():
                continue
            if rest.is_constant():
                continue
            for v0, _ in _rational_roots_q(rest.as_unipoly("v")):
                zeros.append((u0, v0))
        return zeros
    res = sylvester_resultant(A, B, "v")
    if res.is_zero():
        raise ArithmeticError("internal: resultant of the zero-split parts vanished")
    if res.is_constant():
        return []
    zeros = []
    for u0, _ in _rational_roots_q(res.with_vars(("u",)).as_unipoly("u")):
        av = A.partial_eval({"u": u0}).as_unipoly("v")
        bv = B.partial_eval({"u": u0}).as_unipoly("v")
        if av.is_zero():
            g = bv
        elif bv.is_zero():
            g = av
        else:
            g = av.gcd(bv)
        if g.is_zero() or g.degree() < 1:
            continue
        for v0, _ in _rational_roots_q(g):
            zeros.append((u0, v0))
    return zeros


def _rational_roots_qi(f: UniPoly) -> List[Tuple[GaussianRational, int]]:
    out: List[Tuple[GaussianRational, int]] = []
    k, f = _strip_zero_root(f)
    if k:
        out.append((GaussianRational(0), k))
    if f.degree() < 1:
        return _sorted_qi(out)
    if f.degree() == 1:
        root = to_scalar(-f.coeffs[0] / f.coeffs[1], FIELD_QI)
        out.append((root, 1))
        return _sorted_qi(out)
    real_coeffs = [as_fraction(c) for c in f.coeffs]
    seen = set()

    def record(root: GaussianRational):
        key = (root.re, root.im)
        if key in seen:
            return
        mult = _mult_of_root(f, root)
        if mult:
            seen.add(key)
            out.append((root, mult))

    if all(c is not None for c in real_coeffs):
        # real roots directly, nonreal ones via u + iv with w = v^2:
        # f(u+iv) = sum_k f_k(u) (iv)^k splits into
        #   A(u,w) = sum_{k even} f_k(u) (-w)^(k/2)
        #   B(u,w) = sum_{k odd}  f_k(u) (-w)^((k-1)/2)   [times iv]
        freal = UniPoly(real_coeffs, FIELD_Q)
        for r, m in _rational_roots_q(freal):
            out.append((GaussianRational(r), m))
        taylor: List[UniPoly] = []
        g = freal
        kfac = 1
        for k in range(freal.degree() + 1):
            if k:
                g = g.derivative()
                kfac *= k
            taylor.append(UniPoly([c / kfac for c in g.coeffs], FIELD_Q))
        uw = ("u", "v")  # v stands for w = (imaginary part)^2 here
        Aw = MultiPoly.zero(uw, FIELD_Q)
        Bw = MultiPoly.zero(uw, FIELD_Q)
        wvar = MultiPoly.variable("v", uw, FIELD_Q)
        for k, tk in enumerate(taylor):
            if tk.is_zero():
                continue
            piece = tk.to_multipoly("u").with_vars(uw) * (-wvar) ** (k // 2)
            if k % 2 == 0:
                Aw = Aw + piece
            else:
                Bw = Bw + piece
        if not Bw.is_zero():
            for u0, w0 in _common_rational_zeros(Aw, Bw):
                if w0 <= 0:
                    continue
                v0 = fraction_sqrt(w0)
                if v0 is None:
                    continue
                record(GaussianRational(u0, v0))
                record(GaussianRational(u0, -v0))
        return _sorted_qi(out)

    A, B = _re_im_split(f)
    for u0, v0 in _common_rational_zeros(A, B):
        record(GaussianRational(u0, v0))
    return _sorted_qi(out)


def _sorted_qi(items):
    return sorted(items, key=lambda rm: (re_part(rm[0]), im_part(rm[0])))


def rational_roots(f: UniPoly, field: str = None) -> List[Tuple[Scalar, int]]:
    """All roots of f lying in the active field, as (root, multiplicity)."""
    if f.is_zero():
        raise ValueError("root finding on the zero polynomial")
    if field is None:
        field = f.field
    if field == FIELD_Q:
        return _rational_roots_q(f)
    return _rational_roots_qi(UniPoly(f.coeffs, FIELD_QI))


# -- formal square roots -----------------------------------------------------


def formal_square_root(f: MultiPoly) -> Optional[MultiPoly]:
    """g with g*g == f exactly, or None.  Sign convention: the graded-lex
    leading coefficient of g has positive real part, ties broken by
    positive imaginary part."""
    if f.is_zero():
        raise ValueError("square root of the zero polynomial")
    lexp, lcoef = f.leading()
    if any(e % 2 for e in lexp):
        return None
    root_lc = sqrt_in_field(lcoef, f.field)
    if root_lc is None:
        return None
    half = tuple(e // 2 for e in lexp)
    g = MultiPoly.make(f.vars, f.field, {half: root_lc})
    lead2 = g * 2
    rem = f - g * g
    while rem.terms:
        rexp, rcoef = rem.leading()
        diff = tuple(a - b for a, b in zip(rexp, half))
        if any(d < 0 for d in diff):
            return None
        t = MultiPoly.make(f.vars, f.field, {diff: rcoef / (2 * root_lc)})
        rem = rem - lead2 * t - t * t
        g = g + t
        lead2 = lead2 + t * 2
    if not positively_oriented(g.lc()):
        g = -g
    return g


def square_root_up_to_scalar(f: MultiPoly) -> Optional[Tuple[Scalar, MultiPoly]]:
    """(c, g) with f = c * g**2 and g monic, or None when no such pair exists
    over the algebraic closure (the monic square root is field-rational
    whenever f is proportional to a square)."""
    if f.is_zero():
        return None
    c = f.lc()
    g = formal_square_root(f / c)
    if g is None:
        return None
    return c, g.monic()


# -- binary form factorization ------------------------------------------------


def _quartic_quadratic_split(p: UniPoly) -> Optional[Tuple[UniPoly, UniPoly]]:
    """Split a monic quartic with no roots in the field into two monic
    quadratics over the field, if possible."""
    r3, r2, r1, r0 = p.coeffs[3], p.coeffs[2], p.coeffs[1], p.coeffs[0]
    field = p.field
    # (t^2 + a t + b)(t^2 + c t + e); eliminate down to a univariate in a.
    a_var = MultiPoly.variable("w", ("w",), field)
    one = MultiPoly.constant(1, ("w",), field)
    c_of_a = one * r3 - a_var
    s_of_a = one * r2 - a_var * c_of_a                      # b + e
    num_b = one * r1 - a_var * s_of_a                        # b*(c-a) = r1 - a*S
    den = c_of_a - a_var                                     # c - a
    # b = num_b/den, e = S - b; condition b*e = r0:
    # num_b*(S*den - num_b) = r0*den^2
    cond = num_b * (s_of_a * den - num_b) - one * r0 * den * den
    candidates = []
    if not cond.is_zero():
        candidates = [r for r, _ in rational_roots(cond.as_unipoly("w"), field)]
    # the symmetric case c == a needs separate handling
    half_r3 = to_scalar(r3, field) / 2
    candidates.append(half_r3)
    for a0 in candidates:
        c0 = r3 - a0
        if c0 != a0:
            S = r2 - a0 * c0
            b0 = (r1 - a0 * S) / (c0 - a0)
            e0 = S - b0
            if b0 * e0 == r0:
                return (UniPoly([b0, a0, 1], field), UniPoly([e0, c0, 1], field))
        else:
            # b + e = r2 - a0**2, a0*(b + e) = r1 must hold, b*e = r0
            S = r2 - a0 * a0
            if a0 * S != r1:
                continue
            # b, e roots of T^2 - S T + r0
            disc = S * S - 4 * r0
            root = sqrt_in_field(disc, field)
            if root is None:
                continue
            b0 = (S + root) / 2
            e0 = S - b0
            return (UniPoly([b0, a0, 1], field), UniPoly([e0, c0, 1], field))
    return None


def factor_binary_form(form: MultiPoly) -> Tuple[Scalar, List[Tuple[MultiPoly, int]]]:
    """Factor a homogeneous binary form in (x, y) into irreducible-over-the-
    field monic factors with multiplicities, times a unit.

    Complete through residual degree 4; a residual of degree >= 5 with no
    roots in the field is returned as a single block.
    """
    vars = form.vars
    if form.is_zero() or not form.is_homogeneous():
        raise ValueError("expected a nonzero homogeneous binary form")
    if len(vars) != 2:
        raise ValueError(f"binary form must be declared over two variables, got {vars}")
    xv, yv = vars
    field = form.field
    d = form.total_degree()
    p = form.partial_eval({yv: Fraction(1)}).as_unipoly(xv)
    unit = p.lc() if p.coeffs else form.lc()
    factors: List[Tuple[MultiPoly, int]] = []
    y_mult = d - p.degree()
    if y_mult:
        factors.append((MultiPoly.variable(yv, vars, field), y_mult))
    if p.degree() >= 1:
        for sq, mult in squarefree_decompose_uni(p.monic()):
            for piece in _factor_squarefree_uni(sq, field):
                factors.append((_homogenize_factor(piece, xv, yv, vars, field), mult))
    return unit, factors


def _factor_squarefree_uni(p: UniPoly, field: str) -> List[UniPoly]:
    out: List[UniPoly] = []
    for r, _ in rational_roots(p, field):
        out.append(UniPoly([-r, 1], field))
        p = p.deflate_root(r)
    if p.degree() == 0:
        return out
    if p.degree() in (1, 2, 3):
        # degree 1 is a root; 2 and 3 without roots are irreducible
        out.append(p.monic())
        return out
    if p.degree() == 4:
        split = _quartic_quadratic_split(p.monic())
        if split is not None:
            out.extend(split)
            return out
    out.append(p.monic())
    return out


def _homogenize_factor(p: UniPoly, xv: str, yv: str, vars, field) -> MultiPoly:
    d = p.degree()
    ix, iy = vars.index(xv), vars.index(yv)
    terms = {}
    for k, c in enumerate(p.coeffs):
        if not c:
            continue
        exp = [0] * len(vars)
        exp[ix] = k
        exp[iy] = d - k
        terms[tuple(exp)] = c
    return MultiPoly.make(vars, field, terms)
