"""The conchoid Sylvester-type matrix and exact determinants.

poly_matrix_det evaluates determinants of matrices with polynomial entries.
Primary path: dehomogenize (z = 1), evaluate all entries on an integer grid,
take scalar determinants by fraction-free Bareiss elimination, interpolate
the dense bivariate result and re-homogenize to the known total degree.
Falls back to Bareiss elimination directly on polynomial entries when the
structure does not fit (non-homogeneous rows, extra variables, huge grid).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd as int_gcd
from typing import List, Optional, Sequence

from .errors import DegreeBoundError
from .fields import FIELD_Q, FIELD_QI, GaussianRational, Scalar, to_scalar
from .multipoly import MultiPoly, homogeneous_decompose, merge_vars, poly_exact_div

MAX_GRID_POINTS = 6000


@dataclass
class PolyMatrix:
    rows: int
    cols: int
    entries: List[MultiPoly]  # row-major

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match matrix shape")

    def at(self, i: int, j: int) -> MultiPoly:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> List[MultiPoly]:
        return self.entries[i * self.cols:(i + 1) * self.cols]


def _equation_of(curve) -> MultiPoly:
    return curve.equation if hasattr(curve, "equation") else curve


def phi_forms(F) -> List[MultiPoly]:
    """[Phi_0, ..., Phi_d] with Phi_i = (-1)^i sum_{j>=i} C(j,i) F_j z^(d-j);
    each homogeneous of degree d, and Phi_0 = F."""
    f = _equation_of(F)
    parts = homogeneous_decompose(f)          # [F_d, ..., F_0]
    d = f.total_degree()
    if d < 1:
        raise ValueError("phi forms need degree >= 1")
    vars = f.vars
    z = MultiPoly.variable("z", vars, f.field)
    out = []
    for i in range(d + 1):
        acc = MultiPoly.zero(vars, f.field)
        for j in range(i, d + 1):
            fj = parts[d - j]                  # F_j, a form of degree j in x, y
            if fj.is_zero():
                continue
            acc = acc + comb(j, i) * fj.with_vars(vars) * z ** (d - j)
        if i % 2:
            acc = -acc
        out.append(acc)
    return out


def conchoid_matrix(B, C) -> PolyMatrix:
    """The (d+delta)x(d+delta) matrix whose determinant is the conchoidal
    transform: delta rows of shifts of (Phi_d ... Phi_0), then d rows of
    shifts of (G_delta, z G_(delta-1), ..., z^delta G_0).  This exact row
    order fixes the sign of the determinant."""
    f = _equation_of(B)
    g = _equation_of(C)
    d, delta = f.total_degree(), g.total_degree()
    if d < 1 or delta < 1:
        raise ValueError("conchoid matrix needs curves of degree >= 1")
    vars = merge_vars(f.vars, g.vars)
    field_join = (f + g).field
    phis = [p.with_vars(vars).promote(field_join) for p in phi_forms(f)]
    gparts = homogeneous_decompose(g)          # [G_delta, ..., G_0]
    z = MultiPoly.variable("z", vars, field_join)
    grow = [gparts[k].with_vars(vars).promote(field_join) * z ** k for k in range(delta + 1)]
    n = d + delta
    zero = MultiPoly.zero(vars, field_join)
    entries = [zero] * (n * n)
    for r in range(delta):
        for k in range(d + 1):
            entries[r * n + r + k] = phis[d - k]
    for r in range(d):
        for k in range(delta + 1):
            entries[(delta + r) * n + r + k] = grow[k]
    return PolyMatrix(n, n, entries)


# -- scalar determinants -----------------------------------------------------


def det_scalar(rows: List[List]) -> Scalar:
    """Exact determinant of a scalar matrix (ints fast-tracked through
    fraction-free Bareiss; Fractions/GaussianRationals use exact division)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if all(isinstance(c, int) for row in rows for c in row):
        return _det_bareiss(rows, 1, lambda a, b: a // b)
    return _det_bareiss([list(r) for r in rows], Fraction(1), lambda a, b: a / b)


def _det_bareiss(mat, one, div):
    n = len(mat)
    mat = [list(r) for r in mat]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not mat[k][k]:
            for i in range(k + 1, n):
                if mat[i][k]:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return one - one  # zero of the right type
        pivot = mat[k][k]
        for i in range(k + 1, n):
            mik = mat[i][k]
            row_i, row_k = mat[i], mat[k]
            for j in range(k + 1, n):
                row_i[j] = div(pivot * row_i[j] - mik * row_k[j], prev)
            row_i[k] = one - one
        prev = pivot
    return mat[n - 1][n - 1] if sign > 0 else -mat[n - 1][n - 1]


def det_bareiss_poly(rows: List[List[MultiPoly]]) -> MultiPoly:
    """Fraction-free Bareiss on polynomial entries; divisions are exact."""
    n = len(rows)
    sample = rows[0][0]
    one = MultiPoly.constant(1, sample.vars, sample.field)
    mat = [[e for e in row] for row in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if mat[k][k].is_zero():
            for i in range(k + 1, n):
                if not mat[i][k].is_zero():
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return MultiPoly.zero(sample.vars, sample.field)
        pivot = mat[k][k]
        for i in range(k + 1, n):
            mik = mat[i][k]
            for j in range(k + 1, n):
                num = pivot * mat[i][j] - mik * mat[k][j]
                q = poly_exact_div(num, prev)
                if q is None:
                    raise ArithmeticError("internal: Bareiss division was not exact")
                mat[i][j] = q
            mat[i][k] = MultiPoly.zero(sample.vars, sample.field)
        prev = pivot
    det = mat[n - 1][n - 1]
    return det if sign > 0 else -det


# -- interpolation ------------------------------------------------------------


def _interp_newton(values: Sequence[Scalar]) -> List[Scalar]:
    """Dense coefficients (ascending) of the interpolant through
    (k, values[k]) for k = 0..len-1."""
    n = len(values)
    dd = [Fraction(v) if isinstance(v, int) else v for v in values]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / j
    coeffs = [dd[n - 1]]
    for i in range(n - 2, -1, -1):
        # coeffs <- coeffs*(t - i) + dd[i]
        new = [0] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            new[k + 1] = new[k + 1] + c
            new[k] = new[k] - c * i
        new[0] = new[0] + dd[i]
        coeffs = new
    return coeffs


def _row_degrees(M: PolyMatrix) -> Optional[List[int]]:
    """Degree r_i when every nonzero entry of row i is homogeneous of the same
    degree in (x, y, z); None when the matrix does not have that shape."""
    degs = []
    for i in range(M.rows):
        row_deg = None
        for e in M.row(i):
            if e.is_zero():
                continue
            if not e.is_homogeneous():
                return None
            for v in e.vars:
                if e.uses_var(v) and v not in ("x", "y", "z"):
                    return None
            d = e.total_degree()
            if row_deg is None:
                row_deg = d
            elif row_deg != d:
                return None
        if row_deg is None:
            return [-1]  # a zero row: determinant is zero
        degs.append(row_deg)
    return degs


def _bivariate_only(M: PolyMatrix) -> bool:
    """True when no entry involves any variable outside (x, y), so the
    interpolated affine determinant already is the answer."""
    for e in M.entries:
        for v in e.vars:
            if e.uses_var(v) and v not in ("x", "y"):
                return False
    return True


def _grid_values(entry: MultiPoly, D: int, integral: bool) -> List[List]:
    """entry(x, y) on the integer grid 0..D squared (entry already z-free)."""
    xi = entry.vars.index("x") if "x" in entry.vars else None
    yi = entry.vars.index("y") if "y" in entry.vars else None
    by_x: dict = {}
    for exp, c in entry.terms.items():
        a = exp[xi] if xi is not None else 0
        b = exp[yi] if yi is not None else 0
        by_x.setdefault(a, []).append((b, c))
    zero = 0 if integral else to_scalar(0, entry.field)
    out = []
    for x0 in range(D + 1):
        ycoef: dict = {}
        for a, items in by_x.items():
            xa = x0 ** a
            for b, c in items:
                ycoef[b] = ycoef.get(b, zero) + c * xa
        row = []
        bs = sorted(ycoef)
        for y0 in range(D + 1):
            total = zero
            for b in bs:
                total = total + ycoef[b] * (y0 ** b)
            row.append(total)
        out.append(row)
    return out


def poly_matrix_det(M: PolyMatrix, degree_bound: int) -> MultiPoly:
    """Exact determinant; degree_bound must be >= deg det(M)."""
    if M.rows != M.cols:
        raise ValueError("determinant of a non-square matrix")
    n = M.rows
    if n == 0:
        return MultiPoly.constant(1, ("x", "y", "z"), FIELD_Q)
    degs = _row_degrees(M)
    grid_ok = (degree_bound + 1) ** 2 <= MAX_GRID_POINTS
    if degs == [-1]:
        sample = M.entries[0]
        return MultiPoly.zero(sample.vars, sample.field)
    homogeneous = degs is not None
    if not homogeneous and (not grid_ok or not _bivariate_only(M)):
        return det_bareiss_poly([M.row(i) for i in range(n)])
    if not grid_ok:
        return det_bareiss_poly([M.row(i) for i in range(n)])
    total = sum(degs) if homogeneous else None
    if homogeneous and total > degree_bound:
        raise DegreeBoundError(
            f"matrix rows force determinant degree {total} > bound {degree_bound}")
    D = degree_bound
    sample = M.entries[0]
    field = sample.field
    for e in M.entries:
        if e.field == FIELD_QI:
            field = FIELD_QI
    dehom = [e.dehomogenize("z") if "z" in e.vars else e for e in M.entries]

    # Row-scale to integer coefficients over Q so grid determinants run on
    # plain ints.
    integral = field == FIELD_Q
    scale = Fraction(1)
    if integral:
        scaled = []
        for i in range(n):
            lcm = 1
            for e in dehom[i * n:(i + 1) * n]:
                for c in e.terms.values():
                    lcm = lcm * c.denominator // int_gcd(lcm, c.denominator)
            scale = scale * lcm
            for e in dehom[i * n:(i + 1) * n]:
                scaled.append(MultiPoly(e.vars, e.field,
                                        {exp: int(c * lcm) for exp, c in e.terms.items()}))
        dehom = scaled

    grids = [_grid_values(e, D, integral) for e in dehom]

    values = []
    for x0 in range(D + 1):
        row_vals = []
        for y0 in range(D + 1):
            mat = [[grids[i * n + j][x0][y0] for j in range(n)] for i in range(n)]
            row_vals.append(det_scalar(mat))
        values.append(row_vals)

    # Interpolate x for each fixed y, then y across the x-coefficients.
    x_coeffs = [_interp_newton([values[x0][y0] for x0 in range(D + 1)]) for y0 in range(D + 1)]
    terms = {}
    for k in range(D + 1):
        col = [x_coeffs[y0][k] if k < len(x_coeffs[y0]) else 0 for y0 in range(D + 1)]
        if not any(col):
            continue
        cy = _interp_newton(col)
        for l, c in enumerate(cy):
            if c:
                terms[(k, l)] = c
    det_aff = MultiPoly.make(("x", "y"), field, terms)
    if integral and scale != 1:
        det_aff = det_aff / scale

    # Residual check at a point outside the grid.
    extra = D + 1
    check_mat = [[dehom[i * n + j].evaluate({"x": Fraction(extra), "y": Fraction(extra)})
                  for j in range(n)] for i in range(n)]
    expected = det_scalar(check_mat)
    if integral and scale != 1:
        expected = expected / scale
    if det_aff.evaluate({"x": Fraction(extra), "y": Fraction(extra)}) != expected:
        raise DegreeBoundError("interpolation residual nonzero: degree bound violated")

    if not homogeneous:          # z-free matrix: the affine result is final
        return det_aff.with_vars(("x", "y", "z"))

    # Re-homogenize each monomial to the known total degree.
    out_terms = {}
    for (a, b), c in det_aff.terms.items():
        zc = total - a - b
        if zc < 0:
            raise DegreeBoundError("dehomogenized determinant exceeds the homogeneous degree")
        out_terms[(a, b, zc)] = c
    return MultiPoly.make(("x", "y", "z"), field, out_terms)


# -- Sylvester resultants ----------------------------------------------------


def sylvester_matrix_scalars(fc: List[Scalar], gc: List[Scalar]) -> List[List[Scalar]]:
    """Sylvester matrix from ascending coefficient lists taken at their
    NOMINAL degrees (leading entries may be zero)."""
    m = len(fc) - 1
    n = len(gc) - 1
    size = m + n
    pad: object = 0 if all(isinstance(c, int) for c in fc + gc) else Fraction(0)
    rows = []
    frow = list(reversed(fc))
    grow = list(reversed(gc))
    for r in range(n):
        rows.append([pad] * r + frow + [pad] * (size - r - m - 1))
    for r in range(m):
        rows.append([pad] * r + grow + [pad] * (size - r - n - 1))
    return rows


def resultant_nominal(fc: List[Scalar], gc: List[Scalar]) -> Scalar:
    """Scalar resultant of coefficient lists at nominal degrees."""
    if len(fc) - 1 <= 0 and len(gc) - 1 <= 0:
        raise ValueError("both polynomials are constant")
    if len(fc) - 1 == 0:
        return fc[0] ** (len(gc) - 1)
    if len(gc) - 1 == 0:
        return gc[0] ** (len(fc) - 1)
    return det_scalar(sylvester_matrix_scalars(fc, gc))


def sylvester_resultant(f: MultiPoly, g: MultiPoly, var: str) -> MultiPoly:
    """Classical Sylvester resultant eliminating ``var``; vanishes iff f and g
    share a root in ``var`` over the closure of the remaining function field.
    With one input of degree zero in ``var`` the usual convention
    res(f, g) = f**deg(g) (resp. g**deg(f)) applies."""
    f2, g2 = f + MultiPoly.zero(g.vars, g.field), g + MultiPoly.zero(f.vars, f.field)
    if var not in f2.vars:
        raise ValueError(f"variable {var} absent from both inputs")
    m = max(f2.degree_in(var), 0)
    n = max(g2.degree_in(var), 0)
    if m == 0 and n == 0:
        raise ValueError(f"variable {var} absent from both inputs")
    rest = tuple(v for v in f2.vars if v != var)
    fc = [c.with_vars(rest) for c in f2.coefficients_in(var)]
    gc = [c.with_vars(rest) for c in g2.coefficients_in(var)]
    if m == 0:
        return fc[0] ** n
    if n == 0:
        return gc[0] ** m
    used = [v for v in rest if any(c.uses_var(v) for c in fc + gc)]
    if not used:
        det = resultant_nominal([c.constant_value() for c in fc],
                                [c.constant_value() for c in gc])
        return MultiPoly.constant(det, rest, f2.field)
    if len(used) == 1:
        return _resultant_interp_1var(fc, gc, used[0], rest, f2.field)
    size = m + n
    zero = MultiPoly.zero(rest, f2.field)
    rows: List[List[MultiPoly]] = []
    frow = list(reversed(fc))
    grow = list(reversed(gc))
    for r in range(n):
        rows.append([zero] * r + frow + [zero] * (size - r - m - 1))
    for r in range(m):
        rows.append([zero] * r + grow + [zero] * (size - r - n - 1))
    return det_bareiss_poly(rows)


def _resultant_interp_1var(fc: List[MultiPoly], gc: List[MultiPoly], var: str,
                           rest, field) -> MultiPoly:
    """Evaluation-interpolation resultant when the coefficients involve a
    single variable: the determinant degree is bounded by row count times
    entry degree, and each sample is a scalar nominal-degree resultant."""
    m, n = len(fc) - 1, len(gc) - 1
    df = max(c.degree_in(var) for c in fc)
    dg = max(c.degree_in(var) for c in gc)
    bound = n * max(df, 0) + m * max(dg, 0)
    fu = [c.as_unipoly(var) for c in fc]
    gu = [c.as_unipoly(var) for c in gc]
    integral = field == FIELD_Q
    scale = Fraction(1)
    if integral:
        lf = _clear_denominators(fu)
        lg = _clear_denominators(gu)
        scale = Fraction(lf) ** n * Fraction(lg) ** m
    values = []
    for k in range(bound + 1):
        if integral:
            fvals = [_eval_int(u.coeffs, k) for u in fu]
            gvals = [_eval_int(u.coeffs, k) for u in gu]
        else:
            point = to_scalar(k, field)
            fvals = [u.eval(point) for u in fu]
            gvals = [u.eval(point) for u in gu]
        values.append(resultant_nominal(fvals, gvals))
    coeffs = _interp_newton(values)
    if integral and scale != 1:
        coeffs = [c / scale for c in coeffs]
    out = MultiPoly.make((var,), field, {(i,): c for i, c in enumerate(coeffs)})
    return out.with_vars(rest)


def _eval_int(coeffs, x: int) -> int:
    total = 0
    for c in reversed(coeffs):
        total = total * x + c
    return total


def _clear_denominators(polys) -> int:
    lcm = 1
    for u in polys:
        for c in u.coeffs:
            f = Fraction(c)
            lcm = lcm * f.denominator // int_gcd(lcm, f.denominator)
    if lcm != 1:
        for u in polys:
            u.coeffs = [int(c * lcm) for c in u.coeffs]
    else:
        for u in polys:
            u.coeffs = [int(c) if Fraction(c).denominator == 1 else c for c in u.coeffs]
    return lcm
