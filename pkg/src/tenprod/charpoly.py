"""Characteristic polynomials via resultants, for dimension 2 at any order
and for matrices at any dimension.

For a dim-2 tensor A of order m, each row i of (lambda*I - A)x is a binary
form of degree m-1 in (x_1, x_2) with coefficients linear in lambda:

    row i:  lambda * x_i^{m-1}  -  sum_alpha a[i, alpha] * x_alpha

The characteristic polynomial is the Sylvester resultant of the two rows,
eliminated fraction-free over the polynomial ring, then normalized monic.
Its degree is 2(m-1); any other degree is reported, never truncated.

Roots come from companion-matrix eigenvalues refined by Newton steps and are
certified by back-substitution into the exact coefficients.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np
from gmpy2 import mpq

from .core import DenseTensor
from .errors import (
    DegenerateForm,
    OrderMismatch,
    ResultantDegreeError,
    RootRefinementFailed,
    UnsupportedDimension,
)
from .scalars import as_exact, is_exact


@dataclass(frozen=True)
class UnivariatePolynomial:
    """Exact-rational polynomial, coefficients leading-first, no leading
    zeros; the zero polynomial has an empty coefficient tuple."""

    coeffs: tuple

    def __post_init__(self):
        cs = [as_exact(c) for c in self.coeffs]
        while cs and cs[0] == 0:
            cs.pop(0)
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int):
        """Coefficient of lambda^(degree - j); zero outside the range."""
        if 0 <= j <= self.degree:
            return self.coeffs[j]
        return 0

    def __add__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        pad = len(a) - len(b)
        return UnivariatePolynomial(
            a[:pad] + tuple(x + y for x, y in zip(a[pad:], b)))

    def __sub__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        return self + other.scale(-1)

    def scale(self, c) -> "UnivariatePolynomial":
        if c == 0:
            return UnivariatePolynomial(())
        return UnivariatePolynomial(tuple(c * v for v in self.coeffs))

    def __mul__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        if self.is_zero() or other.is_zero():
            return UnivariatePolynomial(())
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return UnivariatePolynomial(tuple(out))

    def __pow__(self, e: int) -> "UnivariatePolynomial":
        out = UnivariatePolynomial((1,))
        for _ in range(e):
            out = out * self
        return out

    def monic(self) -> "UnivariatePolynomial":
        if self.is_zero():
            raise DegenerateForm("zero polynomial has no monic form")
        lead = self.coeffs[0]
        if lead == 1:
            return self
        inv = mpq(1) / mpq(lead)
        return self.scale(inv)

    def derivative(self) -> "UnivariatePolynomial":
        d = self.degree
        if d <= 0:
            return UnivariatePolynomial(())
        return UnivariatePolynomial(
            tuple(c * (d - j) for j, c in enumerate(self.coeffs[:-1])))

    def evaluate(self, x):
        """Horner evaluation; exact for exact x, float/complex otherwise."""
        if is_exact(x):
            acc = 0
            for c in self.coeffs:
                acc = acc * x + c
            return acc
        acc = 0.0
        for c in self.coeffs:
            acc = acc * x + float(c)
        return acc

    def divmod(self, d: "UnivariatePolynomial"):
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = d.degree
        lead = mpq(d.coeffs[0])
        q = []
        while len(rem) - 1 >= dd and rem:
            f = mpq(rem[0]) / lead
            q.append(f)
            for i, c in enumerate(d.coeffs):
                rem[i] = rem[i] - f * c
            assert rem[0] == 0
            rem.pop(0)
        return UnivariatePolynomial(tuple(q)), UnivariatePolynomial(tuple(rem))

    def divexact(self, d: "UnivariatePolynomial") -> "UnivariatePolynomial":
        q, r = self.divmod(d)
        if not r.is_zero():
            raise ArithmeticError("division expected to be exact had remainder")
        return q


def poly(*coeffs) -> UnivariatePolynomial:
    return UnivariatePolynomial(tuple(coeffs))


ZERO_POLY = UnivariatePolynomial(())
ONE_POLY = UnivariatePolynomial((1,))


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous form in (x_1, x_2): coefficient j multiplies
    x_1^(degree-j) * x_2^j.  Coefficients are polynomials in lambda."""

    degree: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree < 1:
            raise OrderMismatch(f"form degree must be >= 1, got {self.degree}")
        if len(self.coeffs) != self.degree + 1:
            raise DegenerateForm(
                f"degree {self.degree} form needs {self.degree + 1} coefficients")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)


def sylvester_matrix(f: BinaryForm, g: BinaryForm):
    """Sylvester matrix over the lambda-polynomial ring, using the declared
    form degrees (zero leading coefficients keep their slot)."""
    d1, d2 = f.degree, g.degree
    size = d1 + d2
    rows = []
    for s in range(d2):
        row = [ZERO_POLY] * size
        for j, c in enumerate(f.coeffs):
            row[s + j] = c
        rows.append(row)
    for s in range(d1):
        row = [ZERO_POLY] * size
        for j, c in enumerate(g.coeffs):
            row[s + j] = c
        rows.append(row)
    return rows


def poly_matrix_determinant(rows) -> UnivariatePolynomial:
    """Determinant of a square matrix of polynomials by fraction-free
    (two-determinant) elimination; intermediate divisions are exact."""
    n = len(rows)
    m = [list(r) for r in rows]
    sign = 1
    prev = ONE_POLY
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
            if swap is None:
                return ZERO_POLY
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num.divexact(prev)
            m[i][k] = ZERO_POLY
        prev = pivot
    det = m[n - 1][n - 1]
    return det.scale(-1) if sign < 0 else det


def sylvester_resultant(f: BinaryForm, g: BinaryForm) -> UnivariatePolynomial:
    if f.is_zero() or g.is_zero():
        raise DegenerateForm("resultant of an identically zero form")
    return poly_matrix_determinant(sylvester_matrix(f, g))


def _row_forms(a: DenseTensor, with_lambda: bool):
    """The two binary forms of the rows of (lambda*I - A)x, or of A x when
    with_lambda is false (then coefficients are the constants themselves)."""
    if a.dim != 2:
        raise UnsupportedDimension(
            f"resultant construction only covers dim 2, got dim {a.dim}")
    if a.order < 2:
        raise OrderMismatch("characteristic polynomial needs order >= 2")
    m = a.order
    d = m - 1
    forms = []
    for i in (1, 2):
        const = [0] * (d + 1)
        for alpha in itertools.product((1, 2), repeat=d):
            t = sum(1 for v in alpha if v == 2)
            const[t] += as_exact(a.get(i, *alpha))
        coeffs = []
        for t in range(d + 1):
            lam_here = with_lambda and (
                (i == 1 and t == 0) or (i == 2 and t == d))
            if with_lambda:
                coeffs.append(poly(1, -const[t]) if lam_here else poly(-const[t]))
            else:
                coeffs.append(poly(const[t]))
        forms.append(BinaryForm(d, tuple(coeffs)))
    return forms


def charpoly_dim2(a: DenseTensor) -> UnivariatePolynomial:
    """Monic characteristic polynomial of a dim-2 tensor, degree 2(m-1)."""
    f, g = _row_forms(a, with_lambda=True)
    raw = sylvester_resultant(f, g)
    want = 2 * (a.order - 1)
    if raw.degree != want:
        raise ResultantDegreeError(
            f"resultant degree {raw.degree}, expected {want}")
    return raw.monic()


def hyperdeterminant_dim2(a: DenseTensor):
    """Determinant of a dim-2 tensor: the resultant of the rows of A x.
    Vanishes exactly when A x = 0 has a solution x != 0."""
    f, g = _row_forms(a, with_lambda=False)
    try:
        res = sylvester_resultant(f, g)
    except DegenerateForm:
        return 0
    return res.coefficient(0) if not res.is_zero() else 0


def charpoly_matrix(a: DenseTensor) -> UnivariatePolynomial:
    """Characteristic polynomial of a matrix of any dimension, by the same
    fraction-free elimination applied to lambda*I - A."""
    if a.order != 2:
        raise OrderMismatch(f"matrix characteristic polynomial needs order 2")
    n = a.dim
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = as_exact(a.entries[i * n + j])
            row.append(poly(1, -v) if i == j else poly(-v))
        rows.append(row)
    det = poly_matrix_determinant(rows)
    if det.degree != n:
        raise ResultantDegreeError(f"determinant degree {det.degree}, expected {n}")
    return det.monic()


def characteristic_polynomial(a: DenseTensor) -> UnivariatePolynomial:
    """Dispatch: matrices at any dimension, higher orders at dimension 2."""
    if a.order == 2:
        return charpoly_matrix(a)
    if a.dim == 2:
        return charpoly_dim2(a)
    raise UnsupportedDimension(
        f"no characteristic polynomial for order {a.order} at dim {a.dim}")


def companion_matrix(p: UnivariatePolynomial) -> DenseTensor:
    """Companion matrix of a monic polynomial: its characteristic polynomial
    is p again."""
    if p.is_zero() or p.coeffs[0] != 1:
        raise DegenerateForm("companion matrix needs a monic polynomial")
    d = p.degree
    if d < 1:
        raise DegenerateForm("companion matrix needs degree >= 1")
    ent = [0] * (d * d)
    for j in range(d):
        ent[j] = -as_exact(p.coeffs[j + 1])
    for i in range(1, d):
        ent[i * d + (i - 1)] = 1
    return DenseTensor(2, d, tuple(ent))


def polynomial_roots(p: UnivariatePolynomial, tol: float = 1e-8,
                     newton_steps: int = 12) -> tuple:
    """All complex roots (with multiplicity) via companion-matrix
    eigenvalues, Newton-polished, certified by a scaled residual of the
    exact coefficients.  Deterministically sorted by (real, imag)."""
    if p.is_zero():
        raise DegenerateForm("zero polynomial has every value as a root")
    if p.degree == 0:
        return ()
    cf = np.array([float(c) for c in p.coeffs], dtype=float)
    roots = [complex(z) for z in np.roots(cf)]
    dcf = np.polyder(cf)
    refined = []
    for z in roots:
        best = z
        best_abs = abs(np.polyval(cf, z))
        w = z
        for _ in range(newton_steps):
            dv = np.polyval(dcf, w)
            if abs(dv) < 1e-14:
                break
            w = w - np.polyval(cf, w) / dv
            a = abs(np.polyval(cf, w))
            if a < best_abs:
                best, best_abs = w, a
        refined.append(complex(best))
    for z in refined:
        scale = sum(abs(float(c)) * max(1.0, abs(z)) ** (p.degree - j)
                    for j, c in enumerate(p.coeffs))
        residual = abs(complex(p.evaluate(z))) / (scale + 1e-300)
        if residual > tol:
            raise RootRefinementFailed(
                f"root {z} has residual {residual} > {tol}")
    return tuple(sorted(refined, key=lambda z: (z.real, z.imag)))


def spectrum_dim2(a: DenseTensor, tol: float = 1e-8) -> tuple:
    """Eigenvalues of a dim-2 tensor: the certified roots of its
    characteristic polynomial."""
    return polynomial_roots(charpoly_dim2(a), tol=tol)


def spectral_radius_from_roots(roots) -> float:
    return max((abs(z) for z in roots), default=0.0)


def count_distinct(values, tol: float) -> int:
    """Number of distinct complex values up to distance tol (greedy)."""
    reps: list = []
    for v in values:
        if all(abs(v - r) > tol for r in reps):
            reps.append(v)
    return len(reps)


def cyclic_index_dim2(a: DenseTensor, tol: float = 1e-6) -> int:
    """Number of distinct eigenvalues of maximum modulus, computed from the
    full dim-2 spectrum."""
    roots = spectrum_dim2(a)
    rho = spectral_radius_from_roots(roots)
    if rho <= tol:
        raise DegenerateForm("zero spectral radius has no cyclic index")
    on_circle = [z for z in roots if abs(abs(z) - rho) <= tol * max(1.0, rho)]
    return count_distinct(on_circle, tol * max(1.0, rho))


def check_rotation_symmetry(p: UnivariatePolynomial, k: int) -> bool:
    """Whether the coefficient of lambda^(d-j) vanishes for every j that is
    not a multiple of k, i.e. p(lambda) = lambda^r f(lambda^k)."""
    if k < 1:
        raise OrderMismatch(f"rotation order must be >= 1, got {k}")
    return all(c == 0 for j, c in enumerate(p.coeffs) if j % k)
