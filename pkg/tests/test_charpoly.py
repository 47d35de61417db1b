"""Characteristic polynomials via Sylvester resultants.

sympy computes the same resultants through subresultant remainder
sequences, a genuinely different algorithm, so it serves as the
independent oracle for the fraction-free elimination used here.
"""

import itertools
import random
from fractions import Fraction

import pytest
import sympy

import tenprod as tp
from tenprod import DenseTensor, matrix, poly, rational, unit_tensor
from tenprod.charpoly import UnivariatePolynomial
from tenprod.errors import (
    DegenerateForm,
    RootRefinementFailed,
    UnsupportedDimension,
)

from conftest import random_exact_tensor


LAM, X = sympy.symbols("lam x")


def sympy_charpoly_dim2(a):
    """Resultant of the two rows of (lam*I - A)x, dehomogenized at x2 = 1.

    Valid whenever the x1-leading coefficients keep their declared degree,
    which holds here because the row-1 leading coefficient contains lam.
    Row 2's leading coefficient is -a[2,1,...,1]; callers pass tensors with
    that entry nonzero so sympy's actual-degree resultant agrees with the
    declared-degree one.
    """
    d = a.order - 1
    rows = []
    for i in (1, 2):
        f = 0
        for t in range(d + 1):
            # sum entries whose tail has exactly t twos
            c = sum(
                (sympy.Rational(Fraction(a.get(i, *alpha)))
                 for alpha in itertools.product((1, 2), repeat=d)
                 if sum(1 for j in alpha if j == 2) == t),
                sympy.Integer(0),
            )
            lam_part = LAM if (i == 1 and t == 0) or (i == 2 and t == d) else 0
            f += (lam_part - c) * X ** (d - t)
        rows.append(sympy.expand(f))
    res = sympy.resultant(rows[0], rows[1], X)
    return sympy.Poly(sympy.expand(res), LAM)


def to_sympy(p):
    return sympy.Poly([sympy.Rational(Fraction(c)) for c in p.coeffs], LAM)


def polys_equal(mine, ref):
    return to_sympy(mine) == ref


class TestPolynomialArithmetic:
    def test_trim_and_degree(self):
        assert poly(0, 0, 1, 2).coeffs == (1, 2)
        assert poly(0).degree == -1
        assert poly(3).degree == 0

    def test_ring_ops(self):
        p = poly(1, 2, 1)
        q = poly(1, -1)
        assert (p * q).coeffs == (1, 1, -1, -1)
        assert (p + q).coeffs == (1, 3, 0)
        assert (p - p).degree == -1
        assert (q ** 2).coeffs == (1, -2, 1)

    def test_divexact(self):
        p = poly(1, -2, 1)
        q = poly(1, -1)
        assert p.divexact(q).coeffs == (1, -1)

    def test_evaluate_exact_and_float(self):
        p = poly(1, 0, -2)
        assert p.evaluate(rational(1, 2)) == rational(-7, 4)
        assert p.evaluate(1.5) == pytest.approx(0.25)

    def test_monic_and_derivative(self):
        p = poly(2, 4, 6)
        assert p.monic().coeffs == (1, 2, 3)
        assert p.derivative().coeffs == (4, 4)


class TestResultantOracle:
    @pytest.mark.parametrize("m", [3, 4])
    def test_random_tensors_match_sympy(self, m):
        rng = random.Random(50 + m)
        done = 0
        while done < 8:
            a = random_exact_tensor(rng, m, 2, zero_weight=1)
            if a.get(2, *([1] * (m - 1))) == 0:
                continue  # keep sympy's actual degree equal to declared
            mine = tp.charpoly_dim2(a)
            ref = sympy_charpoly_dim2(a).monic()
            assert polys_equal(mine, ref)
            done += 1

    def test_matrix_charpoly_matches_sympy(self):
        rng = random.Random(77)
        for n in (2, 3, 4):
            a = random_exact_tensor(rng, 2, n, zero_weight=1)
            mine = tp.charpoly_matrix(a)
            rows = [[sympy.Rational(Fraction(a.get(i, j))) for j in range(1, n + 1)]
                    for i in range(1, n + 1)]
            ref = sympy.Matrix(rows).charpoly(LAM)
            assert polys_equal(mine, sympy.Poly(ref.as_expr(), LAM))

    def test_dispatch(self, rng):
        a2 = random_exact_tensor(rng, 2, 3)
        assert tp.characteristic_polynomial(a2).coeffs == tp.charpoly_matrix(a2).coeffs
        a3 = random_exact_tensor(rng, 3, 2)
        assert tp.characteristic_polynomial(a3).coeffs == tp.charpoly_dim2(a3).coeffs
        with pytest.raises(UnsupportedDimension):
            tp.characteristic_polynomial(DenseTensor(3, 3, (0,) * 27))

    def test_evaluation_consistency_with_hyperdeterminant(self, rng):
        # phi(c) equals the hyperdeterminant of c*I - A at any scalar c
        for _ in range(5):
            a = random_exact_tensor(rng, 3, 2)
            phi = tp.charpoly_dim2(a)
            c = rational(rng.randint(-5, 5), rng.choice((1, 2, 3)))
            shifted = tp.add(tp.scalar_mul(c, unit_tensor(3, 2)),
                             tp.scalar_mul(-1, a))
            assert phi.evaluate(c) == tp.hyperdeterminant_dim2(shifted)


class TestClosedForms:
    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_unit_tensor(self, m):
        phi = tp.characteristic_polynomial(unit_tensor(m, 2))
        want = poly(1, -1) ** (2 * (m - 1))
        assert phi.coeffs == want.coeffs

    def test_diagonal_order3(self):
        a = DenseTensor(3, 2, (3, 0, 0, 0, 0, 0, 0, 5))
        phi = tp.charpoly_dim2(a)
        want = (poly(1, -3) ** 2) * (poly(1, -5) ** 2)
        assert phi.coeffs == want.coeffs

    def test_two_cyclic_example(self):
        # a_{122} = a_{211} = 1: spectrum is {1, 1, -1, -1}
        a = DenseTensor(3, 2, (0, 0, 0, 1, 1, 0, 0, 0))
        phi = tp.charpoly_dim2(a)
        assert phi.coeffs == (1, 0, -2, 0, 1)
        assert tp.check_rotation_symmetry(phi, 2)
        assert not tp.check_rotation_symmetry(poly(1, 1, 0, 0, 0), 2)

    def test_matrix_agreement_on_order2(self, rng):
        a = random_exact_tensor(rng, 2, 2)
        assert tp.charpoly_dim2(a).coeffs == tp.charpoly_matrix(a).coeffs


class TestHyperdeterminant:
    def test_matrix_determinant_special_case(self):
        a = matrix([[1, 2], [3, 4]])
        assert tp.hyperdeterminant_dim2(a) == -2

    def test_zero_row_slice_gives_zero(self):
        a = DenseTensor(3, 2, (0, 0, 0, 0, 1, 1, 1, 1))
        assert tp.hyperdeterminant_dim2(a) == 0

    def test_vanishes_iff_singular_system(self):
        # row 1 = (x1 + x2)^2 in both tensors below
        a = DenseTensor(3, 2, (1, 1, 1, 1, 1, 2, 2, 4))
        # row 2 = (x1 + 2 x2)^2 has no common root with (x1 + x2)^2
        assert tp.hyperdeterminant_dim2(a) != 0
        b = DenseTensor(3, 2, (1, 1, 1, 1, 2, 2, 2, 2))
        # row 2 = 2 (x1 + x2)^2: common projective root, det must vanish
        assert tp.hyperdeterminant_dim2(b) == 0


class TestRoots:
    def test_companion_round_trip(self):
        p = poly(1, -2, -5, 6)  # roots 1, -2, 3
        c = tp.companion_matrix(p)
        back = tp.charpoly_matrix(c)
        assert back.coeffs == p.coeffs

    def test_simple_roots_certified(self):
        roots = tp.polynomial_roots(poly(1, -2, -5, 6))
        reals = sorted(r.real for r in roots)
        assert reals == pytest.approx([-2, 1, 3], abs=1e-10)

    def test_double_root_within_tolerance(self):
        roots = tp.polynomial_roots(poly(1, 0, -2, 0, 1))
        for r in roots:
            assert min(abs(r - 1), abs(r + 1)) < 1e-8

    def test_unattainable_tolerance_raises(self):
        with pytest.raises(RootRefinementFailed):
            tp.polynomial_roots(poly(1, rational(-713, 317), 1), tol=1e-300)

    def test_spectrum_and_radius(self):
        a = DenseTensor(3, 2, (0, 0, 0, 1, 1, 0, 0, 0))
        roots = tp.spectrum_dim2(a)
        assert len(roots) == 4
        assert max(abs(r) for r in roots) == pytest.approx(1.0, abs=1e-8)

    def test_cyclic_index(self):
        two_cyc = DenseTensor(3, 2, (0, 0, 0, 1, 1, 0, 0, 0))
        assert tp.cyclic_index_dim2(two_cyc) == 2
        pos = DenseTensor(3, 2, (1, 2, 2, 1, 1, 2, 2, 3))
        assert tp.cyclic_index_dim2(pos) == 1
        with pytest.raises(DegenerateForm):
            tp.cyclic_index_dim2(DenseTensor(3, 2, (0,) * 8))
