from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polynomials, vectors
from qsymq.poly import Polynomial, diff_pairing, graded_lex_compare, graded_lex_key


class TestGradedLex:
    def test_lex_chain_within_degree(self):
        assert graded_lex_compare((3, 0), (2, 1)) == 1
        assert graded_lex_compare((2, 1), (1, 2)) == 1
        assert graded_lex_compare((1, 2), (0, 3)) == 1

    def test_degree_dominates(self):
        assert graded_lex_compare((0, 1), (2, 0)) == -1
        assert graded_lex_compare((1, 2), (1, 2)) == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            graded_lex_compare((1, 0), (1, 0, 0))

    @given(vectors(n=4), vectors(n=4), vectors(n=4))
    def test_total_order(self, a, b, c):
        # trichotomy, antisymmetry, transitivity
        assert graded_lex_compare(a, b) == -graded_lex_compare(b, a)
        assert (graded_lex_compare(a, b) == 0) == (a == b)
        if graded_lex_compare(a, b) <= 0 and graded_lex_compare(b, c) <= 0:
            assert graded_lex_compare(a, c) <= 0


class TestArithmetic:
    def test_cancellation(self):
        x1 = Polynomial.variable(3, 1)
        assert (x1 + (-1) * x1).is_zero()

    def test_monomial_product(self):
        x1 = Polynomial.variable(2, 1)
        assert x1 * x1 == Polynomial.monomial(2, (2, 0))

    def test_square_of_linear_form(self):
        total = Polynomial.zero(3)
        for i in range(1, 4):
            total = total + Polynomial.variable(3, i)
        square = total * total
        assert square.coefficient((2, 0, 0)) == 1
        assert square.coefficient((1, 1, 0)) == 2
        assert square.coefficient((0, 1, 1)) == 2
        assert len(square) == 6

    def test_mixed_variable_counts_rejected(self):
        with pytest.raises(ValueError):
            Polynomial.variable(2, 1) + Polynomial.variable(3, 1)
        with pytest.raises(ValueError):
            Polynomial.variable(2, 1) * Polynomial.variable(3, 1)

    @given(polynomials(n=3), polynomials(n=3))
    def test_exact_round_trip(self, p, q):
        assert (p + q) - q == p

    @given(polynomials(n=3), polynomials(n=3), polynomials(n=3))
    def test_ring_axioms(self, p, q, r):
        assert p + q == q + p
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r

    @given(polynomials(n=3))
    def test_scaling(self, p):
        assert p * Fraction(1, 2) + p * Fraction(1, 2) == p
        assert (0 * p).is_zero()


class TestLeadingMonomial:
    def test_degree_dominates(self):
        p = Polynomial(2, {(0, 3): 1, (1, 1): 5})
        assert p.leading_monomial() == ((0, 3), 1)

    def test_constant(self):
        p = Polynomial.constant(3, Fraction(7, 2))
        assert p.leading_monomial() == ((0, 0, 0), Fraction(7, 2))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            Polynomial.zero(2).leading_monomial()

    @given(polynomials(n=3, max_terms=5), polynomials(n=3, max_terms=5))
    def test_multiplicative(self, p, q):
        if p.is_zero() or q.is_zero():
            return
        ep, cp = p.leading_monomial()
        eq, cq = q.leading_monomial()
        exps, coeff = (p * q).leading_monomial()
        assert exps == tuple(a + b for a, b in zip(ep, eq))
        assert coeff == cp * cq


class TestCoefficients:
    def test_missing_is_zero(self):
        assert Polynomial.zero(2).coefficient((1, 1)) == 0

    def test_sorted_terms_descending(self):
        p = Polynomial(2, {(0, 1): 1, (2, 0): 1, (1, 0): 1})
        keys = [e for e, _ in p.sorted_terms()]
        assert keys == sorted(keys, key=graded_lex_key, reverse=True)

    def test_homogeneous_components(self):
        p = Polynomial(2, {(0, 1): 1, (2, 0): 3, (1, 1): -1})
        parts = p.homogeneous_components()
        assert set(parts) == {1, 2}
        assert parts[1] == Polynomial(2, {(0, 1): 1})
        total = Polynomial.zero(2)
        for part in parts.values():
            assert part.is_homogeneous()
            total = total + part
        assert total == p


class TestDiffPairing:
    def test_orthogonality(self):
        a = Polynomial.monomial(2, (1, 0))
        b = Polynomial.monomial(2, (0, 1))
        assert diff_pairing(a, b) == 0

    def test_factorial_weights(self):
        sq = Polynomial.monomial(1, (2,))
        assert diff_pairing(sq, sq) == 2
        cross = Polynomial.monomial(2, (1, 1))
        assert diff_pairing(cross, cross) == 1

    @given(polynomials(n=3), polynomials(n=3))
    def test_symmetry(self, p, q):
        assert diff_pairing(p, q) == diff_pairing(q, p)

    @given(vectors(n=3))
    def test_self_pairing_positive(self, nu):
        m = Polynomial.monomial(3, nu)
        assert diff_pairing(m, m) > 0
