from fractions import Fraction

import pytest

from anick.algebra import AlgebraError, BoundError
from anick.chains import enumerate_chains
from anick.commutative import comm_buchberger, comm_reduce_basis
from anick.hilbert import (
    free_product_series,
    generator_product_series,
    hilbert_from_chains,
    hilbert_from_normal_words,
    rational_form,
    series,
    series_add,
    series_inverse,
    series_mul,
    series_one,
    series_sub,
)
from anick.noncommutative import NcGB, nc_buchberger
from anick.presentation import free_product, make_bn, parse_poly, parse_presentation


def geometric(ratio, d):
    return series(ratio ** n for n in range(d + 1))


def pres_nc(body):
    return parse_presentation("algebra T ; kind noncommutative ; " + body)


class TestSeriesArithmetic:
    def test_inverse_of_one_minus_3t(self):
        s = series([1, -3] + [0] * 7)
        assert series_inverse(s) == geometric(3, 8)

    def test_inverse_of_square(self):
        one_minus_t = series([1, -1] + [0] * 6)
        sq = series_mul(one_minus_t, one_minus_t)
        assert series_inverse(sq) == series(range(1, 9))

    def test_mul_inverse_is_one(self):
        s = series([1, 2, Fraction(1, 3), -5, 0, 7])
        assert series_mul(s, series_inverse(s)) == series_one(5)

    def test_zero_constant_term_rejected(self):
        with pytest.raises(AlgebraError):
            series_inverse(series([0, 1, 2]))

    def test_truncation_mismatch_rejected(self):
        with pytest.raises(AlgebraError):
            series_add(series([1, 2]), series([1, 2, 3]))

    def test_ring_laws(self):
        a = series([1, 2, 3, 4])
        b = series([0, 1, 0, -1])
        c = series([2, 0, 1, 5])
        assert series_mul(a, b) == series_mul(b, a)
        assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
        assert series_mul(a, series_add(b, c)) == series_add(
            series_mul(a, b), series_mul(a, c))


class TestNormalWordSeries:
    def test_free_on_three(self):
        p = pres_nc("generators x y z ; order deglex x > y > z ;")
        gb = NcGB(p, (), 4)
        assert hilbert_from_normal_words(gb, 4) == geometric(3, 4)

    def test_square_sum_quotient(self):
        p = pres_nc("generators x y ; order deglex x > y ; relations x^2 + y^2 ;")
        gb = nc_buchberger(p, max_degree=8)
        assert hilbert_from_normal_words(gb, 8) == series(range(1, 10))

    def test_commutative_two_variables(self):
        p = parse_presentation(
            "algebra P ; kind commutative ; generators x y ;"
            " order deglex x > y ;")
        gb = comm_reduce_basis(comm_buchberger(p, []))
        assert hilbert_from_normal_words(gb, 5) == series(range(1, 7))

    def test_certificate_enforced(self):
        p = pres_nc("generators x y ; order deglex x > y ; relations x^2 - x*y ;")
        gb = nc_buchberger(p, max_degree=6)
        with pytest.raises(BoundError):
            hilbert_from_normal_words(gb, 7)


class TestChainSeries:
    def test_square_sum_agreement(self):
        p = pres_nc("generators x y ; order deglex x > y ; relations x^2 + y^2 ;")
        gb = nc_buchberger(p, max_degree=8)
        F = [f.leading[0] for f in gb.basis]
        cs = enumerate_chains(p, F, 9, 8)
        assert hilbert_from_chains(cs, 8) == hilbert_from_normal_words(gb, 8)

    def test_free_algebra(self):
        p = pres_nc("generators x y ; order deglex x > y ;")
        cs = enumerate_chains(p, (), 2, 6)
        assert hilbert_from_chains(cs, 6) == geometric(2, 6)

    def test_truncated_single_generator(self):
        p = pres_nc("generators x ; order deglex x ; relations x^3 ;")
        gb = nc_buchberger(p, max_degree=8)
        cs = enumerate_chains(p, [f.leading[0] for f in gb.basis], 8, 8)
        got = hilbert_from_chains(cs, 6)
        assert got == series([1, 1, 1, 0, 0, 0, 0])

    def test_insufficient_levels_rejected(self):
        p = pres_nc("generators x ; order deglex x ; relations x^3 ;")
        gb = nc_buchberger(p, max_degree=8)
        cs = enumerate_chains(p, [f.leading[0] for f in gb.basis], 2, 8)
        with pytest.raises(BoundError):
            hilbert_from_chains(cs, 8)

    def test_insufficient_degree_rejected(self):
        p = pres_nc("generators x y ; order deglex x > y ;")
        cs = enumerate_chains(p, (), 2, 4)
        with pytest.raises(BoundError):
            hilbert_from_chains(cs, 6)

    def test_bn_agreement(self):
        p = make_bn(1)
        gb = nc_buchberger(p, max_degree=8)
        F = [f.leading[0] for f in gb.basis]
        cs = enumerate_chains(p, F, 9, 8)
        assert hilbert_from_chains(cs, 8) == hilbert_from_normal_words(gb, 8)


class TestFreeProductSeries:
    def test_two_free_lines(self):
        line = series_inverse(series([1, -1] + [0] * 6))
        assert free_product_series(line, line) == geometric(2, 7)

    def test_two_dual_numbers(self):
        dual = series([1, 1] + [0] * 10)
        got = free_product_series(dual, dual)
        assert got == series([1] + [2] * 11)

    def test_unit_factor(self):
        a = geometric(2, 6)
        k = series_one(6)
        assert free_product_series(a, k) == a

    def test_against_normal_words(self):
        left = pres_nc("generators x ; order deglex x ; relations x^2 ;")
        right = parse_presentation(
            "algebra U ; kind noncommutative ; generators y ;"
            " order deglex y ; relations y^2 ;")
        prod = free_product(left, right)
        gb = nc_buchberger(prod, max_degree=12)
        direct = hilbert_from_normal_words(gb, 12)
        ha = hilbert_from_normal_words(nc_buchberger(left, max_degree=12), 12)
        hb = hilbert_from_normal_words(nc_buchberger(right, max_degree=12), 12)
        assert free_product_series(ha, hb) == direct

    def test_bad_constant_term(self):
        with pytest.raises(AlgebraError):
            free_product_series(series([2, 0]), series([1, 0]))


class TestGeneratorProduct:
    def test_polynomial_ring(self):
        got = generator_product_series([1, 1, 1], 5)
        # dims of K[x,y,z]: binomial(n+2, 2)
        assert got == series([1, 3, 6, 10, 15, 21])

    def test_exterior(self):
        got = generator_product_series([1] * 4, 5, exterior=True)
        assert got == series([1, 4, 6, 4, 1, 0])

    def test_single_weighted_generator(self):
        got = generator_product_series([3], 9)
        assert got == series([1, 0, 0, 1, 0, 0, 1, 0, 0, 1])

    def test_matches_commutative_counts(self):
        p = parse_presentation(
            "algebra P ; kind commutative ; generators x y ;"
            " order deglex x > y ;")
        gb = comm_reduce_basis(comm_buchberger(p, []))
        assert generator_product_series([1, 1], 6) == \
            hilbert_from_normal_words(gb, 6)


class TestRationalForm:
    def test_geometric(self):
        got = rational_form(geometric(3, 8))
        assert got == ((Fraction(1),), (Fraction(1), Fraction(-3)))

    def test_polynomial_series(self):
        s = series([1, 1, 1, 0, 0, 0, 0])
        p, q = rational_form(s)
        assert q == (Fraction(1),)
        assert p == (Fraction(1), Fraction(1), Fraction(1))

    def test_square_denominator(self):
        s = series(range(1, 11))
        p, q = rational_form(s)
        assert p == (Fraction(1),)
        assert q == (Fraction(1), Fraction(-2), Fraction(1))

    def test_reconstruction(self):
        s = hilbert_from_normal_words(
            nc_buchberger(make_bn(1), max_degree=8), 8)
        form = rational_form(s)
        assert form is not None
        p, q = form
        full_p = p + (Fraction(0),) * (len(s) - len(p))
        full_q = q + (Fraction(0),) * (len(s) - len(q))
        assert series_mul(full_q, s) == full_p
