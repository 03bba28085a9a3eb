import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hodgecover.algebra import (
    BiSeries,
    Cyclotomic,
    binomial,
    cyclotomic_polynomial,
    determinant,
    euler_phi,
    format_rational,
    galois_conjugate,
    is_smith_normal_form,
    matmul,
    parse_rational,
    series_expand_binomial,
    smith_normal_form,
)


class TestNumbers:
    def test_binomial_negative_top(self):
        # (1 - z)^(-3) = sum C(k + 2, 2) z^k
        assert [(-1) ** k * binomial(-3, k) for k in range(5)] == [math.comb(k + 2, 2) for k in range(5)]

    def test_binomial_rejects_negative_bottom(self):
        with pytest.raises(ValueError):
            binomial(3, -1)

    @given(st.integers(1, 500))
    def test_euler_phi_matches_gcd_count(self, d):
        assert euler_phi(d) == oracles.euler_phi(d)

    @pytest.mark.parametrize("text,value", [("3/6", Fraction(1, 2)), ("-4", Fraction(-4)), (7, Fraction(7))])
    def test_parse_rational(self, text, value):
        assert parse_rational(text) == value

    @pytest.mark.parametrize("bad", ["1/0", "1.5", 1.5, True, "x"])
    def test_parse_rational_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_rational(bad)

    @given(st.fractions())
    def test_format_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q


class TestSeries:
    def test_product_truncates(self):
        a = series_expand_binomial("1+yz", 2, 2, 3)
        assert a.coefficient(1, 1) == 2 and a.coefficient(2, 2) == 1

    def test_inverse_binomial(self):
        one = series_expand_binomial("1-z", 3, 0, 5) * series_expand_binomial("1-z", -3, 0, 5)
        assert one == BiSeries.one(0, 5)

    def test_out_of_range_coefficient(self):
        with pytest.raises(IndexError):
            BiSeries.one(1, 1).coefficient(2, 0)


class TestCyclotomic:
    def test_cyclotomic_polynomials(self):
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert len(cyclotomic_polynomial(12)) - 1 == euler_phi(12)

    def test_sum_of_roots_of_unity(self):
        total = Cyclotomic.rational(0)
        for k in range(5):
            total = total + Cyclotomic.zeta(5, k)
        assert total == Cyclotomic.rational(0)

    def test_galois_action(self):
        assert galois_conjugate(Cyclotomic.zeta(4), 3) == -Cyclotomic.zeta(4)
        with pytest.raises(ValueError):
            galois_conjugate(Cyclotomic.zeta(4), 2)

    @given(st.integers(1, 24), st.integers(0, 50), st.integers(0, 50))
    def test_zeta_multiplication(self, n, a, b):
        assert Cyclotomic.zeta(n, a) * Cyclotomic.zeta(n, b) == Cyclotomic.zeta(n, a + b)

    def test_equality_across_conductors(self):
        assert Cyclotomic.zeta(3).lift(6) == Cyclotomic.zeta(6, 2)
        assert Cyclotomic.zeta(3) == Cyclotomic.zeta(6, 2)


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


class TestSmith:
    def test_known_forms(self):
        assert smith_normal_form([[2, 0], [0, 3]])[0] == ((1, 0), (0, 6))
        assert smith_normal_form([[2, 1], [0, 2]])[0] == ((1, 0), (0, 4))

    @settings(max_examples=200)
    @given(matrices)
    def test_snf_properties(self, m):
        D, U, V = smith_normal_form(m)
        assert abs(determinant(U)) == 1 and abs(determinant(V)) == 1
        assert matmul(matmul(U, tuple(map(tuple, m))), V) == D
        assert is_smith_normal_form(D)

    @settings(max_examples=100)
    @given(matrices)
    def test_invariant_factors_match_minors(self, m):
        D = smith_normal_form(m)[0]
        diag = [D[i][i] for i in range(min(len(D), len(D[0]))) if D[i][i]]
        assert diag == oracles.elementary_divisors(m)
