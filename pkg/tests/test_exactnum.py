from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fermibern.exactnum import Poly, binom, expand_pow_product


class TestBinom:
    def test_frozen_values(self):
        assert binom(5, 2) == 10
        assert binom(0, 0) == 1
        assert binom(7, 7) == 1
        assert binom(3, 5) == 0  # k past n degenerates to 0, by design

    def test_pascal_rule(self):
        for n in range(1, 65):
            for k in range(1, n + 1):
                assert binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k)

    def test_row_edges(self):
        for n in range(40):
            assert binom(n, 0) == 1
            assert binom(n, n) == 1

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            binom(-1, 0)
        with pytest.raises(ValueError):
            binom(3, -2)


class TestPolyBasics:
    def test_trailing_zeros_trimmed(self):
        assert Poly([1, 2, 0, 0]).coeffs == (F(1), F(2))
        assert Poly([0, 0]).coeffs == ()
        assert Poly([0, 0]).degree == -1
        assert Poly([0, 0]).is_zero()

    def test_coeff_lookup_past_degree(self):
        p = Poly([1, 2])
        assert p.coeff(0) == 1
        assert p.coeff(5) == 0

    def test_string_roundtrip(self):
        for text in ["1, -1", "0, 1", "1/2, -3/4, 7"]:
            p = Poly.from_coeff_string(text)
            assert Poly.from_coeff_string(p.to_coeff_string()) == p
        assert Poly.zero().to_coeff_string() == "0"
        assert Poly.from_coeff_string("0").is_zero()

    def test_malformed_strings_rejected(self):
        for bad in ["", "1,,2", "a,b", "1/0"]:
            with pytest.raises((ValueError, ZeroDivisionError)):
                Poly.from_coeff_string(bad)

    def test_monomial(self):
        assert Poly.monomial(3) == Poly([0, 0, 0, 1])
        assert Poly.monomial(0, F(1, 2)) == Poly([F(1, 2)])
        with pytest.raises(ValueError):
            Poly.monomial(-1)

    def test_equality_with_scalars(self):
        assert Poly([5]) == 5
        assert Poly([F(1, 2)]) == F(1, 2)
        assert Poly([0, 1]) != 1


class TestPolyRing:
    def test_small_products(self):
        x = Poly.x()
        assert x * (1 - x) == Poly([0, 1, -1])
        assert (1 - x) * (1 - x) == Poly([1, -2, 1])
        assert (x + 1) * (x - 1) == Poly([-1, 0, 1])

    def test_zero_annihilates(self):
        p = Poly([1, 2, 3])
        assert p * Poly.zero() == Poly.zero()
        assert p + Poly.zero() == p

    def test_pow(self):
        x = Poly.x()
        assert (1 - x) ** 0 == Poly.one()
        assert (1 - x) ** 3 == Poly([1, -3, 3, -1])
        with pytest.raises(ValueError):
            x ** -1

    def test_scalar_ops(self):
        p = Poly([1, 1])
        assert 2 * p == Poly([2, 2])
        assert p * F(1, 2) == Poly([F(1, 2), F(1, 2)])
        assert 1 - p == Poly([0, -1])

    def test_mixed_denominator_product(self):
        # exercises both the integer fast path and the Fraction path
        a = Poly([1, 2, 3])
        b = Poly([F(1, 2), F(-1, 3)])
        assert a * b == Poly([F(1, 2), F(2, 3), F(5, 6), -1])
        assert (2 * a) * (3 * b) == 6 * (a * b)

    def test_compose_and_shift(self):
        p = Poly([0, 0, 1])  # x^2
        assert p.shifted(1) == Poly([1, 2, 1])
        assert p.reflected() == Poly([1, -2, 1])
        q = Poly([1, 1])
        assert q.compose(q) == Poly([2, 1])

    def test_eval_horner(self):
        p = Poly([1, -2, 1])
        assert p(1) == 0
        assert p(F(1, 2)) == F(1, 4)
        assert Poly.zero()(F(7, 3)) == 0


small_fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
small_polys = st.lists(small_fractions, max_size=6).map(Poly)


class TestPolyProperties:
    @settings(max_examples=80, deadline=None)
    @given(small_polys, small_polys, small_fractions)
    def test_eval_is_ring_homomorphism(self, a, b, x):
        assert (a + b)(x) == a(x) + b(x)
        assert (a * b)(x) == a(x) * b(x)

    @settings(max_examples=50, deadline=None)
    @given(small_polys, small_polys, small_polys)
    def test_mul_distributes(self, a, b, c):
        assert a * (b + c) == a * b + a * c

    @settings(max_examples=50, deadline=None)
    @given(small_polys, small_polys)
    def test_mul_commutes_and_degree_adds(self, a, b):
        assert a * b == b * a
        if not a.is_zero() and not b.is_zero():
            assert (a * b).degree == a.degree + b.degree


class TestExpandPowProduct:
    def test_frozen_expansions(self):
        assert expand_pow_product(0, 2) == Poly([1, -2, 1])
        assert expand_pow_product(1, 1) == Poly([0, 1, -1])
        assert expand_pow_product(0, 0) == Poly.one()
        # binomial-theorem reference for x^2 (1-x)^3: the x^(2+j) term
        # carries (-1)^j C(3, j), so x^3 gets -3 and x^4 gets +3
        assert expand_pow_product(2, 3).coeff(3) == -3
        assert expand_pow_product(2, 3).coeff(4) == 3

    def test_against_binomial_theorem(self):
        for k in range(8):
            for m in range(8):
                p = expand_pow_product(k, m)
                for j in range(m + 1):
                    assert p.coeff(k + j) == (-1) ** j * binom(m, j)

    def test_degree_exact(self):
        for k in range(6):
            for m in range(6):
                assert expand_pow_product(k, m).degree == k + m

    def test_pointwise_agreement(self):
        probes = [F(0), F(1), F(1, 2), F(-2), F(7, 3)]
        for k in range(13):
            for m in range(13):
                p = expand_pow_product(k, m)
                for x in probes:
                    assert p(x) == x**k * (1 - x) ** m

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            expand_pow_product(-1, 2)
        with pytest.raises(ValueError):
            expand_pow_product(2, -1)
