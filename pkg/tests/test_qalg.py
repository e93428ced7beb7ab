"""Kernel tests: brackets, products, exact division, evaluation, rendering."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qwhitney.qalg import (
    EvalAtZeroError,
    LaurentPoly,
    NonDivisibleError,
    ONE,
    Q,
    ZERO,
    lp_eval,
    lp_exact_div,
    lp_mul,
    q_binomial_base,
    q_bracket,
    q_factorial_base,
    q_power,
)


def naive_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    # Independent term-by-term convolution oracle.
    out: dict[int, int] = {}
    for ea, ca in a.terms().items():
        for eb, cb in b.terms().items():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return LaurentPoly(out)


def subs_q_power(p: LaurentPoly, s: int) -> LaurentPoly:
    # Independent substitution oracle: q -> q^s.
    return LaurentPoly({s * e: c for e, c in p.terms().items()})


coeffs = st.integers(min_value=-999, max_value=999)
exponents = st.integers(min_value=-30, max_value=30)
polys = st.dictionaries(exponents, coeffs, max_size=10).map(LaurentPoly)


class TestBracket:
    def test_zero(self):
        assert q_bracket(0) == ZERO

    def test_positive(self):
        assert q_bracket(3) == LaurentPoly({0: 1, 1: 1, 2: 1})

    def test_negative(self):
        # Oracle: (1 - q^-2) must equal (1 - q) * [-2].
        got = q_bracket(-2)
        assert (ONE - Q) * got == ONE - q_power(-2)
        assert got == LaurentPoly({-2: -1, -1: -1})

    def test_additivity_window(self):
        for a in range(-12, 13):
            for b in range(-12, 13):
                assert q_bracket(a + b) == q_bracket(a) + q_power(a) * q_bracket(b)


class TestMul:
    def test_unit_brackets(self):
        assert q_bracket(2) * q_bracket(3) == LaurentPoly({0: 1, 1: 2, 2: 2, 3: 1})

    def test_unit_cancellation(self):
        assert q_power(-1) * q_power(1) == ONE

    def test_negative_bracket_shift(self):
        assert q_bracket(-2) * (-q_power(2)) == naive_mul(q_bracket(-2), -q_power(2))
        assert q_bracket(-2) * (-q_power(2)) == q_bracket(2)

    def test_int_coercion(self):
        assert 2 * q_bracket(2) == LaurentPoly({0: 2, 1: 2})
        assert q_bracket(2) - 1 == Q

    @given(polys, polys)
    def test_matches_naive(self, a, b):
        assert a * b == naive_mul(a, b)

    def test_large_dense_paths_match_naive(self):
        # Big enough to force the packed multiplication path.
        a = LaurentPoly({e: (e % 7) - 3 for e in range(-40, 160)})
        b = LaurentPoly({e: (e % 5) + 1 for e in range(-10, 90)})
        assert a * b == naive_mul(a, b)
        c = LaurentPoly({e: -(e % 4) - 1 for e in range(120)})
        assert a * c == naive_mul(a, c)

    @given(polys, polys, polys)
    def test_ring_laws(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c

    @given(polys, polys)
    def test_canonical_no_zero_coeffs(self, a, b):
        for value in (a * b, a + b, a - b):
            assert all(c != 0 for c in value.terms().values())

    def test_pow(self):
        assert q_bracket(2) ** 0 == ONE
        assert q_bracket(2) ** 3 == q_bracket(2) * q_bracket(2) * q_bracket(2)
        assert q_power(3) ** -2 == q_power(-6)
        with pytest.raises(NonDivisibleError):
            q_bracket(2) ** -1


class TestExactDiv:
    def test_product_inverse(self):
        assert lp_exact_div(q_bracket(2) * q_bracket(3), q_bracket(2)) == q_bracket(3)

    def test_monomial_quotient(self):
        assert lp_exact_div(q_power(3), q_power(-1)) == q_power(4)

    def test_non_divisible(self):
        # Oracle: long division of [2] by [3] leaves a nonzero remainder.
        with pytest.raises(NonDivisibleError):
            lp_exact_div(q_bracket(2), q_bracket(3))

    def test_non_divisible_coefficient(self):
        with pytest.raises(NonDivisibleError):
            lp_exact_div(LaurentPoly({0: 3}), LaurentPoly({0: 2}))

    def test_zero_dividend(self):
        assert lp_exact_div(ZERO, q_bracket(3)) == ZERO

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            lp_exact_div(ONE, ZERO)

    @given(polys, polys)
    def test_round_trip(self, b, c):
        if b.is_zero():
            return
        a = b * c
        assert lp_mul(b, lp_exact_div(a, b)) == a


class TestFactorialAndBinomial:
    def test_factorial_examples(self):
        assert q_factorial_base(0, 3) == ONE
        assert q_factorial_base(2, 1) == q_bracket(2)
        # Oracle: substitute q -> q^2 into [2].
        assert q_factorial_base(2, 2) == subs_q_power(q_bracket(2), 2)

    def test_factorial_rejects_bad_args(self):
        with pytest.raises(ValueError):
            q_factorial_base(2, 0)
        with pytest.raises(ValueError):
            q_factorial_base(-1, 1)

    def test_binomial_examples(self):
        assert q_binomial_base(4, 0, 2) == ONE
        assert q_binomial_base(2, 1, 1) == LaurentPoly({0: 1, 1: 1})
        # Oracle: [2]! / ([1]! [1]!) in base q^2 by exact division.
        num = q_factorial_base(2, 2)
        den = q_factorial_base(1, 2) * q_factorial_base(1, 2)
        assert q_binomial_base(2, 1, 2) == lp_exact_div(num, den)

    def test_binomial_out_of_range(self):
        assert q_binomial_base(3, -1, 1) == ZERO
        assert q_binomial_base(3, 4, 1) == ZERO
        with pytest.raises(ValueError):
            q_binomial_base(3, 1, 0)

    def test_binomial_symmetry(self):
        for m in (1, 2, 3):
            for k in range(9):
                for j in range(k + 1):
                    assert q_binomial_base(k, j, m) == q_binomial_base(k, k - j, m)

    def test_binomial_factorial_quotient(self):
        for m in (1, 2):
            for k in range(7):
                for j in range(k + 1):
                    num = q_factorial_base(k, m)
                    den = q_factorial_base(j, m) * q_factorial_base(k - j, m)
                    assert q_binomial_base(k, j, m) == lp_exact_div(num, den)


class TestEval:
    def test_q_to_one(self):
        assert lp_eval(q_bracket(3)) == 3
        assert lp_eval(ZERO) == 0

    def test_rational_point(self):
        assert lp_eval(q_bracket(-2), Fraction(1, 2)) == -6

    def test_at_zero(self):
        assert lp_eval(ONE + Q, 0) == 1
        with pytest.raises(EvalAtZeroError):
            lp_eval(q_power(-1), 0)

    @given(polys, polys, st.fractions(min_value=-4, max_value=4).filter(lambda x: x != 0))
    def test_homomorphism(self, a, b, x):
        assert lp_eval(a * b, x) == lp_eval(a, x) * lp_eval(b, x)
        assert lp_eval(a + b, x) == lp_eval(a, x) + lp_eval(b, x)

    @settings(max_examples=50)
    @given(polys)
    def test_q_to_one_is_eval_at_one(self, a):
        assert lp_eval(a) == lp_eval(a, 1)


class TestRendering:
    def test_canonical_text(self):
        p = LaurentPoly({-2: -1, -1: -1, 0: 2, 1: 3, 3: 1})
        assert str(p) == "-q^-2 - q^-1 + 2 + 3*q + q^3"
        assert str(ZERO) == "0"
        assert str(ONE) == "1"
        assert str(-ONE) == "-1"
        assert str(Q) == "q"
        assert str(-Q + 1) == "1 - q"
        assert str(LaurentPoly({2: -4})) == "-4*q^2"

    def test_json_round_trip(self):
        p = LaurentPoly({-2: -1, 0: 2, 5: 30})
        doc = p.to_json_dict()
        assert doc == {"terms": [{"e": -2, "c": "-1"}, {"e": 0, "c": "2"}, {"e": 5, "c": "30"}]}
        assert LaurentPoly.from_json_dict(doc) == p

    def test_json_rejects_malformed(self):
        with pytest.raises(ValueError):
            LaurentPoly.from_json_dict({"terms": [{"e": 0, "c": "0"}]})
        with pytest.raises(ValueError):
            LaurentPoly.from_json_dict({"terms": [{"e": 1, "c": "1"}, {"e": 0, "c": "1"}]})
        with pytest.raises(ValueError):
            LaurentPoly.from_json_dict({"rows": []})

    @given(polys)
    def test_json_round_trip_random(self, p):
        assert LaurentPoly.from_json_dict(p.to_json_dict()) == p


class TestStructure:
    def test_equality_is_structural(self):
        assert LaurentPoly({0: 1, 1: 0}) == ONE
        assert hash(LaurentPoly({2: 3})) == hash(LaurentPoly({2: 3}))

    def test_unit_monomials(self):
        assert q_power(-5).is_unit_monomial()
        assert (-q_power(2)).is_unit_monomial()
        assert not q_bracket(2).is_unit_monomial()
        assert not LaurentPoly({1: 2}).is_unit_monomial()
        assert q_power(3).unit_inverse() == q_power(-3)
        assert (-q_power(3)).unit_inverse() == -q_power(-3)
        with pytest.raises(NonDivisibleError):
            q_bracket(2).unit_inverse()

    def test_degree_valuation(self):
        p = LaurentPoly({-2: 1, 3: 4})
        assert p.degree() == 3 and p.valuation() == -2
        assert ZERO.degree() is None and ZERO.valuation() is None
