"""Tests for the recurrence-driven triangle families and their inverses."""

import math

import pytest

from qwhitney.qalg import LaurentPoly, ONE, Q, ZERO, lp_eval, q_bracket, q_power
from qwhitney.triangles import (
    CacheInvalidError,
    FamilyId,
    InverseMatrix,
    NonUnitDiagonalError,
    Params,
    Triangle,
    dowling,
    get_triangle,
    invert_unit_triangular,
    lah,
    lah_row_sum,
    load_rows,
    rows_for,
    save_rows,
    whitney1_falling,
    whitney1_rising,
    whitney2,
    whitney2_scaled,
    whitney2_verbatim,
)
from qwhitney.upoly import UPoly, falling_factorial_u, rising_factorial_u

P10 = Params(1, 0)
P11 = Params(1, 1)

SMALL_GRID = [Params(m, r) for m in (1, 2, 3) for r in range(-2, 4)]


class TestParams:
    def test_rejects_bad_m(self):
        with pytest.raises(ValueError):
            Params(0, 1)
        with pytest.raises(ValueError):
            Params(-2, 1)

    def test_negative_r_allowed(self):
        assert Params(2, -5).r == -5


class TestWhitney2:
    def test_examples(self):
        assert whitney2(P10, 3, 2) == LaurentPoly({1: 2, 2: 1})
        assert whitney2(P11, 2, 2) == q_power(3)
        assert whitney2(P10, 5, 7) == ZERO
        assert whitney2(P10, -1, 0) == ZERO

    def test_boundaries(self):
        for p in SMALL_GRID:
            for n in range(9):
                assert whitney2(p, n, 0) == q_bracket(p.r) ** n
                assert whitney2(p, n, n) == q_power(p.r * n + p.m * math.comb(n, 2))

    def test_q_to_one_is_stirling2_at_1_0(self):
        rows = [[1]]
        for n in range(1, 9):
            prev = rows[-1]
            rows.append(
                [
                    (prev[k - 1] if 0 <= k - 1 < n else 0) + k * (prev[k] if k < n else 0)
                    for k in range(n + 1)
                ]
            )
        for n in range(9):
            for k in range(n + 1):
                assert lp_eval(whitney2(P10, n, k)) == rows[n][k]

    def test_horizontal_gf(self):
        for p in SMALL_GRID:
            for n in range(9):
                acc = UPoly.zero()
                for k in range(n + 1):
                    acc = acc + falling_factorial_u(p.m, p.r, k) * whitney2(p, n, k)
                assert acc == UPoly.u_power(n), (p, n)


class TestWhitney2Verbatim:
    def test_agrees_at_r_zero(self):
        for m in (1, 2, 3):
            p = Params(m, 0)
            for n in range(9):
                for k in range(n + 1):
                    assert whitney2_verbatim(p, n, k) == whitney2(p, n, k)

    def test_examples_at_r_one(self):
        assert whitney2_verbatim(P11, 1, 1) == q_power(-1)
        assert whitney2_verbatim(P11, 1, 0) == q_bracket(-1)
        assert whitney2_verbatim(P11, 1, 1) != whitney2(P11, 1, 1)


class TestScaledForms:
    def test_examples(self):
        assert whitney2_scaled(2, P11, 1, 1) == ONE
        assert whitney2_scaled(3, P11, 1, 1) == Q
        for n in range(5):
            assert whitney2_scaled(2, P11, n, 0) == whitney2(P11, n, 0)

    def test_scaling_relations(self):
        for p in SMALL_GRID:
            for n in range(8):
                for k in range(n + 1):
                    w = whitney2(p, n, k)
                    star = whitney2_scaled(2, p, n, k)
                    tilde = whitney2_scaled(3, p, n, k)
                    assert star == q_power(-k * p.r - p.m * math.comb(k, 2)) * w
                    assert tilde == q_power(k * p.r) * star
                    assert tilde == q_power(-p.m * math.comb(k, 2)) * w

    def test_rejects_bad_form(self):
        with pytest.raises(ValueError):
            whitney2_scaled(1, P10, 1, 1)


class TestWhitney1:
    def test_table_values(self):
        for p in SMALL_GRID:
            m, r = p.m, p.r
            assert whitney1_falling(p, 1, 1) == q_power(-r)
            assert whitney1_falling(p, 2, 1) == -(
                q_power(-(2 * r + m)) * (q_bracket(r) + q_bracket(r + m))
            )
        assert whitney1_falling(P10, 2, 0) == ZERO

    def test_rows_are_falling_coefficients(self):
        for p in SMALL_GRID:
            for n in range(9):
                fall = falling_factorial_u(p.m, p.r, n)
                for k in range(n + 1):
                    assert whitney1_falling(p, n, k) == fall.coeff(k), (p, n, k)

    def test_rising_examples(self):
        assert whitney1_rising(P11, 2, 2) == q_power(3)
        assert whitney1_rising(P10, 2, 1) == ONE
        assert whitney1_rising(Params(3, -2), 0, 0) == ONE

    def test_rising_rows_are_rising_coefficients(self):
        for p in SMALL_GRID:
            for n in range(9):
                rise = rising_factorial_u(p.m, p.r, n)
                for k in range(n + 1):
                    assert whitney1_rising(p, n, k) == rise.coeff(k)

    def test_rising_falling_row_conversion(self):
        for p in SMALL_GRID:
            for n in range(9):
                flipped = Params(p.m, -p.r - (n - 1) * p.m)
                for k in range(n + 1):
                    assert whitney1_rising(p, n, k) == whitney1_falling(flipped, n, k)

    def test_orthogonality(self):
        for p in SMALL_GRID:
            for n in range(8):
                for j in range(n + 1):
                    want = ONE if n == j else ZERO
                    left = ZERO
                    right = ZERO
                    for k in range(j, n + 1):
                        left = left + whitney1_falling(p, n, k) * whitney2(p, k, j)
                        right = right + whitney2(p, n, k) * whitney1_falling(p, k, j)
                    assert left == want and right == want, (p, n, j)


class TestLah:
    def test_examples(self):
        assert lah(P10, 2, 1) == LaurentPoly({0: 1, 1: 1})
        assert lah(P11, 2, 1) == LaurentPoly({2: 1, 3: 2, 4: 2, 5: 1})
        assert lah(P11, 2, 2) == q_power(6)

    def test_boundaries(self):
        for p in SMALL_GRID:
            for n in range(9):
                assert lah(p, n, n) == q_power(2 * p.r * n + p.m * n * (n - 1))
                want = ONE
                for i in range(n):
                    want = want * q_bracket(2 * p.r + i * p.m)
                assert lah(p, n, 0) == want

    def test_horizontal_gf(self):
        for p in SMALL_GRID:
            for n in range(9):
                acc = UPoly.zero()
                for k in range(n + 1):
                    acc = acc + falling_factorial_u(p.m, 0, k) * lah(p, n, k)
                assert acc == rising_factorial_u(p.m, 2 * p.r, n), (p, n)

    def test_q_to_one_classical_lah(self):
        for n in range(1, 9):
            for k in range(1, n + 1):
                want = math.factorial(n) // math.factorial(k) * math.comb(n - 1, k - 1)
                assert lp_eval(lah(P10, n, k)) == want

    def test_q_to_one_cheon_jung_recurrence(self):
        for p in SMALL_GRID:
            for n in range(1, 9):
                for k in range(n + 1):
                    got = lp_eval(lah(p, n, k))
                    want = lp_eval(lah(p, n - 1, k - 1)) + (
                        2 * p.r + k * p.m + (n - 1) * p.m
                    ) * lp_eval(lah(p, n - 1, k))
                    assert got == want


class TestRowSums:
    def test_dowling_examples(self):
        assert dowling(P10, 1, 3) == LaurentPoly({0: 1, 1: 2, 2: 1, 3: 1})
        assert dowling(P10, 1, 0) == ONE
        assert dowling(P10, 1, 2) == LaurentPoly({0: 1, 1: 1})

    def test_dowling_bell_limit(self):
        bells = [1, 1, 2, 5, 15, 52, 203, 877, 4140]
        for n, b in enumerate(bells):
            assert lp_eval(dowling(P10, 1, n)) == b

    def test_dowling_rejects_bad_form(self):
        with pytest.raises(ValueError):
            dowling(P10, 4, 2)

    def test_lah_row_sums(self):
        assert lah_row_sum(P10, 1) == ONE
        assert lah_row_sum(P10, 2) == LaurentPoly({0: 1, 1: 1, 2: 1})
        assert lah_row_sum(Params(3, -2), 0) == ONE


class TestInversion:
    def test_inverse_of_falling_is_whitney2(self):
        for p in SMALL_GRID:
            inv = invert_unit_triangular(FamilyId.W1_FALLING, p, 8)
            for n in range(9):
                for k in range(n + 1):
                    assert inv.value(n, k) == whitney2(p, n, k), (p, n, k)

    def test_rising_inverse_example(self):
        inv = invert_unit_triangular(FamilyId.W1_RISING, P10, 2)
        assert inv.value(2, 1) == -q_power(-1)
        assert inv.value(2, 2) == q_power(-1)

    def test_diagonal_product_is_one(self):
        for family in (FamilyId.W2, FamilyId.LAH, FamilyId.W1_RISING):
            inv = invert_unit_triangular(family, P11, 5)
            tri = get_triangle(family, P11)
            for n in range(6):
                assert inv.value(n, n) * tri.value(n, n) == ONE

    def test_two_sided_identity(self):
        for family in (FamilyId.W1_RISING, FamilyId.LAH):
            inv = invert_unit_triangular(family, Params(2, -1), 6)
            tri = get_triangle(family, Params(2, -1))
            for n in range(7):
                for j in range(n + 1):
                    want = ONE if n == j else ZERO
                    left = ZERO
                    right = ZERO
                    for k in range(j, n + 1):
                        left = left + inv.value(n, k) * tri.value(k, j)
                        right = right + tri.value(n, k) * inv.value(k, j)
                    assert left == want and right == want

    def test_non_unit_diagonal_rejected(self):
        tri = Triangle(FamilyId.W2, P10)
        tri._rows = [[ONE], [ZERO, q_bracket(2)]]
        tri._ensure = lambda n: None
        with pytest.raises(NonUnitDiagonalError):
            InverseMatrix(tri).value(1, 1)

    def test_out_of_range_is_zero(self):
        inv = invert_unit_triangular(FamilyId.W2, P10, 3)
        assert inv.value(2, 3) == ZERO
        assert inv.value(-1, 0) == ZERO


class TestRowCache:
    def test_save_load_round_trip(self, tmp_path):
        save_rows(FamilyId.LAH, P11, 5, tmp_path)
        rows = load_rows(FamilyId.LAH, P11, tmp_path)
        assert len(rows) == 6
        for n in range(6):
            for k in range(n + 1):
                assert rows[n][k] == lah(P11, n, k)

    def test_rows_for_writes_then_reads(self, tmp_path):
        first = rows_for(FamilyId.W2, P11, 4, tmp_path)
        assert (tmp_path / "w2_m1_r1.json").exists()
        second = rows_for(FamilyId.W2, P11, 4, tmp_path)
        assert first == second

    def test_short_cache_recomputed(self, tmp_path):
        rows_for(FamilyId.W2, P11, 2, tmp_path)
        rows = rows_for(FamilyId.W2, P11, 6, tmp_path)
        assert len(rows) == 7
        assert len(load_rows(FamilyId.W2, P11, tmp_path)) == 7

    def test_corrupt_cache_rejected_and_recomputed(self, tmp_path):
        path = save_rows(FamilyId.W2, P10, 3, tmp_path)
        path.write_text("{not json")
        with pytest.raises(CacheInvalidError):
            load_rows(FamilyId.W2, P10, tmp_path)
        rows = rows_for(FamilyId.W2, P10, 3, tmp_path)
        assert rows[3][2] == whitney2(P10, 3, 2)
        assert len(load_rows(FamilyId.W2, P10, tmp_path)) == 4

    def test_bad_shape_rejected(self, tmp_path):
        import json

        path = save_rows(FamilyId.W2, P10, 2, tmp_path)
        doc = json.loads(path.read_text())
        doc["rows"][1] = doc["rows"][1][:1]
        path.write_text(json.dumps(doc))
        with pytest.raises(CacheInvalidError):
            load_rows(FamilyId.W2, P10, tmp_path)

    def test_bad_corner_rejected(self, tmp_path):
        import json

        path = save_rows(FamilyId.W2, P10, 2, tmp_path)
        doc = json.loads(path.read_text())
        doc["rows"][0][0] = {"terms": [{"e": 0, "c": "2"}]}
        path.write_text(json.dumps(doc))
        with pytest.raises(CacheInvalidError):
            load_rows(FamilyId.W2, P10, tmp_path)

    def test_mismatched_params_rejected(self, tmp_path):
        import json

        path = save_rows(FamilyId.W2, P10, 2, tmp_path)
        doc = json.loads(path.read_text())
        doc["r"] = 3
        path.write_text(json.dumps(doc))
        with pytest.raises(CacheInvalidError):
            load_rows(FamilyId.W2, P10, tmp_path)
