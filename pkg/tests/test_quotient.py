"""Unit tests for the quotient matrices, quartics and parameter sweeps."""

import csv
import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compspec.errors import ParameterError, QuarticError
from compspec.schemas.params import BBParams, BParams
from compspec.schemas.quartic import Quartic
from compspec.services.constructions import build_B, build_BB
from compspec.services.graphcore import complement, transmission
from compspec.services.quotient import (
    alpha,
    characteristic_coefficients,
    f_difference,
    f_poly,
    g_difference,
    g_poly,
    h_B,
    h_BB,
    quartic_extreme_roots,
    quotient_matrix_B,
    quotient_matrix_BB,
    rows_to_csv,
    sigma_formula_B,
    sigma_formula_BB,
    sweep_lemma_3_3,
    sweep_lemma_4_2,
    theta,
)
from compspec.services.spectra import complement_spectrum


def _valid_b_params(max_n: int):
    for n in range(5, max_n + 1):
        for kappa in range(1, n):
            for s in range(1, n):
                t = n - s - kappa
                if t >= s and t - 1 >= kappa:
                    yield s, t, kappa


def _valid_bb_params(max_n: int):
    for n in range(3, max_n + 1):
        for kappa in range(1, n):
            for n2 in range(kappa, n):
                n1 = n - n2
                if n1 >= n2 and n1 + n2 > 2 * kappa:
                    yield n1, n2, kappa


def _quartic_spectrum(q: Quartic, n: int) -> list[float]:
    disc = math.sqrt(q.discriminant)
    roots = [max((-q.c2 + disc) / 2, 0.0), max((-q.c2 - disc) / 2, 0.0)]
    values = [sign * math.sqrt(r) for r in roots for sign in (1, -1)]
    return sorted(values + [0.0] * (n - 4), reverse=True)


class TestQuotientMatrices:
    """Tests for the 4x4 quotients and their characteristic polynomials."""

    def test_matrix_b(self):
        expected = [[0, 2, 0, 1], [1, 0, 0, 0], [0, 0, 0, 1], [1, 0, 2, 0]]
        assert quotient_matrix_B(1, 3, 2).tolist() == expected

    def test_matrix_bb(self):
        expected = [[0, 0, 2, 1], [0, 0, 2, 0], [2, 1, 0, 0], [2, 0, 0, 0]]
        assert quotient_matrix_BB(3, 3, 1).tolist() == expected

    def test_matrix_invalid_params(self):
        with pytest.raises(ParameterError):
            quotient_matrix_B(1, 2, 2)
        with pytest.raises(ParameterError):
            quotient_matrix_BB(2, 3, 1)

    def test_characteristic_polynomial_b(self):
        coefficients = characteristic_coefficients(quotient_matrix_B(1, 3, 2))
        assert coefficients == pytest.approx([1, 0, -5, 0, 4], abs=1e-9)

    @pytest.mark.parametrize("s, t, kappa", list(_valid_b_params(10)))
    def test_characteristic_polynomial_matches_f(self, s, t, kappa):
        coefficients = characteristic_coefficients(quotient_matrix_B(s, t, kappa))
        assert coefficients == pytest.approx(f_poly(s, t, kappa).coefficients(), abs=1e-7)

    @pytest.mark.parametrize("n1, n2, kappa", list(_valid_bb_params(10)))
    def test_characteristic_polynomial_matches_g(self, n1, n2, kappa):
        coefficients = characteristic_coefficients(quotient_matrix_BB(n1, n2, kappa))
        assert coefficients == pytest.approx(g_poly(n1, n2, kappa).coefficients(), abs=1e-7)

    def test_bb_quotient_eigenvalues(self):
        values = np.linalg.eigvals(quotient_matrix_BB(3, 3, 1).astype(float))
        assert max(values.real) == pytest.approx(1 + math.sqrt(3))
        assert min(values.real) == pytest.approx(-1 - math.sqrt(3))


class TestQuartics:
    """Tests for f, g and the closed-form roots."""

    def test_f_values(self):
        assert f_poly(1, 3, 2).coefficients() == [1, 0, -5, 0, 4]
        assert f_poly(1, 4, 2).coefficients() == [1, 0, -6, 0, 6]
        assert f_poly(1, 2, 1).coefficients() == [1, 0, -3, 0, 1]

    def test_g_values(self):
        assert g_poly(3, 3, 1).coefficients() == [1, 0, -8, 0, 4]
        assert g_poly(2, 2, 1).coefficients() == [1, 0, -3, 0, 1]

    def test_extreme_roots(self):
        assert quartic_extreme_roots(f_poly(1, 3, 2)) == pytest.approx((2.0, -2.0))
        top, _ = quartic_extreme_roots(f_poly(1, 4, 2))
        assert top == pytest.approx(math.sqrt(3 + math.sqrt(3)))
        assert top == pytest.approx(2.17533, abs=1e-5)
        assert quartic_extreme_roots(g_poly(3, 3, 1)) == pytest.approx(
            (1 + math.sqrt(3), -1 - math.sqrt(3))
        )

    def test_extreme_roots_of_pure_quartic(self):
        assert quartic_extreme_roots(Quartic(kind="f", params={}, c2=0, c0=0)) == (0.0, 0.0)

    def test_negative_discriminant(self):
        with pytest.raises(QuarticError):
            quartic_extreme_roots(Quartic(kind="g", params={}, c2=0, c0=1))

    def test_quartic_evaluation(self):
        q = f_poly(1, 3, 2)
        assert q(1.0) == 0
        assert q(2.0) == 0
        assert q(0.0) == 4

    @given(
        st.integers(2, 12), st.integers(1, 12), st.integers(1, 12), st.floats(-5, 5)
    )
    @settings(max_examples=100, deadline=None)
    def test_f_difference_identity(self, s, t, kappa, lam):
        direct = f_poly(s, t, kappa)(lam) - f_poly(s - 1, t + 1, kappa)(lam)
        assert direct == pytest.approx(f_difference(s, t, kappa, lam), rel=1e-9, abs=1e-6)

    @given(
        st.integers(2, 12), st.integers(1, 12), st.integers(1, 12), st.floats(-5, 5)
    )
    @settings(max_examples=100, deadline=None)
    def test_g_difference_identity(self, n1, n2, kappa, lam):
        direct = g_poly(n1, n2, kappa)(lam) - g_poly(n1 - 1, n2 + 1, kappa)(lam)
        assert direct == pytest.approx(g_difference(n1, n2, kappa, lam), rel=1e-9, abs=1e-6)

    def test_theta(self):
        assert f_difference(2, 4, 1, 1.0) == -1.0
        assert theta(2, 4, 1) == pytest.approx(math.sqrt(2 / 3))
        assert f_difference(2, 4, 1, theta(2, 4, 1)) == pytest.approx(0.0, abs=1e-12)

    def test_theta_undefined(self):
        with pytest.raises(ParameterError):
            theta(3, 2, 1)

    def test_alpha(self):
        assert alpha(3) == -3.0
        assert g_difference(4, 2, 1, alpha(1)) == 0.0
        assert g_difference(4, 2, 1, 2.0) == 3.0


class TestSpectrumCompleteness:
    """Tests that the quartic roots and n - 4 zeros are the whole complement spectrum."""

    @pytest.mark.parametrize("s, t, kappa", list(_valid_b_params(14)))
    def test_b_complement(self, s, t, kappa):
        g = build_B(BParams.for_B(s, t, kappa))
        values = complement_spectrum(g, with_vectors=False).values
        expected = _quartic_spectrum(f_poly(s, t, kappa), g.n)
        assert list(values) == pytest.approx(expected, abs=1e-8)

    @pytest.mark.parametrize("n1, n2, kappa", list(_valid_bb_params(14)))
    def test_bb_complement(self, n1, n2, kappa):
        g = build_BB(BBParams.build(n1, n2, kappa))
        values = complement_spectrum(g, with_vectors=False).values
        expected = _quartic_spectrum(g_poly(n1, n2, kappa), g.n)
        assert list(values) == pytest.approx(expected, abs=1e-8)


class TestTransmissionFormulas:
    """Tests for the closed-form transmissions against BFS."""

    def test_worked_values(self):
        assert sigma_formula_B(1, 4, 2) == 42
        assert transmission(complement(build_B(BParams.for_B(1, 4, 2)))) == 42
        assert sigma_formula_BB(3, 3, 1) == 23
        assert transmission(complement(build_BB(BBParams.build(3, 3, 1)))) == 23

    @pytest.mark.parametrize("s, t, kappa", list(_valid_b_params(10)))
    def test_formula_b(self, s, t, kappa):
        g = complement(build_B(BParams.for_B(s, t, kappa)))
        assert sigma_formula_B(s, t, kappa) == transmission(g)

    @pytest.mark.parametrize(
        "n1, n2, kappa", [p for p in _valid_bb_params(10) if p[1] > p[2]]
    )
    def test_formula_bb(self, n1, n2, kappa):
        """Test the formula wherever U has a non-neighbor on the far side."""
        g = complement(build_BB(BBParams.build(n1, n2, kappa)))
        assert sigma_formula_BB(n1, n2, kappa) == transmission(g)

    def test_h_values(self):
        assert h_BB(3, 3, 1) == 2 * 23 - 6
        assert h_B(1, 4, 2) == pytest.approx(2 * 42 - 7 * math.sqrt(2))


class TestSweeps:
    """Tests for the monotonicity and threshold sweeps."""

    def test_f_sweep_has_no_violations(self):
        rows = sweep_lemma_3_3(30)
        assert rows
        assert all(2 <= r.s <= r.t and r.s + r.t + r.kappa <= 30 for r in rows)
        assert all(r.monotone for r in rows)
        assert all(r.above_theta for r in rows)
        assert all(r.anchor_holds for r in rows)

    def test_g_sweep_characterization(self):
        """Test that both g conclusions hold exactly when n1 + n2 > 3 kappa."""
        rows = sweep_lemma_4_2(30)
        assert rows
        for r in rows:
            expected = r.n1 + r.n2 > 3 * r.kappa
            assert r.above_kappa == expected
            if r.n1 > r.n2 + 1:
                assert r.monotone == expected
            else:
                assert r.monotone is None

    def test_g_sweep_known_failure(self):
        row = next(r for r in sweep_lemma_4_2(8) if (r.n1, r.n2, r.kappa) == (5, 3, 3))
        assert row.min_root == pytest.approx(-math.sqrt(6))
        assert row.monotone is False

    def test_rows_to_csv(self):
        text = rows_to_csv(sweep_lemma_3_3(7))
        records = list(csv.DictReader(io.StringIO(text)))
        assert records[0].keys() >= {"s", "t", "kappa", "max_root", "monotone"}
        assert len(records) == len(sweep_lemma_3_3(7))

    def test_rows_to_csv_empty(self):
        assert rows_to_csv([]) == ""
