"""
Tests for Jacobi polynomial evaluation, Gauss-Jacobi rules and Gamma ratios.
"""

import os
import sys
from unittest.mock import patch

import mpmath
import numpy as np
import pytest
from scipy import linalg, special

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from exceptions import DomainError, ParameterError, PoleError, QuadratureConvergenceError
from jacobi import (
    JacobiParams,
    eval_jacobi,
    gamma_n,
    gamma_ratio,
    gauss_jacobi,
    jacobi_derivative,
    jacobi_explicit_sum,
    jacobi_table,
    jacobi_weight_mass,
)

PARAMETER_PAIRS = [(-0.5, 2.0), (0.5, -0.5), (0.0, 0.0), (1.5, 1.0)]


def jacobi_moment(k, alpha, beta):
    """Exact integral of t^k (1-t)^alpha (1+t)^beta over [-1, 1] in 50-digit arithmetic."""
    with mpmath.workdps(50):
        a, b = mpmath.mpf(alpha), mpmath.mpf(beta)
        total = mpmath.mpf(0)
        for j in range(k + 1):
            total += mpmath.binomial(k, j) * mpmath.mpf(2) ** j * (-1) ** (k - j) * mpmath.beta(b + j + 1, a + 1)
        return float(mpmath.mpf(2) ** (a + b + 1) * total)


class TestJacobiParams:
    """Test parameter validation."""

    def test_rejects_non_integrable_weight(self):
        with pytest.raises(ParameterError):
            JacobiParams(-1.0, 0.0)
        with pytest.raises(ParameterError):
            JacobiParams(0.0, -1.5)

    def test_rejects_non_finite(self):
        with pytest.raises(ParameterError):
            JacobiParams(float('nan'), 0.0)

    def test_unchecked_allows_shifted_pairs(self):
        p = JacobiParams.unchecked(-1.5, 3.0)
        assert p.alpha == -1.5
        with pytest.raises(ParameterError):
            p.validate()

    def test_shifted(self):
        p = JacobiParams(-0.5, 2.0).shifted(0.5, -0.5)
        assert (p.alpha, p.beta) == (0.0, 1.5)


class TestEvalJacobi:
    """Test the three-term recurrence."""

    def setup_method(self):
        self.rng = np.random.default_rng(20240501)

    @pytest.mark.parametrize("alpha,beta", PARAMETER_PAIRS)
    def test_recurrence_matches_explicit_sum(self, alpha, beta):
        p = JacobiParams(alpha, beta)
        t = self.rng.uniform(-1.0, 1.0, 25)
        for n in range(13):
            recurrence = eval_jacobi(n, p, t)
            explicit = jacobi_explicit_sum(n, p, t)
            assert np.all(np.abs(recurrence - explicit) <= 1e-11 * (1.0 + np.abs(explicit)))

    @pytest.mark.parametrize("alpha,beta", PARAMETER_PAIRS)
    def test_matches_arbitrary_precision(self, alpha, beta):
        p = JacobiParams(alpha, beta)
        for n in (1, 4, 9, 15):
            for t in (-0.93, -0.2, 0.35, 0.999):
                reference = float(mpmath.jacobi(n, alpha, beta, t))
                assert eval_jacobi(n, p, t) == pytest.approx(reference, rel=1e-12, abs=1e-13)

    def test_value_at_right_endpoint(self):
        """P_n(1) = binom(n + alpha, n)."""
        expected = special.gamma(5.5) / (special.gamma(0.5) * 120.0)
        assert eval_jacobi(5, JacobiParams(-0.5, 2.0), 1.0) == pytest.approx(expected, rel=1e-13)

    def test_scalar_and_array_shapes(self):
        p = JacobiParams(0.5, -0.5)
        assert isinstance(eval_jacobi(3, p, 0.1), float)
        assert eval_jacobi(3, p, np.linspace(-1, 1, 7)).shape == (7,)

    def test_degenerate_recurrence_uses_explicit_sum(self):
        """alpha + beta = -2 zeroes the leading recurrence coefficient at n = 2."""
        p = JacobiParams.unchecked(-1.5, -0.5)
        t = np.linspace(-1, 1, 9)
        table = jacobi_table(4, p, t)
        for n in range(5):
            np.testing.assert_allclose(table[n], jacobi_explicit_sum(n, p, t), rtol=1e-12, atol=1e-12)

    def test_outside_domain(self):
        with pytest.raises(DomainError):
            eval_jacobi(2, JacobiParams(0.0, 0.0), 1.1)

    def test_domain_slack(self):
        eval_jacobi(2, JacobiParams(0.0, 0.0), 1.0 + 1e-13)

    def test_negative_degree(self):
        with pytest.raises(ParameterError):
            jacobi_table(-1, JacobiParams(0.0, 0.0), 0.0)

    def test_derivative_against_central_difference(self):
        p = JacobiParams(-0.5, 2.0)
        h = 1e-6
        for t in (-0.5, 0.0, 0.7):
            fd = (eval_jacobi(6, p, t + h) - eval_jacobi(6, p, t - h)) / (2 * h)
            assert jacobi_derivative(6, p, t) == pytest.approx(fd, rel=1e-7)

    def test_derivative_of_constant(self):
        assert jacobi_derivative(0, JacobiParams(0.0, 0.0), 0.3) == 0.0


class TestConstants:
    """Test orthogonality constants and Gamma ratios."""

    def test_legendre_norms(self):
        p = JacobiParams(0.0, 0.0)
        for n in range(6):
            assert gamma_n(n, p) == pytest.approx(2.0 / (2 * n + 1), rel=1e-14)

    def test_weight_mass_is_beta_function(self):
        for alpha, beta in PARAMETER_PAIRS:
            expected = 2.0 ** (alpha + beta + 1) * special.beta(alpha + 1, beta + 1)
            assert jacobi_weight_mass(JacobiParams(alpha, beta)) == pytest.approx(expected, rel=1e-13)

    def test_large_degree_does_not_overflow(self):
        assert np.isfinite(gamma_n(400, JacobiParams(-0.5, 2.0)))

    def test_gamma_ratio(self):
        assert gamma_ratio(5.0, 3.0) == pytest.approx(12.0, rel=1e-14)
        assert gamma_ratio(-0.5, 0.5) == pytest.approx(-2.0, rel=1e-13)
        np.testing.assert_allclose(gamma_ratio(np.array([2.0, 3.0]), 1.0), [1.0, 2.0], rtol=1e-14)

    def test_gamma_ratio_large_arguments(self):
        assert gamma_ratio(200.5, 200.0) == pytest.approx(float(mpmath.gamma(200.5) / mpmath.gamma(200)), rel=1e-11)

    def test_gamma_ratio_pole(self):
        with pytest.raises(PoleError):
            gamma_ratio(-2.0, 1.0)
        with pytest.raises(PoleError):
            gamma_ratio(1.0, 0.0)


class TestGaussJacobi:
    """Test Golub-Welsch rules with a Newton polish."""

    @pytest.mark.parametrize("alpha,beta", PARAMETER_PAIRS)
    def test_weight_sum(self, alpha, beta):
        p = JacobiParams(alpha, beta)
        for n in (0, 1, 5, 20):
            rule = gauss_jacobi(n, p)
            assert rule.weights.sum() == pytest.approx(jacobi_weight_mass(p), rel=1e-12)

    @pytest.mark.parametrize("alpha,beta", PARAMETER_PAIRS)
    def test_exact_on_monomials(self, alpha, beta):
        p = JacobiParams(alpha, beta)
        for n in range(11):
            rule = gauss_jacobi(n, p)
            for k in range(2 * n + 2):
                quadrature = float(rule.weights @ rule.nodes ** k)
                scale = float(rule.weights @ np.abs(rule.nodes) ** k)
                assert abs(quadrature - jacobi_moment(k, alpha, beta)) <= 1e-11 * scale

    @pytest.mark.parametrize("alpha,beta", PARAMETER_PAIRS)
    def test_discrete_orthogonality(self, alpha, beta):
        p = JacobiParams(alpha, beta)
        n = 7
        rule = gauss_jacobi(n, p)
        table = jacobi_table(n + 1, p, rule.nodes)
        for r in range(n + 2):
            for s in range(n + 2):
                if r + s > 2 * n + 1:
                    continue
                value = float(rule.weights @ (table[r] * table[s]))
                if r == s:
                    assert value == pytest.approx(gamma_n(r, p), rel=1e-10)
                else:
                    assert abs(value) <= 1e-10 * np.sqrt(gamma_n(r, p) * gamma_n(s, p))

    def test_nodes_sorted_and_interior(self):
        rule = gauss_jacobi(40, JacobiParams(-0.9, 3.0))
        assert np.all(np.diff(rule.nodes) > 0)
        assert np.all(np.abs(rule.nodes) < 1.0)
        assert np.all(rule.weights > 0)
        assert rule.size == 41

    def test_arrays_are_read_only(self):
        rule = gauss_jacobi(3, JacobiParams(0.0, 0.0))
        with pytest.raises(ValueError):
            rule.nodes[0] = 0.0

    def test_single_point_rule(self):
        rule = gauss_jacobi(0, JacobiParams(0.5, -0.5))
        assert rule.nodes[0] == pytest.approx(-0.5)

    def test_invalid_degree(self):
        with pytest.raises(ParameterError):
            gauss_jacobi(-1, JacobiParams(0.0, 0.0))

    def test_eigen_failure_is_reported(self):
        with patch('jacobi.gauss.linalg.eigh_tridiagonal', side_effect=linalg.LinAlgError("no convergence")):
            with pytest.raises(QuadratureConvergenceError):
                gauss_jacobi(5, JacobiParams(0.0, 0.0))
