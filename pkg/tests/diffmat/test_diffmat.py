"""
Tests for the EK and classical differentiation matrices and the condition diagnostics.
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from diffmat import (
    BasisFamily,
    condition_number,
    condition_report,
    dm_power,
    ek_dm_direct,
    ek_dm_stable,
    ek_u_matrix,
    first_order_dm,
    v_inverse_closed,
    vandermonde,
)
from exceptions import GammaOverflowError, ParameterError, PreconditionError
from experiments.derivatives import reproduction_error, summarize
from interpolation import MuntzNodeSet
from muntz import JmfKind, JmfSpec, Side, SpecialKind, d_dx_special, ek_deriv_jmf_closed, eval_jmf
from quadrature import MuntzBasisParams


def closed_form_error(side, ns, D, mu, k):
    """Max nodal error of D on a basis member, relative to the largest exact value."""
    kind = JmfKind.FIRST if side is Side.LEFT else JmfKind.SECOND
    spec = JmfSpec(kind, k, ns.params.with_changes(mu=mu))
    exact = np.asarray(ek_deriv_jmf_closed(spec, ns.nodes))
    values = np.asarray(eval_jmf(spec, ns.nodes))
    return np.max(np.abs(D @ values - exact)) / max(1.0, np.max(np.abs(exact)))


class TestStableMatrix:
    """U V^-1 with the closed-form inverse."""

    @pytest.mark.parametrize("mu", [0.25, 0.5, 0.75])
    def test_left_reproduces_basis(self, left_params, mu):
        ns = MuntzNodeSet.build(left_params.with_changes(mu=mu), 20)
        D = ek_dm_stable(Side.LEFT, ns, mu)
        assert D.shape == (21, 21)
        for k in (0, 3, 10, 20):
            assert closed_form_error(Side.LEFT, ns, D, mu, k) <= 1e-8

    def test_right_reproduces_basis(self, right_params):
        ns = MuntzNodeSet.build(right_params, 20)
        D = ek_dm_stable(Side.RIGHT, ns, 0.5)
        for k in (0, 5, 20):
            assert closed_form_error(Side.RIGHT, ns, D, 0.5, k) <= 1e-8

    @pytest.mark.parametrize("side", [Side.LEFT, Side.RIGHT])
    def test_u_matrix_columns_are_closed_form_derivatives(self, left_params, right_params, side):
        params, kind = (left_params, JmfKind.FIRST) if side is Side.LEFT else (right_params, JmfKind.SECOND)
        mu = 0.75
        ns = MuntzNodeSet.build(params.with_changes(mu=mu), 12)
        U = ek_u_matrix(side, ns, mu)
        assert U.shape == (13, 13)
        for i in range(ns.N + 1):
            exact = np.asarray(ek_deriv_jmf_closed(JmfSpec(kind, i, ns.params.with_changes(mu=mu)), ns.nodes))
            np.testing.assert_allclose(U[:, i], exact, rtol=1e-10, atol=1e-10 * np.max(np.abs(exact)))

    def test_shift_violation(self):
        params = MuntzBasisParams.create(0.0, 0.2, sigma=1.0, mu=1.5, b=1.0)
        ns = MuntzNodeSet.build(params, 5)
        with pytest.raises(PreconditionError):
            ek_dm_stable(Side.LEFT, ns, 1.5)
        with pytest.raises(PreconditionError):
            ek_dm_stable(Side.RIGHT, ns, 1.5)

    def test_order_must_be_positive(self, small_nodeset):
        with pytest.raises(ParameterError):
            ek_dm_stable(Side.LEFT, small_nodeset, 0.0)


class TestDirectMatrix:
    """Entrywise construction with raw Gamma values."""

    def test_reproduces_basis(self, left_params):
        ns = MuntzNodeSet.build(left_params, 20)
        D = ek_dm_direct(Side.LEFT, ns, 0.5)
        for k in (0, 10, 20):
            assert closed_form_error(Side.LEFT, ns, D, 0.5, k) <= 1e-8

    @pytest.mark.parametrize("N", [20, 40])
    @pytest.mark.parametrize("mu", [0.25, 0.5, 0.75])
    def test_agrees_with_stable(self, left_params, N, mu):
        ns = MuntzNodeSet.build(left_params.with_changes(mu=mu), N)
        data = ns.sample(lambda x: x ** ns.params.left_exponent * np.exp(-np.sqrt(x))).values
        stable = ek_dm_stable(Side.LEFT, ns, mu) @ data
        direct = ek_dm_direct(Side.LEFT, ns, mu) @ data
        assert np.max(np.abs(direct - stable)) <= 1e-7 * max(1.0, np.max(np.abs(stable)))

    def test_breakdown_order(self, left_params):
        """At N = 145 the raw Gamma products overflow while the stable matrix still works."""
        ns = MuntzNodeSet.build(left_params, 145)
        direct = ek_dm_direct(Side.LEFT, ns, 0.5, on_overflow='propagate')
        stable = ek_dm_stable(Side.LEFT, ns, 0.5)
        assert reproduction_error(Side.LEFT, ns, direct, 0.5, 10) > 1e-3
        assert reproduction_error(Side.LEFT, ns, stable, 0.5, 10) <= 1e-5

    def test_overflow_raises(self, left_params):
        ns = MuntzNodeSet.build(left_params, 120)
        with pytest.raises(GammaOverflowError):
            ek_dm_direct(Side.LEFT, ns, 0.5)

    def test_unknown_overflow_policy(self, small_nodeset):
        with pytest.raises(ParameterError):
            ek_dm_direct(Side.LEFT, small_nodeset, 0.5, on_overflow='ignore')


class TestClosedFormInverse:
    """V^-1 from the quadrature weights."""

    @pytest.mark.parametrize("side", [Side.LEFT, Side.RIGHT])
    def test_inverse_property(self, left_params, right_params, side):
        params = left_params if side is Side.LEFT else right_params
        ns = MuntzNodeSet.build(params, 30)
        product = v_inverse_closed(side, ns) @ vandermonde(side, ns)
        assert np.max(np.abs(product - np.eye(31))) <= 1e-9

    def test_matches_numeric_inverse(self, left_params):
        ns = MuntzNodeSet.build(left_params, 10)
        closed = v_inverse_closed(Side.LEFT, ns)
        numeric = np.linalg.inv(vandermonde(Side.LEFT, ns))
        assert np.max(np.abs(closed - numeric)) <= 1e-10 * np.max(np.abs(numeric))

    def test_single_node(self, right_params):
        ns = MuntzNodeSet.build(right_params, 0)
        product = v_inverse_closed(Side.RIGHT, ns) @ vandermonde(Side.RIGHT, ns)
        assert product.shape == (1, 1)
        assert product[0, 0] == pytest.approx(1.0, rel=1e-14)


class TestFirstOrderMatrices:
    """Classical derivatives of the power and cutoff families."""

    def test_power_family_on_leading_power(self):
        params = MuntzBasisParams.create(0.0, 1.5, sigma=0.5, b=4.0)
        ns = MuntzNodeSet.build(params, 12)
        e = params.sigma * params.beta
        result = first_order_dm(BasisFamily.POWER, ns) @ ns.nodes ** e
        exact = e * ns.nodes ** (e - 1.0)
        assert np.max(np.abs(result - exact)) <= 1e-9 * np.max(np.abs(exact))

    def test_classical_collocation(self):
        ns = MuntzNodeSet.build(MuntzBasisParams.create(0.0, 0.0, sigma=1.0, b=1.0), 6)
        D = first_order_dm(BasisFamily.POWER, ns)
        np.testing.assert_allclose(D @ ns.nodes ** 2, 2.0 * ns.nodes, atol=1e-10)
        np.testing.assert_allclose(dm_power(D, 2) @ ns.nodes ** 3, 6.0 * ns.nodes, atol=1e-8)

    def test_cutoff_family_on_leading_function(self):
        params = MuntzBasisParams.create(0.5, -0.5, sigma=0.5, eta=0.0, b=10.0)
        ns = MuntzNodeSet.build(params, 16)
        samples = ns.cutoff ** params.alpha
        exact = d_dx_special(SpecialKind.CUTOFF, 0, params, ns.nodes)
        result = first_order_dm(BasisFamily.CUTOFF, ns) @ samples
        assert np.max(np.abs(result - exact)) <= 1e-8 * max(1.0, np.max(np.abs(exact)))


class TestDmPower:
    """Repeated products."""

    def test_first_power_is_identity_operation(self):
        D = np.arange(9.0).reshape(3, 3)
        np.testing.assert_array_equal(dm_power(D, 1), D)

    def test_left_fold(self):
        D = np.random.default_rng(3).normal(size=(5, 5))
        np.testing.assert_array_equal(dm_power(D, 3), D @ dm_power(D, 2))

    def test_invalid_arguments(self):
        with pytest.raises(ParameterError):
            dm_power(np.ones((2, 3)), 2)
        with pytest.raises(ParameterError):
            dm_power(np.eye(2), 0)


class TestConditionNumber:
    """SVD and 1-norm estimate paths."""

    def test_trivial_values(self):
        assert condition_number(np.eye(4)) == pytest.approx(1.0)
        assert condition_number(np.diag([1.0, 10.0])) == pytest.approx(10.0)

    def test_singular(self):
        report = condition_report(np.array([[1.0, 2.0], [2.0, 4.0]]))
        assert report.singular
        assert report.cond == float('inf')

    def test_rejects_bad_input(self):
        with pytest.raises(ParameterError):
            condition_number(np.ones((2, 3)))
        with pytest.raises(ParameterError):
            condition_number(np.array([[1.0, np.nan], [0.0, 1.0]]))

    def test_large_matrix_uses_estimate(self):
        M = np.eye(202) + 0.01 * np.random.default_rng(5).normal(size=(202, 202))
        report = condition_report(M)
        assert report.method == 'gecon'
        assert 1.0 <= report.cond < 10.0

    def test_table_ratios_at_45(self, left_params):
        for mu, expected in ((0.25, 0.9453), (0.5, 1.1183), (0.75, 1.1487)):
            summary = summarize(Side.LEFT, left_params, 45, mu, 'stable', 10)
            assert summary.cond_ratio == pytest.approx(expected, rel=0.05)

    @pytest.mark.slow
    @pytest.mark.parametrize("N", [45, 95, 145, 165])
    def test_condition_growth_band(self, left_params, N):
        for mu in (0.25, 0.5, 0.75):
            ratio = summarize(Side.LEFT, left_params, N, mu, 'stable', 10).cond_ratio
            assert 0.9 <= ratio <= 1.2

    @pytest.mark.parametrize("mu", [0.25, 0.5, 0.75])
    def test_right_condition_growth(self, right_params, mu):
        ratios = [summarize(Side.RIGHT, right_params, N, mu, 'stable', 5).cond_ratio for N in (45, 95)]
        for ratio in ratios:
            assert 1e-2 <= ratio <= 1e2
        assert 0.25 <= ratios[1] / ratios[0] <= 4.0
