"""
Tests for node sets, Muntz cardinal functions and the three interpolants.
"""

import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from exceptions import DomainError, EvaluationError, ParameterError, SingularEndpointError
from interpolation import (
    GridFunction,
    InterpolantKind,
    MuntzNodeSet,
    cardinal_matrix,
    eval_h_sigma,
    eval_interpolant,
    eval_lmf,
    interpolate,
)
from muntz import JmfKind, JmfSpec, eval_jmf
from quadrature import MuntzBasisParams


class TestMuntzNodeSet:
    """Test node-set construction."""

    def test_build(self, left_params):
        ns = MuntzNodeSet.build(left_params, 12)
        assert ns.size == 13
        assert np.all(np.diff(ns.nodes) > 0)
        np.testing.assert_allclose(ns.nodes_sigma, ns.nodes ** left_params.sigma, rtol=1e-13)

    def test_negative_size(self, left_params):
        with pytest.raises(ParameterError):
            MuntzNodeSet.build(left_params, -1)

    def test_sample_and_error(self, small_nodeset):
        gf = small_nodeset.sample(lambda x: x ** 2)
        assert gf.max_error(lambda x: x ** 2) == 0.0
        assert gf.max_error(lambda x: x ** 2 + 1e-3) == pytest.approx(1e-3)

    def test_sample_rejects_non_finite(self, small_nodeset):
        with pytest.raises(EvaluationError):
            small_nodeset.sample(lambda x: np.log(x - x[0]))

    def test_sample_broadcasts_constants(self, small_nodeset):
        assert np.all(small_nodeset.sample(lambda x: 2.0).values == 2.0)

    def test_grid_function_shape(self, small_nodeset):
        with pytest.raises(ParameterError):
            GridFunction(small_nodeset, np.zeros(3))


class TestCardinalFunctions:
    """Kronecker delta and partition of unity."""

    def test_kronecker_delta(self, small_nodeset):
        np.testing.assert_array_equal(cardinal_matrix(small_nodeset, small_nodeset.nodes), np.eye(13))
        assert eval_h_sigma(small_nodeset, 4, small_nodeset.nodes[4]) == 1.0
        assert eval_h_sigma(small_nodeset, 4, small_nodeset.nodes[5]) == 0.0

    @pytest.mark.parametrize("N,tol", [(12, 1e-10), (70, 1e-7)])
    def test_partition_of_unity(self, left_params, N, tol):
        ns = MuntzNodeSet.build(left_params, N)
        x = np.random.default_rng(7).uniform(0.0, left_params.b, 40)
        np.testing.assert_allclose(cardinal_matrix(ns, x).sum(axis=1), 1.0, atol=tol)

    def test_log_form_matches_direct_products(self, left_params):
        """Above 60 nodes the products switch to log-magnitude form; both agree near the switch."""
        x = np.linspace(0.01, 9.99, 17)
        ns = MuntzNodeSet.build(left_params, 61)
        direct = np.prod(
            (x[:, None] ** 0.5 - np.delete(ns.nodes_sigma, 3)[None, :])
            / (ns.nodes_sigma[3] - np.delete(ns.nodes_sigma, 3))[None, :], axis=1)
        np.testing.assert_allclose(eval_h_sigma(ns, 3, x), direct, rtol=1e-9, atol=1e-12)

    def test_origin(self, small_nodeset):
        values = cardinal_matrix(small_nodeset, 0.0)
        assert np.all(np.isfinite(values))
        assert values.sum() == pytest.approx(1.0, abs=1e-10)

    def test_index_and_domain(self, small_nodeset):
        with pytest.raises(ParameterError):
            eval_h_sigma(small_nodeset, 13, 1.0)
        with pytest.raises(DomainError):
            eval_h_sigma(small_nodeset, 0, 11.0)


class TestLagrangeMuntzFunctions:
    """Weighted cardinal functions."""

    @pytest.mark.parametrize("variant", [1, 2])
    def test_kronecker_delta(self, right_params, variant):
        ns = MuntzNodeSet.build(right_params, 10)
        for r in (0, 5, 10):
            expected = np.zeros(11)
            expected[r] = 1.0
            np.testing.assert_allclose(eval_lmf(ns, r, variant, ns.nodes), expected, atol=1e-12)

    def test_singular_endpoint(self):
        params = MuntzBasisParams.create(-0.5, 0.2, sigma=1.0, eta=0.0, mu=0.5, b=1.0)
        ns = MuntzNodeSet.build(params, 6)
        with pytest.raises(SingularEndpointError):
            eval_lmf(ns, 0, 1, 0.0)
        assert np.isinf(eval_lmf(ns, 0, 1, 0.0, limit=True))

    def test_invalid_variant(self, small_nodeset):
        with pytest.raises(ParameterError):
            eval_lmf(small_nodeset, 0, 3, 1.0)


class TestInterpolants:
    """Exactness, idempotence and convergence."""

    def setup_method(self):
        self.rng = np.random.default_rng(11)

    def test_mji_reproduces_span(self, left_params):
        ns = MuntzNodeSet.build(left_params, 12)

        def f(x):
            return 3.0 * x ** (2 * left_params.sigma) - x ** left_params.sigma + 0.5

        gf = interpolate(InterpolantKind.MJI, f, ns)
        x = np.linspace(0.0, left_params.b, 41)
        values = eval_interpolant(InterpolantKind.MJI, gf, x)
        assert np.max(np.abs(values - f(x))) <= 1e-11 * np.max(np.abs(f(x)))

    def test_njmi1_reproduces_first_kind_functions(self, left_params):
        ns = MuntzNodeSet.build(left_params, 12)
        x = self.rng.uniform(0.0, left_params.b, 20)
        for n in (0, 4, 12):
            spec = JmfSpec(JmfKind.FIRST, n, left_params)
            gf = ns.sample(lambda t: eval_jmf(spec, t))
            exact = eval_jmf(spec, x)
            values = eval_interpolant(InterpolantKind.NJMI1, gf, x)
            assert np.max(np.abs(values - exact)) <= 1e-10 * max(1.0, np.max(np.abs(exact)))

    def test_njmi2_reproduces_second_kind_functions(self, right_params):
        ns = MuntzNodeSet.build(right_params, 10)
        x = self.rng.uniform(0.0, right_params.b, 20)
        for n in (0, 3, 10):
            spec = JmfSpec(JmfKind.SECOND, n, right_params)
            gf = ns.sample(lambda t: eval_jmf(spec, t))
            exact = eval_jmf(spec, x)
            values = eval_interpolant(InterpolantKind.NJMI2, gf, x)
            assert np.max(np.abs(values - exact)) <= 1e-10 * max(1.0, np.max(np.abs(exact)))

    def test_nodes_return_stored_values(self, small_nodeset):
        gf = small_nodeset.sample(np.sin)
        for kind in InterpolantKind:
            np.testing.assert_array_equal(eval_interpolant(kind, gf, small_nodeset.nodes), gf.values)

    def test_idempotence(self, left_params):
        ns = MuntzNodeSet.build(left_params, 15)
        x = self.rng.uniform(0.0, left_params.b, 50)
        for kind in InterpolantKind:
            first = interpolate(kind, lambda t: np.cos(t) * t, ns)
            second = interpolate(kind, lambda t: eval_interpolant(kind, first, t), ns)
            np.testing.assert_array_equal(second.values, first.values)
            np.testing.assert_allclose(eval_interpolant(kind, second, x), eval_interpolant(kind, first, x),
                                       rtol=0, atol=1e-11)

    def test_mji_converges_on_smooth_function(self):
        params = MuntzBasisParams.create(-0.5, 2.0, sigma=0.5, eta=0.0, mu=0.5, b=10.0)
        x = np.linspace(0.0, 10.0, 201)

        def f(t):
            return np.sqrt(t) * np.sin(np.sqrt(t))

        errors = []
        for N in (10, 20, 30, 40):
            gf = MuntzNodeSet.build(params, N).sample(f)
            errors.append(np.max(np.abs(eval_interpolant(InterpolantKind.MJI, gf, x) - f(x))))
        assert errors[1] < errors[0]
        assert errors[-1] <= 1e-8

    def test_first_kind_convergence(self, left_params):
        """Weighted smooth function: monotone decay down to the round-off floor."""
        x = np.linspace(0.0, left_params.b, 101)

        def u(t):
            return t ** left_params.left_exponent * np.exp(-np.sqrt(t))

        errors = []
        for N in (10, 20, 30, 40, 50):
            gf = MuntzNodeSet.build(left_params, N).sample(u)
            errors.append(np.max(np.abs(eval_interpolant(InterpolantKind.NJMI1, gf, x) - u(x))))
        for previous, current in zip(errors, errors[1:]):
            assert current < previous or current <= 1e-11
        assert errors[-1] <= 1e-9

    def test_outside_interval(self, small_nodeset):
        gf = small_nodeset.sample(np.sin)
        with pytest.raises(DomainError):
            eval_interpolant(InterpolantKind.MJI, gf, 10.5)
