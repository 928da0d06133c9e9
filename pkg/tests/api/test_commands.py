"""
Tests for the command handlers behind the CLI.
"""

import os
import sys
from unittest.mock import patch

import numpy as np
import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from api.commands import COMMAND_HANDLERS, dispatch
from config.settings import Settings
from exceptions import ConfigurationError
from quadrature import MuntzBasisParams, mapped_rule
from validators import COMMANDS, RunConfig

LEFT = {'alpha': -0.5, 'beta': 2.0, 'sigma': 0.5, 'eta': 0.0, 'b': 10.0}


def column(table, name):
    index = table.columns.index(name)
    return [row[index] for row in table.rows]


@pytest.fixture
def settings():
    s = Settings()
    s.threads = 1
    return s


class TestDispatch:
    """Routing and per-command tables."""

    def test_every_command_has_a_handler(self):
        assert sorted(COMMAND_HANDLERS) == COMMANDS

    def test_unknown_command(self, settings):
        with pytest.raises(ConfigurationError, match="Unknown command"):
            dispatch(RunConfig('integrate'), settings)

    def test_quad(self, settings):
        table = dispatch(RunConfig('quad', {**LEFT, 'n': 4}), settings)
        rule = mapped_rule(4, MuntzBasisParams.create(-0.5, 2.0, sigma=0.5, b=10.0))
        assert table.columns == ['n', 'variant', 'j', 'node', 'weight']
        np.testing.assert_array_equal(column(table, 'node'), rule.nodes)
        np.testing.assert_array_equal(column(table, 'weight'), rule.weights)

    def test_quad_sweep(self, settings):
        table = dispatch(RunConfig('quad', {'variant': 1, **LEFT, 'mu': 0.5}, sweep=[1, 2]), settings)
        assert column(table, 'n') == [1, 1, 2, 2, 2]

    def test_basis(self, settings):
        table = dispatch(RunConfig('basis', {**LEFT, 'mu': 0.5, 'kind': 'jmf1', 'index': 2, 'points': 5}),
                         settings)
        assert column(table, 'x') == [0.0, 2.5, 5.0, 7.5, 10.0]
        assert all(np.isfinite(column(table, 'value')))

    def test_cardinal_function(self, settings):
        table = dispatch(RunConfig('basis', {**LEFT, 'kind': 'h', 'index': 0, 'n': 6, 'points': 11}), settings)
        assert len(table.rows) == 11

    def test_diffmat_matrix(self, settings):
        table = dispatch(RunConfig('diffmat', {**LEFT, 'order': 0.5, 'n': 4}), settings)
        assert len(table.rows) == 25
        assert table.metadata['cond'] > 1.0

    def test_diffmat_summary(self, settings):
        table = dispatch(RunConfig('diffmat', {**LEFT, 'order': 0.5}, sweep=[10, 20]), settings)
        assert column(table, 'N') == [10, 20]
        assert column(table, 'approach') == ['stable', 'stable']

    def test_interp_sweep(self, settings):
        config = RunConfig('interp', {**LEFT, 'kind': 'mji', 'function': 'sqrt(x)*sin(sqrt(x))'}, sweep=[10, 30])
        errors = column(dispatch(config, settings), 'e_inf')
        assert errors[1] < errors[0]

    def test_solve_linear_zero_rhs(self, settings):
        config = RunConfig('solve-linear', {**LEFT, 'orders': [0.5], 'coefficients': ['1', '1'], 'rhs': '0',
                                            'n': 8, 'points': 5})
        table = dispatch(config, settings)
        assert table.columns == ['x', 'y']
        assert column(table, 'y') == [0.0] * 5

    def test_solve_nonlinear_uses_symbolic_partials(self, settings):
        config = RunConfig('solve-nonlinear', {
            'alpha': -0.5, 'beta': 1.0, 'sigma': 1.0, 'eta': -1.0, 'b': 2.0, 'orders': [1.0],
            'rhs': '2*x*y + x*(1 - y**2)',
            'exact': '1 + sqrt(2)*tanh(sqrt(2)*x + log((sqrt(2) - 1)/(sqrt(2) + 1))/2)',
        }, sweep=[30])
        with patch('solvers.newton.fd_jacobian', side_effect=AssertionError('differenced Jacobian used')):
            table = dispatch(config, settings)
        assert column(table, 'e_inf')[0] <= 1e-6
        assert column(table, 'iterations')[0] >= 1

    def test_missing_parameter(self, settings):
        with pytest.raises(ConfigurationError, match="needs parameters"):
            dispatch(RunConfig('solve-linear', {**LEFT, 'orders': [0.5]}), settings)

    def test_paper_repro(self, settings):
        table = dispatch(RunConfig('paper-repro', {'experiment': 'ex3'}, sweep=[10]), settings)
        assert table.columns == ['N', 'e_inf', 'cond', 'rhs_mismatch']
        assert table.metadata['experiment'] == 'ex3'
