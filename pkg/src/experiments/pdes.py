"""
Time-dependent reproductions: the fractional PDE and Burgers' equation.
"""

from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional

import numpy as np
import sympy as sp

from api.writers import ResultTable
from muntz import ek_power_factor
from solvers import BurgersProblem, PdeProblem, SolverReport, solve_burgers, solve_pde_mol
from utils.expressions import compile_expression, manufactured_forcing
from utils.parallel import map_ordered

from .base import BaseExperiment

logger = logging.getLogger(__name__)

BURGERS_SOLUTION = "(1 - sqrt(x))**(3/2) * x**(3/2) * cos(sqrt(x)) * cos(t**2)"
PROFILE_COLUMNS = ['t', 'x', 'u', 'exact', 'abs_err']


def profile_rows(report: SolverReport, exact, n_times: int) -> List[tuple]:
    """Nodal rows at about ``n_times`` of the report's recorded times."""
    picks = np.unique(np.linspace(0, len(report.times) - 1, n_times).round().astype(int))
    x = report.nodes
    rows = []
    for k in picks:
        t = float(report.times[k])
        reference = np.broadcast_to(exact(x, t), x.shape)
        rows.extend((t, xi, ui, ei, abs(ui - ei)) for xi, ui, ei in zip(x, report.history[k], reference))
    return rows


def burgers_forcing(epsilon: float):
    """s = u_t - eps u_xx + u u_x for the manufactured Burgers solution."""
    def operator(u, symbols):
        x, t = symbols['x'], symbols['t']
        return sp.diff(u, t) - epsilon * sp.diff(u, x, 2) + u * sp.diff(u, x)
    return manufactured_forcing(BURGERS_SOLUTION, operator, ('x', 't'))


class FractionalPdeExperiment(BaseExperiment):
    """u_t = d D^mu u + s with u = x^(sigma nu) sin(t^2) and d = -1/(1 + x + t)."""

    experiment_id = 'pde'
    supports_sweep = False

    def execute(self, params: Dict[str, Any], sweep: Optional[List[int]]) -> ResultTable:
        sigma, nu, eta, mu = params['sigma'], params['nu'], params['eta'], params['mu']
        factor = ek_power_factor(nu, mu, eta)

        def d(x, t):
            return -1.0 / (1.0 + x + t)

        def exact(x, t):
            return x ** (sigma * nu) * np.sin(t ** 2)

        def source(x, t):
            return x ** (sigma * nu) * (2.0 * t * np.cos(t ** 2) - d(x, t) * factor * np.sin(t ** 2))

        problem = PdeProblem(d, source, lambda x: exact(x, 0.0), mu, self.basis(params), int(params['N']),
                             params['T'], rtol=self.settings.solver.time_rtol, atol=self.settings.solver.time_atol,
                             n_times=int(params['times']))
        report = solve_pde_mol(problem, exact)
        table = ResultTable("paper-repro pde", list(PROFILE_COLUMNS))
        table.extend(profile_rows(report, exact, int(params['times'])))
        table.metadata['e_infty'] = report.e_infty
        table.metadata['ek_factor'] = factor
        return table


class BurgersExperiment(BaseExperiment):
    """Manufactured Burgers' solution on [0, 1] x [0, T], one run per sigma."""

    experiment_id = 'burgers'
    supports_sweep = False

    def execute(self, params: Dict[str, Any], sweep: Optional[List[int]]) -> ResultTable:
        cfg = self.settings.burgers
        forcing = burgers_forcing(cfg.epsilon)
        exact = compile_expression(BURGERS_SOLUTION, ('x', 't'))

        def compute(sigma: float) -> SolverReport:
            problem = BurgersProblem(cfg.epsilon, forcing, lambda x: exact(x, 0.0), self.basis(params, sigma=sigma),
                                     int(params['N']), params['T'], dt=cfg.dt, newton_tol=cfg.newton_tol,
                                     newton_max_iter=cfg.newton_max_iter, max_halvings=cfg.max_halvings)
            return solve_burgers(problem, exact)

        sigmas = list(params['sigmas'])
        reports = map_ordered(compute, sigmas, self.threads)
        table = ResultTable("paper-repro burgers", ['sigma'] + PROFILE_COLUMNS)
        errors = {}
        for sigma, report in zip(sigmas, reports):
            table.extend((sigma, *row) for row in profile_rows(report, exact, int(params['times'])))
            errors[str(sigma)] = report.e_infty
            logger.info("Burgers sigma=%g: E_inf %.3e", sigma, report.e_infty)
        table.metadata['e_infty'] = errors
        table.metadata['epsilon'] = cfg.epsilon
        table.metadata['dt'] = cfg.dt
        return table
