"""
Command handlers: one function per CLI command, each returning a ResultTable.
"""

from __future__ import annotations

import logging
from typing import Callable, Dict, List

import numpy as np

from config.settings import Settings
from diffmat import condition_number
from exceptions import ConfigurationError
from experiments import ExperimentFactory
from experiments.derivatives import SUMMARY_COLUMNS, build_matrix, summarize
from interpolation import InterpolantKind, MuntzNodeSet, eval_interpolant, eval_lmf, eval_h_sigma
from muntz import JmfKind, JmfSpec, Side, eval_jmf
from quadrature import gjmqr_weights, mapped_rule
from solvers import (
    BurgersProblem,
    LinearFdeProblem,
    NonlinearFdeProblem,
    PdeProblem,
    dense_profile,
    solve_burgers,
    solve_linear_fde,
    solve_nonlinear_fde,
    solve_pde_mol,
)
from utils.expressions import compile_expression
from utils.parallel import map_ordered
from validators import RunConfig

from .writers import ResultTable

logger = logging.getLogger(__name__)

Handler = Callable[[RunConfig, Settings], ResultTable]


def _require(config: RunConfig, *keys: str) -> None:
    missing = [k for k in keys if k not in config.params]
    if missing:
        raise ConfigurationError(f"{config.command} needs parameters {missing}")


def _grid(config: RunConfig, b: float) -> np.ndarray:
    return np.linspace(0.0, b, int(config.params.get('points', 101)))


def _sizes(config: RunConfig, default: int) -> List[int]:
    return list(config.sweep) if config.sweep else [int(config.params.get('n', default))]


def _expression(value, variables=('x',)):
    return compile_expression(str(value), variables)


def run_quad(config: RunConfig, settings: Settings) -> ResultTable:
    params = config.basis()
    variant = int(config.params.get('variant', 0))
    table = ResultTable('quad', ['n', 'variant', 'j', 'node', 'weight'])
    for n in _sizes(config, 8):
        rule = mapped_rule(n, params)
        if variant:
            rule = gjmqr_weights(rule, variant)
        table.extend((n, variant, j, x, w) for j, (x, w) in enumerate(zip(rule.nodes, rule.weights)))
    table.metadata['params'] = params.to_dict()
    return table


def run_basis(config: RunConfig, settings: Settings) -> ResultTable:
    """Values of a JMF, an LMF or a cardinal function h_r on a uniform grid."""
    params = config.basis()
    kind = config.params.get('kind', 'jmf1')
    index = int(config.params.get('index', 0))
    limit = bool(config.params.get('limit', True))
    grid = _grid(config, params.b)
    if kind in ('jmf1', 'jmf2'):
        spec = JmfSpec(JmfKind.FIRST if kind == 'jmf1' else JmfKind.SECOND, index, params)
        values = eval_jmf(spec, grid, limit=limit)
    else:
        ns = MuntzNodeSet.build(params, int(config.params.get('n', 10)))
        if kind == 'h':
            values = eval_h_sigma(ns, index, grid)
        else:
            values = eval_lmf(ns, index, 1 if kind == 'lmf1' else 2, grid, limit=limit)
    table = ResultTable('basis', ['x', 'value'])
    table.extend(zip(grid, np.asarray(values, dtype=float)))
    table.metadata.update({'kind': kind, 'index': index, 'params': params.to_dict()})
    return table


def run_diffmat(config: RunConfig, settings: Settings) -> ResultTable:
    """Matrix entries, or the conditioning/accuracy summary over an N sweep."""
    params = config.basis()
    side = Side(config.params.get('side', 'left'))
    approach = config.params.get('approach', 'stable')
    mu = float(config.params.get('order', params.mu or 0.5))
    emit = config.params.get('emit', 'summary' if config.sweep else 'matrix')

    if emit == 'matrix':
        ns = MuntzNodeSet.build(params.with_changes(mu=mu), int(config.params.get('n', 10)))
        D = build_matrix(side, ns, mu, approach)
        table = ResultTable('diffmat', ['row', 'col', 'value'])
        table.extend((i, j, D[i, j]) for i in range(D.shape[0]) for j in range(D.shape[1]))
        table.metadata['cond'] = condition_number(D) if np.all(np.isfinite(D)) else None
        return table

    degree = int(config.params.get('degree', 10))
    summaries = map_ordered(lambda N: summarize(side, params, N, mu, approach, degree),
                            _sizes(config, 10), settings.threads)
    table = ResultTable('diffmat', list(SUMMARY_COLUMNS))
    table.extend(s.row() for s in summaries)
    return table


def run_interp(config: RunConfig, settings: Settings) -> ResultTable:
    _require(config, 'function')
    params = config.basis()
    kind = InterpolantKind(config.params.get('kind', 'njmi1'))
    f = _expression(config.params['function'])
    grid = _grid(config, params.b)

    def evaluate(N: int):
        gf = MuntzNodeSet.build(params, N).sample(f)
        return np.asarray(eval_interpolant(kind, gf, grid, limit=True), dtype=float)

    exact = f(grid)
    if config.sweep:
        table = ResultTable('interp', ['N', 'e_inf'])
        values = map_ordered(evaluate, config.sweep, settings.threads)
        table.extend((N, float(np.nanmax(np.abs(v - exact)))) for N, v in zip(config.sweep, values))
        return table
    values = evaluate(int(config.params.get('n', 10)))
    table = ResultTable('interp', ['x', 'value', 'exact', 'abs_err'])
    table.extend(zip(grid, values, exact, np.abs(values - exact)))
    return table


def _fde_table(command: str, config: RunConfig, settings: Settings, solve) -> ResultTable:
    exact = _expression(config.params['exact']) if 'exact' in config.params else None
    if config.sweep:
        reports = map_ordered(lambda N: solve(N, exact), config.sweep, settings.threads)
        table = ResultTable(command, ['N', 'e_inf', 'cond', 'iterations', 'residual'])
        table.extend((r.solution.nodeset.N, r.e_infty, r.cond, r.iterations, r.residual_norm) for r in reports)
        return table
    report = solve(int(config.params.get('n', 20)), exact)
    params = report.solution.nodeset.params
    grid = _grid(config, params.b)
    values = dense_profile(report, grid)
    columns = ['x', 'y'] + (['exact', 'abs_err'] if exact is not None else [])
    table = ResultTable(command, columns)
    if exact is None:
        table.extend(zip(grid, values))
    else:
        reference = exact(grid)
        table.extend(zip(grid, values, reference, np.abs(values - reference)))
    table.metadata.update(report.to_dict())
    return table


def run_solve_linear(config: RunConfig, settings: Settings) -> ResultTable:
    _require(config, 'orders', 'coefficients', 'rhs')
    orders = config.params['orders']
    coefficients = [_expression(c) for c in config.params['coefficients']]
    rhs = _expression(config.params['rhs'])
    basis = config.basis(mu=max(orders))

    def solve(N, exact):
        return solve_linear_fde(LinearFdeProblem(orders, coefficients, rhs, basis, N), exact)

    return _fde_table('solve-linear', config, settings, solve)


def run_solve_nonlinear(config: RunConfig, settings: Settings) -> ResultTable:
    """
    F is an expression in x, y and d1..d{l-1} (the lower-order derivatives).

    Newton uses the symbolic partial derivatives of F.
    """
    _require(config, 'orders', 'rhs')
    orders = config.params['orders']
    variables = ['x', 'y'] + [f"d{k}" for k in range(1, len(orders))]
    F = _expression(config.params['rhs'], variables)
    partials = [F.derivative(v) for v in variables[1:]]
    basis = config.basis(mu=max(orders))
    cfg = settings.solver

    def solve(N, exact):
        return solve_nonlinear_fde(NonlinearFdeProblem(orders, F, basis, N, partials=partials), exact,
                                   tol=cfg.newton_tol, max_iter=cfg.newton_max_iter, max_halvings=cfg.newton_max_halvings)

    return _fde_table('solve-nonlinear', config, settings, solve)


def _time_table(command: str, report, exact) -> ResultTable:
    columns = ['t', 'x', 'u'] + (['exact', 'abs_err'] if exact is not None else [])
    table = ResultTable(command, columns)
    x = report.nodes
    for t, row in zip(report.times, report.history):
        reference = exact(x, t) if exact is not None else None
        for k, (xi, ui) in enumerate(zip(x, row)):
            if reference is None:
                table.add_row(t, xi, ui)
            else:
                table.add_row(t, xi, ui, reference[k], abs(ui - reference[k]))
    table.metadata.update(report.to_dict())
    return table


def run_solve_pde(config: RunConfig, settings: Settings) -> ResultTable:
    _require(config, 'order', 'source', 'initial')
    xt = ('x', 't')
    mu = float(config.params['order'])
    d = _expression(config.params.get('d', 1.0), xt)
    source = _expression(config.params['source'], xt)
    initial = _expression(config.params['initial'])
    exact = _expression(config.params['exact'], xt) if 'exact' in config.params else None
    problem = PdeProblem(d, source, initial, mu, config.basis(mu=mu), int(config.params.get('n', 10)),
                         float(config.params.get('T', 1.0)),
                         rtol=float(config.params.get('rtol', settings.solver.time_rtol)),
                         atol=float(config.params.get('atol', settings.solver.time_atol)),
                         n_times=int(config.params.get('times', 11)))
    return _time_table('solve-pde', solve_pde_mol(problem, exact), exact)


def run_solve_burgers(config: RunConfig, settings: Settings) -> ResultTable:
    _require(config, 'source', 'initial')
    xt = ('x', 't')
    cfg = settings.burgers
    source = _expression(config.params['source'], xt)
    initial = _expression(config.params['initial'])
    exact = _expression(config.params['exact'], xt) if 'exact' in config.params else None
    problem = BurgersProblem(float(config.params.get('epsilon', cfg.epsilon)), source, initial, config.basis(),
                             int(config.params.get('n', 20)), float(config.params.get('T', 1.0)),
                             dt=float(config.params.get('dt', cfg.dt)), newton_tol=cfg.newton_tol,
                             newton_max_iter=cfg.newton_max_iter, max_halvings=cfg.max_halvings,
                             n_records=int(config.params.get('times', 11)))
    return _time_table('solve-burgers', solve_burgers(problem, exact), exact)


def run_paper_repro(config: RunConfig, settings: Settings) -> ResultTable:
    _require(config, 'experiment')
    overrides = {k: v for k, v in config.params.items() if k != 'experiment'}
    experiment = ExperimentFactory.create(config.params['experiment'], threads=settings.threads, settings=settings)
    return experiment.run(overrides, config.sweep)


COMMAND_HANDLERS: Dict[str, Handler] = {
    'quad': run_quad,
    'basis': run_basis,
    'diffmat': run_diffmat,
    'interp': run_interp,
    'solve-linear': run_solve_linear,
    'solve-nonlinear': run_solve_nonlinear,
    'solve-pde': run_solve_pde,
    'solve-burgers': run_solve_burgers,
    'paper-repro': run_paper_repro,
}


def dispatch(config: RunConfig, settings: Settings) -> ResultTable:
    """
    Run the handler registered for ``config.command``.

    Raises:
        ConfigurationError: For an unknown command
    """
    handler = COMMAND_HANDLERS.get(config.command)
    if handler is None:
        raise ConfigurationError(f"Unknown command: {config.command}. Available: {sorted(COMMAND_HANDLERS)}")
    logger.info("running %s", config.command)
    return handler(config, settings)
