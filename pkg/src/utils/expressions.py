"""
Expression compilation for command-line problem definitions.

Expressions are written in the variables a command allows (x; x and t;
x, y, d1, ...) and compiled with sympy to numpy callables.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from tokenize import TokenError
from typing import Callable, Dict, Sequence

import numpy as np
import sympy as sp
from sympy.core.function import AppliedUndef
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from exceptions import ConfigurationError, EvaluationError

logger = logging.getLogger(__name__)

TRANSFORMATIONS = standard_transformations + (convert_xor,)


@dataclass(frozen=True)
class CompiledExpression:
    """A parsed expression together with its numpy callable."""

    text: str
    variables: tuple
    expr: sp.Expr
    fn: Callable

    def __call__(self, *args):
        try:
            values = np.asarray(self.fn(*args), dtype=float)
        except (NameError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise EvaluationError(f"cannot evaluate {self.text!r}: {exc}") from exc
        shape = np.broadcast_shapes(*(np.shape(a) for a in args)) if args else ()
        return np.broadcast_to(values, shape).astype(float)

    def derivative(self, variable: str) -> "CompiledExpression":
        symbol = sp.Symbol(variable)
        expr = sp.diff(self.expr, symbol)
        return CompiledExpression(f"d({self.text})/d{variable}", self.variables, expr,
                                  sp.lambdify([sp.Symbol(v) for v in self.variables], expr, 'numpy'))


def parse(text: str, variables: Sequence[str]) -> sp.Expr:
    """
    Parse ``text`` allowing only the given free variables.

    Raises:
        ConfigurationError: If the text does not parse or uses other symbols
    """
    symbols: Dict[str, sp.Symbol] = {name: sp.Symbol(name) for name in variables}
    try:
        expr = parse_expr(str(text), local_dict=symbols, transformations=TRANSFORMATIONS)
    except (SyntaxError, TypeError, sp.SympifyError, TokenError) as exc:
        raise ConfigurationError(f"cannot parse expression {text!r}: {exc}") from exc
    unknown = {str(s) for s in expr.free_symbols} - set(variables)
    if unknown:
        raise ConfigurationError(
            f"expression {text!r} uses unknown symbols {sorted(unknown)}; allowed: {list(variables)}")
    undefined = sorted({str(f.func) for f in expr.atoms(AppliedUndef)})
    if undefined:
        raise ConfigurationError(f"expression {text!r} calls undefined functions {undefined}")
    return expr


def compile_expression(text: str, variables: Sequence[str] = ('x',)) -> CompiledExpression:
    """Parse and lambdify an expression."""
    variables = tuple(variables)
    expr = parse(text, variables)
    fn = sp.lambdify([sp.Symbol(v) for v in variables], expr, 'numpy')
    logger.debug("compiled %r in %s", text, variables)
    return CompiledExpression(str(text), variables, expr, fn)


def manufactured_forcing(exact: str, build: Callable[[sp.Expr, Dict[str, sp.Symbol]], sp.Expr],
                         variables: Sequence[str] = ('x',)) -> CompiledExpression:
    """
    Forcing term implied by an exact solution.

    ``build`` receives the parsed solution and the symbol table and returns
    the operator applied to it.
    """
    variables = tuple(variables)
    solution = parse(exact, variables)
    symbols = {name: sp.Symbol(name) for name in variables}
    forcing = build(solution, symbols)
    fn = sp.lambdify([symbols[v] for v in variables], forcing, 'numpy')
    return CompiledExpression(str(forcing), variables, forcing, fn)

