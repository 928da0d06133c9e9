"""
Command-line interface of muntz-spectral.

Every command takes its parameters from flags, from a JSON/YAML run
configuration (--config), or both; flags win.  Results are written as CSV
or JSON to --output (stdout by default).
"""

import argparse
import logging
import re
import sys
from typing import Any, Dict, List, Optional

import yaml

from api.commands import dispatch
from api.writers import FORMATS, write_table
from config.experiments import EXPERIMENTS
from config.settings import Settings, load_settings
from exceptions import ConfigurationError, MuntzSpectralError, ParameterError
from validators import RunConfig, RunConfigValidator, merge_overrides
from validators.run_config import BASIS_KEYS, COMMAND_PARAMS

logger = logging.getLogger(__name__)

PROG = 'muntz-spectral'
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3


class UsageError(ConfigurationError):
    """Raised for malformed command lines."""


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def configure_logging(level: str = 'WARNING', fmt: str = '[%(levelname)s] %(name)s: %(message)s') -> None:
    """Attach one stderr handler to the root logger."""
    root = logging.getLogger()
    for handler in list(root.handlers):
        if getattr(handler, '_muntz_spectral', False):
            root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(fmt))
    handler._muntz_spectral = True
    root.addHandler(handler)
    root.setLevel(getattr(logging, str(level).upper(), logging.WARNING))


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='JSON or YAML run configuration')
    common.add_argument('--output', '-o', help='output file (default: stdout)')
    common.add_argument('--format', choices=FORMATS, help='output format (default: csv)')
    common.add_argument('--sweep', type=int, nargs='+', help='N values to sweep')
    common.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='logging level')
    for key in BASIS_KEYS:
        common.add_argument(f'--{key}', type=float)
    common.add_argument('--n', '-N', type=int, help='degree N (N + 1 nodes)')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = CliParser(prog=PROG, description='Muntz pseudo-spectral tools for Erdelyi-Kober fractional calculus')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    quad = sub.add_parser('quad', parents=[common], help='mapped Gauss-Jacobi-Muntz nodes and weights')
    quad.add_argument('--variant', type=int, choices=[0, 1, 2], help='0 base rule, 1/2 GJMQR reweighting')

    basis = sub.add_parser('basis', parents=[common], help='evaluate JMF/LMF/h functions on a grid')
    basis.add_argument('--kind', choices=['jmf1', 'jmf2', 'lmf1', 'lmf2', 'h'])
    basis.add_argument('--index', type=int)
    basis.add_argument('--points', type=int)
    basis.add_argument('--no-limit', dest='limit', action='store_false', default=None,
                       help='raise at singular endpoints instead of returning inf')

    diffmat = sub.add_parser('diffmat', parents=[common], help='EK differentiation matrices and their conditioning')
    diffmat.add_argument('--side', choices=['left', 'right'])
    diffmat.add_argument('--approach', choices=['stable', 'direct'])
    diffmat.add_argument('--order', type=float, help='fractional order mu')
    diffmat.add_argument('--degree', type=int, help='JMF degree used for the reproduction error')
    diffmat.add_argument('--emit', choices=['matrix', 'summary'])

    interp = sub.add_parser('interp', parents=[common], help='interpolate an expression in x')
    interp.add_argument('--kind', choices=['mji', 'njmi1', 'njmi2'])
    interp.add_argument('--function')
    interp.add_argument('--points', type=int)

    linear = sub.add_parser('solve-linear', parents=[common], help='linear multi-term FDE')
    linear.add_argument('--orders', type=float, nargs='+')
    linear.add_argument('--coefficients', nargs='+', help='c_0 c_1 ... c_l as expressions in x')
    linear.add_argument('--rhs')
    linear.add_argument('--exact')
    linear.add_argument('--points', type=int)

    nonlinear = sub.add_parser('solve-nonlinear', parents=[common], help='nonlinear FDE by Newton')
    nonlinear.add_argument('--orders', type=float, nargs='+')
    nonlinear.add_argument('--rhs', help='F(x, y, d1, ...) as an expression')
    nonlinear.add_argument('--exact')
    nonlinear.add_argument('--points', type=int)

    pde = sub.add_parser('solve-pde', parents=[common], help='u_t = d D^mu u + s by the method of lines')
    pde.add_argument('--order', type=float)
    pde.add_argument('--d')
    pde.add_argument('--source')
    pde.add_argument('--initial')
    pde.add_argument('--exact')
    pde.add_argument('--T', type=float)
    pde.add_argument('--times', type=int)
    pde.add_argument('--rtol', type=float)
    pde.add_argument('--atol', type=float)

    burgers = sub.add_parser('solve-burgers', parents=[common], help="Burgers' equation")
    burgers.add_argument('--epsilon', type=float)
    burgers.add_argument('--source')
    burgers.add_argument('--initial')
    burgers.add_argument('--exact')
    burgers.add_argument('--T', type=float)
    burgers.add_argument('--dt', type=float)
    burgers.add_argument('--times', type=int)

    repro = sub.add_parser('paper-repro', parents=[common], help='reproduce a published experiment')
    repro.add_argument('experiment', nargs='?', choices=[e['id'] for e in EXPERIMENTS])
    repro.add_argument('--set', dest='overrides', action='append', default=[], metavar='KEY=VALUE',
                       help='override a preset parameter (YAML value syntax)')
    return parser


def _parse_overrides(items: List[str]) -> Dict[str, Any]:
    overrides = {}
    for item in items:
        match = re.fullmatch(r'([A-Za-z_]\w*)=(.*)', item)
        if not match:
            raise UsageError(f"--set expects KEY=VALUE, got {item!r}")
        overrides[match.group(1)] = yaml.safe_load(match.group(2))
    return overrides


def namespace_to_document(args: argparse.Namespace) -> Dict[str, Any]:
    """Flags as a partial run-configuration document (unset flags omitted)."""
    allowed = set(COMMAND_PARAMS[args.command])
    if args.command != 'paper-repro':
        allowed |= set(BASIS_KEYS)
    values = vars(args)
    params = {key: values[key] for key in allowed if values.get(key) is not None}
    if args.command == 'paper-repro':
        params.update(_parse_overrides(args.overrides))
        if args.experiment is not None:
            params['experiment'] = args.experiment
        if args.n is not None:
            params['N'] = args.n
    return {
        'command': args.command,
        'params': params,
        'sweep': args.sweep,
        'output': {'path': args.output, 'format': args.format},
    }


def build_config(args: argparse.Namespace, default_format: str = 'csv') -> RunConfig:
    """
    Merge the optional config file with the flags and validate.

    Raises:
        ConfigurationError: If the file names a different command or the result is invalid
    """
    validator = RunConfigValidator()
    overrides = namespace_to_document(args)
    document: Dict[str, Any] = {'command': args.command}
    if args.config:
        document = validator.load_file(args.config) or {}
        if not isinstance(document, dict):
            raise ConfigurationError(f"{args.config} must contain a mapping")
        if document.get('command', args.command) != args.command:
            raise ConfigurationError(
                f"{args.config} is for command '{document['command']}', not '{args.command}'")
    document.setdefault('output', {}).setdefault('format', default_format)
    return validator.parse(merge_overrides(document, overrides))


def run(config: RunConfig, settings: Optional[Settings] = None) -> int:
    """Execute one validated run configuration and write its table."""
    settings = settings or load_settings()
    table = dispatch(config, settings)
    table.metadata.setdefault('command', config.command)
    write_table(table, config.output_path, config.output_format, settings.output.precision)
    return EXIT_OK


def exit_code(exc: BaseException) -> int:
    if isinstance(exc, (ParameterError, ConfigurationError)):
        return EXIT_USAGE
    return EXIT_NUMERICAL


def category(exc: BaseException) -> str:
    name = type(exc).__name__
    if name.endswith('Error') and len(name) > len('Error'):
        name = name[:-len('Error')]
    return re.sub(r'(?<!^)(?=[A-Z])', ' ', name).lower()


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        settings = load_settings()
        configure_logging(args.log_level or settings.logging.level, settings.logging.format)
        config = build_config(args, settings.output.format)
        return run(config, settings)
    except MuntzSpectralError as exc:
        logger.debug("command failed", exc_info=True)
        print(f"{PROG}: {category(exc)}: {exc}", file=sys.stderr)
        return exit_code(exc)


if __name__ == '__main__':
    sys.exit(main())
