import argparse
import json
import logging
import math
import sys
import time
from pathlib import Path
from typing import List, Optional

import numpy as np

from qfront.analysis.compare import compare_curves
from qfront.analysis.peaks import front_window, window_width
from qfront.asymptotics.factory import get_solution
from qfront.asymptotics.models import AsymptoticModel, GAUSS_FAMILIES
from qfront.attenuation import DIAGONALS, run_attenuation
from qfront.batches import parse_config
from qfront.config import C1, DEFAULT_TAU, LoadSpec, SimParams
from qfront.enums import LoadKind, ModelFamily, PhiEvalMethod, Quantity
from qfront.errors import ManifestError, ParameterError, QFrontError
from qfront.figures import FIGURES, write_figure
from qfront.helpers import (
    load_manifest,
    probe_file_name,
    read_probe_csv,
    write_json,
    write_manifest,
    write_probe_csv,
    write_rows_csv,
)
from qfront.system import run_simulation
from qfront.verify import run_verify

logger = logging.getLogger('qfront')

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    '''Invalid flag combination detected after argparse.'''


def _probe(text: str):
    try:
        n, m = (int(v) for v in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'probe must look like n,m (got {text!r})')
    return n, m


def _range(text: str):
    try:
        start, stop, step = (float(v) for v in text.split(':'))
    except ValueError:
        raise argparse.ArgumentTypeError(f'range must look like a:b:dt (got {text!r})')
    if not start < stop or not step > 0:
        raise argparse.ArgumentTypeError(f'range needs a < b and dt > 0 (got {text!r})')
    return start, stop, step


def _window(text: str):
    try:
        lo, hi = (float(v) for v in text.split(':'))
    except ValueError:
        raise argparse.ArgumentTypeError(f'window must look like a:b (got {text!r})')
    if not lo < hi:
        raise argparse.ArgumentTypeError(f'window needs a < b (got {text!r})')
    return lo, hi


def _load_from_flags(load: Optional[str], sigma: Optional[float]) -> LoadSpec:
    if load == LoadKind.GAUSS.value:
        if sigma is None:
            raise UsageError('--load gauss requires --sigma')
        return LoadSpec.gauss(sigma)
    if sigma is not None:
        raise UsageError('--sigma is only valid with --load gauss')
    return LoadSpec.step()


def cmd_simulate(args) -> int:
    if args.config:
        overrides = {'lambda': args.lam, 'load': args.load, 'sigma': args.sigma, 't_end': args.t_end,
                     'tau': args.tau, 'grid_half': args.grid_half,
                     'probes': [list(p) for p in args.probe] if args.probe else None}
        runs = parse_config(args.config, overrides)
    else:
        if args.t_end is None or not args.probe:
            raise UsageError('simulate needs --t-end and at least one --probe (or --config)')
        load = _load_from_flags(args.load or LoadKind.STEP.value, args.sigma)
        runs = [SimParams(lam=0.0 if args.lam is None else args.lam, load=load, t_end=args.t_end,
                          tau=DEFAULT_TAU if args.tau is None else args.tau,
                          half_width=args.grid_half, probes=args.probe)]

    for index, params in enumerate(runs):
        directory = Path(args.out) if len(runs) == 1 else Path(args.out) / f'run_{index:03d}'
        started = time.perf_counter()
        series = run_simulation(params)
        artifacts = [write_probe_csv(directory, s).name for s in series]
        write_manifest(directory, 'simulate', params.to_dict(), artifacts, time.perf_counter() - started,
                       params.tau, params.half_width)
    return EXIT_OK


def _model_from_flags(family: ModelFamily, lam: Optional[float], sigma: Optional[float]) -> AsymptoticModel:
    try:
        return AsymptoticModel(family, lam or 0.0, sigma if family in GAUSS_FAMILIES else None)
    except ParameterError as error:
        raise UsageError(str(error))


def cmd_asymptotic(args) -> int:
    family = ModelFamily(args.model)
    quantity = Quantity(args.quantity)
    if family is ModelFamily.STEP_VISCOUS and quantity is Quantity.DISPLACEMENT:
        raise UsageError('step-viscous has no displacement of its own; the step-load displacement does not '
                         'depend on lambda, use --model step-elastic --quantity disp')
    if family in GAUSS_FAMILIES and args.sigma is None:
        raise UsageError(f'--model {family.value} requires --sigma')
    model = _model_from_flags(family, args.lam, args.sigma)

    start, stop, step = args.t_range
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    times = start + step * np.arange(count)
    started = time.perf_counter()
    values = get_solution(model, PhiEvalMethod(args.phi_method)).evaluate(quantity, args.r, times)

    directory = Path(args.out)
    name = f'{family.value}_{quantity.value}.csv'
    write_rows_csv(directory / name, ('t', 'value'), [times, values])
    parameters = {'model': family.value, 'quantity': quantity.value, 'lambda': model.lam, 'sigma': model.sigma,
                  'r': args.r, 't_range': list(args.t_range), 'phi_method': args.phi_method}
    write_manifest(directory, 'asymptotic', parameters, [name], time.perf_counter() - started)
    return EXIT_OK


def cmd_compare(args) -> int:
    manifest = load_manifest(args.run)
    if manifest.command != 'simulate':
        raise ManifestError(f'{args.run} was written by "{manifest.command}", not by simulate')
    recorded = manifest.parameters
    family = ModelFamily(args.model)
    quantity = Quantity(args.quantity)
    lam = recorded['lambda'] if args.lam is None else args.lam
    sigma = recorded.get('sigma') if args.sigma is None else args.sigma
    model = _model_from_flags(family, lam, sigma)
    load = LoadSpec.gauss(recorded['sigma']) if recorded['load'] == LoadKind.GAUSS.value else LoadSpec.step()

    started = time.perf_counter()
    rows = []
    for node in recorded['probes']:
        series = read_probe_csv(Path(args.run) / probe_file_name(node), node)
        window = args.window
        if window is None:
            t_arr = series.radius / C1 + load.launch_delay
            window = front_window(series.radius, C1, load.launch_delay, window_width(load, recorded['lambda'], t_arr))
        comparison = compare_curves(series, model, quantity, window)
        logger.info('probe %s: relative peak error %.4f, lag %.4f', tuple(node), comparison.relative_peak_error,
                    comparison.lag)
        rows.append({'node': list(node), 'window': list(window), **comparison.to_dict()})

    directory = Path(args.out)
    write_json(directory / 'compare.json', {'run': str(args.run), 'model': str(model), 'quantity': quantity.value,
                                            'probes': rows})
    parameters = {'run': str(args.run), 'run_hash': manifest.content_hash, 'model': family.value,
                  'quantity': quantity.value, 'lambda': model.lam, 'sigma': model.sigma}
    write_manifest(directory, 'compare', parameters, ['compare.json'], time.perf_counter() - started,
                   manifest.tau, manifest.grid_half)
    return EXIT_OK


def cmd_fit_attenuation(args) -> int:
    load = _load_from_flags(args.load, args.sigma)
    started = time.perf_counter()
    report = run_attenuation(args.lam, load, args.diagonals, args.tau)
    directory = Path(args.out)
    write_json(directory / 'attenuation.json', report.to_dict())
    parameters = {'lambda': args.lam, 'load': load.kind.value, 'sigma': load.sigma, 'diagonals': report.diagonals,
                  't_end': report.t_end}
    write_manifest(directory, 'fit-attenuation', parameters, ['attenuation.json'], time.perf_counter() - started,
                   args.tau)
    return EXIT_OK


def cmd_figures(args) -> int:
    names = sorted(FIGURES) if args.which == 'all' else [args.which]
    for name in names:
        write_figure(FIGURES[name], Path(args.out) / name)
    return EXIT_OK


def cmd_verify(args) -> int:
    passed, report = run_verify(fast=args.fast)
    if args.out:
        write_json(args.out, report)
    else:
        json.dump(report, sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write('\n')
    return EXIT_OK if passed else EXIT_FAILED


def _diagonals(text: str):
    try:
        values = [int(v) for v in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(f'diagonals must be comma-separated integers (got {text!r})')
    if len(values) < 3:
        raise argparse.ArgumentTypeError('at least 3 diagonals are needed for a fit')
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='qfront', description='Quasi-front simulator and analyzer for a '
                                     'square lattice with Voigt bonds under a concentrated antiplane load.')
    parser.add_argument('-v', '--verbose', action='store_true', help='debug logging')
    commands = parser.add_subparsers(dest='command', required=True)

    simulate = commands.add_parser('simulate', help='run the lattice scheme and record probes')
    simulate.add_argument('--config', help='JSON batch file; flags override its values')
    simulate.add_argument('--lambda', dest='lam', type=float)
    simulate.add_argument('--load', choices=[k.value for k in LoadKind])
    simulate.add_argument('--sigma', type=float)
    simulate.add_argument('--probe', type=_probe, action='append', default=[], help='node n,m (repeatable)')
    simulate.add_argument('--t-end', type=float)
    simulate.add_argument('--tau', type=float)
    simulate.add_argument('--grid-half', type=int)
    simulate.add_argument('--out', required=True)
    simulate.set_defaults(handler=cmd_simulate)

    asymptotic = commands.add_parser('asymptotic', help='evaluate a closed-form solution')
    asymptotic.add_argument('--model', required=True, choices=[f.value for f in ModelFamily])
    asymptotic.add_argument('--quantity', required=True, choices=[q.value for q in Quantity])
    asymptotic.add_argument('--r', type=float, required=True)
    asymptotic.add_argument('--t-range', type=_range, required=True)
    asymptotic.add_argument('--lambda', dest='lam', type=float)
    asymptotic.add_argument('--sigma', type=float)
    asymptotic.add_argument('--phi-method', choices=[m.value for m in PhiEvalMethod],
                            default=PhiEvalMethod.CLOSED_FORM.value)
    asymptotic.add_argument('--out', required=True)
    asymptotic.set_defaults(handler=cmd_asymptotic)

    compare = commands.add_parser('compare', help='compare a recorded simulation with a model')
    compare.add_argument('--run', required=True, help='output directory of simulate')
    compare.add_argument('--model', required=True, choices=[f.value for f in ModelFamily])
    compare.add_argument('--quantity', required=True, choices=[q.value for q in Quantity])
    compare.add_argument('--lambda', dest='lam', type=float)
    compare.add_argument('--sigma', type=float)
    compare.add_argument('--window', type=_window)
    compare.add_argument('--out', required=True)
    compare.set_defaults(handler=cmd_compare)

    fit = commands.add_parser('fit-attenuation', help='fit peak and width exponents on diagonal probes')
    fit.add_argument('--lambda', dest='lam', type=float, default=0.0)
    fit.add_argument('--load', choices=[k.value for k in LoadKind], default=LoadKind.STEP.value)
    fit.add_argument('--sigma', type=float)
    fit.add_argument('--diagonals', type=_diagonals, default=list(DIAGONALS))
    fit.add_argument('--tau', type=float, default=DEFAULT_TAU)
    fit.add_argument('--out', required=True)
    fit.set_defaults(handler=cmd_fit_attenuation)

    figures = commands.add_parser('figures', help='write lattice and closed-form curves per figure')
    figures.add_argument('which', choices=sorted(FIGURES) + ['all'])
    figures.add_argument('--out', required=True)
    figures.set_defaults(handler=cmd_figures)

    verify = commands.add_parser('verify', help='run the acceptance suite')
    verify.add_argument('--fast', action='store_true', help='shrink probe sets and skip the long criteria')
    verify.add_argument('--out', help='report path (stdout when omitted)')
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit:
        return exit.code if isinstance(exit.code, int) else EXIT_USAGE
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s', stream=sys.stderr)
    try:
        return args.handler(args)
    except UsageError as error:
        parser.print_usage(sys.stderr)
        print(f'{parser.prog} {args.command}: error: {error}', file=sys.stderr)
        return EXIT_USAGE
    except QFrontError as error:
        print(f'error: {error}', file=sys.stderr)
        return EXIT_USAGE
