import logging
import math
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np

from qfront.asymptotics.factory import get_solution
from qfront.asymptotics.models import AsymptoticModel
from qfront.asymptotics.regime import regime_select
from qfront.config import C1, LoadSpec, SimParams
from qfront.enums import ModelFamily, Quantity
from qfront.helpers import write_manifest, write_rows_csv
from qfront.structures import ProbeSeries
from qfront.system import run_simulation

logger = logging.getLogger(__name__)

FIGURE_PROBE = (25, 25)
ALL_PANELS = (Quantity.DISPLACEMENT, Quantity.VELOCITY, Quantity.ACCELERATION)


@dataclass(frozen=True)
class FigurePreset:
    name: str
    load: LoadSpec
    lam: float
    t_end: float
    panels: Tuple[Quantity, ...] = ALL_PANELS
    overlays: Dict[Quantity, Tuple[ModelFamily, ...]] = field(default_factory=dict)
    '''Explicit overlay families; panels not listed take the recommended model.'''


FIGURES = {
    'fig2': FigurePreset('fig2', LoadSpec.step(), 0.0, 45.0),
    'fig3': FigurePreset('fig3', LoadSpec.step(), 0.1, 45.0),
    'fig4': FigurePreset(
        'fig4', LoadSpec.step(), 0.02, 45.0,
        panels=(Quantity.VELOCITY, Quantity.ACCELERATION),
        overlays={
            Quantity.VELOCITY: (ModelFamily.STEP_ELASTIC, ModelFamily.STEP_VISCOUS),
            Quantity.ACCELERATION: (ModelFamily.STEP_ELASTIC, ModelFamily.STEP_VISCOUS),
        },
    ),
    'fig5': FigurePreset('fig5', LoadSpec.gauss(0.1), 0.0, 45.0),
    'fig6': FigurePreset('fig6', LoadSpec.gauss(5.0), 0.1, 75.0),
}


def overlay_models(preset: FigurePreset, quantity: Quantity) -> List[AsymptoticModel]:
    families = preset.overlays.get(quantity)
    if families is None:
        model = regime_select(preset.load.sigma, preset.lam, quantity, preset.load)
        return [model] if model is not None else []
    return [AsymptoticModel(family, preset.lam, preset.load.sigma) for family in families]


def evaluate_on_times(model: AsymptoticModel, quantity: Quantity, radius: float, times: np.ndarray) -> np.ndarray:
    '''Model curve on the lattice time grid; NaN where the model is undefined (t <= 0).'''
    values = np.full(times.shape, np.nan)
    live = times > 0
    values[live] = get_solution(model).evaluate(quantity, radius, times[live])
    return values


def arrival_time(preset: FigurePreset, node=FIGURE_PROBE) -> float:
    return math.hypot(*node) / C1 + preset.load.launch_delay


def write_figure(preset: FigurePreset, directory: Union[Path, str], series: Optional[ProbeSeries] = None,
                 workers: Optional[int] = None) -> List[str]:
    '''
    Lattice curve, closed-form overlays and the arrival marker for every panel
    of one figure, all at the probe n = m = 25. Returns the artifact names.
    '''
    directory = Path(directory)
    started = time.perf_counter()
    params = SimParams(lam=preset.lam, load=preset.load, t_end=preset.t_end, probes=[FIGURE_PROBE], workers=workers)
    if series is None:
        series = run_simulation(params)[0]

    artifacts = []
    for quantity in preset.panels:
        name = f'{preset.name}_{quantity.value}_fd.csv'
        write_rows_csv(directory / name, ('t', 'value'), [series.times, series.values(quantity)])
        artifacts.append(name)
        for model in overlay_models(preset, quantity):
            name = f'{preset.name}_{quantity.value}_{model.family.value}.csv'
            curve = evaluate_on_times(model, quantity, series.radius, series.times)
            write_rows_csv(directory / name, ('t', 'value'), [series.times, curve])
            artifacts.append(name)
            logger.info('[%s] %s overlay %s written', preset.name, quantity.value, model)

    name = f'{preset.name}_arrival.csv'
    write_rows_csv(directory / name, ('t_arrival',), [[arrival_time(preset)]])
    artifacts.append(name)

    write_manifest(directory, f'figures {preset.name}', params.to_dict(), artifacts,
                   time.perf_counter() - started, params.tau, params.half_width)
    return artifacts
