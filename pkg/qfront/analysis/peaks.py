import logging
from typing import Iterable, List, Optional, Tuple

import numpy as np

from qfront.asymptotics.factory import get_solution
from qfront.asymptotics.models import AsymptoticModel
from qfront.config import C1, LoadSpec
from qfront.enums import LoadKind, Quantity
from qfront.errors import CoverageError, ParameterError
from qfront.structures import PeakSample, ProbeSeries

logger = logging.getLogger(__name__)

WINDOW_BEFORE = 3.0
WINDOW_AFTER = 6.0


def window_width(load: LoadSpec, lam: float, t_arr: float) -> float:
    '''
    Front width at arrival used to size the peak window: the larger of the
    dispersive t^{1/3} scale and the viscous or pulse-length t^{1/2} scale.
    '''
    t_eff = t_arr - load.launch_delay
    if t_eff <= 0:
        raise ParameterError(f'arrival time {t_arr:g} precedes the launch at {load.launch_delay:g}')
    dispersive = float(np.cbrt(C1 * t_eff / 2.0))
    spread = lam * t_eff + (load.sigma ** 2 if load.kind is LoadKind.GAUSS else 0.0)
    return max(dispersive, float(np.sqrt(0.75 * spread)))


def front_window(radius: float, c1: float, launch_delay: float, width: float) -> Tuple[float, float]:
    '''[t_arr - 3 w / c1, t_arr + 6 w / c1] around the arrival t_arr = r / c1 + delay.'''
    t_arr = radius / c1 + launch_delay
    return t_arr - WINDOW_BEFORE * width / c1, t_arr + WINDOW_AFTER * width / c1


def _windowed_peak(times: np.ndarray, values: np.ndarray, coordinate: float, lo: float, hi: float) -> PeakSample:
    inside = (times >= lo) & (times <= hi)
    if not inside.any():
        raise CoverageError(f'no samples inside the window [{lo:.4f}, {hi:.4f}]')
    window_times = times[inside]
    magnitude = np.abs(np.nan_to_num(values[inside], nan=0.0))
    index = int(np.argmax(magnitude))
    return PeakSample(coordinate, float(magnitude[index]), float(window_times[index]))


def extract_front_peak(
    series: ProbeSeries,
    quantity: Quantity,
    c1: float = C1,
    launch_delay: float = 0.0,
    width: Optional[float] = None,
) -> PeakSample:
    '''
    Maximum |value| over the quasi-front window of the probe. `width` defaults
    to the dispersive scale (c1 (t_arr - delay) / 2)^{1/3}.
    '''
    radius = series.radius
    t_arr = radius / c1 + launch_delay
    if width is None:
        width = float(np.cbrt(c1 * max(t_arr - launch_delay, 0.0) / 2.0))
    lo, hi = front_window(radius, c1, launch_delay, width)
    lo = max(lo, float(series.times[0]))
    needed = t_arr + WINDOW_BEFORE * width / c1
    if series.times[-1] < needed:
        raise CoverageError(
            f'probe {series.node} ends at t={series.times[-1]:.4f}; the front window needs t >= {needed:.4f}'
        )
    peak = _windowed_peak(series.times, series.values(quantity), radius, lo, hi)
    logger.debug('[t=%.2f] %s peak of probe %s: %.6e', peak.peak_time, quantity.value, series.node, peak.peak_value)
    return peak


def model_peak_samples(
    model: AsymptoticModel,
    quantity: Quantity,
    radii: Iterable[float],
    load: LoadSpec,
    tau: float = 0.01,
) -> List[PeakSample]:
    '''Windowed peaks of the model itself on the probe radii, sampled every tau.'''
    solution = get_solution(model)
    samples = []
    for radius in radii:
        t_arr = radius / C1 + load.launch_delay
        width = window_width(load, model.lam, t_arr)
        lo, hi = front_window(radius, C1, load.launch_delay, width)
        lo = max(lo, load.launch_delay + tau)
        times = np.arange(lo, hi + 0.5 * tau, tau)
        values = solution.evaluate(quantity, radius, times)
        samples.append(_windowed_peak(times, values, float(radius), lo, hi))
    return samples
