from typing import Tuple

import numpy as np

from qfront.asymptotics.factory import get_solution
from qfront.asymptotics.models import AsymptoticModel
from qfront.enums import Quantity
from qfront.errors import CoverageError, FrontError
from qfront.structures import CurveComparison, PeakSample, ProbeSeries


def compare_curves(
    fd: ProbeSeries,
    model: AsymptoticModel,
    quantity: Quantity,
    window: Tuple[float, float],
) -> CurveComparison:
    '''Relative peak error |fd - model| / |model| and lag t_fd - t_model over a time window.'''
    lo, hi = window
    inside = (fd.times >= lo) & (fd.times <= hi)
    if not hi > lo or not inside.any():
        raise CoverageError(f'empty comparison window [{lo:g}, {hi:g}] for probe {fd.node}')
    times = fd.times[inside]
    # step families are only defined for t > 0
    times = times[times > 0]
    if times.size == 0:
        raise CoverageError(f'comparison window [{lo:g}, {hi:g}] has no positive times')

    fd_values = np.abs(np.nan_to_num(fd.values(quantity)[inside][-times.size:], nan=0.0))
    model_values = np.abs(np.asarray(get_solution(model).evaluate(quantity, fd.radius, times)))
    i_fd, i_model = int(np.argmax(fd_values)), int(np.argmax(model_values))
    fd_peak = PeakSample(fd.radius, float(fd_values[i_fd]), float(times[i_fd]))
    model_peak = PeakSample(fd.radius, float(model_values[i_model]), float(times[i_model]))
    if not model_peak.peak_value > 0:
        raise FrontError(f'{model} vanishes over the window [{lo:g}, {hi:g}]')
    error = abs(fd_peak.peak_value - model_peak.peak_value) / model_peak.peak_value
    return CurveComparison(error, fd_peak.peak_time - model_peak.peak_time, fd_peak, model_peak)
