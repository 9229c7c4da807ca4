import numpy as np

from qfront.errors import ParameterError
from qfront.structures import ProbeSeries


def differentiate_series(series: ProbeSeries) -> ProbeSeries:
    '''Central differences for velocity and acceleration; the two endpoints are NaN.'''
    disp = np.asarray(series.disp, dtype=float)
    if disp.size < 3:
        raise ParameterError(f'probe {series.node} has {disp.size} samples; at least 3 are needed')
    tau = series.tau
    vel = np.full_like(disp, np.nan)
    acc = np.full_like(disp, np.nan)
    vel[1:-1] = (disp[2:] - disp[:-2]) / (2.0 * tau)
    acc[1:-1] = (disp[2:] - 2.0 * disp[1:-1] + disp[:-2]) / (tau * tau)
    return ProbeSeries(series.node, series.times, disp, vel, acc)
