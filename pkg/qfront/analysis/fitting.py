from typing import Sequence

import numpy as np

from qfront.errors import DomainError
from qfront.structures import FitReport, PeakSample

ABSCISSAE = ('r', 't')


def fit_power_law(samples: Sequence[PeakSample], abscissa: str = 'r', time_origin: float = 0.0) -> FitReport:
    '''
    Least-squares slope of ln|peak| against ln(abscissa). With abscissa 't' the
    peak times are measured from `time_origin` (the launch of a delayed pulse).
    '''
    if abscissa not in ABSCISSAE:
        raise DomainError(f'abscissa must be one of {ABSCISSAE}, got {abscissa!r}')
    if len(samples) < 3:
        raise DomainError(f'power-law fit needs at least 3 samples, got {len(samples)}')
    x = np.array([s.coordinate if abscissa == 'r' else s.peak_time - time_origin for s in samples], dtype=float)
    y = np.array([s.peak_value for s in samples], dtype=float)
    if np.any(x <= 0) or np.any(y <= 0) or not np.all(np.isfinite(x) & np.isfinite(y)):
        raise DomainError('power-law fit needs positive finite abscissae and peak values')

    log_x, log_y = np.log(x), np.log(y)
    slope, intercept = np.polyfit(log_x, log_y, 1)
    residual = log_y - (slope * log_x + intercept)
    ss_res = float(np.sum(residual ** 2))
    ss_tot = float(np.sum((log_y - log_y.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0 else max(0.0, 1.0 - ss_res / ss_tot)
    return FitReport(float(slope), float(intercept), r_squared, len(samples))
