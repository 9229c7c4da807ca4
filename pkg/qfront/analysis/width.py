from typing import Optional

import numpy as np

from qfront.analysis.peaks import extract_front_peak
from qfront.config import C1
from qfront.enums import Quantity
from qfront.errors import FrontError
from qfront.structures import PeakSample, ProbeSeries

ONSET_FRACTION = 0.05


def front_width(
    series: ProbeSeries,
    quantity: Quantity,
    t_arr: float,
    width: Optional[float] = None,
    peak: Optional[PeakSample] = None,
) -> float:
    '''
    Rise time of the quasi-front: peak time minus the last earlier time at
    which |value| is at most 5% of the peak.
    '''
    if peak is None:
        delay = t_arr - series.radius / C1
        peak = extract_front_peak(series, quantity, C1, delay, width)
    if not peak.peak_value > 0:
        raise FrontError(f'no quasi-front peak on probe {series.node}')
    magnitude = np.abs(np.nan_to_num(series.values(quantity), nan=0.0))
    before = (series.times < peak.peak_time) & (magnitude <= ONSET_FRACTION * peak.peak_value)
    if not before.any():
        raise FrontError(f'probe {series.node} never falls below 5% of its peak before t={peak.peak_time:.4f}')
    onset = float(series.times[before][-1])
    return peak.peak_time - onset
