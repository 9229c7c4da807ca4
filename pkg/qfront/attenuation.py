import logging
import math
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence

from qfront.analysis.fitting import fit_power_law
from qfront.analysis.peaks import WINDOW_AFTER, extract_front_peak, model_peak_samples, window_width
from qfront.analysis.width import front_width
from qfront.asymptotics.regime import SHORT_PULSE_SIGMA, regime_select
from qfront.config import C1, DEFAULT_TAU, LoadSpec, SimParams
from qfront.enums import LoadKind, Quantity
from qfront.errors import QFrontError
from qfront.structures import FitReport, PeakSample
from qfront.system import run_simulation

logger = logging.getLogger(__name__)

DIAGONALS = (15, 20, 25, 30, 35)


def expected_exponents(load: LoadSpec, lam: float) -> Dict[str, float]:
    '''Large-time attenuation exponents of the peaks and growth exponent of the front width.'''
    if load.kind is LoadKind.STEP:
        if lam == 0:
            return {'vel': -2.0 / 3.0, 'acc': -1.0, 'width': 1.0 / 3.0}
        return {'vel': -0.75, 'acc': -1.25, 'width': 0.5}
    if load.sigma < SHORT_PULSE_SIGMA and lam < 0.05:
        return {'disp': -2.0 / 3.0, 'vel': -1.0, 'acc': -4.0 / 3.0, 'width': 1.0 / 3.0}
    return {'disp': -0.75, 'vel': -1.25, 'acc': -1.75, 'width': 0.5}


@dataclass
class AttenuationReport:
    lam: float
    load: str
    diagonals: List[int]
    t_end: float
    peaks: Dict[str, List[PeakSample]] = field(default_factory=dict)
    fits: Dict[str, FitReport] = field(default_factory=dict)
    widths: List[PeakSample] = field(default_factory=list)
    '''Velocity rise times; peak_value holds the width, peak_time the arrival since launch.'''
    width_fit: Optional[FitReport] = None
    model_fits: Dict[str, Optional[FitReport]] = field(default_factory=dict)
    '''Same windowed fit applied to the recommended closed-form model on the same probes.'''
    expected: Dict[str, float] = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)


def attenuation_t_end(load: LoadSpec, lam: float, diagonals: Sequence[int]) -> float:
    t_arr = max(diagonals) * math.sqrt(2.0) / C1 + load.launch_delay
    return float(math.ceil(t_arr + WINDOW_AFTER * window_width(load, lam, t_arr) / C1 + 1.0))


def run_attenuation(
    lam: float,
    load: LoadSpec,
    diagonals: Sequence[int] = DIAGONALS,
    tau: float = DEFAULT_TAU,
    t_end: Optional[float] = None,
    workers: Optional[int] = None,
) -> AttenuationReport:
    '''
    Simulate diagonal probes n = m, fit the windowed peak decay of every
    quantity against time since launch, and fit the growth of the front width.
    '''
    diagonals = sorted(int(d) for d in diagonals)
    if t_end is None:
        t_end = attenuation_t_end(load, lam, diagonals)
    params = SimParams(lam=lam, load=load, t_end=t_end, tau=tau, probes=[(d, d) for d in diagonals], workers=workers)
    delay = load.launch_delay
    report = AttenuationReport(lam, str(load), diagonals, t_end, expected=expected_exponents(load, lam))
    logger.info('attenuation run: %s over diagonals %s', params, diagonals)

    series = run_simulation(params)
    quantities = [Quantity(key) for key in report.expected if key != 'width']
    for quantity in quantities:
        peaks = []
        for s in series:
            t_arr = s.radius / C1 + delay
            peaks.append(extract_front_peak(s, quantity, C1, delay, window_width(load, lam, t_arr)))
        report.peaks[quantity.value] = peaks
        report.fits[quantity.value] = fit_power_law(peaks, 't', time_origin=delay)
        logger.info('%s peak exponent %.4f (expected %.4f)', quantity.value,
                    report.fits[quantity.value].exponent, report.expected[quantity.value])

        model = regime_select(None, lam, quantity, load)
        if model is None:
            report.model_fits[quantity.value] = None
            continue
        try:
            radii = [s.radius for s in series]
            report.model_fits[quantity.value] = fit_power_law(
                model_peak_samples(model, quantity, radii, load, tau), 't', time_origin=delay
            )
        except QFrontError as error:
            logger.warning('no model fit for %s with %s: %s', quantity.value, model, error)
            report.model_fits[quantity.value] = None

    for s, peak in zip(series, report.peaks[Quantity.VELOCITY.value]):
        t_arr = s.radius / C1 + delay
        width = front_width(s, Quantity.VELOCITY, t_arr, peak=peak)
        report.widths.append(PeakSample(s.radius, width, t_arr - delay))
    report.width_fit = fit_power_law(report.widths, 't')
    logger.info('front width exponent %.4f (expected %.4f)', report.width_fit.exponent, report.expected['width'])
    return report
