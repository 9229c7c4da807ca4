import math

import numpy as np
import pytest
from scipy import special

from qfront.analysis import compare_curves, extract_front_peak, fit_power_law, front_width, front_window, window_width
from qfront.analysis.peaks import model_peak_samples
from qfront.asymptotics import AsymptoticModel, get_solution
from qfront.config import C1, LoadSpec
from qfront.enums import ModelFamily, Quantity
from qfront.errors import CoverageError, DomainError, FrontError
from qfront.structures import PeakSample

from conftest import make_series

TAU = 0.01
NODE = (30, 0)
T_ARR = 30.0 / C1
AI_SQUARED_ARGMAX = -1.0188


def airy_profile(width, end=T_ARR + 15.0):
    '''Ai(kappa)^2 pulse travelling at c1 with a frozen width.'''
    times = np.arange(0.0, end, TAU)
    k = C1 * (T_ARR - times) / width
    values = special.airy(k)[0] ** 2
    return make_series(NODE, times, vel=values)


class TestPeaks:
    def test_window_width_takes_the_larger_scale(self):
        assert window_width(LoadSpec.step(), 0.0, 20.0) == pytest.approx(np.cbrt(C1 * 10.0))
        assert window_width(LoadSpec.gauss(5.0), 0.1, 50.0) == pytest.approx(math.sqrt(0.75 * (3.0 + 25.0)))

    def test_front_window(self):
        lo, hi = front_window(30.0, C1, 0.0, 2.0)
        assert lo == pytest.approx(T_ARR - 6.0 / C1)
        assert hi == pytest.approx(T_ARR + 12.0 / C1)

    def test_airy_squared_peak(self):
        width = np.cbrt(C1 * T_ARR / 2.0)
        peak = extract_front_peak(airy_profile(width), Quantity.VELOCITY)
        expected_time = T_ARR - AI_SQUARED_ARGMAX * width / C1
        assert peak.peak_time == pytest.approx(expected_time, abs=TAU)
        assert peak.peak_value == pytest.approx(special.airy(AI_SQUARED_ARGMAX)[0] ** 2, rel=1e-4)
        assert peak.coordinate == 30.0

    def test_sign_flip_leaves_the_peak_alone(self):
        width = np.cbrt(C1 * T_ARR / 2.0)
        series = airy_profile(width)
        flipped = make_series(NODE, series.times, vel=-series.vel)
        assert extract_front_peak(flipped, Quantity.VELOCITY) == extract_front_peak(series, Quantity.VELOCITY)

    def test_zero_series_peaks_at_window_start(self):
        series = make_series(NODE, np.arange(0.0, 45.0, TAU))
        width = np.cbrt(C1 * T_ARR / 2.0)
        peak = extract_front_peak(series, Quantity.VELOCITY)
        assert peak.peak_value == 0.0
        assert peak.peak_time == pytest.approx(front_window(30.0, C1, 0.0, width)[0], abs=TAU)

    def test_short_series_is_not_covered(self):
        with pytest.raises(CoverageError):
            extract_front_peak(make_series(NODE, np.arange(0.0, 20.0, TAU)), Quantity.VELOCITY)

    def test_model_peaks_attenuate(self):
        model = AsymptoticModel(ModelFamily.STEP_ELASTIC_AIRY)
        samples = model_peak_samples(model, Quantity.VELOCITY, [20.0, 30.0, 40.0], LoadSpec.step())
        fit = fit_power_law(samples, 't')
        assert fit.exponent == pytest.approx(-2.0 / 3.0, abs=0.03)


class TestFit:
    RADII = [10.0, 20.0, 30.0, 40.0]

    def test_exact_power_law(self):
        samples = [PeakSample(r, 3.0 * r ** (-2.0 / 3.0), r / C1) for r in self.RADII]
        fit = fit_power_law(samples)
        assert fit.exponent == pytest.approx(-2.0 / 3.0, abs=1e-9)
        assert fit.r_squared == pytest.approx(1.0)
        assert fit.points_used == 4

    def test_constant_samples(self):
        fit = fit_power_law([PeakSample(r, 0.5, r) for r in self.RADII])
        assert fit.exponent == pytest.approx(0.0, abs=1e-12)
        assert fit.r_squared == 1.0

    def test_scale_invariance(self):
        base = [PeakSample(r, r ** -0.75, r) for r in self.RADII]
        scaled = [PeakSample(r, 7.0 * r ** -0.75, r) for r in self.RADII]
        assert fit_power_law(base).exponent == pytest.approx(fit_power_law(scaled).exponent, abs=1e-12)

    def test_time_abscissa_from_launch(self):
        samples = [PeakSample(0.0, t ** -1.25, t + 20.0) for t in (10.0, 20.0, 40.0)]
        assert fit_power_law(samples, 't', time_origin=20.0).exponent == pytest.approx(-1.25, abs=1e-9)

    @pytest.mark.parametrize('samples', [
        [PeakSample(1.0, 1.0, 1.0), PeakSample(2.0, 0.5, 2.0)],
        [PeakSample(1.0, 1.0, 1.0), PeakSample(2.0, 0.0, 2.0), PeakSample(3.0, 0.2, 3.0)],
    ])
    def test_rejected_samples(self, samples):
        with pytest.raises(DomainError):
            fit_power_law(samples)


class TestWidth:
    def test_width_follows_the_profile_scale(self):
        narrow = front_width(airy_profile(1.5), Quantity.VELOCITY, T_ARR, width=1.5)
        wide = front_width(airy_profile(3.0), Quantity.VELOCITY, T_ARR, width=3.0)
        assert narrow > 0
        assert wide / narrow == pytest.approx(2.0, rel=0.1)

    def test_no_front(self):
        with pytest.raises(FrontError):
            front_width(make_series(NODE, np.arange(0.0, 45.0, TAU)), Quantity.VELOCITY, T_ARR)


class TestCompare:
    MODEL = AsymptoticModel(ModelFamily.STEP_ELASTIC_AIRY)
    TIMES = np.arange(1, 4000) * TAU
    RADIUS_NODE = (20, 20)

    def model_curve(self, shift=0.0):
        radius = math.hypot(*self.RADIUS_NODE)
        return get_solution(self.MODEL).evaluate(Quantity.VELOCITY, radius, np.maximum(self.TIMES - shift, TAU))

    def test_identical_curves(self):
        fd = make_series(self.RADIUS_NODE, self.TIMES, vel=self.model_curve())
        error, lag = compare_curves(fd, self.MODEL, Quantity.VELOCITY, (15.0, 35.0))
        assert error == pytest.approx(0.0, abs=1e-12)
        assert lag == pytest.approx(0.0, abs=1e-9)

    def test_shifted_curve(self):
        fd = make_series(self.RADIUS_NODE, self.TIMES, vel=self.model_curve(shift=0.5))
        comparison = compare_curves(fd, self.MODEL, Quantity.VELOCITY, (15.0, 35.0))
        assert comparison.lag == pytest.approx(0.5, abs=TAU + 1e-9)
        assert comparison.fd_peak.peak_time > comparison.model_peak.peak_time

    def test_empty_window(self):
        fd = make_series(self.RADIUS_NODE, self.TIMES, vel=self.model_curve())
        with pytest.raises(CoverageError):
            compare_curves(fd, self.MODEL, Quantity.VELOCITY, (100.0, 200.0))
