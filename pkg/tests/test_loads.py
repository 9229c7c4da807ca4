import math

import numpy as np
import pytest

from qfront.config import LoadSpec
from qfront.errors import ParameterError
from qfront.lattice.loads import load_amplitude, load_negligible_after


def test_step_load_is_one_from_zero():
    assert load_amplitude(LoadSpec.step(), 0.0) == 1.0
    np.testing.assert_array_equal(load_amplitude(LoadSpec.step(), np.array([0.0, 3.0])), [1.0, 1.0])


def test_pulse_peaks_at_four_sigma():
    assert load_amplitude(LoadSpec.gauss(5.0), 20.0) == pytest.approx(1.0)


@pytest.mark.parametrize('sigma', [0.1, 5.0])
def test_pulse_endpoints_are_symmetric(sigma):
    load = LoadSpec.gauss(sigma)
    assert load_amplitude(load, 0.0) == pytest.approx(math.exp(-8.0), rel=1e-12)
    assert load_amplitude(load, 8.0 * sigma) == pytest.approx(3.3546e-4, rel=1e-4)


def test_pulse_vectorised():
    values = load_amplitude(LoadSpec.gauss(1.0), np.array([0.0, 4.0, 8.0]))
    np.testing.assert_allclose(values, [math.exp(-8.0), 1.0, math.exp(-8.0)])


def test_negligible_after():
    assert load_negligible_after(LoadSpec.step()) == math.inf
    load = LoadSpec.gauss(0.5)
    t = load_negligible_after(load)
    assert load_amplitude(load, t) == pytest.approx(1e-12, rel=1e-6)


def test_load_spec_validation():
    with pytest.raises(ParameterError):
        LoadSpec.gauss(0.0)
    with pytest.raises(ParameterError):
        LoadSpec(LoadSpec.step().kind, 1.0)
    assert LoadSpec.gauss(2.0).launch_delay == 8.0
    assert LoadSpec.step().launch_delay == 0.0
