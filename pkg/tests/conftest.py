import numpy as np
import pytest

from qfront.config import LoadSpec, SimParams
from qfront.structures import ProbeSeries

TAU = 0.01


@pytest.fixture
def step_params():
    return SimParams(lam=0.0, load=LoadSpec.step(), t_end=5.0, probes=[(0, 0), (3, 3)])


@pytest.fixture
def pulse_params():
    return SimParams(lam=0.0, load=LoadSpec.gauss(0.5), t_end=15.0, record_energy=True)


def make_series(node, times, disp=None, vel=None, acc=None):
    times = np.asarray(times, dtype=float)
    zeros = np.zeros_like(times)
    return ProbeSeries(node, times, zeros if disp is None else disp, zeros if vel is None else vel,
                       zeros if acc is None else acc)
