import numpy as np
import pytest

from qfront.config import LoadSpec, SimParams
from qfront.errors import InstabilityError, ParameterError
from qfront.lattice.stepper import FINITE_CHECK_EVERY, StepperPool, row_chunks, step_once
from qfront.structures import LatticeState


def advance(params, steps, pool=None, state=None):
    state = state or LatticeState.at_rest(params.half_width, params.tau)
    for _ in range(steps):
        state = step_once(state, params, pool)
    return state


def test_first_step_puts_tau_squared_on_the_loaded_node():
    params = SimParams(lam=0.0, load=LoadSpec.step(), t_end=1.0)
    state = advance(params, 1)
    assert state.phi_curr[0, 0] == pytest.approx(1e-4, rel=1e-12)
    rest = state.phi_curr.copy()
    rest[0, 0] = 0.0
    assert not rest.any()
    assert state.step_index == 1 and state.time == pytest.approx(0.01)


def test_vanished_pulse_keeps_rest_state():
    params = SimParams(lam=0.1, load=LoadSpec.gauss(0.5), t_end=1.0)
    shape = (params.half_width + 1, params.half_width + 1)
    start = LatticeState(params.half_width, np.zeros(shape), np.zeros(shape), 10000, params.tau)
    state = advance(params, 5, state=start)
    assert not state.phi_curr.any()


@pytest.mark.parametrize('lam', [0.0, 0.1])
def test_field_stays_symmetric(lam):
    params = SimParams(lam=lam, load=LoadSpec.step(), t_end=3.0)
    state = advance(params, 300)
    assert np.array_equal(state.phi_curr, state.phi_curr.T)
    assert not state.phi_curr[-1].any() and not state.phi_curr[:, -1].any()


def test_worker_count_does_not_change_the_result():
    params = SimParams(lam=0.1, load=LoadSpec.gauss(0.1), t_end=1.0)
    inline = advance(params, 60)
    with StepperPool(params.half_width, workers=3) as pool:
        threaded = advance(params, 60, pool=pool)
    assert np.array_equal(inline.phi_curr, threaded.phi_curr)


def test_row_chunks_cover_rows_once():
    chunks = row_chunks(10, 3)
    assert chunks[0][0] == 0 and chunks[-1][1] == 10
    assert all(a[1] == b[0] for a, b in zip(chunks, chunks[1:]))
    assert len(row_chunks(2, 5)) == 2


def test_non_finite_field_names_the_step():
    params = SimParams(lam=0.0, load=LoadSpec.step(), t_end=20.0)
    shape = (params.half_width + 1, params.half_width + 1)
    poisoned = np.zeros(shape)
    poisoned[3, 3] = np.nan
    state = LatticeState(params.half_width, poisoned, np.zeros(shape), FINITE_CHECK_EVERY - 1, params.tau)
    with pytest.raises(InstabilityError) as info:
        step_once(state, params)
    assert info.value.step_index == FINITE_CHECK_EVERY


def test_mismatched_state_is_rejected():
    params = SimParams(lam=0.0, load=LoadSpec.step(), t_end=1.0)
    with pytest.raises(ParameterError):
        step_once(LatticeState.at_rest(params.half_width + 1, params.tau), params)
    with pytest.raises(ParameterError):
        step_once(LatticeState.at_rest(params.half_width, 0.02), params)
