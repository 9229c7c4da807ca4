import logging
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from qfront.config import SimParams
from qfront.errors import InstabilityError, ParameterError
from qfront.lattice.loads import load_amplitude
from qfront.lattice.operator import mirror_pad, operator_rows
from qfront.structures import LatticeState

logger = logging.getLogger(__name__)

FINITE_CHECK_EVERY = 1000


def row_chunks(rows: int, workers: int) -> List[Tuple[int, int]]:
    '''Split rows 0..rows-1 into at most `workers` contiguous blocks.'''
    workers = max(1, min(workers, rows))
    bounds = np.linspace(0, rows, workers + 1).round().astype(int)
    return [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]


def _update_rows(out, phi_curr, phi_prev, padded, lo, hi):
    out[lo:hi, :-1] = (2.0 * phi_curr[lo:hi, :-1] - phi_prev[lo:hi, :-1]) + operator_rows(padded, lo, hi)


class StepperPool:
    '''
    Row-parallel update of the quadrant. Every row block is written by exactly
    one worker and all blocks finish before the next step, so the result does
    not depend on the worker count.
    '''

    def __init__(self, half_width: int, workers: int = 1):
        if workers < 1:
            raise ParameterError(f'workers must be >= 1, got {workers}')
        self.workers = workers
        self.chunks = row_chunks(half_width, workers)
        self._parallel: Optional[Parallel] = None

    def __enter__(self):
        if len(self.chunks) > 1:
            self._parallel = Parallel(n_jobs=len(self.chunks), backend='threading')
            self._parallel.__enter__()
        return self

    def __exit__(self, *exc):
        if self._parallel is not None:
            self._parallel.__exit__(*exc)
            self._parallel = None
        return False

    def update(self, out, phi_curr, phi_prev, padded):
        if self._parallel is None:
            for lo, hi in self.chunks:
                _update_rows(out, phi_curr, phi_prev, padded, lo, hi)
            return
        self._parallel(
            delayed(_update_rows)(out, phi_curr, phi_prev, padded, lo, hi) for lo, hi in self.chunks
        )


def step_once(state: LatticeState, params: SimParams, pool: Optional[StepperPool] = None) -> LatticeState:
    '''
    Advance one explicit step:
    phi^{k+1} = 2 phi^k - phi^{k-1} + tau^2 [D phi^k + (lam/tau) D(phi^k - phi^{k-1}) + Q(t_k) delta_00].
    '''
    if state.half_width != params.half_width:
        raise ParameterError(f'state grid {state.half_width} does not match parameters {params.half_width}')
    if not np.isclose(state.tau, params.tau, rtol=0, atol=1e-15):
        raise ParameterError(f'state tau {state.tau} does not match parameters {params.tau}')

    tau, lam = params.tau, params.lam
    k = state.step_index
    # D is linear: both operator terms collapse onto one stencil pass
    psi = (tau * tau + lam * tau) * state.phi_curr - (lam * tau) * state.phi_prev
    padded = mirror_pad(psi)

    out = np.zeros_like(state.phi_curr)
    if pool is None:
        for lo, hi in row_chunks(state.half_width, 1):
            _update_rows(out, state.phi_curr, state.phi_prev, padded, lo, hi)
    else:
        pool.update(out, state.phi_curr, state.phi_prev, padded)
    out[0, 0] += tau * tau * load_amplitude(params.load, k * tau)

    if (k + 1) % FINITE_CHECK_EVERY == 0 and not np.isfinite(out).all():
        logger.error('non-finite field at step %d (t=%.4f)', k + 1, (k + 1) * tau)
        raise InstabilityError(k + 1)

    return LatticeState(state.half_width, out, state.phi_curr, k + 1, tau)
