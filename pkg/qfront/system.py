import logging
import time
from typing import Dict, List, Optional, Tuple

import numpy as np

from qfront.config import SimParams, worker_count
from qfront.errors import InstabilityError
from qfront.lattice.energy import lattice_energy
from qfront.lattice.probes import differentiate_series
from qfront.lattice.stepper import FINITE_CHECK_EVERY, StepperPool, step_once
from qfront.monitor import SimulationMonitor
from qfront.structures import LatticeState, ProbeSeries

logger = logging.getLogger(__name__)


class LatticeSimulator:
    '''
    Drives the explicit stepper from rest to t_end, recording every probe after
    each step and optionally the discrete energy and field snapshots.
    '''

    def __init__(self, params: SimParams):
        self.params = params
        self.workers = params.workers if params.workers is not None else worker_count()
        self.state = LatticeState.at_rest(params.half_width, params.tau)
        self.monitor = SimulationMonitor()
        self.energy_history: List[Tuple[float, float]] = []
        self.snapshots: Dict[int, np.ndarray] = {}
        self._records: Optional[np.ndarray] = None

    def _record(self, row: int):
        for column, (n, m) in enumerate(self.params.probes):
            self._records[row, column] = self.state.phi_curr[n, m]
        self.monitor.probes_recorded += len(self.params.probes)
        if self.params.record_energy:
            self.energy_history.append((self.state.time, lattice_energy(self.state, self.params)))
        every = self.params.snapshot_every
        if every and self.state.step_index % every == 0:
            self.snapshots[self.state.step_index] = self.state.phi_curr.copy()
            self.monitor.snapshots_taken += 1

    def run(self) -> List[ProbeSeries]:
        params = self.params
        n_steps = params.n_steps
        self._records = np.zeros((n_steps + 1, len(params.probes)))
        logger.info('[t=%.2f] starting run: %s | workers=%d | steps=%d', 0.0, params, self.workers, n_steps)

        report_every = max(1, n_steps // 10)
        start = time.perf_counter()
        self._record(0)
        with StepperPool(params.half_width, self.workers) as pool:
            for k in range(n_steps):
                self.state = step_once(self.state, params, pool)
                self.monitor.steps_taken += 1
                if self.state.step_index % FINITE_CHECK_EVERY == 0:
                    self.monitor.finiteness_checks += 1
                self._record(k + 1)
                if (k + 1) % report_every == 0:
                    logger.debug('[t=%.2f] step %d/%d, |phi(0,0)|=%.4e', self.state.time, k + 1, n_steps,
                                 abs(self.state.phi_curr[0, 0]))

        if not np.isfinite(self.state.phi_curr).all():
            raise InstabilityError(self.state.step_index)
        self.monitor.finiteness_checks += 1
        self.monitor.wall_clock_seconds = time.perf_counter() - start
        self.monitor.peak_abs_displacement = float(np.max(np.abs(self._records))) if self._records.size else 0.0
        logger.info('[t=%.2f] run complete', self.state.time)
        self.monitor.display()

        times = np.arange(n_steps + 1) * params.tau
        return [
            differentiate_series(ProbeSeries(probe, times, self._records[:, column].copy()))
            for column, probe in enumerate(params.probes)
        ]


def run_simulation(params: SimParams) -> List[ProbeSeries]:
    '''One ProbeSeries per probe with velocity and acceleration attached.'''
    return LatticeSimulator(params).run()
