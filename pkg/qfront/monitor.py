import logging
from dataclasses import dataclass

logger = logging.getLogger(__name__)


@dataclass
class SimulationMonitor:
    steps_taken: int = 0
    finiteness_checks: int = 0
    probes_recorded: int = 0
    snapshots_taken: int = 0
    peak_abs_displacement: float = 0.0
    wall_clock_seconds: float = 0.0

    def get_steps_per_second(self) -> float:
        if self.wall_clock_seconds <= 0:
            return 0.0
        return self.steps_taken / self.wall_clock_seconds

    def display(self):
        '''Log a formatted run summary.'''
        logger.info('--- Simulation summary ---')
        logger.info('  Steps taken:            %d', self.steps_taken)
        logger.info('  Finiteness checks:      %d', self.finiteness_checks)
        logger.info('  Probe samples recorded: %d', self.probes_recorded)
        logger.info('  Snapshots kept:         %d', self.snapshots_taken)
        logger.info('  Peak |phi|:             %.6e', self.peak_abs_displacement)
        logger.info('  Wall clock (s):         %.2f (%.0f steps/s)', self.wall_clock_seconds,
                    self.get_steps_per_second())
