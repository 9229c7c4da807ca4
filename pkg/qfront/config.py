import math
import os
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from qfront.enums import LoadKind
from qfront.errors import ParameterError

C1 = math.sqrt(1.5)
'''Speed of infinitely long longitudinal waves (unit mass, stiffness and spacing).'''

EULER_GAMMA = 0.5772156649015329

DEFAULT_TAU = 0.01
REFLECTION_MARGIN = 40
'''Extra nodes past the fastest quasi-front so that no boundary reflection reaches a probe.'''

THREADS_ENV = "QFRONT_THREADS"


def required_half_width(t_end: float) -> int:
    return math.ceil(C1 * t_end) + REFLECTION_MARGIN


def worker_count(default: int = 1) -> int:
    '''Stepper workers from QFRONT_THREADS; absent means `default`.'''
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == '':
        return default
    try:
        workers = int(raw)
    except ValueError:
        raise ParameterError(f'{THREADS_ENV} must be a positive integer, got {raw!r}')
    if workers < 1:
        raise ParameterError(f'{THREADS_ENV} must be a positive integer, got {raw!r}')
    return workers


@dataclass(frozen=True)
class LoadSpec:
    '''Time dependence Q(t) of the concentrated load at the origin.'''

    kind: LoadKind = LoadKind.STEP
    sigma: Optional[float] = None
    '''Gaussian width; only for GAUSS.'''

    def __post_init__(self):
        if self.kind is LoadKind.GAUSS:
            if self.sigma is None or not self.sigma > 0:
                raise ParameterError(f'Gaussian pulse needs sigma > 0, got {self.sigma}')
        elif self.sigma is not None:
            raise ParameterError('sigma is only meaningful for the Gaussian pulse load')

    @classmethod
    def step(cls) -> 'LoadSpec':
        return cls(LoadKind.STEP)

    @classmethod
    def gauss(cls, sigma: float) -> 'LoadSpec':
        return cls(LoadKind.GAUSS, float(sigma))

    @property
    def launch_delay(self) -> float:
        '''Shift of the quasi-front arrival: 4 sigma for the pulse, 0 for the step.'''
        return 4.0 * self.sigma if self.kind is LoadKind.GAUSS else 0.0

    def __str__(self):
        if self.kind is LoadKind.GAUSS:
            return f'gauss(sigma={self.sigma:g})'
        return 'step'


@dataclass
class SimParams:
    lam: float
    load: LoadSpec
    t_end: float
    tau: float = DEFAULT_TAU
    half_width: Optional[int] = None
    '''Grid half width N (indices 0..N); derived from the reflection rule when omitted.'''
    probes: List[Tuple[int, int]] = field(default_factory=list)
    workers: Optional[int] = None
    snapshot_every: int = 0
    '''Keep a copy of the field every this many steps; 0 disables snapshots.'''
    record_energy: bool = False

    def __post_init__(self):
        if not self.lam >= 0:
            raise ParameterError(f'lambda must be >= 0, got {self.lam}')
        if not self.t_end > 0:
            raise ParameterError(f't_end must be > 0, got {self.t_end}')
        if not self.tau > 0:
            raise ParameterError(f'tau must be > 0, got {self.tau}')
        required = required_half_width(self.t_end)
        if self.half_width is None:
            self.half_width = required
        if self.half_width < 2:
            raise ParameterError(f'grid half width must be >= 2, got {self.half_width}')
        if self.half_width < required:
            raise ParameterError(
                f'grid half width {self.half_width} is below the reflection guard '
                f'ceil(c1*t_end)+{REFLECTION_MARGIN} = {required} for t_end={self.t_end:g}'
            )
        probes = []
        for probe in self.probes:
            if len(probe) != 2:
                raise ParameterError(f'probe must be a node (n, m), got {probe!r}')
            n, m = (int(v) for v in probe)
            if n < 0 or m < 0 or n > self.half_width - 2 or m > self.half_width - 2:
                raise ParameterError(
                    f'probe ({n},{m}) outside 0..{self.half_width - 2} for grid half width {self.half_width}'
                )
            probes.append((n, m))
        self.probes = probes
        if self.workers is not None and self.workers < 1:
            raise ParameterError(f'workers must be >= 1, got {self.workers}')
        if self.snapshot_every < 0:
            raise ParameterError(f'snapshot_every must be >= 0, got {self.snapshot_every}')

    @property
    def n_steps(self) -> int:
        return int(math.floor(self.t_end / self.tau + 1e-9))

    def to_dict(self) -> dict:
        return {
            "lambda": self.lam,
            "load": self.load.kind.value,
            "sigma": self.load.sigma,
            "t_end": self.t_end,
            "tau": self.tau,
            "grid_half": self.half_width,
            "probes": [list(p) for p in self.probes],
        }

    def __str__(self):
        return (f'lambda={self.lam:g} | load={self.load} | t_end={self.t_end:g} | '
                f'tau={self.tau:g} | N={self.half_width}')
