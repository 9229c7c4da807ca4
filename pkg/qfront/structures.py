import json
import math
from dataclasses import dataclass, asdict, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np
from dacite import from_dict

from qfront.enums import Quantity
from qfront.errors import ParameterError


class JSONDataclassMixin:
    '''Mixin for adding JSON file capabilities to Python dataclasses.'''

    @classmethod
    def from_file(cls, path: Union[Path, str]) -> 'JSONDataclassMixin':
        '''Load dataclass instance from provided file path.'''

        with open(path, encoding='utf-8') as f:
            data = json.load(f)

        return from_dict(cls, data)

    def to_file(self, path: Union[Path, str]) -> None:
        '''Save dataclass instance to provided file path.'''

        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            json.dump(asdict(self), f, indent=2, sort_keys=True)
            f.write('\n')


@dataclass
class LatticeState:
    '''Two consecutive time levels of the quadrant displacement field.'''

    half_width: int
    phi_curr: np.ndarray
    '''phi^k, shape (N+1, N+1); row N and column N stay zero.'''

    phi_prev: np.ndarray
    '''phi^{k-1}.'''

    step_index: int
    tau: float

    def __post_init__(self):
        shape = (self.half_width + 1, self.half_width + 1)
        if self.half_width < 2:
            raise ParameterError(f'grid half width must be >= 2, got {self.half_width}')
        if not self.tau > 0:
            raise ParameterError(f'tau must be > 0, got {self.tau}')
        if self.phi_curr.shape != shape or self.phi_prev.shape != shape:
            raise ParameterError(
                f'displacement fields must be {shape}, got {self.phi_curr.shape} and {self.phi_prev.shape}'
            )

    @classmethod
    def at_rest(cls, half_width: int, tau: float) -> 'LatticeState':
        '''Zero initial conditions.'''
        shape = (half_width + 1, half_width + 1)
        return cls(half_width, np.zeros(shape), np.zeros(shape), 0, tau)

    @property
    def time(self) -> float:
        return self.step_index * self.tau


@dataclass
class ProbeSeries:
    '''Displacement history of one lattice node with its derived rates.'''

    node: Tuple[int, int]
    times: np.ndarray
    disp: np.ndarray
    vel: Optional[np.ndarray] = None
    '''Central-difference velocity, NaN at the two trimmed endpoints.'''
    acc: Optional[np.ndarray] = None

    @property
    def radius(self) -> float:
        return math.hypot(*self.node)

    @property
    def tau(self) -> float:
        return float(self.times[1] - self.times[0])

    def values(self, quantity: Quantity) -> np.ndarray:
        series = {
            Quantity.DISPLACEMENT: self.disp,
            Quantity.VELOCITY: self.vel,
            Quantity.ACCELERATION: self.acc,
        }[quantity]
        if series is None:
            raise ParameterError(f'{quantity.value} not derived for probe {self.node}')
        return series


@dataclass(frozen=True)
class PeakSample:
    coordinate: float
    '''Radial coordinate r of the probe.'''

    peak_value: float
    peak_time: float


@dataclass(frozen=True)
class FitReport:
    exponent: float
    intercept: float
    r_squared: float
    points_used: int

    def to_dict(self):
        return asdict(self)


@dataclass
class RunManifest(JSONDataclassMixin):
    '''Provenance of one command invocation.'''

    command: str
    parameters: Dict[str, Any]
    c1: float
    tau: Optional[float]
    grid_half: Optional[int]
    wall_clock_seconds: float
    artifacts: List[str] = field(default_factory=list)
    content_hash: str = ''


@dataclass(frozen=True)
class CurveComparison:
    '''Finite-difference curve measured against an asymptotic model over one window.'''

    relative_peak_error: float
    lag: float
    '''Peak time of the lattice curve minus peak time of the model.'''

    fd_peak: PeakSample
    model_peak: PeakSample

    def __iter__(self):
        return iter((self.relative_peak_error, self.lag))

    def to_dict(self):
        return asdict(self)
