from dataclasses import dataclass
from typing import Optional

from qfront.config import C1
from qfront.enums import ModelFamily
from qfront.errors import ParameterError

GAUSS_FAMILIES = (ModelFamily.GAUSS_SHORT, ModelFamily.GAUSS_SHORT_AIRY, ModelFamily.GAUSS_LOWFREQ)
ELASTIC_WIDTH_FAMILIES = (
    ModelFamily.STEP_ELASTIC,
    ModelFamily.STEP_ELASTIC_AIRY,
    ModelFamily.GAUSS_SHORT,
    ModelFamily.GAUSS_SHORT_AIRY,
)


@dataclass(frozen=True)
class AsymptoticModel:
    '''One closed-form solution family with its parameters.'''

    family: ModelFamily
    lam: float = 0.0
    sigma: Optional[float] = None

    def __post_init__(self):
        if not self.lam >= 0:
            raise ParameterError(f'lambda must be >= 0, got {self.lam}')
        if self.family in GAUSS_FAMILIES:
            if self.sigma is None or not self.sigma > 0:
                raise ParameterError(f'{self.family.value} needs sigma > 0, got {self.sigma}')
        elif self.sigma is not None:
            raise ParameterError(f'{self.family.value} takes no sigma')
        if self.family is ModelFamily.STEP_VISCOUS and self.lam == 0:
            raise ParameterError('step-viscous needs lambda > 0; use step-elastic for lambda = 0')

    @property
    def c1(self) -> float:
        return C1

    @property
    def launch_delay(self) -> float:
        '''The Gaussian pulse launches its front at t = 4 sigma.'''
        return 4.0 * self.sigma if self.family in GAUSS_FAMILIES else 0.0

    def __str__(self):
        text = self.family.value
        if self.family in (ModelFamily.STEP_VISCOUS, ModelFamily.GAUSS_LOWFREQ):
            text += f'(lambda={self.lam:g}'
            text += f', sigma={self.sigma:g})' if self.sigma is not None else ')'
        elif self.sigma is not None:
            text += f'(sigma={self.sigma:g})'
        return text


@dataclass(frozen=True)
class KappaSpec:
    '''Similarity scaling at one instant: kappa = (n_or_r - c1 * t_eff) / width.'''

    t_eff: float
    width: float

    def kappa(self, n_or_r):
        return (n_or_r - C1 * self.t_eff) / self.width
