import logging
from typing import Optional

from qfront.asymptotics.models import AsymptoticModel
from qfront.config import C1, LoadSpec
from qfront.enums import LoadKind, ModelFamily, Quantity
from qfront.errors import ParameterError

logger = logging.getLogger(__name__)

SHORT_PULSE_SIGMA = 1.0 / (8.0 * C1)

STEP_VELOCITY_ELASTIC_MAX = 0.02
STEP_ACCELERATION_ELASTIC_MAX = 0.002
STEP_ACCELERATION_VISCOUS_MIN = 0.1

SHORT_LAMBDA_MAX = {
    Quantity.DISPLACEMENT: 0.01,
    Quantity.VELOCITY: 0.05,
    Quantity.ACCELERATION: 0.001,
}
LOWFREQ_LAMBDA_MIN = {
    Quantity.DISPLACEMENT: 0.05,
    Quantity.VELOCITY: 0.2,
    Quantity.ACCELERATION: 0.2,
}


def _step_regime(lam: float, quantity: Quantity) -> Optional[AsymptoticModel]:
    elastic = AsymptoticModel(ModelFamily.STEP_ELASTIC, lam)
    if quantity is Quantity.DISPLACEMENT:
        return elastic
    if quantity is Quantity.VELOCITY:
        return elastic if lam <= STEP_VELOCITY_ELASTIC_MAX else AsymptoticModel(ModelFamily.STEP_VISCOUS, lam)
    if lam <= STEP_ACCELERATION_ELASTIC_MAX:
        return elastic
    if lam >= STEP_ACCELERATION_VISCOUS_MIN:
        return AsymptoticModel(ModelFamily.STEP_VISCOUS, lam)
    return None


def _gauss_regime(sigma: float, lam: float, quantity: Quantity) -> Optional[AsymptoticModel]:
    lowfreq = AsymptoticModel(ModelFamily.GAUSS_LOWFREQ, lam, sigma)
    if sigma < SHORT_PULSE_SIGMA and lam <= SHORT_LAMBDA_MAX[quantity]:
        return AsymptoticModel(ModelFamily.GAUSS_SHORT, sigma=sigma)
    if lam >= LOWFREQ_LAMBDA_MIN[quantity]:
        return lowfreq
    if quantity is Quantity.DISPLACEMENT:
        if (lam == 0 and sigma >= 10 * SHORT_PULSE_SIGMA) or (lam >= 0.05 and sigma >= 2 * SHORT_PULSE_SIGMA):
            return lowfreq
    elif sigma >= 30 * SHORT_PULSE_SIGMA:
        return lowfreq
    return None


def regime_select(sigma: Optional[float], lam: float, quantity: Quantity, load: LoadSpec) -> Optional[AsymptoticModel]:
    '''
    Recommended solution family for a load, viscosity and quantity, or None
    inside the parameter intervals no family is validated for.
    '''
    if not lam >= 0:
        raise ParameterError(f'lambda must be >= 0, got {lam}')
    quantity = Quantity(quantity)
    if load.kind is LoadKind.STEP:
        model = _step_regime(lam, quantity)
    else:
        if sigma is not None and load.sigma is not None and sigma != load.sigma:
            raise ParameterError(f'sigma {sigma} disagrees with the load ({load.sigma})')
        model = _gauss_regime(load.sigma if sigma is None else sigma, lam, quantity)
    logger.debug('regime for %s, lambda=%g, %s -> %s', load, lam, quantity.value, model)
    return model
