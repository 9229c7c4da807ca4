import numpy as np

from qfront.asymptotics.models import ELASTIC_WIDTH_FAMILIES, AsymptoticModel, KappaSpec
from qfront.config import C1
from qfront.enums import ModelFamily
from qfront.errors import DomainError


def _width(model: AsymptoticModel, t_eff):
    if model.family in ELASTIC_WIDTH_FAMILIES:
        return np.cbrt(C1 * t_eff / 2.0)
    if model.family is ModelFamily.STEP_VISCOUS:
        return np.sqrt(0.75 * model.lam * t_eff)
    return np.sqrt(0.75) * np.sqrt(model.lam * t_eff + model.sigma ** 2)


def kappa_spec(model: AsymptoticModel, t) -> KappaSpec:
    '''Effective time and front width; t must be past the model's launch.'''
    t_eff = np.asarray(t, dtype=float) - model.launch_delay
    if np.any(t_eff <= 0):
        raise DomainError(f'{model} is evaluated before its front launches (t <= {model.launch_delay:g})')
    width = _width(model, t_eff)
    if np.ndim(t_eff) == 0:
        return KappaSpec(float(t_eff), float(width))
    return KappaSpec(t_eff, width)


def kappa(model: AsymptoticModel, n_or_r, t):
    value = kappa_spec(model, t).kappa(np.asarray(n_or_r, dtype=float))
    return float(value) if np.ndim(value) == 0 else value


def front_scale(model: AsymptoticModel, t):
    '''Front width w(t): t^{1/3} growth for the elastic and short-pulse families, t^{1/2} otherwise.'''
    return kappa_spec(model, t).width
