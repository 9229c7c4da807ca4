import numpy as np

from qfront.config import LoadSpec
from qfront.enums import LoadKind


def load_amplitude(load: LoadSpec, t):
    '''
    Q(t) of the concentrated load: Heaviside step (1 for t >= 0) or the
    Gaussian pulse exp[-(t - 4 sigma)^2 / (2 sigma^2)] centred at t = 4 sigma.
    Accepts scalars or arrays of t >= 0.
    '''
    if load.kind is LoadKind.STEP:
        if np.ndim(t) == 0:
            return 1.0
        return np.ones_like(np.asarray(t, dtype=float))
    sigma = load.sigma
    value = np.exp(-(np.asarray(t, dtype=float) - 4.0 * sigma) ** 2 / (2.0 * sigma ** 2))
    return float(value) if np.ndim(t) == 0 else value


def load_negligible_after(load: LoadSpec, threshold: float = 1e-12) -> float:
    '''First time after which the pulse stays below `threshold` (inf for the step).'''
    if load.kind is LoadKind.STEP:
        return float('inf')
    return 4.0 * load.sigma + load.sigma * float(np.sqrt(-2.0 * np.log(threshold)))
