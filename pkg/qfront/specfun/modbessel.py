import numpy as np
from scipy.special import gamma

from qfront.errors import DomainError

SUPPORTED_ORDERS = (-1.25, -0.75, -0.25, 0.25, 0.75, 1.25)
SERIES_LIMIT = 15.0
SERIES_TERMS = 80
ASYMPTOTIC_TERMS = 25


def _series(nu: float, eta: np.ndarray) -> np.ndarray:
    half = 0.5 * eta
    quarter_square = half * half
    term = half ** nu / gamma(nu + 1.0)
    total = term.copy()
    for k in range(1, SERIES_TERMS):
        term = term * quarter_square / (k * (k + nu))
        total = total + term
    return np.exp(-eta) * total


def _asymptotic(nu: float, eta: np.ndarray) -> np.ndarray:
    mu = 4.0 * nu * nu
    term = np.ones_like(eta)
    total = term.copy()
    for k in range(1, ASYMPTOTIC_TERMS):
        term = -term * (mu - (2 * k - 1) ** 2) / (8.0 * k * eta)
        total = total + term
    return total / np.sqrt(2.0 * np.pi * eta)


def modbessel_i_scaled(nu: float, eta):
    '''
    e^{-eta} I_nu(eta) for the quarter orders used by the viscous front
    profiles. Ascending series up to eta = 15, large-argument expansion above.
    At eta = 0 the value is 0 for nu > 0 and +inf for nu < 0.
    '''
    if not any(np.isclose(nu, order, rtol=0, atol=1e-12) for order in SUPPORTED_ORDERS):
        raise DomainError(f'modified Bessel order {nu} not in {SUPPORTED_ORDERS}')
    values = np.asarray(eta, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(values < 0):
        raise DomainError('modified Bessel argument must be finite and >= 0')

    flat = values.ravel()
    out = np.empty_like(flat)
    zero = flat == 0
    small = (flat > 0) & (flat <= SERIES_LIMIT)
    large = flat > SERIES_LIMIT
    out[zero] = 0.0 if nu > 0 else np.inf
    if small.any():
        out[small] = _series(nu, flat[small])
    if large.any():
        out[large] = _asymptotic(nu, flat[large])
    out = out.reshape(values.shape)
    return float(out) if out.ndim == 0 else out
