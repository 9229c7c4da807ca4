'''
Damped oscillatory integrals of the viscous quasi-front profile

    Phi_1(k) = int_0^inf exp(-z^2) z^{-1/2} sin(-z k + pi/4) dz
    Phi_2(k) = int_0^inf exp(-z^2) z^{1/2}  sin( z k + pi/4) dz
    Phi_3(k) = int_0^inf exp(-z^2) z^{3/2}  sin( z k - pi/4) dz

related by Phi_2 = -Phi_1', Phi_3 = -Phi_2' and Phi_3 = -Phi_1/4 + k Phi_2/2.
The closed forms combine e^{-eta} I_nu(eta), eta = k^2/8, over quarter orders.
'''
import math

import numpy as np
from scipy.integrate import quad_vec

from qfront.enums import PhiEvalMethod
from qfront.errors import DomainError
from qfront.specfun.modbessel import modbessel_i_scaled

MAX_KAPPA = 60.0
ZERO_KAPPA = 1e-12
UPPER_Z = 6.5

PHI_AT_ZERO = {
    1: math.sqrt(2.0) / 4.0 * math.gamma(0.25),
    2: math.sqrt(2.0) / 4.0 * math.gamma(0.75),
    3: -math.sqrt(2.0) / 4.0 * math.gamma(1.25),
}


def _closed_form(which: int, kappa: np.ndarray) -> np.ndarray:
    size = np.abs(kappa)
    sign = np.sign(kappa)
    eta = kappa * kappa / 8.0

    def scaled(nu):
        return modbessel_i_scaled(nu, eta)

    if which == 1:
        return np.pi / 4.0 * np.sqrt(size) * (scaled(-0.25) - sign * scaled(0.25))
    if which == 2:
        return np.pi / 16.0 * size ** 1.5 * (
            scaled(-0.75) - scaled(0.25) - sign * (scaled(0.75) - scaled(-0.25))
        )
    return np.pi / 128.0 * size ** 2.5 * (
        4.0 * scaled(-0.25) - 6.0 * scaled(0.75) + 2.0 * scaled(-1.25)
        - sign * (4.0 * scaled(0.25) - 6.0 * scaled(-0.75) + 2.0 * scaled(1.25))
    )


def _quadrature(which: int, kappa: np.ndarray) -> np.ndarray:
    # z = u^2 removes the endpoint singularity of z^{-1/2}
    def integrand(u):
        z = u * u
        weight = 2.0 * np.exp(-z * z)
        if which == 1:
            return weight * np.sin(np.pi / 4.0 - z * kappa)
        if which == 2:
            return weight * z * np.sin(z * kappa + np.pi / 4.0)
        return weight * z * z * np.sin(z * kappa - np.pi / 4.0)

    value, _ = quad_vec(integrand, 0.0, math.sqrt(UPPER_Z), epsabs=1e-11, epsrel=1e-12, norm='max', limit=20000)
    return value


def phi(which: int, kappa, method: PhiEvalMethod = PhiEvalMethod.CLOSED_FORM):
    '''Phi_1, Phi_2 or Phi_3 at kappa (scalar or array), |kappa| <= 60.'''
    if which not in (1, 2, 3):
        raise DomainError(f'Phi index must be 1, 2 or 3, got {which}')
    values = np.asarray(kappa, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(np.abs(values) > MAX_KAPPA):
        raise DomainError(f'Phi argument outside |kappa| <= {MAX_KAPPA:g}')
    flat = values.ravel()

    if PhiEvalMethod(method) is PhiEvalMethod.QUADRATURE:
        out = np.asarray(_quadrature(which, flat), dtype=float)
    else:
        out = np.full_like(flat, PHI_AT_ZERO[which])
        away = np.abs(flat) >= ZERO_KAPPA
        if away.any():
            out[away] = _closed_form(which, flat[away])
    out = out.reshape(values.shape)
    return float(out) if out.ndim == 0 else out
