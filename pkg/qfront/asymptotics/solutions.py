'''
Closed-form quasi-front solutions. Every family evaluates displacement,
velocity and acceleration at a real coordinate (lattice index on an axis or
the radius r = sqrt(n^2 + m^2)) and time t, broadcasting over both.
'''
from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np

from qfront.asymptotics.kappa import kappa_spec
from qfront.asymptotics.models import AsymptoticModel
from qfront.config import C1, EULER_GAMMA
from qfront.enums import Form, ModelFamily, PhiEvalMethod, Quantity
from qfront.errors import DomainError
from qfront.specfun import airy, bessel_j, bessel_j_derivs, bessel_j_prime, phi
from qfront.specfun.airy import MAX_ARGUMENT as AIRY_LIMIT
from qfront.specfun.phi import MAX_KAPPA as PHI_LIMIT

ORIGIN_BRANCH_BELOW = 0.5
SQRT_PI = np.sqrt(np.pi)
VISCOUS_SCALE = 3.0 * np.pi ** 1.5


def step_displacement(n_or_r: np.ndarray, t: np.ndarray) -> np.ndarray:
    '''
    Displacement under the unit step load, independent of lambda:
    arccosh(c1 t / r) H(c1 t - r) / (2 pi c1^2) away from the origin and
    (ln(12 t) + gamma) / (3 pi) at the loaded node.
    '''
    scale = 1.0 / (2.0 * np.pi * C1 ** 2)
    at_origin = n_or_r < ORIGIN_BRANCH_BELOW
    with np.errstate(divide='ignore', invalid='ignore'):
        ratio = C1 * t / np.where(at_origin, 1.0, n_or_r)
        away = np.where(ratio > 1.0, scale * np.arccosh(np.maximum(ratio, 1.0)), 0.0)
    origin = (np.log(12.0 * t) + EULER_GAMMA) / (3.0 * np.pi)
    return np.where(at_origin, origin, away)


def _profile_window(k: np.ndarray, limit: float, what: str) -> np.ndarray:
    '''Mask of kappa values needing evaluation; far ahead of the front the profile is zero.'''
    if np.any(k < -limit):
        raise DomainError(f'{what} needed at kappa = {k.min():.4g}, far behind the quasi-front (limit {limit:g})')
    return k <= limit


class FrontSolution(ABC):
    '''Strategy interface shared by all solution families.'''

    quantities: Tuple[Quantity, ...] = (Quantity.DISPLACEMENT, Quantity.VELOCITY, Quantity.ACCELERATION)
    heaviside_launch = False
    '''True when the formula carries H(t - 4 sigma) and is zero before launch.'''

    def __init__(self, model: AsymptoticModel, phi_method: PhiEvalMethod = PhiEvalMethod.CLOSED_FORM):
        self.model = model
        self.phi_method = phi_method

    def evaluate(self, quantity: Quantity, n_or_r, t):
        quantity = Quantity(quantity)
        if quantity not in self.quantities:
            raise DomainError(f'{self.model.family.value} has no {quantity.value} solution')
        r, times = np.broadcast_arrays(np.asarray(n_or_r, dtype=float), np.asarray(t, dtype=float))
        if np.any(r < 0):
            raise DomainError('coordinate must be >= 0')
        live = times > self.model.launch_delay
        if not self.heaviside_launch and not live.all():
            raise DomainError(f'{self.model.family.value} needs t > 0')
        out = np.zeros(r.shape)
        if live.any():
            out[live] = self._evaluate(quantity, r[live], times[live])
        return float(out) if out.ndim == 0 else out

    @abstractmethod
    def _evaluate(self, quantity: Quantity, r: np.ndarray, t: np.ndarray) -> np.ndarray:
        '''Values for launched points only (flat arrays).'''


class StepElasticBessel(FrontSolution):
    def _evaluate(self, quantity, r, t):
        if quantity is Quantity.DISPLACEMENT:
            return step_displacement(r, t)
        j = bessel_j(r, C1 * t)
        if quantity is Quantity.VELOCITY:
            return j * j / (2.0 * C1)
        return j * bessel_j_prime(r, C1 * t)


class StepElasticAiry(FrontSolution):
    def _evaluate(self, quantity, r, t):
        if quantity is Quantity.DISPLACEMENT:
            return step_displacement(r, t)
        spec = kappa_spec(self.model, t)
        k = spec.kappa(r)
        out = np.zeros_like(k)
        inside = _profile_window(k, AIRY_LIMIT, 'Ai')
        ai, aip, _ = airy(k[inside])
        if quantity is Quantity.VELOCITY:
            out[inside] = ai * ai / (2.0 * C1 * spec.width[inside] ** 2)
        else:
            out[inside] = -2.0 * ai * aip / (C1 * t[inside])
        return out


class StepViscous(FrontSolution):
    def _evaluate(self, quantity, r, t):
        if quantity is Quantity.DISPLACEMENT:
            return step_displacement(r, t)
        lam = self.model.lam
        k = kappa_spec(self.model, t).kappa(r)
        out = np.zeros_like(k)
        inside = _profile_window(k, PHI_LIMIT, 'Phi')
        ts = t[inside]
        if quantity is Quantity.VELOCITY:
            out[inside] = phi(1, k[inside], self.phi_method) / (VISCOUS_SCALE * (2.0 * lam * ts ** 3) ** 0.25)
        else:
            out[inside] = phi(2, k[inside], self.phi_method) / (VISCOUS_SCALE * (lam ** 3 * ts ** 5 / 2.0) ** 0.25)
        return out


class GaussShortBessel(FrontSolution):
    heaviside_launch = True

    def _evaluate(self, quantity, r, t):
        sigma = self.model.sigma
        x = C1 * (t - 4.0 * sigma)
        j = bessel_j(r, x)
        if quantity is Quantity.DISPLACEMENT:
            return SQRT_PI * sigma * j * j / (np.sqrt(2.0) * C1)
        if quantity is Quantity.VELOCITY:
            return np.sqrt(2.0 * np.pi) * sigma * j * bessel_j_prime(r, x)
        jp, jpp = bessel_j_derivs(r, x)
        return np.sqrt(2.0 * np.pi) * sigma * C1 * (jp * jp + j * jpp)


class GaussShortAiry(FrontSolution):
    heaviside_launch = True

    def _evaluate(self, quantity, r, t):
        sigma = self.model.sigma
        spec = kappa_spec(self.model, t)
        k = spec.kappa(r)
        out = np.zeros_like(k)
        inside = _profile_window(k, AIRY_LIMIT, 'Ai')
        w = spec.width[inside]
        ai, aip, aipp = airy(k[inside])
        if quantity is Quantity.DISPLACEMENT:
            out[inside] = SQRT_PI * sigma * ai * ai / (np.sqrt(2.0) * C1 * w * w)
        elif quantity is Quantity.VELOCITY:
            out[inside] = -2.0 ** 1.5 * SQRT_PI * sigma * ai * aip / (C1 * spec.t_eff[inside])
        else:
            out[inside] = np.sqrt(2.0 * np.pi) * sigma * C1 * (aip * aip + ai * aipp) / w ** 4
        return out


class GaussLowFreq(FrontSolution):
    heaviside_launch = True

    def _evaluate(self, quantity, r, t):
        sigma, lam = self.model.sigma, self.model.lam
        spec = kappa_spec(self.model, t)
        k = spec.kappa(r)
        out = np.zeros_like(k)
        inside = _profile_window(k, PHI_LIMIT, 'Phi')
        te = spec.t_eff[inside]
        spread = lam * te + sigma ** 2
        base = sigma / (3.0 * np.pi * np.sqrt(te))
        if quantity is Quantity.DISPLACEMENT:
            out[inside] = 2.0 ** 0.25 * base * phi(1, k[inside], self.phi_method) / spread ** 0.25
        elif quantity is Quantity.VELOCITY:
            out[inside] = 2.0 ** 0.75 * base * phi(2, k[inside], self.phi_method) / spread ** 0.75
        else:
            out[inside] = 2.0 ** 1.25 * base * phi(3, k[inside], self.phi_method) / spread ** 1.25
        return out


def eval_step_elastic(form: Form, quantity: Quantity, n_or_r, t):
    family = ModelFamily.STEP_ELASTIC if Form(form) is Form.BESSEL else ModelFamily.STEP_ELASTIC_AIRY
    solution = StepElasticBessel if family is ModelFamily.STEP_ELASTIC else StepElasticAiry
    return solution(AsymptoticModel(family)).evaluate(quantity, n_or_r, t)


def eval_step_viscous(quantity: Quantity, lam: float, n_or_r, t):
    if not lam > 0:
        raise DomainError(f'step-viscous needs lambda > 0, got {lam}; use the step-elastic family')
    return StepViscous(AsymptoticModel(ModelFamily.STEP_VISCOUS, lam)).evaluate(quantity, n_or_r, t)


def eval_gauss_short(form: Form, quantity: Quantity, sigma: float, n_or_r, t):
    if Form(form) is Form.BESSEL:
        solution = GaussShortBessel(AsymptoticModel(ModelFamily.GAUSS_SHORT, sigma=sigma))
    else:
        solution = GaussShortAiry(AsymptoticModel(ModelFamily.GAUSS_SHORT_AIRY, sigma=sigma))
    return solution.evaluate(quantity, n_or_r, t)


def eval_gauss_lowfreq(quantity: Quantity, sigma: float, lam: float, n_or_r, t):
    return GaussLowFreq(AsymptoticModel(ModelFamily.GAUSS_LOWFREQ, lam, sigma)).evaluate(quantity, n_or_r, t)
