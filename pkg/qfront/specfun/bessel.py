'''
Bessel functions of the first kind on the envelope |nu| <= 200, 0 <= x <= 500.

Integer orders use Miller's backward recurrence normalised by
J_0 + 2 (J_2 + J_4 + ...) = 1; real orders use the Schlafli integral
    J_nu(x) = (1/pi) int_0^pi cos(nu t - x sin t) dt
              - (sin(nu pi)/pi) int_0^inf exp(-x sinh u - nu u) du.
'''
import numpy as np
from scipy.integrate import quad_vec
from scipy.special import gammaln

from qfront.errors import DomainError

MAX_ORDER = 200.0
MAX_ARGUMENT = 500.0
RESCALE_ABOVE = 1e200
RESCALE_BY = 1e-200
SERIES_BELOW = 1e-8

METHODS = ('auto', 'recurrence', 'integral')


def _check_envelope(nu, x):
    if not (np.all(np.isfinite(nu)) and np.all(np.isfinite(x))):
        raise DomainError('Bessel order and argument must be finite')
    if np.any(np.abs(nu) > MAX_ORDER):
        raise DomainError(f'Bessel order outside |nu| <= {MAX_ORDER:g}')
    if np.any(x < 0) or np.any(x > MAX_ARGUMENT):
        raise DomainError(f'Bessel argument outside 0 <= x <= {MAX_ARGUMENT:g}')


def _is_integer(nu):
    return np.equal(np.round(nu), nu)


def _miller(orders: np.ndarray, x: np.ndarray) -> np.ndarray:
    '''J_n(x) for integer n >= 0 and x > 0, flat arrays of equal size.'''
    top = max(float(orders.max()), float(x.max()))
    start = 2 * int((top + 30 + 25 * top ** (1.0 / 3.0)) // 2)

    two_over_x = 2.0 / x
    bj = np.ones_like(x)
    bjp = np.zeros_like(x)
    even_sum = np.zeros_like(x)
    answer = np.zeros_like(x)
    add_even = False
    for j in range(start, 0, -1):
        bj, bjp = j * two_over_x * bj - bjp, bj
        large = np.abs(bj) > RESCALE_ABOVE
        if large.any():
            bj[large] *= RESCALE_BY
            bjp[large] *= RESCALE_BY
            answer[large] *= RESCALE_BY
            even_sum[large] *= RESCALE_BY
        if add_even:
            even_sum += bj
        add_even = not add_even
        hit = orders == j
        if hit.any():
            answer[hit] = bjp[hit]
    answer = np.where(orders == 0, bj, answer)
    return answer / (2.0 * even_sum - bj)


def _recurrence(nu: np.ndarray, x: np.ndarray) -> np.ndarray:
    order = np.abs(nu).astype(int)
    out = np.where((order == 0) & (x == 0), 1.0, 0.0)
    tiny = (x > 0) & (x < SERIES_BELOW)
    if tiny.any():
        n, half = order[tiny], 0.5 * x[tiny]
        out[tiny] = np.exp(n * np.log(half) - gammaln(n + 1.0)) * (1.0 - half * half / (n + 1.0))
    regular = x >= SERIES_BELOW
    if regular.any():
        out[regular] = _miller(order[regular], x[regular])
    sign = np.where((nu < 0) & (order % 2 == 1), -1.0, 1.0)
    return sign * out


def _integral(nu: np.ndarray, x: np.ndarray) -> np.ndarray:
    out = np.zeros_like(x)
    at_origin = x == 0
    out[at_origin & (nu == 0)] = 1.0
    out[at_origin & (nu < 0) & ~_is_integer(nu)] = np.inf
    live = ~at_origin
    if not live.any():
        return out
    v, z = nu[live], x[live]

    def oscillatory(theta):
        return np.cos(v * theta - z * np.sin(theta))

    def tail(u):
        with np.errstate(over='ignore'):
            return np.exp(-z * np.sinh(u) - v * u)

    first, _ = quad_vec(oscillatory, 0.0, np.pi, epsabs=1e-12, epsrel=1e-12, norm='max', limit=20000)
    value = first / np.pi
    weight = np.sin(v * np.pi)
    if np.any(weight != 0):
        second, _ = quad_vec(tail, 0.0, np.inf, epsabs=1e-13, epsrel=1e-12, norm='max', limit=20000)
        value = value - weight / np.pi * second
    out[live] = value
    return out


def _bessel_raw(nu, x, method: str = 'auto'):
    if method not in METHODS:
        raise DomainError(f'unknown Bessel method {method!r}; expected one of {METHODS}')
    nu, x = np.broadcast_arrays(np.asarray(nu, dtype=float), np.asarray(x, dtype=float))
    shape = nu.shape
    nu, x = nu.ravel(), x.ravel()
    integer = _is_integer(nu)
    if method == 'recurrence' and not integer.all():
        raise DomainError('recurrence path needs integer orders')

    out = np.empty_like(x)
    use_recurrence = integer if method == 'auto' else np.full(x.shape, method == 'recurrence')
    if use_recurrence.any():
        out[use_recurrence] = _recurrence(nu[use_recurrence], x[use_recurrence])
    if (~use_recurrence).any():
        out[~use_recurrence] = _integral(nu[~use_recurrence], x[~use_recurrence])
    out = out.reshape(shape)
    return float(out) if out.ndim == 0 else out


def bessel_j(nu, x, method: str = 'auto'):
    '''
    J_nu(x), broadcasting over nu and x. `method` picks the recurrence or the
    integral; 'auto' takes the recurrence whenever the order is an integer.
    '''
    _check_envelope(np.asarray(nu, dtype=float), np.asarray(x, dtype=float))
    return _bessel_raw(nu, x, method)


def bessel_j_prime(nu, x, method: str = 'auto'):
    '''J'_nu = (J_{nu-1} - J_{nu+1}) / 2.'''
    nu_arr = np.asarray(nu, dtype=float)
    _check_envelope(nu_arr, np.asarray(x, dtype=float))
    return 0.5 * (_bessel_raw(nu_arr - 1.0, x, method) - _bessel_raw(nu_arr + 1.0, x, method))


def bessel_j_derivs(nu, x, method: str = 'auto'):
    '''(J', J'') with J'' from the Bessel equation; J'' is NaN at x = 0.'''
    nu_arr = np.asarray(nu, dtype=float)
    x_arr = np.asarray(x, dtype=float)
    _check_envelope(nu_arr, x_arr)
    value = np.asarray(_bessel_raw(nu_arr, x_arr, method))
    first = np.asarray(0.5 * (_bessel_raw(nu_arr - 1.0, x_arr, method) - _bessel_raw(nu_arr + 1.0, x_arr, method)))
    with np.errstate(divide='ignore', invalid='ignore'):
        second = np.where(x_arr > 0, (nu_arr ** 2 / x_arr ** 2 - 1.0) * value - first / x_arr, np.nan)
    if first.ndim == 0:
        return float(first), float(second)
    return first, second
