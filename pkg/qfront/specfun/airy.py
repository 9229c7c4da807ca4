import numpy as np

from qfront.errors import DomainError

AI_0 = 0.355028053887817239
'''Ai(0) = 3^{-2/3} / Gamma(2/3).'''
AI_PRIME_0 = 0.258819403792806798
'''-Ai'(0) = 3^{-1/3} / Gamma(1/3).'''

SERIES_LIMIT = 8.0
MAX_ARGUMENT = 100.0
SERIES_TERMS = 60
ASYMPTOTIC_TERMS = 20


def _asymptotic_coefficients(count: int):
    u = np.ones(count + 1)
    v = np.ones(count + 1)
    for k in range(1, count + 1):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216 * k)
        v[k] = -(6 * k + 1) / (6 * k - 1) * u[k]
    return u, v


_U, _V = _asymptotic_coefficients(ASYMPTOTIC_TERMS + 1)


def _maclaurin(x):
    cube = x ** 3
    square = x * x
    f_term = np.ones_like(x)
    g_term = x.copy()
    f, g = f_term.copy(), g_term.copy()
    df = np.zeros_like(x)
    dg = np.ones_like(x)
    for k in range(1, SERIES_TERMS):
        df = df + f_term * square / (3 * k - 1)
        dg = dg + g_term * square / (3 * k)
        f_term = f_term * cube / ((3 * k - 1) * (3 * k))
        g_term = g_term * cube / ((3 * k) * (3 * k + 1))
        f = f + f_term
        g = g + g_term
    return AI_0 * f - AI_PRIME_0 * g, AI_0 * df - AI_PRIME_0 * dg


def _decaying(x):
    zeta = 2.0 / 3.0 * x ** 1.5
    signs = (-1.0) ** np.arange(ASYMPTOTIC_TERMS + 1)
    powers = zeta[..., None] ** -np.arange(ASYMPTOTIC_TERMS + 1)
    su = np.sum(signs * _U[:ASYMPTOTIC_TERMS + 1] * powers, axis=-1)
    sv = np.sum(signs * _V[:ASYMPTOTIC_TERMS + 1] * powers, axis=-1)
    scale = np.exp(-zeta) / (2.0 * np.sqrt(np.pi))
    return scale * su / x ** 0.25, -scale * sv * x ** 0.25


def _oscillating(x):
    z = -x
    zeta = 2.0 / 3.0 * z ** 1.5
    k = np.arange(ASYMPTOTIC_TERMS // 2 + 1)
    signs = (-1.0) ** k
    even = zeta[..., None] ** -(2 * k)
    odd = zeta[..., None] ** -(2 * k + 1)
    u_even = np.sum(signs * _U[2 * k] * even, axis=-1)
    u_odd = np.sum(signs * _U[2 * k + 1] * odd, axis=-1)
    v_even = np.sum(signs * _V[2 * k] * even, axis=-1)
    v_odd = np.sum(signs * _V[2 * k + 1] * odd, axis=-1)
    phase = zeta - np.pi / 4.0
    ai = (np.cos(phase) * u_even + np.sin(phase) * u_odd) / (np.sqrt(np.pi) * z ** 0.25)
    aip = z ** 0.25 / np.sqrt(np.pi) * (np.sin(phase) * v_even - np.cos(phase) * v_odd)
    return ai, aip


def airy(x):
    '''
    (Ai, Ai', Ai'') for real |x| <= 100: Maclaurin series on |x| <= 8, the
    standard large-argument expansions beyond, and Ai'' = x Ai.
    '''
    values = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(values)) or np.any(np.abs(values) > MAX_ARGUMENT):
        raise DomainError(f'Airy argument outside |x| <= {MAX_ARGUMENT:g}')
    flat = values.ravel()
    ai = np.empty_like(flat)
    aip = np.empty_like(flat)

    near = np.abs(flat) <= SERIES_LIMIT
    right = flat > SERIES_LIMIT
    left = flat < -SERIES_LIMIT
    if near.any():
        ai[near], aip[near] = _maclaurin(flat[near])
    if right.any():
        ai[right], aip[right] = _decaying(flat[right])
    if left.any():
        ai[left], aip[left] = _oscillating(flat[left])

    ai = ai.reshape(values.shape)
    aip = aip.reshape(values.shape)
    aipp = values * ai
    if values.ndim == 0:
        return float(ai), float(aip), float(aipp)
    return ai, aip, aipp
