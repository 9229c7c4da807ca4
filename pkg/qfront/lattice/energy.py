import numpy as np

from qfront.config import SimParams
from qfront.structures import LatticeState


def full_plane(quadrant: np.ndarray) -> np.ndarray:
    '''Rebuild indices -N..N from the mirror-symmetric quadrant.'''
    rows = np.vstack([quadrant[:0:-1], quadrant])
    return np.hstack([rows[:, :0:-1], rows])


def bond_product(a: np.ndarray, b: np.ndarray) -> float:
    '''<a, K b> with K = -D: half of the bond-difference products over axial and diagonal bonds.'''
    total = (
        np.sum(np.diff(a, axis=0) * np.diff(b, axis=0))
        + np.sum(np.diff(a, axis=1) * np.diff(b, axis=1))
        + np.sum((a[1:, 1:] - a[:-1, :-1]) * (b[1:, 1:] - b[:-1, :-1]))
        + np.sum((a[1:, :-1] - a[:-1, 1:]) * (b[1:, :-1] - b[:-1, 1:]))
    )
    return 0.5 * float(total)


def lattice_energy(state: LatticeState, params: SimParams) -> float:
    '''
    Discrete energy of the leapfrog scheme at the half level k - 1/2.
    Conserved exactly for lam = 0 once the load vanishes and non-increasing for lam > 0.
    '''
    curr = full_plane(state.phi_curr)
    prev = full_plane(state.phi_prev)
    velocity = (curr - prev) / state.tau
    kinetic = 0.5 * float(np.sum(velocity * velocity))
    viscous = 0.25 * params.lam * state.tau * bond_product(velocity, velocity)
    return kinetic - viscous + 0.5 * bond_product(curr, prev)
