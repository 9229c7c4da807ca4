import numpy as np

from qfront.errors import BoundaryError


def apply_operator_D(field: np.ndarray, n: int, m: int) -> float:
    '''
    Nine-point operator D at node (n, m) of the quadrant: half of the sum of the
    eight neighbours minus 8 phi. Indices below zero are mirrored
    (phi[-i, j] = phi[i, j]); the outer row and column N are a fixed boundary.
    '''
    last = field.shape[0] - 1
    if not (0 <= n < last and 0 <= m < last):
        raise BoundaryError(f'operator D undefined at ({n},{m}); valid range is 0..{last - 1}')

    def at(i, j):
        return field[abs(i), abs(j)]

    neighbours = (
        at(n + 1, m + 1) + at(n - 1, m - 1) + at(n + 1, m - 1) + at(n - 1, m + 1)
        + at(n + 1, m) + at(n - 1, m) + at(n, m - 1) + at(n, m + 1)
    )
    return 0.5 * (neighbours - 8.0 * field[n, m])


def mirror_pad(field: np.ndarray) -> np.ndarray:
    '''Prepend the mirror row and column (index -1 holds index 1).'''
    return np.pad(field, ((1, 0), (1, 0)), mode='reflect')


def operator_rows(padded: np.ndarray, lo: int, hi: int) -> np.ndarray:
    '''
    D applied to rows lo..hi-1, columns 0..N-1, of the field whose mirror padding
    is `padded`. Neighbour pairs are summed so that the result is exactly
    symmetric under n <-> m for a symmetric field.
    '''
    width = padded.shape[1] - 2
    north = padded[lo + 2:hi + 2]
    centre = padded[lo + 1:hi + 1]
    south = padded[lo:hi]
    diagonal = (north[:, 2:width + 2] + south[:, 0:width]) + (north[:, 0:width] + south[:, 2:width + 2])
    axial = (north[:, 1:width + 1] + centre[:, 2:width + 2]) + (south[:, 1:width + 1] + centre[:, 0:width])
    return 0.5 * ((diagonal + axial) - 8.0 * centre[:, 1:width + 1])


def operator_field(field: np.ndarray) -> np.ndarray:
    '''D on every updatable node; row and column N of the result are zero.'''
    out = np.zeros_like(field, dtype=float)
    last = field.shape[0] - 1
    out[:last, :last] = operator_rows(mirror_pad(field), 0, last)
    return out
