import numpy as np
import pytest

from qfront.errors import BoundaryError
from qfront.lattice.operator import apply_operator_D, mirror_pad, operator_field


def kronecker(size=6):
    field = np.zeros((size, size))
    field[0, 0] = 1.0
    return field


def test_uniform_field_is_annihilated():
    assert apply_operator_D(np.ones((6, 6)), 2, 3) == 0.0


def test_kronecker_field_at_origin_and_diagonal():
    field = kronecker()
    assert apply_operator_D(field, 0, 0) == -4.0
    assert apply_operator_D(field, 1, 1) == 0.5
    assert apply_operator_D(field, 1, 0) == 0.5
    assert apply_operator_D(field, 2, 2) == 0.0


@pytest.mark.parametrize('node', [(5, 0), (0, 5), (-1, 2)])
def test_boundary_nodes_are_rejected(node):
    with pytest.raises(BoundaryError):
        apply_operator_D(kronecker(), *node)


def test_mirror_pad_reflects_first_row_and_column():
    field = np.arange(16.0).reshape(4, 4)
    padded = mirror_pad(field)
    assert padded.shape == (5, 5)
    np.testing.assert_array_equal(padded[0, 1:], field[1])
    np.testing.assert_array_equal(padded[1:, 0], field[:, 1])


def test_vectorised_operator_matches_pointwise():
    rng = np.random.default_rng(7)
    field = rng.normal(size=(9, 9))
    field[-1, :] = 0.0
    field[:, -1] = 0.0
    result = operator_field(field)
    expected = np.zeros_like(field)
    for n in range(8):
        for m in range(8):
            expected[n, m] = apply_operator_D(field, n, m)
    np.testing.assert_allclose(result, expected, rtol=0, atol=1e-12)
    assert not result[-1].any() and not result[:, -1].any()


def test_symmetric_field_gives_exactly_symmetric_result():
    rng = np.random.default_rng(11)
    half = rng.normal(size=(12, 12))
    field = half + half.T
    field[-1, :] = 0.0
    field[:, -1] = 0.0
    result = operator_field(field)
    assert np.array_equal(result, result.T)
