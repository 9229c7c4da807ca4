import numpy as np

from qfront.lattice.energy import bond_product, full_plane
from qfront.lattice.loads import load_negligible_after
from qfront.system import LatticeSimulator


def history_after_load(params):
    simulator = LatticeSimulator(params)
    simulator.run()
    history = np.array(simulator.energy_history)
    return history[history[:, 0] > load_negligible_after(params.load) + params.tau, 1]


def test_full_plane_mirrors_the_quadrant():
    quadrant = np.array([[1.0, 2.0, 0.0], [2.0, 3.0, 0.0], [0.0, 0.0, 0.0]])
    plane = full_plane(quadrant)
    assert plane.shape == (5, 5)
    assert plane[2, 2] == 1.0
    np.testing.assert_array_equal(plane, plane[::-1])
    np.testing.assert_array_equal(plane, plane[:, ::-1])


def test_bond_product_of_constant_field_vanishes():
    assert bond_product(np.ones((5, 5)), np.ones((5, 5))) == 0.0
    spike = np.zeros((5, 5))
    spike[2, 2] = 1.0
    # eight bonds of stiffness 1/2
    assert bond_product(spike, spike) == 4.0


def test_elastic_energy_is_conserved(pulse_params):
    energy = history_after_load(pulse_params)
    assert energy.size > 100
    assert energy[0] > 0
    assert (energy.max() - energy.min()) / energy[0] < 1e-9


def test_viscous_energy_never_grows(pulse_params):
    pulse_params.lam = 0.1
    energy = history_after_load(pulse_params)
    assert np.all(np.diff(energy) <= 1e-12 * np.abs(energy).max())
    assert energy[-1] < 0.9 * energy[0]
