from .operator import apply_operator_D, operator_field
from .loads import load_amplitude
from .stepper import StepperPool, step_once
from .probes import differentiate_series
from .energy import lattice_energy
