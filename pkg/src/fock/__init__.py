from src.fock.hermite import (
    STABLE_ORDER,
    hermite_function_grid,
    hermite_functions,
    quad_amplitude,
    scaled_hermite_functions,
)
from src.fock.operators import cross_kerr, displace, homodyne_project, schmidt_coefficients
from src.fock.states import FockVector, basis_state, fock_fidelity, squeezed_vacuum, tensor
