from src.protocol.ancilla import AncillaSpec, ancilla_coefficients, beta_for_delta, delta_error
from src.protocol.branches import (
    GaussianBranch,
    branch_means,
    branch_superposition,
    diagonal_density,
    homodyne_density,
    run_branch_oracle,
)
from src.protocol.fock_oracle import pre_measurement_joint, run_fock_oracle
from src.protocol.params import DeltaMode, ProtocolParams, RunRecord, lock_beta
from src.protocol.runner import run, run_analytic, target_state
