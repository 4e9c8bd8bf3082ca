from src.comb.fock_bridge import to_fock
from src.comb.gaussian_comb import GaussianComb, Peak, comb_fidelity, overlap
from src.comb.squeeze import SqueezeParams, squeeze_convert, squeeze_db
from src.comb.states import (
    HermiteOrder,
    delta_pattern,
    displacement_phase,
    envelope,
    generated_comb,
    gkp_finite,
    hermite_factor,
    reference_gkp,
)
