from typing import Optional

from src.comb.gaussian_comb import GaussianComb, comb_fidelity
from src.comb.states import generated_comb, gkp_finite, reference_gkp
from src.protocol.branches import homodyne_density
from src.protocol.params import ProtocolParams, RunRecord


def run_analytic(params: ProtocolParams, x: float) -> GaussianComb:
    """Closed-form heralded state after the correcting displacement."""
    return generated_comb(
        params.m, params.sp, x, params.delta, logical=params.logical, order=params.hermite_order
    )


def target_state(params: ProtocolParams, kind: str = "reference") -> GaussianComb:
    if kind == "reference":
        return reference_gkp(params.sp, params.logical)
    if kind == "finite":
        return gkp_finite(params.m, params.sp, params.logical)
    raise ValueError(f"unknown target kind {kind!r}")


def run(params: ProtocolParams, x: float, target: Optional[GaussianComb] = None) -> RunRecord:
    state = run_analytic(params, x)
    target = target_state(params) if target is None else target
    return RunRecord(
        x=x,
        accepted=params.accepts(x),
        state=state,
        density=homodyne_density(params, x),
        fidelity=comb_fidelity(target, state),
    )
