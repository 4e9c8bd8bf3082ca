from src.comb.squeeze import squeeze_convert, squeeze_db
from src.metrics.fidelity import (
    GeometryPoint,
    SweepResult,
    SweepRow,
    delta_sensitivity,
    exact_delta_sensitivity,
    fidelity_at,
    fidelity_curve,
)
from src.metrics.misid import misidentify_prob
from src.metrics.selection import (
    Density,
    SelectionCurve,
    SelectionRow,
    mean_fidelity,
    selection_curve,
    selection_row,
    success_probability,
    v_up_for_success,
)
