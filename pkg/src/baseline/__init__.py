from src.baseline.conventional import (
    BaselineParams,
    conventional_wavefn_p,
    conventional_wavefn_q,
    eta_n,
    fourier_to_p,
    series_cutoff,
)
from src.baseline.spacing import peak_spacing
