import numpy as np
from scipy.signal import find_peaks

from src.utils.exceptions import InsufficientPeaksError

PEAK_FLOOR = 0.1


def peak_spacing(profile, grid, floor: float = PEAK_FLOOR) -> float:
    """Median distance between local maxima that reach floor * max(profile)."""
    profile = np.asarray(profile, dtype=np.float64)
    grid = np.asarray(grid, dtype=np.float64)
    peaks, _ = find_peaks(profile, height=floor * profile.max())
    if peaks.size < 2:
        raise InsufficientPeaksError(int(peaks.size))
    return float(np.median(np.diff(grid[peaks])))
