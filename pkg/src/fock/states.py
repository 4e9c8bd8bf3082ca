from dataclasses import dataclass

import numpy as np
from loguru import logger
from scipy.special import gammaln

from src.utils.exceptions import ShapeMismatchError, TruncationError, ZeroNormError

NORM_TOL = 1e-10
SQUEEZE_TAIL_TOL = 1e-8
TAIL_ENTRIES = 4


@dataclass(frozen=True)
class FockVector:
    """
    Amplitudes in a truncated number basis.

    A 1-D array is a single mode; a 2-D array is a two-mode joint state with
    rows indexing mode a and columns indexing mode b.
    """
    amps: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        amps = np.array(self.amps, dtype=np.complex128)
        if amps.ndim not in (1, 2) or amps.size == 0:
            raise ValueError(f"FockVector needs a non-empty 1-D or 2-D array, got shape {amps.shape}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("FockVector amplitudes must be finite")
        amps.flags.writeable = False
        object.__setattr__(self, "amps", amps)
        if self.normalized and abs(self.norm_squared() - 1.0) > NORM_TOL:
            raise ValueError(f"FockVector marked normalized has norm^2 {self.norm_squared():.15f}")

    @property
    def dim(self) -> int:
        return self.amps.shape[0]

    @property
    def shape(self) -> tuple:
        return self.amps.shape

    @property
    def is_joint(self) -> bool:
        return self.amps.ndim == 2

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))

    def normalize(self) -> "FockVector":
        norm2 = self.norm_squared()
        if norm2 <= 0.0:
            raise ZeroNormError("FockVector")
        return FockVector(self.amps / np.sqrt(norm2), normalized=True)

    def tail_mass(self) -> float:
        """Probability carried by the last TAIL_ENTRIES number states of every mode."""
        probs = np.abs(self.amps) ** 2
        if not self.is_joint:
            return float(probs[-TAIL_ENTRIES:].sum())
        edge = probs[-TAIL_ENTRIES:, :].sum() + probs[:, -TAIL_ENTRIES:].sum()
        return float(edge - probs[-TAIL_ENTRIES:, -TAIL_ENTRIES:].sum())


def basis_state(n: int, dim: int) -> FockVector:
    if not 0 <= n < dim:
        raise ValueError(f"|{n}> does not fit dim={dim}")
    amps = np.zeros(dim, dtype=np.complex128)
    amps[n] = 1.0
    return FockVector(amps, normalized=True)


def tensor(a: FockVector, b: FockVector) -> FockVector:
    if a.is_joint or b.is_joint:
        raise ShapeMismatchError("two single-mode vectors", (a.shape, b.shape))
    return FockVector(np.outer(a.amps, b.amps), normalized=a.normalized and b.normalized)


def _squeezed_log_amps(r: float, n_pairs: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(n_pairs)
    log_mag = (-0.5 * np.log(np.cosh(r)) + k * np.log(np.tanh(abs(r)))
               + 0.5 * gammaln(2 * k + 1) - k * np.log(2.0) - gammaln(k + 1))
    sign = np.where((k % 2 == 1) & (r > 0), -1.0, 1.0)
    return log_mag, sign


def squeezed_vacuum(r: float, dim: int) -> FockVector:
    """
    S(r)|0> with q-variance e^{-2r}/2. Odd amplitudes vanish; the missing
    probability beyond dim must stay below SQUEEZE_TAIL_TOL.
    """
    if dim < 1:
        raise ValueError(f"dim must be positive, got {dim}")
    amps = np.zeros(dim, dtype=np.complex128)
    if r == 0.0:
        amps[0] = 1.0
        return FockVector(amps, normalized=True)
    log_mag, sign = _squeezed_log_amps(r, (dim + 1) // 2)
    amps[0::2] = sign * np.exp(log_mag)
    missing = 1.0 - float(np.sum(np.abs(amps) ** 2))
    if missing > SQUEEZE_TAIL_TOL:
        raise TruncationError(dim, missing, _suggest_squeeze_dim(r, dim))
    logger.debug(f"   squeezed_vacuum r={r:.6g} dim={dim} missing={missing:.2e}")
    return FockVector(amps / np.sqrt(1.0 - missing), normalized=True)


def _suggest_squeeze_dim(r: float, dim: int) -> int:
    n_pairs = (dim + 1) // 2
    while n_pairs < 1 << 16:
        n_pairs *= 2
        log_mag, _ = _squeezed_log_amps(r, n_pairs)
        cumulative = np.cumsum(np.exp(2 * log_mag))
        fits = np.nonzero(1.0 - cumulative <= SQUEEZE_TAIL_TOL)[0]
        if fits.size:
            return int(2 * (fits[0] + 1))
    return 2 * n_pairs


def fock_fidelity(a: FockVector, b: FockVector) -> float:
    """|<a|b>|^2 for two normalized states of equal shape."""
    if a.shape != b.shape:
        raise ShapeMismatchError(a.shape, b.shape)
    return float(abs(np.vdot(a.amps, b.amps)) ** 2)
