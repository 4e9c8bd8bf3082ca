import math
from dataclasses import dataclass, replace
from enum import Enum
from functools import cached_property
from typing import Optional

from src.comb.squeeze import SqueezeParams
from src.comb.states import SQRT_PI, HermiteOrder
from src.protocol.ancilla import AncillaSpec, ancilla_coefficients, delta_error
from src.utils.exceptions import GeometryError

LOCK_PERIOD = 2 * SQRT_PI


class DeltaMode(Enum):
    """How the momentum displacement error is obtained."""
    EXACT = "exact"         # rotation step from the chord geometry, delta follows from beta
    FORCED_ZERO = "zero"    # branches placed ideally, delta = 0
    FORCED_VALUE = "value"  # branches placed ideally, delta given


def lock_beta(beta: float, delta: float = 0.0) -> float:
    """Nearest beta with beta + delta a multiple of 2 sqrt(pi)."""
    return LOCK_PERIOD * round((beta + delta) / LOCK_PERIOD) - delta


@dataclass(frozen=True)
class ProtocolParams:
    """
    One configuration of the generation protocol.

    D1 shifts the signal by (-gamma, -beta) in (q, p), D2 shifts p by
    beta + delta. With phase_lock the effective beta is moved to the nearest
    value where every branch's displacement phase cancels.
    """
    sp: SqueezeParams
    m: int
    beta: float = 315.0
    gamma: Optional[float] = None
    theta: Optional[float] = None
    v_up: float = 0.0
    delta_mode: DeltaMode = DeltaMode.FORCED_ZERO
    forced_delta: float = 0.0
    phase_lock: bool = True
    logical: int = 0
    hermite_order: HermiteOrder = HermiteOrder.DOUBLED

    def __post_init__(self):
        if self.m < 0:
            raise ValueError(f"m must be non-negative, got {self.m}")
        if self.v_up < 0:
            raise ValueError(f"v_up must be non-negative, got {self.v_up}")
        if self.forced_delta < 0:
            raise ValueError(f"forced_delta must be non-negative, got {self.forced_delta}")
        if self.logical not in (0, 1):
            raise ValueError(f"logical must be 0 or 1, got {self.logical}")
        if self.theta is None and self.gamma_eff != 0:
            ratio = self.gamma_eff / (self.m * self.beta) if self.m and self.beta else math.inf
            if abs(ratio) > 1:
                raise GeometryError(ratio)

    def with_(self, **changes) -> "ProtocolParams":
        return replace(self, **changes)

    @property
    def gamma_eff(self) -> float:
        return 2 * self.m * SQRT_PI if self.gamma is None else self.gamma

    def _geometric_delta(self, beta: float) -> float:
        if self.theta is not None:
            return 2 * beta * math.sin(self.theta / 2) ** 2
        return delta_error(beta, self.gamma_eff, self.m)

    @cached_property
    def beta_eff(self) -> float:
        if not self.phase_lock:
            return self.beta
        if self.delta_mode is not DeltaMode.EXACT:
            return lock_beta(self.beta, self._forced())
        target = lock_beta(self.beta + self._geometric_delta(self.beta))
        beta = self.beta
        for _ in range(100):
            updated = target - self._geometric_delta(beta)
            if abs(updated - beta) < 1e-12:
                break
            beta = updated
        return updated

    @cached_property
    def theta_eff(self) -> float:
        if self.theta is not None:
            return self.theta
        if self.gamma_eff == 0:
            return 0.0
        return math.asin(self.gamma_eff / (self.m * self.beta_eff))

    @cached_property
    def delta(self) -> float:
        if self.delta_mode is DeltaMode.EXACT:
            return self._geometric_delta(self.beta_eff)
        return self._forced()

    def _forced(self) -> float:
        return self.forced_delta if self.delta_mode is DeltaMode.FORCED_VALUE else 0.0

    @cached_property
    def ancilla(self) -> AncillaSpec:
        return ancilla_coefficients(self.m, self.sp.kappa2, self.logical)

    def accepts(self, x: float) -> bool:
        return abs(x) <= self.v_up


@dataclass(frozen=True)
class RunRecord:
    x: float
    accepted: bool
    state: object       # GaussianComb or FockVector
    density: float
    fidelity: float
