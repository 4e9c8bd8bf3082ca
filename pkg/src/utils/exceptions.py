class GKPKerrError(Exception):
    """Base class for every domain error raised by the simulator."""


class TruncationError(GKPKerrError):
    """
    Raised when a Fock-space vector does not fit its truncation.
    """
    def __init__(self, dim: int, tail_mass: float, suggested_dim: int | None = None):
        self.dim = dim
        self.tail_mass = tail_mass
        self.suggested_dim = suggested_dim
        hint = f"; try dim >= {suggested_dim}" if suggested_dim else ""
        super().__init__(f"Truncation dim={dim} leaves tail mass {tail_mass:.3e}{hint}")


class UnsupportedOrderError(GKPKerrError):
    def __init__(self, order: int, bound: int):
        self.order = order
        self.bound = bound
        super().__init__(f"Hermite order {order} exceeds the stable bound {bound}")


class ShapeMismatchError(GKPKerrError):
    def __init__(self, expected, actual):
        self.expected = expected
        self.actual = actual
        super().__init__(f"Shape mismatch: expected {expected}, got {actual}")


class ZeroNormError(GKPKerrError):
    def __init__(self, what: str):
        self.what = what
        super().__init__(f"Zero norm: {what}")


class GeometryError(GKPKerrError):
    """
    Raised when gamma/(m*beta) leaves [-1, 1], so no rotation angle places the branches.
    """
    def __init__(self, ratio: float):
        self.ratio = ratio
        super().__init__(f"Impossible displacement geometry: gamma/(m*beta) = {ratio:.6g}")


class CoefficientOverflowError(GKPKerrError):
    def __init__(self, m: int):
        self.m = m
        super().__init__(f"Ancilla coefficients overflow for m={m}")


class InsufficientPeaksError(GKPKerrError):
    def __init__(self, found: int):
        self.found = found
        super().__init__(f"Need at least two peaks, found {found}")


class SeriesCutoffError(GKPKerrError):
    def __init__(self, n_max: int, tail: float):
        self.n_max = n_max
        self.tail = tail
        super().__init__(f"Series cutoff n_max={n_max} leaves Poisson tail {tail:.3e}")


class ConfigError(GKPKerrError):
    """
    Raised for unknown keys or unparseable values in an experiment config.
    line is 1-based; 0 means the value came from --override.
    """
    def __init__(self, key: str, line: int, reason: str):
        self.key = key
        self.line = line
        self.reason = reason
        where = "override" if line == 0 else f"line {line}"
        super().__init__(f"Config error at {where}, key {key}: {reason}")


class ToleranceViolationError(GKPKerrError):
    def __init__(self, point: dict, value: float, tolerance: float):
        self.point = point
        self.value = value
        self.tolerance = tolerance
        super().__init__(f"Tolerance violated at {point}: {value:.3e} > {tolerance:.1e}")
