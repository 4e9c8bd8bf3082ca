from .exceptions import (
    CoefficientOverflowError,
    ConfigError,
    GeometryError,
    GKPKerrError,
    InsufficientPeaksError,
    SeriesCutoffError,
    ShapeMismatchError,
    ToleranceViolationError,
    TruncationError,
    UnsupportedOrderError,
    ZeroNormError,
)
