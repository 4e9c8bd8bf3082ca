from dataclasses import dataclass

import numpy as np

from src.utils.exceptions import ZeroNormError


@dataclass(frozen=True)
class Peak:
    """weight * exp(-(q - center)^2 / (2 width2)) * exp(-i phase_slope q)"""
    weight: complex
    center: float
    width2: float
    phase_slope: float = 0.0


@dataclass(frozen=True)
class GaussianComb:
    """
    Position-space wavefunction built from Gaussian peaks.

    Holds every GKP-type state in the package: the finite and reference
    targets, the closed-form generated state and the branch oracle output.
    """
    peaks: tuple
    normalized: bool = False

    def __post_init__(self):
        if not self.peaks:
            raise ValueError("GaussianComb needs at least one peak")
        if any(p.width2 <= 0 for p in self.peaks):
            raise ValueError("peak widths must be positive")
        object.__setattr__(self, "peaks", tuple(self.peaks))

    @classmethod
    def from_arrays(cls, weights, centers, width2, slopes=None, normalized=False) -> "GaussianComb":
        weights = np.asarray(weights, dtype=np.complex128)
        centers = np.asarray(centers, dtype=np.float64)
        widths = np.broadcast_to(np.asarray(width2, dtype=np.float64), centers.shape)
        slopes = np.zeros_like(centers) if slopes is None else np.broadcast_to(np.asarray(slopes, dtype=np.float64), centers.shape)
        peaks = tuple(
            Peak(complex(w), float(c), float(u), float(s))
            for w, c, u, s in zip(weights, centers, widths, slopes)
        )
        return cls(peaks, normalized=normalized)

    @property
    def weights(self) -> np.ndarray:
        return np.array([p.weight for p in self.peaks], dtype=np.complex128)

    @property
    def centers(self) -> np.ndarray:
        return np.array([p.center for p in self.peaks])

    @property
    def widths(self) -> np.ndarray:
        return np.array([p.width2 for p in self.peaks])

    @property
    def slopes(self) -> np.ndarray:
        return np.array([p.phase_slope for p in self.peaks])

    def __len__(self) -> int:
        return len(self.peaks)

    def norm_squared(self) -> float:
        return float(overlap(self, self).real)

    def normalize(self) -> "GaussianComb":
        norm2 = self.norm_squared()
        if norm2 <= 0.0:
            raise ZeroNormError("GaussianComb")
        return GaussianComb.from_arrays(
            self.weights / np.sqrt(norm2), self.centers, self.widths, self.slopes, normalized=True
        )

    def wavefunction(self, q) -> np.ndarray:
        q = np.asarray(q, dtype=np.float64)
        grid = q[..., None]
        terms = self.weights * np.exp(-(grid - self.centers) ** 2 / (2 * self.widths) - 1j * self.slopes * grid)
        return terms.sum(axis=-1)

    def support(self, reach: float = 12.0) -> tuple[float, float]:
        """Interval outside which every peak is below exp(-reach^2/2) of its height."""
        spread = reach * np.sqrt(self.widths)
        return float(np.min(self.centers - spread)), float(np.max(self.centers + spread))


def overlap(a: GaussianComb, b: GaussianComb) -> complex:
    """<a|b>, summed in closed form over every pair of peaks."""
    w1, c1, u1, s1 = (arr[:, None] for arr in (a.weights, a.centers, a.widths, a.slopes))
    w2, c2, u2, s2 = b.weights, b.centers, b.widths, b.slopes
    total = u1 + u2
    width = u1 * u2 / total
    mean = (c1 * u2 + c2 * u1) / total
    k = s1 - s2
    exponent = -(c1 - c2) ** 2 / (2 * total) + 1j * k * mean - 0.5 * k ** 2 * width
    terms = np.conj(w1) * w2 * np.sqrt(2 * np.pi * width) * np.exp(exponent)
    return complex(terms.sum())


def comb_fidelity(a: GaussianComb, b: GaussianComb) -> float:
    norm_a = a.norm_squared()
    norm_b = b.norm_squared()
    if norm_a <= 0.0:
        raise ZeroNormError("first comb")
    if norm_b <= 0.0:
        raise ZeroNormError("second comb")
    value = abs(overlap(a, b)) ** 2 / (norm_a * norm_b)
    return float(min(max(value, 0.0), 1.0))
