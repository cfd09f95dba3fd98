"""Hybrid sensing-radius law: a guaranteed inner disk plus a random extension.

A sensor senses everything within radius r = r_in + y, where the extension y
follows a unit-rate exponential distribution truncated to (0, R'] with
R' = r_out - r_in. The module provides the exact density and distribution
function of y, the first two moments of r, and inverse-CDF sampling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = ["HybridRadiusModel"]


@dataclass(frozen=True)
class HybridRadiusModel:
    """Distribution of the sensing radius r = r_in + y.

    Parameters
    ----------
    r_in : float
        Guaranteed inner sensing range in meters, 0 <= r_in <= r_out.
    r_out : float
        Maximum sensing range in meters.

    The exponential rate is dimensionally 1/m and fixed at 1. When
    r_in == r_out the model is degenerate: the radius is deterministically
    r_in, the moments are r_in and r_in**2, and the extension has no density.
    """

    r_in: float
    r_out: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r_in) and math.isfinite(self.r_out)):
            raise ValueError("radius bounds must be finite")
        if not 0.0 <= self.r_in <= self.r_out:
            raise ValueError(
                "radius bounds must satisfy 0 <= r_in <= r_out, got "
                f"r_in={self.r_in}, r_out={self.r_out}"
            )

    @property
    def spread(self) -> float:
        """Width R' = r_out - r_in of the extension's support, in meters."""
        return self.r_out - self.r_in

    @property
    def is_degenerate(self) -> bool:
        """True when the radius is deterministic (r_in == r_out)."""
        return self.spread == 0.0

    @property
    def _mass(self) -> float:
        # normalizing constant 1 - e^{-R'} of the truncated exponential
        return -math.expm1(-self.spread)

    def _require_nondegenerate(self) -> None:
        if self.is_degenerate:
            raise ValueError(
                "degenerate model (r_in == r_out): the extension is a point "
                "mass at zero and has no density"
            )

    def pdf_y(self, y: float) -> float:
        """Density of the radius extension at y, in 1/m.

        Returns e^{-y} / (1 - e^{-R'}) for 0 < y <= R' and 0 outside the
        support. Raises ValueError for the degenerate model.
        """
        self._require_nondegenerate()
        if y <= 0.0 or y > self.spread:
            return 0.0
        return math.exp(-y) / self._mass

    def cdf_y(self, y: float) -> float:
        """Distribution function P(extension <= y)."""
        self._require_nondegenerate()
        if y <= 0.0:
            return 0.0
        if y >= self.spread:
            return 1.0
        return -math.expm1(-y) / self._mass

    def mean_extension(self) -> float:
        """E[y] = 1 - R' e^{-R'} / (1 - e^{-R'}); zero when degenerate."""
        if self.is_degenerate:
            return 0.0
        return 1.0 - self.spread * math.exp(-self.spread) / self._mass

    def mean_r(self) -> float:
        """Mean sensing radius E[r] = r_in + E[y], in meters."""
        return self.r_in + self.mean_extension()

    def mean_r_squared(self) -> float:
        """Second moment E[r^2] of the sensing radius, in m^2."""
        if self.is_degenerate:
            return self.r_in * self.r_in
        tail = self.spread * self.spread * math.exp(-self.spread) / self._mass
        return self.r_in * self.r_in + 2.0 * self.mean_extension() * (1.0 + self.r_in) - tail

    def sample_extensions(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Draw n extensions by inverse CDF; every value lies in (0, R']."""
        if self.is_degenerate:
            return np.zeros(n)
        # 1 - random() is uniform on (0, 1], keeping y strictly positive and
        # letting u = 1 map to y = R' exactly (support is right-closed)
        u = 1.0 - rng.random(n)
        y = -np.log1p(-u * self._mass)
        return np.minimum(y, self.spread)

    def sample_radii(self, rng: np.random.Generator, n: int) -> np.ndarray:
        """Draw n sensing radii r = r_in + y; deterministic given rng state."""
        return self.r_in + self.sample_extensions(rng, n)

    def sample_radius(self, rng: np.random.Generator) -> float:
        """Draw one sensing radius."""
        return float(self.sample_radii(rng, 1)[0])
