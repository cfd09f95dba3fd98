"""Closed-form detection analytics for a random sensor field and a growing fire.

Sensors form a planar Poisson field of the given density; each carries an
independent sensing disk drawn from a HybridRadiusModel. A front K(t) is
sensed iff some sensing disk meets it, which happens with probability
1 - exp(-N(t)) where N(t), the mean number of sensors in reach, expands by
the Steiner formula to density * (area + perimeter * E[r] + pi * E[r^2]).
The Steiner step is exact for the convex kinds and an upper bound for the
piriform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fire_geometry import FireGrowthParams, FireModelKind, front_at
from .radius_model import HybridRadiusModel

__all__ = [
    "FireScenario",
    "CoverageCurve",
    "mean_dilated_area",
    "mean_detectors",
    "sensing_probability",
    "critical_time",
    "detection_probability",
    "critical_density",
    "coverage_curve",
]

# Slack for the non-decreasing probability check; analytic curves are exactly
# monotone up to rounding of the perimeter quadrature.
_MONOTONE_SLACK = 1e-9


@dataclass(frozen=True)
class FireScenario:
    """Full parameter bundle for one detection analysis.

    Parameters
    ----------
    density : float
        Sensor density in 1/m^2, >= 0.
    radius_model : HybridRadiusModel
        Sensing-radius distribution.
    growth : FireGrowthParams
        Fire growth law (speed, wind, shape kind).
    critical_area : float
        Burned area in m^2 beyond which the fire counts as critical, > 0.
    tau : float
        Detection-probability threshold in (0, 1) used for density sizing.
    """

    density: float
    radius_model: HybridRadiusModel
    growth: FireGrowthParams
    critical_area: float
    tau: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.density) and self.density >= 0.0):
            raise ValueError(f"density must be non-negative, got {self.density}")
        if not (math.isfinite(self.critical_area) and self.critical_area > 0.0):
            raise ValueError(f"critical_area must be positive, got {self.critical_area}")
        if not (math.isfinite(self.tau) and 0.0 < self.tau < 1.0):
            raise ValueError(f"tau must lie strictly between 0 and 1, got {self.tau}")

    @property
    def kind(self) -> FireModelKind:
        return self.growth.kind


@dataclass(frozen=True)
class CoverageCurve:
    """Detection probability sampled over a time grid.

    kind is "analytic" for closed-form curves and "empirical" for Monte
    Carlo estimates; empirical curves carry per-point binomial standard
    errors and the realization count.
    """

    times: tuple[float, ...]
    probabilities: tuple[float, ...]
    kind: str
    stderrs: tuple[float, ...] | None = None
    n_realizations: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("analytic", "empirical"):
            raise ValueError(f"curve kind must be 'analytic' or 'empirical', got {self.kind!r}")
        if len(self.times) == 0:
            raise ValueError("a coverage curve needs at least one grid point")
        if len(self.times) != len(self.probabilities):
            raise ValueError("times and probabilities must have equal length")
        if self.stderrs is not None and len(self.stderrs) != len(self.times):
            raise ValueError("stderrs must match the grid length")
        times = np.asarray(self.times)
        probs = np.asarray(self.probabilities)
        if np.any(np.diff(times) < 0.0):
            raise ValueError("times must be sorted ascending")
        if times[0] < 0.0:
            raise ValueError("times must be non-negative")
        if np.any(probs < 0.0) or np.any(probs > 1.0):
            raise ValueError("probabilities must lie in [0, 1]")
        if np.any(np.diff(probs) < -_MONOTONE_SLACK):
            raise ValueError("probabilities must be non-decreasing in time")

    def __len__(self) -> int:
        return len(self.times)


def mean_dilated_area(scenario: FireScenario, t: float) -> float:
    """E over the sensing radius of the front area dilated by one disk, m^2.

    Steiner expansion: area + perimeter * E[r] + pi * E[r^2].
    """
    front = front_at(scenario.growth, t)
    rm = scenario.radius_model
    return front.area() + front.perimeter() * rm.mean_r() + math.pi * rm.mean_r_squared()


def mean_detectors(scenario: FireScenario, t: float) -> float:
    """Mean number of sensors whose disk meets the front at time t."""
    return scenario.density * mean_dilated_area(scenario, t)


def sensing_probability(scenario: FireScenario, t: float) -> float:
    """Probability that at least one sensor senses the front at time t."""
    return -math.expm1(-mean_detectors(scenario, t))


def critical_time(scenario: FireScenario) -> float:
    """Time at which the burned area reaches critical_area, in seconds.

    The enclosed area is pi * a * b = pi * (alpha*t)^2 * stretch for every
    kind (stretch = 1 without wind), so the critical time has the closed form
    sqrt(critical_area / (pi * stretch)) / alpha; the piriform shares the
    elliptical value.
    """
    g = scenario.growth
    return math.sqrt(scenario.critical_area / (math.pi * g.downwind_stretch)) / g.alpha


def detection_probability(scenario: FireScenario) -> float:
    """Probability the fire is sensed no later than the critical time."""
    return sensing_probability(scenario, critical_time(scenario))


def critical_density(scenario: FireScenario) -> float:
    """Sensor density that makes detection_probability equal tau, in 1/m^2."""
    denom = mean_dilated_area(scenario, critical_time(scenario))
    return -math.log1p(-scenario.tau) / denom


def coverage_curve(scenario: FireScenario, t_grid) -> CoverageCurve:
    """Analytic detection-probability curve over a sorted time grid."""
    times = tuple(float(t) for t in t_grid)
    probs = tuple(sensing_probability(scenario, t) for t in times)
    return CoverageCurve(times=times, probabilities=probs, kind="analytic")
