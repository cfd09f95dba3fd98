"""Monte Carlo oracle for the closed-form detection analytics.

Samples Poisson sensor fields with random sensing disks inside a finite
window, tests detection against growing fire fronts with exact geometry
(point-to-set distance, never the Steiner expansion), and reports empirical
probabilities, detection times, and dilated areas with binomial errors.

Determinism contract: every realization gets its own generator derived from
the master seed by a counter-based SeedSequence split, draws happen in a
fixed documented order (count, x, y, radii), and chunk results are assembled
in submission order, so results are bit-identical for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .coverage_analytics import CoverageCurve, FireScenario
from .fire_geometry import FireFront, FireGrowthParams, FireModelKind, distance_field, front_at
from .radius_model import HybridRadiusModel

__all__ = [
    "SimulationWindow",
    "BooleanRealization",
    "EmpiricalEstimate",
    "auto_window",
    "sample_realization",
    "detected_at",
    "detected_count",
    "detection_time",
    "estimate_sensing_probability",
    "estimate_dilated_area",
]

# Realizations per work chunk. Purely a performance knob: per-realization
# seeding makes results independent of the chunking, but the value must not
# depend on the worker count.
_CHUNK_REALIZATIONS = 512

# Sample chunk for hit-or-miss area estimation (memory bound, not statistical).
_CHUNK_SAMPLES = 200_000

# Time steps of the forward scan used for the non-nested piriform fronts.
_PIRIFORM_TIME_SCAN = 512


@dataclass(frozen=True)
class SimulationWindow:
    """Axis-aligned rectangle truncating the infinite sensor field, meters."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def __post_init__(self) -> None:
        values = (self.x_min, self.x_max, self.y_min, self.y_max)
        if not all(math.isfinite(v) for v in values):
            raise ValueError("window bounds must be finite")
        if self.x_max <= self.x_min or self.y_max <= self.y_min:
            raise ValueError(f"window must have positive extent, got {values}")

    @property
    def area(self) -> float:
        return (self.x_max - self.x_min) * (self.y_max - self.y_min)

    def covers(self, other: "SimulationWindow", tol: float = 1e-9) -> bool:
        """True if this window contains the other one (with tolerance)."""
        return (
            self.x_min <= other.x_min + tol
            and self.x_max >= other.x_max - tol
            and self.y_min <= other.y_min + tol
            and self.y_max >= other.y_max - tol
        )


def auto_window(
    growth: FireGrowthParams,
    radius_model: HybridRadiusModel,
    t_max: float,
    margin: float = 0.1,
) -> SimulationWindow:
    """Smallest window that matters, with a safety margin.

    A sensor can detect only if it lies within r_out of the final front, so
    the window is the bounding box of the front at t_max dilated by r_out,
    then scaled about its center by (1 + margin).
    """
    if margin < 0.0:
        raise ValueError(f"margin must be non-negative, got {margin}")
    x0, x1, y0, y1 = front_at(growth, t_max).bounding_box()
    reach = radius_model.r_out
    x0, x1, y0, y1 = x0 - reach, x1 + reach, y0 - reach, y1 + reach
    cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    hx, hy = 0.5 * (x1 - x0) * (1.0 + margin), 0.5 * (y1 - y0) * (1.0 + margin)
    return SimulationWindow(cx - hx, cx + hx, cy - hy, cy + hy)


@dataclass(frozen=True, eq=False)
class BooleanRealization:
    """One sampled sensor field: positions (n, 2) and radii (n,), meters."""

    positions: np.ndarray
    radii: np.ndarray
    window: SimulationWindow
    seed: object = field(repr=False, default=None)

    def __post_init__(self) -> None:
        if self.positions.shape != (len(self.radii), 2):
            raise ValueError("positions must be (n, 2) matching n radii")

    def __len__(self) -> int:
        return len(self.radii)


@dataclass(frozen=True)
class EmpiricalEstimate:
    """Monte Carlo estimate with its binomial standard error."""

    value: float
    stderr: float
    n_samples: int

    def __post_init__(self) -> None:
        if self.n_samples < 1:
            raise ValueError(f"need at least one sample, got {self.n_samples}")
        if not (math.isfinite(self.stderr) and self.stderr >= 0.0):
            raise ValueError(f"stderr must be non-negative, got {self.stderr}")


def sample_realization(scenario: FireScenario, window: SimulationWindow, seed) -> BooleanRealization:
    """Draw one Poisson sensor field, fully determined by the seed.

    Draw order is fixed: Poisson count, then x coordinates, then y
    coordinates, then radii.
    """
    rng = np.random.default_rng(seed)
    n = int(rng.poisson(scenario.density * window.area))
    xs = rng.uniform(window.x_min, window.x_max, n)
    ys = rng.uniform(window.y_min, window.y_max, n)
    radii = scenario.radius_model.sample_radii(rng, n)
    return BooleanRealization(
        positions=np.column_stack((xs, ys)), radii=radii, window=window, seed=seed
    )


def detected_at(realization: BooleanRealization, front: FireFront) -> bool:
    """True iff some sensor disk meets the front (tangency counts)."""
    if len(realization) == 0:
        return False
    return bool(np.any(front.distance_to_many(realization.positions) <= realization.radii))


def detected_count(realization: BooleanRealization, front: FireFront) -> int:
    """Number of sensors whose disk meets the front."""
    if len(realization) == 0:
        return 0
    return int(np.count_nonzero(front.distance_to_many(realization.positions) <= realization.radii))


def detection_time(
    realization: BooleanRealization, growth: FireGrowthParams, t_max: float
) -> float:
    """First time in [0, t_max] at which the field detects the fire.

    Returns math.inf when the fire stays undetected. For the nested kinds
    (circular, elliptical) each sensor's clearance dist(x_i, K(t)) - r_i is
    non-increasing in t, so the first contact is found by per-sensor
    bisection (60 halvings, far below the 1e-6 s tolerance). The piriform
    does not nest, so its clearance is scanned forward over a fixed time
    grid and the first sign change is refined by bisection; entry dips
    narrower than the scan step can be missed.
    """
    if not (math.isfinite(t_max) and t_max > 0.0):
        raise ValueError(f"t_max must be positive, got {t_max}")
    if len(realization) == 0:
        return math.inf
    x = realization.positions[:, 0]
    y = realization.positions[:, 1]
    r = realization.radii
    if np.any(np.hypot(x, y) <= r):
        return 0.0  # a sensor covers the ignition point

    alpha, stretch, kind = growth.alpha, growth.downwind_stretch, growth.kind

    def clearance(t):
        b = alpha * np.asarray(t, dtype=float)
        return distance_field(kind, b * stretch, b, x, y) - r

    if kind is FireModelKind.PIRIFORM:
        grid = np.linspace(0.0, t_max, _PIRIFORM_TIME_SCAN + 1)
        found = np.zeros(len(r), dtype=bool)
        lo = np.zeros(len(r))
        hi = np.zeros(len(r))
        for k in range(1, len(grid)):
            newly = ~found & (clearance(grid[k]) <= 0.0)
            lo = np.where(newly, grid[k - 1], lo)
            hi = np.where(newly, grid[k], hi)
            found |= newly
        if not np.any(found):
            return math.inf
        lo, hi = lo[found], hi[found]
        xs, ys, rs = x[found], y[found], r[found]
        for _ in range(40):
            mid = 0.5 * (lo + hi)
            b = alpha * mid
            d = distance_field(kind, b * stretch, b, xs, ys) - rs
            hit = d <= 0.0
            hi = np.where(hit, mid, hi)
            lo = np.where(hit, lo, mid)
        return float(np.min(hi))

    reachable = clearance(t_max) <= 0.0
    if not np.any(reachable):
        return math.inf
    xs, ys, rs = x[reachable], y[reachable], r[reachable]
    lo = np.zeros(len(rs))
    hi = np.full(len(rs), float(t_max))
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        b = alpha * mid
        d = distance_field(kind, b * stretch, b, xs, ys) - rs
        hit = d <= 0.0
        hi = np.where(hit, mid, hi)
        lo = np.where(hit, lo, mid)
    return float(np.min(hi))


def estimate_sensing_probability(
    scenario: FireScenario,
    t_grid,
    n_realizations: int,
    seed,
    *,
    n_threads: int = 1,
    window: SimulationWindow | None = None,
) -> CoverageCurve:
    """Empirical detection-probability curve over a sorted time grid.

    Per grid time, the reported value is the fraction of realizations whose
    first detection happens no later than that time; the running OR over the
    grid makes the curve non-decreasing by construction and gives exact
    first-passage semantics on the grid for every front kind. Standard
    errors are binomial, sqrt(p*(1-p)/n).
    """
    times = np.asarray(list(t_grid), dtype=float)
    if times.size == 0:
        raise ValueError("t_grid must contain at least one time")
    if np.any(np.diff(times) < 0.0) or times[0] < 0.0:
        raise ValueError("t_grid must be sorted and non-negative")
    if n_realizations < 1:
        raise ValueError(f"need at least one realization, got {n_realizations}")
    if n_threads < 1:
        raise ValueError(f"need at least one thread, got {n_threads}")

    t_max = float(times[-1])
    needed = auto_window(scenario.growth, scenario.radius_model, t_max, margin=0.0)
    if window is None:
        window = auto_window(scenario.growth, scenario.radius_model, t_max)
    elif not window.covers(needed):
        raise ValueError("window is too small: it must contain the final front dilated by r_out")

    fronts = [front_at(scenario.growth, float(t)) for t in times]
    children = np.random.SeedSequence(seed).spawn(n_realizations)

    def run_chunk(chunk_seeds) -> np.ndarray:
        realizations = [sample_realization(scenario, window, s) for s in chunk_seeds]
        m = len(realizations)
        counts = [len(rz) for rz in realizations]
        detected = np.zeros((m, times.size), dtype=bool)
        if sum(counts) == 0:
            return detected
        ridx = np.repeat(np.arange(m), counts)
        pos = np.concatenate([rz.positions for rz in realizations])
        rad = np.concatenate([rz.radii for rz in realizations])
        for j, front in enumerate(fronts):
            hit = front.distance_to_many(pos) <= rad
            if hit.any():
                detected[:, j] = np.bincount(ridx[hit], minlength=m) > 0
        np.logical_or.accumulate(detected, axis=1, out=detected)
        return detected

    chunks = [
        children[i : i + _CHUNK_REALIZATIONS]
        for i in range(0, n_realizations, _CHUNK_REALIZATIONS)
    ]
    if n_threads == 1:
        parts = [run_chunk(chunk) for chunk in chunks]
    else:
        with ThreadPoolExecutor(max_workers=n_threads) as pool:
            parts = list(pool.map(run_chunk, chunks))
    detected = np.vstack(parts)
    p_hat = detected.mean(axis=0)
    stderr = np.sqrt(p_hat * (1.0 - p_hat) / n_realizations)
    return CoverageCurve(
        times=tuple(float(t) for t in times),
        probabilities=tuple(float(p) for p in p_hat),
        kind="empirical",
        stderrs=tuple(float(s) for s in stderr),
        n_realizations=n_realizations,
    )


def estimate_dilated_area(
    front: FireFront, radius_model: HybridRadiusModel, n_samples: int, seed
) -> EmpiricalEstimate:
    """Hit-or-miss estimate of the mean dilated area E_r[A({x: dist(x, K) <= r})].

    Uniform points are drawn in the front's bounding box dilated by r_out;
    each point gets its own radius draw and counts as a hit when its distance
    to the front does not exceed that radius. Uses exact distances only, so
    it is an independent check of the Steiner expansion.
    """
    if n_samples < 1:
        raise ValueError(f"need at least one sample, got {n_samples}")
    x0, x1, y0, y1 = front.bounding_box()
    reach = radius_model.r_out
    x0, x1, y0, y1 = x0 - reach, x1 + reach, y0 - reach, y1 + reach
    box_area = (x1 - x0) * (y1 - y0)

    rng = np.random.default_rng(seed)
    hits = 0
    remaining = n_samples
    while remaining > 0:
        m = min(_CHUNK_SAMPLES, remaining)
        xs = rng.uniform(x0, x1, m)
        ys = rng.uniform(y0, y1, m)
        rr = radius_model.sample_radii(rng, m)
        d = distance_field(front.kind, front.a, front.b, xs, ys)
        hits += int(np.count_nonzero(d <= rr))
        remaining -= m
    p_hat = hits / n_samples
    return EmpiricalEstimate(
        value=box_area * p_hat,
        stderr=box_area * math.sqrt(p_hat * (1.0 - p_hat) / n_samples),
        n_samples=n_samples,
    )
