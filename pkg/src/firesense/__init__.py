"""Detection analytics for randomly deployed wireless fire-sensor networks.

Closed-form detection probabilities for growing fire fronts under a Boolean
random-disk sensing model, an independent Monte Carlo validator, and a CSV
scenario CLI.
"""

from .coverage_analytics import (
    CoverageCurve,
    FireScenario,
    coverage_curve,
    critical_density,
    critical_time,
    detection_probability,
    mean_detectors,
    mean_dilated_area,
    sensing_probability,
)
from .fire_geometry import (
    PIRIFORM_BOUNDARY_VERTICES,
    FireFront,
    FireGrowthParams,
    FireModelKind,
    distance_field,
    front_at,
)
from .monte_carlo import (
    BooleanRealization,
    EmpiricalEstimate,
    SimulationWindow,
    auto_window,
    detected_at,
    detected_count,
    detection_time,
    estimate_dilated_area,
    estimate_sensing_probability,
    sample_realization,
)
from .radius_model import HybridRadiusModel
from .scenario_cli import ConfigError, ScenarioConfig, load_config, main, parse_config

__version__ = "0.1.0"

__all__ = [
    "HybridRadiusModel",
    "FireModelKind",
    "FireGrowthParams",
    "FireFront",
    "front_at",
    "distance_field",
    "PIRIFORM_BOUNDARY_VERTICES",
    "FireScenario",
    "CoverageCurve",
    "mean_dilated_area",
    "mean_detectors",
    "sensing_probability",
    "critical_time",
    "detection_probability",
    "critical_density",
    "coverage_curve",
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
    "ScenarioConfig",
    "ConfigError",
    "load_config",
    "parse_config",
    "main",
    "__version__",
]
