"""Unit tests for the closed-form sensing and detection probabilities."""

import math

import numpy as np
import pytest

from firesense import (
    CoverageCurve,
    FireGrowthParams,
    FireModelKind,
    FireScenario,
    HybridRadiusModel,
    coverage_curve,
    critical_density,
    critical_time,
    detection_probability,
    front_at,
    mean_detectors,
    mean_dilated_area,
    sensing_probability,
)

TABLE_RADII = HybridRadiusModel(2.0, 4.0)


def scenario(kind, density=0.05, v_x=3.0, tau=0.9, alpha=0.33, critical_area=20.0):
    return FireScenario(
        density=density,
        radius_model=TABLE_RADII,
        growth=FireGrowthParams(alpha=alpha, kind=kind, v_x=v_x, V=10.0),
        critical_area=critical_area,
        tau=tau,
    )


def test_scenario_validation():
    """Bad density, critical area, or detection target are rejected."""
    with pytest.raises(ValueError):
        scenario(FireModelKind.CIRCULAR, density=-0.01)
    with pytest.raises(ValueError):
        scenario(FireModelKind.CIRCULAR, critical_area=0.0)
    with pytest.raises(ValueError):
        scenario(FireModelKind.CIRCULAR, tau=0.0)
    with pytest.raises(ValueError):
        scenario(FireModelKind.CIRCULAR, tau=1.0)


def test_critical_times_frozen():
    """Critical times at Table-scale parameters match frozen values."""
    t_circ = critical_time(scenario(FireModelKind.CIRCULAR))
    t_ell = critical_time(scenario(FireModelKind.ELLIPTICAL))
    t_pear = critical_time(scenario(FireModelKind.PIRIFORM))
    print(f"t_cr circular={t_circ:.6f} elliptical={t_ell:.6f} pear={t_pear:.6f}")
    assert t_circ == pytest.approx(7.645856127333819, rel=1e-12)
    assert t_ell == pytest.approx(6.705859430945911, rel=1e-12)
    assert t_pear == t_ell, "equal-area kinds share the critical time"
    crit = front_at(scenario(FireModelKind.ELLIPTICAL).growth, t_ell)
    assert crit.area() == pytest.approx(20.0, rel=1e-12)


def test_mean_dilated_area_frozen():
    """Mean dilated area of the circular critical front matches its freeze."""
    sc = scenario(FireModelKind.CIRCULAR)
    value = mean_dilated_area(sc, critical_time(sc))
    assert value == pytest.approx(86.14577411272384, rel=1e-12)


def test_mean_detectors_is_density_times_area():
    """Expected detector count is density times the mean dilated area."""
    sc = scenario(FireModelKind.ELLIPTICAL, density=0.07)
    for t in (0.0, 1.0, 5.0):
        assert mean_detectors(sc, t) == pytest.approx(
            0.07 * mean_dilated_area(sc, t), rel=1e-15
        )
    at_zero = mean_detectors(sc, 0.0)
    assert at_zero == pytest.approx(
        0.07 * math.pi * TABLE_RADII.mean_r_squared(), rel=1e-15
    ), "a point front is sensed within a full random disk"


def test_sensing_probability_specialized_forms():
    """The generic formula reproduces fully hand-expanded special cases."""
    lam, alpha, v_x, big_v = 0.05, 0.33, 3.0, 10.0
    mean_r = TABLE_RADII.mean_r()
    mean_r2 = TABLE_RADII.mean_r_squared()

    sc_circ = scenario(FireModelKind.CIRCULAR, density=lam)
    sc_ell = scenario(FireModelKind.ELLIPTICAL, density=lam, v_x=v_x)
    stretch = 1.0 + v_x / big_v
    for t in (0.0, 2.0, 7.0):
        radius = alpha * t
        by_hand = 1.0 - math.exp(
            -lam
            * (
                math.pi * radius * radius
                + 2.0 * math.pi * radius * mean_r
                + math.pi * mean_r2
            )
        )
        assert sensing_probability(sc_circ, t) == pytest.approx(by_hand, rel=1e-12)

        a, b = radius * stretch, radius
        ram = math.pi * (
            3.0 * (a + b) - math.sqrt((3.0 * a + b) * (a + 3.0 * b))
        )
        by_hand = 1.0 - math.exp(
            -lam * (math.pi * a * b + ram * mean_r + math.pi * mean_r2)
        )
        assert sensing_probability(sc_ell, t) == pytest.approx(by_hand, rel=1e-12)


def test_detection_probability_frozen():
    """Detection probability at density 0.1 for the circular model."""
    p = detection_probability(scenario(FireModelKind.CIRCULAR, density=0.1))
    print(f"circular detection probability at density 0.1: {p:.12f}")
    assert p == pytest.approx(0.9998185585255849, rel=1e-12)
    assert p >= 0.999


def test_critical_density_frozen_and_round_trip():
    """Critical density reproduces its freeze and inverts detection exactly."""
    lam_cr = critical_density(scenario(FireModelKind.CIRCULAR))
    assert lam_cr == pytest.approx(0.026728938438478216, rel=1e-12)

    for kind in FireModelKind:
        for tau in (0.5, 0.9, 0.99):
            sc = scenario(kind, tau=tau)
            lam = critical_density(sc)
            back = detection_probability(
                FireScenario(
                    density=lam,
                    radius_model=sc.radius_model,
                    growth=sc.growth,
                    critical_area=sc.critical_area,
                    tau=tau,
                )
            )
            assert abs(back - tau) < 1e-10, f"{kind} tau={tau}: back={back!r}"


def test_critical_density_small_target():
    """As tau -> 0 the required density shrinks linearly."""
    sc = scenario(FireModelKind.CIRCULAR, tau=1e-9)
    lam = critical_density(sc)
    area = mean_dilated_area(sc, critical_time(sc))
    assert lam == pytest.approx(1e-9 / area, rel=1e-6)
    assert lam > 0.0


def test_shape_orderings():
    """Wind-stretched kinds detect earlier: pear beats ellipse beats circle."""
    p_circ = detection_probability(scenario(FireModelKind.CIRCULAR))
    p_ell = detection_probability(scenario(FireModelKind.ELLIPTICAL))
    p_pear = detection_probability(scenario(FireModelKind.PIRIFORM))
    print(f"p_f circular={p_circ:.6f} elliptical={p_ell:.6f} pear={p_pear:.6f}")
    assert p_pear >= p_ell > p_circ

    lam_ell = critical_density(scenario(FireModelKind.ELLIPTICAL))
    lam_pear = critical_density(scenario(FireModelKind.PIRIFORM))
    assert lam_pear <= lam_ell, "the longer pear boundary needs fewer sensors"


def test_sensing_probability_zero_density():
    """Zero deployment density never senses anything."""
    sc = scenario(FireModelKind.CIRCULAR, density=0.0)
    assert sensing_probability(sc, 5.0) == 0.0
    assert detection_probability(sc) == 0.0


def test_coverage_curve_matches_pointwise():
    """coverage_curve equals pointwise sensing_probability and is monotone."""
    sc = scenario(FireModelKind.ELLIPTICAL)
    grid = np.linspace(0.0, critical_time(sc), 20)
    curve = coverage_curve(sc, grid)
    assert curve.kind == "analytic"
    assert len(curve) == 20
    assert curve.stderrs is None and curve.n_realizations is None
    for t, p in zip(curve.times, curve.probabilities):
        assert p == pytest.approx(sensing_probability(sc, t), rel=1e-15)
    assert np.all(np.diff(curve.probabilities) >= 0.0)

    single = coverage_curve(sc, np.array([3.0]))
    assert len(single) == 1


def test_coverage_curve_rejects_bad_grids():
    """Unsorted or negative grids are rejected."""
    sc = scenario(FireModelKind.CIRCULAR)
    with pytest.raises(ValueError):
        coverage_curve(sc, np.array([1.0, 0.5]))
    with pytest.raises(ValueError):
        coverage_curve(sc, np.array([-1.0, 0.5]))
    with pytest.raises(ValueError):
        coverage_curve(sc, np.array([]))


def test_coverage_curve_validation():
    """CoverageCurve rejects inconsistent fields."""
    times = np.array([0.0, 1.0, 2.0])
    probs = np.array([0.1, 0.2, 0.3])
    CoverageCurve(times=times, probabilities=probs, kind="analytic")
    with pytest.raises(ValueError):
        CoverageCurve(times=times[::-1].copy(), probabilities=probs, kind="analytic")
    with pytest.raises(ValueError):
        CoverageCurve(times=times, probabilities=np.array([0.1, 0.2]), kind="analytic")
    with pytest.raises(ValueError):
        CoverageCurve(
            times=times, probabilities=np.array([0.1, 1.2, 1.3]), kind="analytic"
        )
    with pytest.raises(ValueError):
        CoverageCurve(
            times=times, probabilities=np.array([0.3, 0.2, 0.1]), kind="analytic"
        )
    with pytest.raises(ValueError):
        CoverageCurve(
            times=times,
            probabilities=probs,
            kind="empirical",
            stderrs=np.array([0.01, 0.01]),
        )


def test_wind_raises_detection():
    """Stronger wind enlarges the swept area and detection probability."""
    winds = np.linspace(0.0, 10.0, 6)
    probs = [
        detection_probability(scenario(FireModelKind.ELLIPTICAL, v_x=w))
        for w in winds
    ]
    assert np.all(np.diff(probs) > 0.0), f"probs={probs}"
