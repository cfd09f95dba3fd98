"""Parametric fire-front sets and their geometric queries.

Three planar growth shapes are supported, all anchored to an ignition point
at the origin with any wind blowing toward +x:

- circular: disk of radius alpha*t centered at the origin (no wind),
- elliptical: semi-axes a = alpha*t*(1 + v_x/V) downwind and b = alpha*t
  crosswind, with the upwind vertex pinned at the origin (center at (a, 0)),
- piriform: the teardrop curve x = a*(1 + sin phi), y = b*cos phi*(1 + sin phi)
  with its cusp at the origin (dominant wind).

All kinds enclose area pi*a*b. Operations are pure and fronts are immutable;
distance/containment kernels are vectorized and accept per-point axis arrays
so callers can evaluate many fronts against many points at once.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import integrate

__all__ = [
    "FireModelKind",
    "FireGrowthParams",
    "FireFront",
    "front_at",
    "distance_field",
    "PIRIFORM_BOUNDARY_VERTICES",
]

# Default polygonization resolution for piriform containment tests.
# 4096 uniform-in-phi vertices keep the chord error below a millimeter at
# meter scales; raise it if sub-chord accuracy near the boundary matters.
PIRIFORM_BOUNDARY_VERTICES = 4096

# Height of the unit piriform: |y| <= 3*sqrt(3)/4 at a = b = 1.
_PIRIFORM_HEIGHT = 3.0 * math.sqrt(3.0) / 4.0

_ELLIPSE_PHI_TOL = 1e-10
_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


class FireModelKind(str, Enum):
    """Shape family of the growing fire front."""

    CIRCULAR = "circular"
    ELLIPTICAL = "elliptical"
    PIRIFORM = "piriform"


@dataclass(frozen=True)
class FireGrowthParams:
    """Growth law parameters: front axes scale linearly with time.

    Parameters
    ----------
    alpha : float
        Flame spread speed in m/s, > 0.
    kind : FireModelKind
        Shape family.
    v_x : float
        Downwind wind speed in m/s, >= 0. Ignored by the circular kind.
    V : float
        Wind scaling speed in m/s, > 0.
    v_y : float
        Crosswind component; the model fixes it to 0.
    """

    alpha: float
    kind: FireModelKind
    v_x: float = 0.0
    V: float = 1.0
    v_y: float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.kind, FireModelKind):
            raise ValueError(f"kind must be a FireModelKind, got {self.kind!r}")
        if not (math.isfinite(self.alpha) and self.alpha > 0.0):
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if not (math.isfinite(self.V) and self.V > 0.0):
            raise ValueError(f"V must be positive, got {self.V}")
        if not (math.isfinite(self.v_x) and self.v_x >= 0.0):
            raise ValueError(f"v_x must be non-negative, got {self.v_x}")
        if self.v_y != 0.0:
            raise ValueError(f"v_y is fixed to 0 in this model, got {self.v_y}")

    @property
    def downwind_stretch(self) -> float:
        """Axis ratio a/b = 1 + v_x/V; 1 for the circular kind."""
        if self.kind is FireModelKind.CIRCULAR:
            return 1.0
        return 1.0 + self.v_x / self.V


def front_at(params: FireGrowthParams, t: float) -> "FireFront":
    """Front snapshot at time t >= 0; t = 0 is the degenerate ignition point."""
    if not (math.isfinite(t) and t >= 0.0):
        raise ValueError(f"time must be non-negative, got {t}")
    b = params.alpha * t
    return FireFront(kind=params.kind, a=b * params.downwind_stretch, b=b, t=t)


@dataclass(frozen=True)
class FireFront:
    """Immutable snapshot of the burning region at one instant.

    Fields a and b are the downwind and crosswind semi-axes in meters
    (equal for the circular kind); t is the snapshot time in seconds.
    """

    kind: FireModelKind
    a: float
    b: float
    t: float

    def __post_init__(self) -> None:
        if not isinstance(self.kind, FireModelKind):
            raise ValueError(f"kind must be a FireModelKind, got {self.kind!r}")
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError("axes must be finite")
        if not self.a >= self.b >= 0.0:
            raise ValueError(f"axes must satisfy a >= b >= 0, got a={self.a}, b={self.b}")
        if (self.a == 0.0) != (self.b == 0.0):
            raise ValueError("axes must vanish together (point front)")
        if self.kind is FireModelKind.CIRCULAR and self.a != self.b:
            raise ValueError(
                f"circular fronts need equal axes, got a={self.a}, b={self.b}"
            )
        if not (math.isfinite(self.t) and self.t >= 0.0):
            raise ValueError(f"time must be non-negative, got {self.t}")

    def area(self) -> float:
        """Enclosed area pi*a*b in m^2 (all shape kinds)."""
        return math.pi * self.a * self.b

    def perimeter(self) -> float:
        """Boundary length in meters.

        Exact 2*pi*a for circular, the Ramanujan approximation for
        elliptical, and adaptive quadrature of the parametric arc length
        for piriform.
        """
        if self.b == 0.0:
            return 0.0
        if self.kind is FireModelKind.CIRCULAR:
            return 2.0 * math.pi * self.a
        if self.kind is FireModelKind.ELLIPTICAL:
            a, b = self.a, self.b
            return math.pi * (3.0 * (a + b) - math.sqrt((3.0 * a + b) * (a + 3.0 * b)))
        return _piriform_perimeter(self.a, self.b)

    def dilated_area(self, r: float) -> float:
        """Area of the front thickened by a disk of radius r >= 0.

        Evaluates area + perimeter*r + pi*r^2, which is exact for the convex
        kinds and an upper bound for the piriform (its cusp makes it
        non-convex, so the thickened boundary band overlaps itself).
        """
        if not (math.isfinite(r) and r >= 0.0):
            raise ValueError(f"dilation radius must be non-negative, got {r}")
        return self.area() + self.perimeter() * r + math.pi * r * r

    def bounding_box(self) -> tuple[float, float, float, float]:
        """Tight axis-aligned bounds (x_min, x_max, y_min, y_max) in meters."""
        if self.kind is FireModelKind.CIRCULAR:
            return (-self.a, self.a, -self.b, self.b)
        if self.kind is FireModelKind.ELLIPTICAL:
            return (0.0, 2.0 * self.a, -self.b, self.b)
        h = _PIRIFORM_HEIGHT * self.b
        return (0.0, 2.0 * self.a, -h, h)

    def boundary_points(self, n: int) -> np.ndarray:
        """(n, 2) boundary polyline, uniform in the curve parameter."""
        if n < 3:
            raise ValueError(f"need at least 3 boundary points, got {n}")
        phi = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
        if self.kind is FireModelKind.CIRCULAR:
            x = self.a * np.cos(phi)
            y = self.b * np.sin(phi)
        elif self.kind is FireModelKind.ELLIPTICAL:
            x = self.a + self.a * np.cos(phi)
            y = self.b * np.sin(phi)
        else:
            s = np.sin(phi)
            x = self.a * (1.0 + s)
            y = self.b * np.cos(phi) * (1.0 + s)
        return np.column_stack((x, y))

    def contains_many(self, points: np.ndarray) -> np.ndarray:
        """Boolean membership for an (n, 2) array of points (boundary counts)."""
        pts = np.asarray(points, dtype=float)
        return _membership_field(self.kind, self.a, self.b, pts[..., 0], pts[..., 1])

    def contains(self, point) -> bool:
        """True iff the point lies in the front (boundary included)."""
        x, y = point
        return bool(_membership_field(self.kind, self.a, self.b, np.float64(x), np.float64(y)))

    def distance_to_many(self, points: np.ndarray) -> np.ndarray:
        """Euclidean distance from each (n, 2) point to the front; 0 inside."""
        pts = np.asarray(points, dtype=float)
        return distance_field(self.kind, self.a, self.b, pts[..., 0], pts[..., 1])

    def distance_to(self, point) -> float:
        """Euclidean distance from one point to the front; 0 if contained."""
        x, y = point
        return float(distance_field(self.kind, self.a, self.b, np.float64(x), np.float64(y)))


def _piriform_speed(phi: float, a: float, b: float) -> float:
    # |dP/dphi| for x = a(1+sin), y = b cos (1+sin); dy/dphi = b(cos 2phi - sin phi)
    return math.hypot(a * math.cos(phi), b * (math.cos(2.0 * phi) - math.sin(phi)))

def _piriform_perimeter(a: float, b: float) -> float:
    value, _ = integrate.quad(
        _piriform_speed, 0.0, 2.0 * math.pi, args=(a, b), epsabs=1e-10, epsrel=1e-10, limit=200
    )
    return value


@functools.lru_cache(maxsize=8)
def _piriform_upper_chain(n_vertices: int) -> tuple[np.ndarray, np.ndarray]:
    """Upper half of the unit-piriform polygonization, ascending in x.

    The polygon has n_vertices vertices uniform in phi over [0, 2pi); it is
    symmetric about the x axis and each half is x-monotone, so the even-odd
    crossing test against the closed polygon reduces to comparing |y| with
    the piecewise-linear upper chain. n_vertices must be divisible by 4 so
    the cusp (phi = 3pi/2) and the nose (phi = pi/2) are themselves vertices.
    """
    if n_vertices % 4 != 0 or n_vertices < 8:
        raise ValueError(f"vertex count must be a multiple of 4 and >= 8, got {n_vertices}")
    k = np.arange(3 * n_vertices // 4, n_vertices + n_vertices // 4 + 1)
    phi = 2.0 * math.pi * k / n_vertices
    s = np.sin(phi)
    x = 1.0 + s
    y = np.abs(np.cos(phi)) * (1.0 + s)
    return x, y


def _membership_field(kind, a, b, x, y, n_vertices: int | None = None):
    """Vectorized set membership; a, b broadcast against the point arrays."""
    a, b, x, y = np.broadcast_arrays(
        np.asarray(a, float), np.asarray(b, float), np.asarray(x, float), np.asarray(y, float)
    )
    if kind is FireModelKind.CIRCULAR:
        return x * x + y * y <= a * a
    degenerate = b == 0.0
    safe_a = np.where(degenerate, 1.0, a)
    safe_b = np.where(degenerate, 1.0, b)
    if kind is FireModelKind.ELLIPTICAL:
        xr = (x - a) / safe_a
        yr = y / safe_b
        inside = xr * xr + yr * yr <= 1.0
    else:
        cx, cy = _piriform_upper_chain(n_vertices or PIRIFORM_BOUNDARY_VERTICES)
        xu = x / safe_a
        yu = np.abs(y) / safe_b
        inside = (xu >= 0.0) & (xu <= 2.0) & (yu <= np.interp(xu, cx, cy))
    return np.where(degenerate, (x == 0.0) & (y == 0.0), inside)


def distance_field(kind, a, b, x, y, n_scan: int = 256):
    """Euclidean distance from points (x, y) to the front with axes (a, b).

    All arguments broadcast together, so a single call can evaluate one front
    against many points or per-point fronts (used by detection-time search).
    Returns 0 for contained points. Axis pairs with b = 0 denote the
    degenerate ignition-point front.
    """
    a, b, x, y = np.broadcast_arrays(
        np.asarray(a, float), np.asarray(b, float), np.asarray(x, float), np.asarray(y, float)
    )
    if kind is FireModelKind.CIRCULAR:
        return np.maximum(np.hypot(x, y) - a, 0.0)

    out = np.hypot(x, y)  # correct for the degenerate point front
    inside = _membership_field(kind, a, b, x, y)
    out = np.where(inside, 0.0, out)
    todo = ~inside & (b > 0.0)
    if not np.any(todo):
        return out

    flat = todo.ravel()
    af, bf = a.ravel()[flat], b.ravel()[flat]
    xf, yf = x.ravel()[flat], y.ravel()[flat]
    if kind is FireModelKind.ELLIPTICAL:
        d = _ellipse_outside_distance(af, bf, xf, yf)
    else:
        d = _piriform_outside_distance(af, bf, xf, yf, n_scan)
    result = out.ravel().copy()
    result[flat] = d
    return result.reshape(out.shape)


def _ellipse_outside_distance(a, b, x, y):
    """Distance from outside points to the ellipse centered at (a, 0).

    Solves the boundary-parameter stationarity condition
    g(phi) = a*x*sin(phi) - b*y*cos(phi) - (a^2 - b^2)*sin(phi)*cos(phi) = 0
    on the folded quadrant [0, pi/2] by Newton steps clipped to a shrinking
    sign bracket (g(0) <= 0 <= g(pi/2)), falling back to bisection.
    """
    px = np.abs(x - a)
    py = np.abs(y)
    ab2 = a * a - b * b
    lo = np.zeros_like(px)
    hi = np.full_like(px, 0.5 * math.pi)
    phi = np.arctan2(a * py, b * px)
    for _ in range(100):
        s = np.sin(phi)
        c = np.cos(phi)
        g = a * px * s - b * py * c - ab2 * s * c
        lo = np.where(g < 0.0, phi, lo)
        hi = np.where(g > 0.0, phi, hi)
        gp = a * px * c + b * py * s - ab2 * (c * c - s * s)
        with np.errstate(divide="ignore", invalid="ignore"):
            cand = phi - g / gp
        cand = np.where(np.isfinite(cand) & (cand > lo) & (cand < hi), cand, 0.5 * (lo + hi))
        if np.all(np.abs(cand - phi) < _ELLIPSE_PHI_TOL):
            phi = cand
            break
        phi = cand
    return np.hypot(px - a * np.cos(phi), py - b * np.sin(phi))


def _piriform_outside_distance(a, b, x, y, n_scan: int):
    """Distance from outside points to the piriform boundary.

    Coarse scan over the curve parameter (distance along phi is multimodal)
    followed by golden-section refinement inside the best bracket.
    """

    def dist2(phi):
        s = np.sin(phi)
        return (a * (1.0 + s) - x) ** 2 + (b * np.cos(phi) * (1.0 + s) - y) ** 2

    step = 2.0 * math.pi / n_scan
    best_phi = np.zeros_like(x)
    best_d2 = dist2(0.0)
    for k in range(1, n_scan):
        phi_k = k * step
        d2 = dist2(phi_k)
        better = d2 < best_d2
        best_d2 = np.where(better, d2, best_d2)
        best_phi = np.where(better, phi_k, best_phi)

    lo = best_phi - step
    hi = best_phi + step
    for _ in range(60):
        width = hi - lo
        x1 = hi - _GOLDEN * width
        x2 = lo + _GOLDEN * width
        shrink_hi = dist2(x1) < dist2(x2)
        hi = np.where(shrink_hi, x2, hi)
        lo = np.where(shrink_hi, lo, x1)
    return np.sqrt(dist2(0.5 * (lo + hi)))
