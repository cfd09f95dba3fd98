"""Independent reference routines used only by the test suite.

These deliberately avoid the code paths of the package under test:
hand-written adaptive Simpson quadrature instead of scipy.integrate,
the implicit quartic form of the pear curve instead of its parametric
polygon chain, and radius-model moments obtained by integrating the
density numerically instead of evaluating the closed forms.
"""

import math


def _simpson(fa, fm, fb, width):
    return width * (fa + 4.0 * fm + fb) / 6.0


def adaptive_simpson(f, a, b, tol=1e-10, max_depth=40):
    """Integrate f over [a, b] by recursive Simpson subdivision."""
    def recurse(x0, x1, f0, f1, fm, whole, tol, depth):
        xm = 0.5 * (x0 + x1)
        fl = f(0.5 * (x0 + xm))
        fr = f(0.5 * (xm + x1))
        left = _simpson(f0, fl, fm, xm - x0)
        right = _simpson(fm, fr, f1, x1 - xm)
        delta = left + right - whole
        if depth <= 0 or abs(delta) <= 15.0 * tol:
            return left + right + delta / 15.0
        return (recurse(x0, xm, f0, fm, fl, left, 0.5 * tol, depth - 1)
                + recurse(xm, x1, fm, f1, fr, right, 0.5 * tol, depth - 1))

    fa, fb = f(a), f(b)
    fm = f(0.5 * (a + b))
    return recurse(a, b, fa, fb, fm, _simpson(fa, fm, fb, b - a), tol, max_depth)


def extension_pdf(y, spread):
    """Density of the truncated unit-rate exponential on (0, spread]."""
    if not 0.0 < y <= spread:
        return 0.0
    return math.exp(-y) / (1.0 - math.exp(-spread))


def radius_moment_by_quadrature(r_in, spread, power, tol=1e-12):
    """E[(r_in + y)^power] with y truncated-exponential, by Simpson quadrature."""
    f = lambda y: (r_in + y) ** power * extension_pdf(y, spread)
    return adaptive_simpson(f, 0.0, spread, tol=tol)


def ellipse_arc_speed(a, b, phi):
    """Boundary speed of the axis-aligned ellipse parametrized by angle."""
    return math.hypot(a * math.sin(phi), b * math.cos(phi))


def pear_arc_speed(a, b, phi):
    """Boundary speed of the pear curve x=a(1+sin), y=b cos(1+sin)."""
    return math.hypot(a * math.cos(phi), b * (math.cos(2.0 * phi) - math.sin(phi)))


def pear_contains_quartic(a, b, x, y):
    """Pear-curve membership through the implicit quartic a^4 y^2 <= b^2 x^3 (2a - x)."""
    if a == 0.0:
        return x == 0.0 and y == 0.0
    if not 0.0 <= x <= 2.0 * a:
        return False
    return a ** 4 * y * y <= b * b * x ** 3 * (2.0 * a - x)


def pear_quartic_margin(a, b, x, y):
    """Signed quartic residual b^2 x^3 (2a-x) - a^4 y^2, positive inside."""
    if not 0.0 <= x <= 2.0 * a:
        return -math.inf
    return b * b * x ** 3 * (2.0 * a - x) - a ** 4 * y * y
