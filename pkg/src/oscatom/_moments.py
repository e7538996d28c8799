"""Trigonometric moments M_p(Z) = integral_0^1 t^p cos(Z t) dt, p in {0, 2, 4}.

Every oscillatory bracket in the half-space, cavity and decay closed forms is
a combination of these three moments at arguments 2*b*q0, 2*k0*b, sigma*x or
delta*x.  The closed trig forms contain terms ~ Z^-5 that cancel to O(1), so
below ``SERIES_THRESHOLD`` the power series is used instead (this is the
"series path" reported by the curve flags).
"""

from __future__ import annotations

import math

__all__ = ["SERIES_THRESHOLD", "moment_cos", "uses_series"]

SERIES_THRESHOLD = 1.0


def uses_series(z: float) -> bool:
    return abs(z) < SERIES_THRESHOLD


def _series(p: int, z: float) -> float:
    # sum_j (-1)^j z^(2j) / ((2j)! (2j+p+1)); ~12 terms at |z| = 1
    total = 1.0 / (p + 1)
    term = 1.0
    z2 = z * z
    for j in range(1, 30):
        term *= -z2 / ((2 * j - 1) * (2 * j))
        contrib = term / (2 * j + p + 1)
        total += contrib
        if abs(contrib) < 1e-18 * abs(total) + 1e-300:
            break
    return total


def moment_cos(p: int, z: float) -> float:
    """M_p(z) for p in {0, 2, 4}; exact trig form above the series threshold."""
    z = float(z)
    if abs(z) < SERIES_THRESHOLD:
        return _series(p, z)
    s, c = math.sin(z), math.cos(z)
    if p == 0:
        return s / z
    if p == 2:
        return s / z + 2 * c / z**2 - 2 * s / z**3
    if p == 4:
        return s / z + 4 * c / z**2 - 12 * s / z**3 - 24 * c / z**4 + 24 * s / z**5
    raise ValueError(f"unsupported moment order {p}")
