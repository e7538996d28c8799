"""Pure-Python (numpy) hot kernels; twin of the compiled ``_kernels_cy``.

These are the functions evaluated inside the adaptive-quadrature inner loop
of the regularized cavity integrals.  Both backends expose the exact same
signatures; ``oscatom._backend`` picks one at import time.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"

# Above this value of u*eps the regularized kernel is coth(u*eps) to double
# precision and the direct formula would overflow sinh.
_DE_SATURATE = 20.0


def imcot(u, d, eps):
    """Im cot(u*(d - i*eps)) for real u > 0, elementwise.

    Equal to sinh(2*u*eps) / (2*(sin(u*d)^2 + sinh(u*eps)^2)); a positive
    nascent delta comb that tends to pi * sum_n delta(u*d - n*pi).
    """
    u = np.asarray(u, dtype=np.float64)
    de = u * eps
    small = de < _DE_SATURATE
    out = np.ones_like(u)
    des = de[small]
    s = np.sin(u[small] * d)
    sh = np.sinh(des)
    out[small] = np.sinh(2.0 * des) / (2.0 * (s * s + sh * sh))
    return out


def cot_coef_ee(u, q0, b):
    """Coefficient of cot(u d) in the cavity EE integrand: u^2 + u^4 cos(2ub)/q0^2."""
    u = np.asarray(u, dtype=np.float64)
    u2 = u * u
    return u2 + u2 * u2 * np.cos(2.0 * b * u) / (q0 * q0)


def cot_coef_bb(u, q0, b):
    """Coefficient of cot(u d) in the cavity BB integrand: (q0^2+u^2)(1 - u^2 cos(2ub)/q0^2)."""
    u = np.asarray(u, dtype=np.float64)
    u2 = u * u
    q2 = q0 * q0
    return (q2 + u2) * (1.0 - u2 * np.cos(2.0 * b * u) / q2)


def sin_part_ee(u, q0, b):
    """Pole-free sin(2ub) part of the cavity EE integrand (real; no Im contribution)."""
    u = np.asarray(u, dtype=np.float64)
    u2 = u * u
    return u2 * u2 * np.sin(2.0 * b * u) / (q0 * q0)


def sin_part_bb(u, q0, b):
    """Pole-free sin(2ub) part of the cavity BB integrand (real; no Im contribution)."""
    u = np.asarray(u, dtype=np.float64)
    u2 = u * u
    q2 = q0 * q0
    return -(q2 + u2) * u2 * np.sin(2.0 * b * u) / q2


def weighted_imcot(u, q0, b, d, eps, kind):
    """coef(u) * imcot(u, d, eps) with kind 0 -> EE coefficient, 1 -> BB coefficient."""
    coef = cot_coef_ee(u, q0, b) if kind == 0 else cot_coef_bb(u, q0, b)
    return coef * imcot(u, d, eps)
