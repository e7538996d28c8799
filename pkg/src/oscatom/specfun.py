"""Complex special functions for the cavity closed forms.

* ``dilog`` -- principal-branch Li2 on the closed unit disk (direct series,
  reflection, or Bernoulli series in -log(1-z), chosen by region).
* ``lerch_phi`` -- Phi(z, s, a) = sum_{n>=0} z^n/(n+a)^s for s in {1..5} and
  |z| <= 1.  On the unit circle the defining series converges only
  conditionally, so the value is computed from the Abel-Plana representation

      Phi(e^{i t}, s, a) = a^{-s}/2
          + i int_0^inf e^{-t y} (a + i y)^{-s} dy
          + i int_0^inf [f(ix) - f(-ix)] / (e^{2 pi x} - 1) dx,

  two exponentially convergent integrals evaluated with certified tail
  bounds (plain series truncation is useless at |z| = 1).
* ``hyp2f1_reduced`` -- 2F1(1, beta; 1+beta; z) = beta * Phi(z, 1, beta).
* ``arg_one_minus_exp`` -- principal Arg(1 - e^{-i theta}) = (pi - theta)/2.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .quadrature import integrate

__all__ = [
    "UnitCirclePoint",
    "SpecFunDomainError",
    "ConvergenceError",
    "dilog",
    "lerch_phi",
    "hyp2f1_reduced",
    "arg_one_minus_exp",
]

TWO_PI = 2.0 * math.pi
SUPPORTED_S = (1, 2, 3, 4, 5)


class SpecFunDomainError(ValueError):
    """Argument outside the supported domain (pole, branch point, |z| > 1)."""


class ConvergenceError(RuntimeError):
    """A certified tail bound could not be met."""


@dataclass(frozen=True)
class UnitCirclePoint:
    """Phase theta of z = e^{i theta}, reduced to [0, 2 pi)."""

    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % TWO_PI)

    @property
    def z(self) -> complex:
        return cmath.exp(1j * self.theta)

    @property
    def on_singularity(self) -> bool:
        return self.theta == 0.0 or min(self.theta, TWO_PI - self.theta) < 1e-12


def arg_one_minus_exp(theta: float) -> float:
    """Principal Arg(1 - e^{-i theta}) = (pi - theta)/2 for theta in (0, 2 pi).

    From 1 - e^{-i theta} = 2 i sin(theta/2) e^{-i theta/2}.  Raises at the
    branch point theta = 0 (mod 2 pi).
    """
    th = float(theta) % TWO_PI
    if min(th, TWO_PI - th) < 1e-12:
        raise SpecFunDomainError("branch point of Arg(1 - e^{-i theta}) at theta = 0 mod 2pi")
    return 0.5 * (math.pi - th)


# Bernoulli numbers B_0 .. B_24 (B_1 = -1/2 convention; odd ones > 1 vanish)
_BERNOULLI = [
    1.0, -0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0, -1.0 / 30, 0.0,
    5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6, 0.0, -3617.0 / 510, 0.0,
    43867.0 / 798, 0.0, -174611.0 / 330, 0.0, 854513.0 / 138, 0.0,
    -236364091.0 / 2730,
]

_PI2_6 = math.pi * math.pi / 6.0


def _li2_series(z: complex) -> complex:
    # direct sum for |z| <= 0.5: geometric tail, ~50 terms to 1e-17
    total = 0.0 + 0.0j
    term = 1.0 + 0.0j
    for k in range(1, 200):
        term *= z
        total += term / (k * k)
        if abs(term) < 1e-18 * max(abs(total), 1.0):
            return total
    raise ConvergenceError("dilog series stalled")


def _li2_bernoulli(z: complex) -> complex:
    # Li2(1 - e^{-t}) = sum_k B_k t^{k+1} / (k+1)!, t = -log(1-z); |t| < 2 pi
    t = -cmath.log(1.0 - z)
    total = 0.0 + 0.0j
    power = t            # t^{k+1} at k = 0
    fact = 1.0           # (k+1)! at k = 0
    for k in range(len(_BERNOULLI)):
        fact *= k + 1
        if _BERNOULLI[k] != 0.0:
            total += _BERNOULLI[k] * power / fact
        power *= t
    # bound the truncated tail by the geometric ratio |t/(2 pi)|
    ratio = abs(t) / TWO_PI
    if ratio > 0.95:
        raise ConvergenceError("dilog Bernoulli series too close to |log(1-z)| = 2 pi")
    return total


def dilog(z: complex) -> complex:
    """Principal-branch dilogarithm Li2(z) for |z| <= 1.

    Relative error <= 1e-12 away from z = 1; exact classical values at
    z = 0, 1, -1.
    """
    z = complex(z)
    if abs(z) > 1.0 + 1e-12:
        raise SpecFunDomainError(f"dilog requires |z| <= 1, got |z| = {abs(z):.6g}")
    if z == 0:
        return 0.0 + 0.0j
    if z == 1:
        return complex(_PI2_6)
    if z == -1:
        return complex(-_PI2_6 / 2.0)
    if abs(z) <= 0.5:
        return _li2_series(z)
    w = 1.0 - z
    if abs(w) <= 0.5:
        return _PI2_6 - cmath.log(z) * cmath.log(w) - _li2_series(w)
    return _li2_bernoulli(z)


def _check_s_a(s: int, a: float) -> None:
    if s not in SUPPORTED_S:
        raise SpecFunDomainError(f"s must be one of {SUPPORTED_S}, got {s}")
    if a <= 0 and float(a).is_integer():
        raise SpecFunDomainError(f"Phi(z, s, a) has a pole at non-positive integer a = {a}")


def _neg_pow(a: float, s: int) -> float:
    # a^(-s) with principal (real) powers for integer s; valid for a < 0 too
    return a ** (-s)


def _phi_interior(z: complex, s: int, a: float, tol: float) -> complex:
    # direct series with geometric tail bound; |z| <= 0.9995
    r = abs(z)
    total = _neg_pow(a, s) + 0.0j
    term = 1.0 + 0.0j
    for n in range(1, 400_000):
        term *= z
        total += term / (n + a) ** s
        if n + 1 + a > 0:
            tail = r ** (n + 1) / ((n + 1 + a) ** s * (1.0 - r))
            if tail < tol * max(abs(total), 1e-300):
                return total
    raise ConvergenceError("interior Lerch series tail bound not met")


def _decaying_integral(f, rate: float, alg_s: int, a: float, tol: float) -> complex:
    """Integrate f over [0, inf) by dyadic panels with a certified tail bound.

    The integrand must satisfy |f(x)| <= C (a^2+x^2)^{-alg_s/2} e^{-rate x};
    the residual beyond the last panel is bounded analytically from that.
    """
    total = 0.0 + 0.0j
    lo, width = 0.0, 1.0
    for _ in range(64):
        hi = lo + width
        res = integrate(f, lo, hi, tol=min(tol, 1e-13) * 10, abs_floor=1e-300)
        total += res.value
        # tail bounds: exponential and (for alg_s >= 2) algebraic
        amp = (a * a + hi * hi) ** (-0.5 * alg_s)
        bound_exp = amp * math.exp(-rate * hi) / rate if rate > 0 else math.inf
        bound_alg = hi ** (1 - alg_s) / (alg_s - 1) if alg_s > 1 else math.inf
        if min(bound_exp, bound_alg) < tol * max(abs(total), 1e-300):
            return total
        lo = hi
        width *= 2.0
    raise ConvergenceError("tail bound not met after 64 dyadic panels")


def _phi_unit_circle(theta: float, s: int, a: float, tol: float) -> complex:
    """Abel-Plana value of Phi(e^{i theta}, s, a) for a > 0, theta in [0, 2 pi)."""
    if min(theta, TWO_PI - theta) < 1e-12:
        if s == 1:
            raise SpecFunDomainError("Phi(z, 1, a) diverges at z = 1")
        theta = 0.0

    # I1 = i int_0^inf e^{-theta y} (a + i y)^{-s} dy  (contour-rotated)
    def f1(y):
        y = np.asarray(y)
        return 1j * np.exp(-theta * y) * (a + 1j * y) ** (-s)

    i1 = _decaying_integral(f1, theta, s, a, tol)

    # I2 integrand written via sinh to avoid cancellation near x = 0
    def f2(x):
        x = np.asarray(x)
        w = -theta * x - 1j * s * np.arctan2(x, a)
        den = np.expm1(2.0 * math.pi * x)
        den = np.where(den == 0.0, 1.0, den)  # x=0 never sampled (open nodes)
        return 1j * 2.0 * (a * a + x * x) ** (-0.5 * s) * np.sinh(w) / den

    i2 = _decaying_integral(f2, TWO_PI - theta, s, a, tol)
    return 0.5 * _neg_pow(a, s) + i1 + i2


def lerch_phi(z, s: int, a: float, *, tol: float = 1e-12) -> complex:
    """Lerch transcendent Phi(z, s, a) = sum_{n>=0} z^n / (n+a)^s.

    Supports |z| <= 1 with s in {1..5} and real a that is not a non-positive
    integer.  Unit-circle points may be passed as complex values or as
    :class:`UnitCirclePoint`.  Relative accuracy ~1e-10 or better; raises
    :class:`ConvergenceError` if a certified tail bound cannot be met.
    """
    if isinstance(z, UnitCirclePoint):
        zc = z.z
        theta = z.theta
        on_circle = True
    else:
        zc = complex(z)
        r = abs(zc)
        if r > 1.0 + 1e-9:
            raise SpecFunDomainError(f"lerch_phi requires |z| <= 1, got {r:.6g}")
        on_circle = r > 1.0 - 1e-9
        theta = cmath.phase(zc) % TWO_PI if on_circle else 0.0
    _check_s_a(s, a)

    # shift a into (1/4, 5/4]: Phi(z,s,a) = a^{-s} + z Phi(z,s,a+1)
    prefix = 0.0 + 0.0j
    zpow = 1.0 + 0.0j
    aa = float(a)
    shifts = 0
    while aa <= 0.25:
        prefix += zpow * _neg_pow(aa, s)
        zpow *= zc
        aa += 1.0
        shifts += 1
        if shifts > 1_000_000:
            raise ConvergenceError("excessive recurrence shifts")

    if on_circle:
        core = _phi_unit_circle(theta, s, aa, tol)
    elif abs(zc) <= 0.9995:
        core = _phi_interior(zc, s, aa, tol)
    else:
        raise ConvergenceError(
            "0.9995 < |z| < 1 is outside the supported regime (use |z| = 1 or interior points)"
        )
    return prefix + zpow * core


def hyp2f1_reduced(beta: float, z, *, tol: float = 1e-12) -> complex:
    """Gauss hypergeometric 2F1(1, beta; 1+beta; z) = beta * Phi(z, 1, beta).

    ``beta`` must avoid the non-positive integers; z = 1 diverges.
    """
    if isinstance(z, UnitCirclePoint):
        if z.on_singularity:
            raise SpecFunDomainError("2F1(1, beta; 1+beta; z) diverges at z = 1")
    else:
        if abs(complex(z) - 1.0) < 1e-12:
            raise SpecFunDomainError("2F1(1, beta; 1+beta; z) diverges at z = 1")
    if beta == 0:
        raise SpecFunDomainError("beta = 0 is a pole of the reduced 2F1")
    return beta * lerch_phi(z, 1, beta, tol=tol)
