"""Reduced dyadic Green-tensor components for one mirror and for a cavity.

Diagonal components g_xx, g_yy, g_zz of the transverse-Fourier-resolved
tensor, exact and expanded to second order in the oscillation parameter
alpha = q*a.  The half-space and cavity forms are implemented with their own
(printed) sign conventions, which differ by complex conjugation; their
imaginary parts, the only rate-relevant piece, agree in the plate-removal
limit (checked in the tests; rate-level consistency is a validation
criterion).

Delta-function contact terms are never evaluated numerically: they are
returned as a symbolic flag with coefficient -4*pi/q^2, exactly where the
printed components carry them (half-space: zz; cavity: xx and zz).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

__all__ = [
    "GreensQuery",
    "ExpansionTerms",
    "ContactTerm",
    "GreensValue",
    "GrazingModeError",
    "CavityResonanceError",
    "ExpansionGuardError",
    "g_halfspace",
    "g_halfspace_expanded",
    "g_cavity",
    "g_cavity_expanded",
]

_COMPONENTS = ("xx", "yy", "zz")
DEFAULT_ALPHA_CEILING = 0.3
DEFAULT_RESONANCE_TOL = 1e-9


class GrazingModeError(ValueError):
    """eta = 0 (q_par = q): the component prefactors are singular."""


class CavityResonanceError(ValueError):
    """eta*q*d is a multiple of pi: exact pole of the cavity tensor."""


class ExpansionGuardError(ValueError):
    """alpha = q*a beyond the validity ceiling of the second-order expansion."""


@dataclass(frozen=True)
class GreensQuery:
    component: str
    z: float
    z_prime: float
    q: float
    q_par: float

    def __post_init__(self):
        if self.component not in _COMPONENTS:
            raise ValueError(f"component must be one of {_COMPONENTS}")
        if self.q <= 0 or self.q_par < 0:
            raise ValueError("need q > 0 and q_par >= 0")

    @property
    def eta(self) -> complex:
        """Principal sqrt(1 - q_par^2/q^2); +i|.| for evanescent q_par > q."""
        return cmath.sqrt(1.0 - (self.q_par / self.q) ** 2)


@dataclass(frozen=True)
class ExpansionTerms:
    """Oscillation factors m = cos(wt) - cos(wt'), n = cos(wt) + cos(wt'), alpha = q*a."""

    m: float
    n: float
    alpha: float

    def __post_init__(self):
        if abs(self.m) > 2 or abs(self.n) > 2:
            raise ValueError("|m| and |n| cannot exceed 2")
        if self.alpha < 0:
            raise ValueError("alpha must be >= 0")


@dataclass(frozen=True)
class ContactTerm:
    """Symbolic delta(z - z') contribution; never a number."""

    coefficient: float   # multiplies delta(z - z'); equals -4*pi/q^2


@dataclass(frozen=True)
class GreensValue:
    value: complex
    contact: ContactTerm | None = None


def _eta_q(qy: GreensQuery) -> complex:
    eta = qy.eta
    if abs(eta) < 1e-14:
        raise GrazingModeError("eta = 0 (grazing mode q_par = q)")
    return eta * qy.q


def g_halfspace(qy: GreensQuery) -> GreensValue:
    """Exact one-mirror component for z, z' > 0."""
    if qy.z <= 0 or qy.z_prime <= 0:
        raise ValueError("half-space components need z, z' > 0")
    eq = _eta_q(qy)
    diff = cmath.exp(1j * eq * abs(qy.z - qy.z_prime))
    summ = cmath.exp(1j * eq * (qy.z + qy.z_prime))
    q2 = qy.q**2
    if qy.component == "xx":
        return GreensValue(2j * math.pi * eq / q2 * (diff - summ))
    if qy.component == "yy":
        return GreensValue(2j * math.pi / eq * (diff - summ))
    return GreensValue(
        2j * math.pi * qy.q_par**2 / (eq * q2) * (diff + summ),
        contact=ContactTerm(-4.0 * math.pi / q2),
    )


def g_halfspace_expanded(
    qy: GreensQuery,
    terms: ExpansionTerms,
    *,
    alpha_ceiling: float = DEFAULT_ALPHA_CEILING,
) -> GreensValue:
    """Second-order-in-alpha one-mirror component about the center z = z' = b.

    ``qy.z`` is the oscillation center b (``z_prime`` must equal it).  The
    expansion is the m >= 0 branch of |z - z'| = a*m.
    """
    if qy.z != qy.z_prime:
        raise ValueError("expanded components are evaluated about z = z' = b")
    if terms.alpha > alpha_ceiling:
        raise ExpansionGuardError(f"alpha = {terms.alpha} exceeds ceiling {alpha_ceiling}")
    b = qy.z
    eq = _eta_q(qy)
    e2b = cmath.exp(2j * eq * b)
    ea = qy.eta * terms.alpha
    m, n = terms.m, terms.n
    q2 = qy.q**2
    if qy.component in ("xx", "yy"):
        bracket = (
            (1.0 - e2b)
            - 1j * ea * (n * e2b - m)
            + 0.5 * ea**2 * (n**2 * e2b - m**2)
        )
        pref = 2j * math.pi * (eq / q2 if qy.component == "xx" else 1.0 / eq)
        return GreensValue(pref * bracket)
    bracket = (
        (1.0 + e2b)
        + 1j * ea * (n * e2b + m)
        - 0.5 * ea**2 * (n**2 * e2b + m**2)
    )
    pref = 2j * math.pi * qy.q_par**2 / (eq * q2)
    return GreensValue(pref * bracket, contact=ContactTerm(-4.0 * math.pi / q2))


def _cavity_resonance_guard(eq: complex, d: float, tol: float) -> None:
    phase = (eq * d).real
    if abs(eq.imag * d) < 1.0 and abs(phase / math.pi - round(phase / math.pi)) * math.pi < tol:
        raise CavityResonanceError(f"eta*q*d = {phase:.6g} is within {tol:.1e} of n*pi")


def g_cavity(
    qy: GreensQuery,
    d: float,
    *,
    resonance_tol: float = DEFAULT_RESONANCE_TOL,
) -> GreensValue:
    """Exact two-mirror component for 0 < z, z' < d."""
    if not (0 < qy.z < d and 0 < qy.z_prime < d):
        raise ValueError("cavity components need 0 < z, z' < d")
    eq = _eta_q(qy)
    _cavity_resonance_guard(eq, d, resonance_tol)
    den = 1.0 - cmath.exp(-2j * eq * d)
    diff = cmath.exp(-1j * eq * abs(qy.z - qy.z_prime))
    e_sum_m = cmath.exp(-1j * eq * (qy.z + qy.z_prime))
    e_sum_p = cmath.exp(1j * eq * (qy.z + qy.z_prime))
    e2d = cmath.exp(-2j * eq * d)
    cosd = cmath.cos(eq * (qy.z - qy.z_prime))
    q2 = qy.q**2
    if qy.component in ("xx", "yy"):
        bracket = diff + (-e_sum_m - e2d * e_sum_p + 2.0 * e2d * cosd) / den
        pref = 2j * math.pi * (eq / q2 if qy.component == "xx" else 1.0 / eq)
        contact = ContactTerm(-4.0 * math.pi / q2) if qy.component == "xx" else None
        return GreensValue(pref * bracket, contact=contact)
    bracket = diff + (e_sum_m + e2d * e_sum_p + 2.0 * e2d * cosd) / den
    pref = 2j * math.pi * qy.q_par**2 / (eq * q2)
    return GreensValue(pref * bracket, contact=ContactTerm(-4.0 * math.pi / q2))


def g_cavity_expanded(
    qy: GreensQuery,
    terms: ExpansionTerms,
    d: float,
    *,
    alpha_ceiling: float = DEFAULT_ALPHA_CEILING,
    resonance_tol: float = DEFAULT_RESONANCE_TOL,
) -> GreensValue:
    """Second-order-in-alpha two-mirror component about z = z' = b."""
    if qy.z != qy.z_prime:
        raise ValueError("expanded components are evaluated about z = z' = b")
    if terms.alpha > alpha_ceiling:
        raise ExpansionGuardError(f"alpha = {terms.alpha} exceeds ceiling {alpha_ceiling}")
    b = qy.z
    eq = _eta_q(qy)
    _cavity_resonance_guard(eq, d, resonance_tol)
    e2b = cmath.exp(2j * eq * b)
    e4b = cmath.exp(4j * eq * b)
    e2d = cmath.exp(2j * eq * d)
    front = cmath.exp(-2j * eq * b) / (e2d - 1.0)
    ea = qy.eta * terms.alpha
    m, n = terms.m, terms.n
    q2 = qy.q**2
    if qy.component in ("xx", "yy"):
        bracket = (
            (-1.0 + e2b) * (-e2b + e2d)
            + 1j * ea * (-n * (e4b - e2d) + m * e2b * (e2d - 1.0))
            + 0.5 * ea**2 * (n**2 * (e4b + e2d) - m**2 * (e2b + e2b * e2d))
        )
        pref = 2j * math.pi * (eq / q2 if qy.component == "xx" else 1.0 / eq)
        contact = ContactTerm(-4.0 * math.pi / q2) if qy.component == "xx" else None
        return GreensValue(pref * front * bracket, contact=contact)
    bracket = (
        (e2b + 1.0) * (e2b + e2d)
        + 1j * ea * (n * (e4b - e2d) + m * e2b * (e2d - 1.0))
        - 0.5 * ea**2 * (n**2 * (e4b + e2d) + m**2 * (e2b + e2b * e2d))
    )
    pref = 2j * math.pi * qy.q_par**2 / (eq * q2)
    return GreensValue(pref * front * bracket, contact=ContactTerm(-4.0 * math.pi / q2))
