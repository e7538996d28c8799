"""Physical parameter records, reference rates and dimensionless groups.

Inputs are CGS (the rate formulas carry erg, cm, s); all internal rate
computations downstream run on dimensionless ratios and convert back at the
API boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "HBAR_CGS",
    "C_CGS",
    "DomainError",
    "AtomConfig",
    "MotionConfig",
    "GeometryConfig",
    "DimensionlessGroups",
    "gamma0",
    "gamma1",
    "groups",
]

HBAR_CGS = 1.054571817e-27  # erg s
C_CGS = 2.99792458e10       # cm/s

# non-relativistic guard on v_max/c; configurable per MotionConfig
DEFAULT_VMAX_OVER_C_CEILING = 0.1


class DomainError(ValueError):
    """Input outside the validity domain of the closed-form rates."""


@dataclass(frozen=True)
class AtomConfig:
    """Two-level atom: transition frequency and dipole matrix elements (CGS).

    ``dipole_sq_total`` is the spherically averaged |<e|d|g>|^2 used by the
    emission-rate sections; ``dipole_sq_perp``/``dipole_sq_par`` are the
    orientation-resolved values used by the decay section.  They are
    independent inputs (no constraint ties them together).
    """

    omega0: float                    # rad/s
    dipole_sq_total: float = 1.0     # erg cm^3
    dipole_sq_perp: float = 0.0
    dipole_sq_par: float = 0.0
    hbar: float = HBAR_CGS
    c: float = C_CGS

    def __post_init__(self):
        if self.omega0 <= 0:
            raise DomainError("omega0 must be positive")
        if min(self.dipole_sq_total, self.dipole_sq_perp, self.dipole_sq_par) < 0:
            raise DomainError("dipole magnitudes must be >= 0")
        if self.hbar <= 0 or self.c <= 0:
            raise DomainError("hbar and c must be positive")


@dataclass(frozen=True)
class MotionConfig:
    """Center-of-mass oscillation z(t) = b + a cos(omega_cm t), with b > a >= 0.

    ``omega_cm`` doubles as the decay-section oscillation frequency Omega.
    """

    amplitude_a: float   # cm
    offset_b: float      # cm
    omega_cm: float      # rad/s
    vmax_over_c_ceiling: float = DEFAULT_VMAX_OVER_C_CEILING

    def __post_init__(self):
        if self.amplitude_a < 0:
            raise DomainError("amplitude a must be >= 0")
        if not self.offset_b > self.amplitude_a:
            raise DomainError("need offset b > amplitude a (atom clear of the wall)")
        if self.omega_cm <= 0:
            raise DomainError("oscillation frequency must be positive")

    @property
    def v_max(self) -> float:
        return self.amplitude_a * self.omega_cm

    def check_nonrelativistic(self, c: float) -> None:
        if self.v_max / c >= self.vmax_over_c_ceiling:
            raise DomainError(
                f"v_max/c = {self.v_max / c:.3g} exceeds the "
                f"non-relativistic ceiling {self.vmax_over_c_ceiling}"
            )


@dataclass(frozen=True)
class GeometryConfig:
    """One wall at z = 0 (half_space) or two walls at z = 0 and z = d (cavity)."""

    kind: str = "half_space"            # "half_space" | "cavity"
    plate_gap_d: float | None = None    # cm, cavity only

    def __post_init__(self):
        if self.kind not in ("half_space", "cavity"):
            raise DomainError(f"unknown geometry kind {self.kind!r}")
        if self.kind == "cavity" and (self.plate_gap_d is None or self.plate_gap_d <= 0):
            raise DomainError("cavity geometry requires plate_gap_d > 0")

    def check_fits(self, motion: MotionConfig) -> None:
        if self.kind == "cavity":
            if not self.plate_gap_d > motion.offset_b + motion.amplitude_a:
                raise DomainError("atom trajectory must stay between the plates (d > b + a)")


@dataclass(frozen=True)
class DimensionlessGroups:
    """The paper's scattered symbol definitions collected in one record."""

    q0: float       # (omega_cm - omega0)/c, 1/cm
    k0: float       # omega0/c
    q1: float       # (omega0 + Omega)/c
    q2: float       # (omega0 - Omega)/c; negative when Omega > omega0
    r: float        # omega0/omega_cm
    x: float        # 2 k0 b
    xi: float       # omega0/Omega
    sigma: float    # 1 + 1/xi
    delta: float    # 1 - 1/xi
    beta_over: float | None = None   # b/d, cavity only


def gamma0(atom: AtomConfig) -> float:
    """Free-space spontaneous rate 4 |d|^2 omega0^3 / (3 hbar c^3), in 1/s."""
    return 4.0 * atom.dipole_sq_total * atom.omega0**3 / (3.0 * atom.hbar * atom.c**3)


def gamma1(atom: AtomConfig, motion: MotionConfig) -> float:
    """Free-space emission rate of the oscillating ground-state atom, in 1/s.

    (1/12) Gamma0 (v_max/c)^2 (1 + r^2) (1/r - 1)^3 with r = omega0/omega_cm;
    defined for omega_cm >= omega0 only.
    """
    if motion.omega_cm < atom.omega0:
        raise DomainError("emission requires omega_cm >= omega0 (q0 >= 0)")
    motion.check_nonrelativistic(atom.c)
    r = atom.omega0 / motion.omega_cm
    v = motion.v_max / atom.c
    return gamma0(atom) / 12.0 * v * v * (1.0 + r * r) * (1.0 / r - 1.0) ** 3


def groups(
    atom: AtomConfig,
    motion: MotionConfig,
    geom: GeometryConfig | None = None,
) -> DimensionlessGroups:
    """Collect every derived wavenumber/ratio used by the rate modules."""
    if geom is not None:
        geom.check_fits(motion)
    omega = motion.omega_cm
    xi = atom.omega0 / omega
    beta = None
    if geom is not None and geom.kind == "cavity":
        beta = motion.offset_b / geom.plate_gap_d
    return DimensionlessGroups(
        q0=(omega - atom.omega0) / atom.c,
        k0=atom.omega0 / atom.c,
        q1=(atom.omega0 + omega) / atom.c,
        q2=(atom.omega0 - omega) / atom.c,
        r=atom.omega0 / omega,
        x=2.0 * atom.omega0 * motion.offset_b / atom.c,
        xi=xi,
        sigma=1.0 + 1.0 / xi,
        delta=1.0 - 1.0 / xi,
        beta_over=beta,
    )
