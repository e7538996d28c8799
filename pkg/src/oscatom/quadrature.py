"""Adaptive quadrature and the i*epsilon regularization engine.

``integrate`` is a batched adaptive Gauss-Kronrod (7, 15) rule: the worst
panels are bisected in bulk and all new nodes are evaluated in a single
vectorized call, so integrands can be numpy expressions or compiled kernels.
Panel error is the raw |K15 - G7| difference, which keeps the reported
``err_est`` conservative.

``im_regularized`` evaluates Im of integrals whose only singular factor is
cot(u*d), with simple poles at u_n = n*pi/d, under the retarded prescription
d -> d - i*eps.  For each epsilon in the schedule the nascent delta comb
Im cot(u*(d - i*eps)) is integrated with a small exclusion zone around every
pole (the excluded Lorentzian mass is restored analytically), then the
schedule is extrapolated to eps -> 0.  The limit equals the residue sum
(pi/d) * sum_{0 < n*pi/d < q0} g(u_n), which ``mode_sum`` computes directly
as the independent oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Sequence

import numpy as np

from ._backend import kernels

__all__ = [
    "Integrand",
    "CotIntegrand",
    "EpsilonSchedule",
    "IntegralResult",
    "NonConvergenceError",
    "ExtrapolationError",
    "PoleOnEndpointError",
    "integrate",
    "im_regularized",
    "mode_sum",
    "extrapolate_to_zero",
]


class NonConvergenceError(RuntimeError):
    """Adaptive subdivision exhausted without meeting the tolerance."""


class ExtrapolationError(RuntimeError):
    """Successive epsilon-schedule estimates do not contract."""


class PoleOnEndpointError(ValueError):
    """A cot pole coincides with an integration endpoint (q0*d = n*pi)."""


# Gauss-Kronrod (7, 15) abscissae/weights on [-1, 1] (QUADPACK dqk15 values;
# exactness through degree 22 is pinned by the test suite).
_XGK = np.array(
    [0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
     0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
     0.2077849550078985, 0.0]
)
_WGK = np.array(
    [0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
     0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
     0.2044329400752989, 0.2094821410847278]
)
_WG = np.array(
    [0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
     0.4179591836734694]
)

_NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])               # 15 ascending
_WK = np.concatenate([_WGK[:-1], _WGK[::-1]])
_WG15 = np.zeros(15)
_WG15[1:-1:2] = np.concatenate([_WG[:-1], [_WG[-1]], _WG[:-1][::-1]])


@dataclass(frozen=True)
class Integrand:
    """A finite-interval integrand with optional interior breakpoints.

    ``evaluator`` must accept a float64 ndarray of abscissae and return an
    ndarray (real or complex) of the same shape.
    """

    evaluator: Callable[[np.ndarray], np.ndarray]
    lo: float
    hi: float
    known_poles: tuple = ()

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")
        poles = tuple(sorted(self.known_poles))
        if poles and not (self.lo < poles[0] and poles[-1] < self.hi):
            raise ValueError("known_poles must lie inside (lo, hi)")
        object.__setattr__(self, "known_poles", poles)


@dataclass(frozen=True)
class CotIntegrand:
    """Integrand of the form g(u)*cot(u d) + h(u) on [lo, hi].

    ``cot_coefficient`` g and the pole-free ``regular_part`` h are real and
    vectorized.  h contributes nothing to the imaginary part (it is kept and
    checked for fidelity to the printed integrands).
    """

    cot_coefficient: Callable[[np.ndarray], np.ndarray]
    hi: float
    lo: float = 0.0
    regular_part: Callable[[np.ndarray], np.ndarray] | None = None

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"need lo < hi, got [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class EpsilonSchedule:
    """Strictly decreasing positive epsilons plus the extrapolation order."""

    eps_list: tuple
    extrapolation_order: int = 0

    def __post_init__(self):
        eps = tuple(float(e) for e in self.eps_list)
        if len(eps) < 3:
            raise ValueError("need at least 3 epsilons")
        if any(e <= 0 for e in eps) or any(a <= b for a, b in zip(eps, eps[1:])):
            raise ValueError("eps_list must be strictly decreasing and positive")
        object.__setattr__(self, "eps_list", eps)
        if self.extrapolation_order <= 0:
            object.__setattr__(self, "extrapolation_order", len(eps) - 1)

    @classmethod
    def geometric(cls, eps0: float, levels: int = 8, ratio: float = 2.0) -> "EpsilonSchedule":
        return cls(tuple(eps0 / ratio**j for j in range(levels)))


class IntegralResult(NamedTuple):
    value: complex
    err_est: float


def _gk_panels(f, los, his):
    """Evaluate the GK15 rule on a batch of panels; returns (values, errors)."""
    half = 0.5 * (his - los)
    mid = 0.5 * (his + los)
    nodes = mid[:, None] + half[:, None] * _NODES[None, :]
    fv = np.asarray(f(nodes.ravel())).reshape(nodes.shape)
    vals = half * (fv * _WK).sum(axis=1)
    gvals = half * (fv * _WG15).sum(axis=1)
    return vals, np.abs(vals - gvals)


def integrate(
    f: Integrand | Callable[[np.ndarray], np.ndarray],
    lo: float | None = None,
    hi: float | None = None,
    *,
    tol: float = 1e-12,
    abs_floor: float = 0.0,
    points: Sequence[float] = (),
    max_panels: int = 4000,
) -> IntegralResult:
    """Adaptively integrate f over [lo, hi] to relative tolerance ``tol``.

    Accepts an :class:`Integrand` (bounds and breakpoints taken from it) or a
    vectorized callable plus explicit bounds.  Interior ``points`` become
    initial panel boundaries; panels are bisected where the error estimate is
    largest (near difficult endpoints this doubles the local panel count each
    sweep).  Raises :class:`NonConvergenceError` after ``max_panels``.
    """
    if isinstance(f, Integrand):
        ev, a, b = f.evaluator, f.lo, f.hi
        points = tuple(f.known_poles) + tuple(points)
    else:
        if lo is None or hi is None:
            raise ValueError("explicit lo/hi required for a bare callable")
        ev, a, b = f, float(lo), float(hi)
    if tol < 1e-13:
        raise ValueError("tol below the 1e-13 support floor")

    cuts = sorted({a, b, *(p for p in points if a < p < b)})
    los = np.array(cuts[:-1], dtype=np.float64)
    his = np.array(cuts[1:], dtype=np.float64)
    vals, errs = _gk_panels(ev, los, his)

    while True:
        total = vals.sum()
        toterr = float(errs.sum())
        allowed = tol * abs(total) + abs_floor
        if toterr <= allowed:
            return IntegralResult(total, toterr)
        if len(los) >= max_panels:
            raise NonConvergenceError(
                f"no convergence with {len(los)} panels: err {toterr:.3e} > {allowed:.3e}"
            )
        share = max(allowed, toterr * 1e-3) / max(len(los), 1)
        mask = errs > 0.5 * share
        if not mask.any():
            mask = errs == errs.max()
        keep_lo, keep_hi = los[~mask], his[~mask]
        keep_val, keep_err = vals[~mask], errs[~mask]
        mids = 0.5 * (los[mask] + his[mask])
        new_lo = np.concatenate([los[mask], mids])
        new_hi = np.concatenate([mids, his[mask]])
        new_val, new_err = _gk_panels(ev, new_lo, new_hi)
        los = np.concatenate([keep_lo, new_lo])
        his = np.concatenate([keep_hi, new_hi])
        vals = np.concatenate([keep_val, new_val])
        errs = np.concatenate([keep_err, new_err])


def extrapolate_to_zero(xs: Sequence[float], ys: Sequence[float]) -> tuple[float, float]:
    """Neville polynomial extrapolation of (xs, ys) to x = 0.

    Returns (limit, err_est) where err_est is the last tableau increment.
    """
    xs = [float(x) for x in xs]
    row = [float(y) for y in ys]
    n = len(xs)
    if n < 2:
        raise ValueError("need at least two samples")
    diag = [row[0]]
    for k in range(1, n):
        row = [
            (-xs[i + k] * row[i] + xs[i] * row[i + 1]) / (xs[i] - xs[i + k])
            for i in range(n - k)
        ]
        diag.append(row[0])
    return diag[-1], abs(diag[-1] - diag[-2])


def mode_sum(g: Callable[[float], float], d: float, q0: float) -> float:
    """Residue oracle (pi/d) * sum of g at the cot poles u_n = n*pi/d below q0."""
    if q0 <= 0:
        return 0.0
    total = 0.0
    n = 1
    while n * math.pi / d < q0:
        total += float(np.asarray(g(np.array([n * math.pi / d]))).ravel()[0])
        n += 1
    return math.pi / d * total


def default_schedule(q0: float) -> EpsilonSchedule:
    """Default epsilon schedule for im_regularized: q0*eps0 = 5e-3*pi, 8 halvings."""
    return EpsilonSchedule.geometric(5e-3 * math.pi / q0, levels=8)


def im_regularized(
    f: CotIntegrand,
    d: float,
    schedule: EpsilonSchedule | None = None,
    *,
    tol: float = 1e-11,
    exclusion_scale: float = 1e-3,
) -> IntegralResult:
    """Im of the integral of g(u)cot(u(d - i*eps)) + h(u), extrapolated to eps -> 0.

    Poles within ``exclusion_scale*pi/d`` of an endpoint raise
    :class:`PoleOnEndpointError`; non-contracting schedules raise
    :class:`ExtrapolationError`.  The u = 0 endpoint pole of cot is excluded
    with nothing restored: its neighbourhood contributes O(eps*log) -> 0, so
    the limit is the n >= 1 residue sum.
    """
    if f.lo != 0.0:
        raise ValueError("cot integrands start at u = 0 in this artifact")
    q0 = f.hi
    rho = exclusion_scale * math.pi / d
    if schedule is None:
        schedule = default_schedule(q0)

    n_modes = int(math.floor(q0 * d / math.pi))
    poles = [n * math.pi / d for n in range(1, n_modes + 1)]
    # distance of q0 from the nearest pole (on either side)
    nearest = min(
        abs(q0 - n * math.pi / d) for n in (n_modes, n_modes + 1)
    )
    if nearest < rho:
        raise PoleOnEndpointError(
            f"q0*d = {q0 * d:.6g} is within {exclusion_scale:.1e}*pi of a multiple of pi"
        )

    g = f.cot_coefficient
    # segments of [rho, q0] with the pole zones [u_n - rho, u_n + rho] removed
    cuts = [rho]
    for p in poles:
        cuts.extend([p - rho, p + rho])
    cuts.append(q0)
    segments = [(lo, hi) for lo, hi in zip(cuts[::2], cuts[1::2]) if hi > lo]

    probe = np.linspace(rho, q0, 17)
    scale = float(np.max(np.abs(g(probe)))) * q0 + 1e-300
    floor = 1e-14 * scale

    estimates = []
    quad_err = 0.0
    for eps in schedule.eps_list:
        acc = 0.0
        for lo, hi in segments:
            res = integrate(
                lambda u, e=eps: np.asarray(g(u)) * kernels.imcot(u, d, e),
                lo,
                hi,
                tol=tol,
                abs_floor=floor,
            )
            acc += res.value.real
            quad_err += res.err_est
        for p in poles:
            gp = float(np.asarray(g(np.array([p]))).ravel()[0])
            acc += gp * (2.0 / d) * math.atan(rho * d / (p * eps))
        estimates.append(acc)

    limit, ext_err = extrapolate_to_zero(schedule.eps_list, estimates)
    spread = max(abs(e - estimates[-1]) for e in estimates) + floor
    if ext_err > 0.1 * spread + floor:
        raise ExtrapolationError(
            f"epsilon extrapolation not contracting: tableau err {ext_err:.3e}"
        )

    value = limit
    if f.regular_part is not None:
        # real and pole-free: contributes exactly 0 to the imaginary part
        reg = integrate(f.regular_part, 0.0, q0, tol=1e-9, abs_floor=floor)
        value += float(np.imag(reg.value))
    return IntegralResult(value, ext_err + quad_err)
