"""Analytic non-existence curves Gamma_no and their endpoint constants.

A positive double zero t of G forces

    omega = a1*t/3 - a3*t^3/5,   gamma = 2*a1/(3t) + 6*a3*t/5,
    x0 = 5*omega/(2*a3*t^2)

and G factorizes as -(a3/5) x^2 (x-t)^2 (x-x0).  The admissible t-interval
per case (F*F: (0, sqrt5/3], F*D: (0, inf), D*D: (sqrt(5/3), inf), D*F:
empty) is where omega > 0 and the double zero is the first zero of G.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .cases import CaseSigns

__all__ = [
    "BoundaryPoint",
    "ParamCurve",
    "admissible_t_interval",
    "gamma_no_point",
    "gamma_no_curve",
    "phi0_limits_across",
    "ff_endpoint",
    "ff_endpoint_t",
    "dd_gamma_asymptote",
]


@dataclass(frozen=True)
class BoundaryPoint:
    t: float
    omega: float
    gamma: float
    x0: float


@dataclass
class ParamCurve:
    """Ordered polyline in the (omega, gamma) half-plane.

    label is one of "gamma_no", "gamma_cr", "level"; level curves carry the
    level value.  Gamma_no curves also store the parametrizing t per point.
    """

    points: np.ndarray  # (n, 2) columns omega, gamma
    label: str
    level: float | None = None
    t: np.ndarray | None = field(default=None, repr=False)


def ff_endpoint_t() -> float:
    """Double-zero location at the F*F curve endpoint (a triple zero of G)."""
    return math.sqrt(5.0) / 3.0


def ff_endpoint() -> tuple[float, float]:
    """(omega_1, gamma_1) = (2*sqrt5/27, 4/sqrt5), endpoint of Gamma_no in F*F."""
    return 2.0 * math.sqrt(5.0) / 27.0, 4.0 / math.sqrt(5.0)


def dd_gamma_asymptote() -> float:
    """gamma limit -8*sqrt15/15 of the D*D curve as t -> sqrt(5/3)+ (omega -> 0)."""
    return -8.0 * math.sqrt(15.0) / 15.0


def admissible_t_interval(case: CaseSigns) -> tuple[float, float]:
    """Open/closed bounds of the double-zero parameter t; D*F raises."""
    if case is CaseSigns.FF:
        return 0.0, ff_endpoint_t()
    if case is CaseSigns.FD:
        return 0.0, math.inf
    if case is CaseSigns.DD:
        return math.sqrt(5.0 / 3.0), math.inf
    raise ValueError("D*F has no non-existence curve (R_no is empty)")


def _check_t(t: float, case: CaseSigns) -> None:
    lo, hi = admissible_t_interval(case)
    if case is CaseSigns.FF:
        if not (lo < t <= hi):
            raise ValueError(f"t={t} outside admissible interval (0, sqrt5/3] for F*F")
    elif not (lo < t < hi):
        raise ValueError(f"t={t} outside admissible interval ({lo}, {hi}) for {case.name}")


def gamma_no_point(t: float, case: CaseSigns) -> BoundaryPoint:
    """One point of Gamma_no with its third zero x0 = 5*omega/(2*a3*t^2)."""
    _check_t(t, case)
    a1, a3 = case.a1, case.a3
    omega = a1 * t / 3.0 - a3 * t ** 3 / 5.0
    gamma = 2.0 * a1 / (3.0 * t) + 6.0 * a3 * t / 5.0
    x0 = 5.0 * omega / (2.0 * a3 * t * t)
    return BoundaryPoint(t=t, omega=omega, gamma=gamma, x0=x0)


def gamma_no_curve(case: CaseSigns, t_lo: float, t_hi: float, n: int) -> ParamCurve:
    """n points of Gamma_no sampled uniformly in t over [t_lo, t_hi]."""
    if n < 2:
        raise ValueError("n must be at least 2")
    _check_t(t_lo, case)
    _check_t(t_hi, case)
    ts = np.linspace(t_lo, t_hi, n)
    pts = np.empty((n, 2))
    for i, t in enumerate(ts):
        bp = gamma_no_point(float(t), case)
        pts[i, 0] = bp.omega
        pts[i, 1] = bp.gamma
    return ParamCurve(points=pts, label="gamma_no", t=ts)


def phi0_limits_across(t: float, case: CaseSigns) -> tuple[float, float | None]:
    """Limits of phi0 across the boundary point at parameter t.

    Approaching from below (omega-, gamma-) the first zero tends to t.  In
    F*F the first zero jumps: from above it tends to x0 = 5/(6t) - t/2 >= t
    (equality only at the endpoint t = sqrt5/3).  In F*D and D*D there is no
    existence region above the curve, hence no second limit.
    """
    bp = gamma_no_point(t, case)
    if case is CaseSigns.FF:
        return t, bp.x0
    return t, None
