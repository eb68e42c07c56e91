"""Quintic potential G, its derivative g, and the existence classification.

The standing wave with peak phi0 exists iff (E1) G has a first positive zero
phi0 and (E2) g(phi0) < 0.  When the first zero is a double zero the point
lies on the non-existence boundary.

The floating-point threshold separating EXISTS from BOUNDARY_DOUBLE_ZERO is
|g(phi0)| <= 1e-9 * (1 + omega*phi0); the scale-aware form keeps the
classification stable across parameter windows.  See ``boundary_tol``
arguments below to override.
"""
from __future__ import annotations

import math

import numpy as np

from . import _impl
from .cases import (
    CaseSigns,
    ExistenceClass,
    ExistenceKind,
    GeneralCoeffs,
    ModelParams,
    NotExistsError,
    as_coeffs,
)

__all__ = [
    "eval_G",
    "eval_g",
    "eval_gprime",
    "first_positive_zero",
    "classify_existence",
    "phi0_partials",
    "interior_zero_count",
]


def eval_G(x, coeffs):
    """G(x) = omega/2 x^2 - c2/3 x^3 - c3/4 x^4 - c4/5 x^5 for x >= 0."""
    c = as_coeffs(coeffs)
    x = np.asarray(x, dtype=float) if np.ndim(x) else float(x)
    return x * x * (0.5 * c.omega - x * (c.c2 / 3.0 + x * (0.25 * c.c3 + x * 0.2 * c.c4)))


def eval_g(x, coeffs):
    """g(x) = G'(x) = omega*x - c2*x^2 - c3*x^3 - c4*x^4."""
    c = as_coeffs(coeffs)
    x = np.asarray(x, dtype=float) if np.ndim(x) else float(x)
    return x * (c.omega - x * (c.c2 + x * (c.c3 + x * c.c4)))


def eval_gprime(x, coeffs):
    """g'(x) = omega - 2 c2 x - 3 c3 x^2 - 4 c4 x^3."""
    c = as_coeffs(coeffs)
    x = np.asarray(x, dtype=float) if np.ndim(x) else float(x)
    return c.omega - x * (2.0 * c.c2 + x * (3.0 * c.c3 + x * 4.0 * c.c4))


def first_positive_zero(coeffs, tol: float = 1e-12, method: str = "closed_form"):
    """Smallest x > 0 with G(x) = 0, or None when G > 0 for all x > 0.

    A tangency (double zero) is still returned here; classification into
    EXISTS vs BOUNDARY_DOUBLE_ZERO happens in :func:`classify_existence`.

    method "closed_form" solves the cubic 2G/x^2 exactly (with Newton
    polish); "bisect" is the safeguarded-bisection fallback on sign changes,
    kept as an independent cross-check.
    """
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    c = as_coeffs(coeffs)
    if method == "bisect":
        from ._fallback import first_positive_zero_bisect

        return first_positive_zero_bisect(c.omega, c.c2, c.c3, c.c4)
    if method != "closed_form":
        raise ValueError(f"unknown method {method!r}")
    code, x, _ = _impl.classify(c.omega, c.c2, c.c3, c.c4)
    if code == _impl.CODE_NO_ZERO:
        return None
    return x


def classify_existence(params, tol: float = _impl.BOUNDARY_TOL) -> ExistenceClass:
    """Run the (E1)/(E2) test at one parameter point."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    c = as_coeffs(params)
    code, x, gv = _impl.classify(c.omega, c.c2, c.c3, c.c4, tol)
    if code == _impl.CODE_EXISTS:
        return ExistenceClass(ExistenceKind.EXISTS, phi0=x, g_at_phi0=gv)
    if code == _impl.CODE_BOUNDARY:
        return ExistenceClass(ExistenceKind.BOUNDARY_DOUBLE_ZERO, t=x)
    return ExistenceClass(ExistenceKind.NO_POSITIVE_ZERO)


def _require_exists(params) -> tuple[GeneralCoeffs, float, float]:
    c = as_coeffs(params)
    cls = classify_existence(c)
    if not cls.exists:
        raise NotExistsError(f"no standing wave at {params!r}: {cls.kind.value}")
    return c, cls.phi0, cls.g_at_phi0


def phi0_partials(params) -> tuple[float, float]:
    """(d phi0/d omega, d phi0/d gamma) = (phi0^2, phi0^4/2) / (-2 g(phi0)).

    Both are strictly positive on the existence region.
    """
    _, phi0, gphi0 = _require_exists(params)
    return phi0 * phi0 / (-2.0 * gphi0), phi0 ** 4 / (-4.0 * gphi0)


def interior_zero_count(params, cluster_tol: float = 1e-7) -> tuple[int, list[float]]:
    """Distinct zeros of g in the open interval (0, phi0).

    Multiplicity is collapsed: a tangency of g counts once.  The count is 1
    or 3 for simple configurations, 2 at a degenerate tangency.
    """
    c, phi0, _ = _require_exists(params)
    # zeros of g are roots of the cubic p(x) = g(x)/x
    from ._fallback import _cubic_real_roots, p_val

    p0, p1, p2, p3 = c.omega, -c.c2, -c.c3, -c.c4
    candidates = [r for r in _cubic_real_roots(p0, p1, p2, p3)]
    # tangencies of g show up as near-zero local extrema of p
    crit = _cubic_real_roots(p1, 2.0 * p2, 3.0 * p3, 0.0)
    for xc in crit:
        if xc <= 0.0:
            continue
        if abs(xc * p_val(xc, c.omega, c.c2, c.c3, c.c4)) <= 1e-9 * (1.0 + c.omega * xc):
            candidates.append(xc)
    candidates = sorted(x for x in candidates if 0.0 < x < phi0 * (1.0 - 1e-12))
    zeros: list[float] = []
    for x in candidates:
        if zeros and abs(x - zeros[-1]) <= cluster_tol * (1.0 + abs(x)):
            continue
        zeros.append(x)
    return len(zeros), zeros
