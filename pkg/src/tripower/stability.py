"""Stability functional J(omega, gamma) = d''(omega).

Three equivalent integral forms are evaluated by adaptive Gauss-Kronrod
panels after removing the (phi0 - x)^(-1/2) endpoint singularity with the
substitution x = phi0*(1 - u^2) (s = 1 - u^2 for the unit-interval form):

  unit interval   -phi0^4/(2 g(phi0)) * int_0^1 (3 + (p(b)-p(x))/h(x))
                  / (b sqrt(h(x))) ds,  x = b sqrt(s)
  x form          -sqrt2/(4 g(phi0)) * int_0^phi0 {6 phi0 x^2/sqrt(G)
                  + x^3 (x g(phi0) - phi0 g(x))/G^(3/2)} dx
  gauge form      -sqrt2/(4 g(phi0)) * int_0^phi0 (8 x^3 G + x^4 g(phi0)
                  - x^4 g(x))/G^(3/2) dx

The gauge form is the default: its numerator vanishes to first order at
x = phi0, so the substitution leaves a smooth integrand.  J > 0 means
orbital stability, J < 0 instability; J is undefined on the non-existence
set, and diverges to +-inf on diagonal approach of the boundary curve.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from . import _impl
from .cases import (
    NotExistsError,
    QuadratureNonConvergentError,
    as_coeffs,
)
from .potential import classify_existence, interior_zero_count

__all__ = [
    "Formula",
    "QuadOptions",
    "StabilityValue",
    "j",
    "j_unit_interval",
    "j_x_form",
    "j_gauge_form",
]


class Formula(enum.Enum):
    UNIT_INTERVAL = _impl.FORMULA_UNIT
    X_FORM = _impl.FORMULA_X
    GAUGE = _impl.FORMULA_GAUGE


@dataclass(frozen=True)
class QuadOptions:
    """rel_tol is relative to max(|J|, 0.01 * L1) where L1 is the L1 mass of
    the integral, so near-zero J values stay meaningful; max_refinements is
    the bisection depth limit of the adaptive panels."""

    rel_tol: float = 1e-10
    max_refinements: int = 30
    formula: Formula = Formula.GAUGE

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise ValueError("rel_tol must be positive")


@dataclass(frozen=True)
class StabilityValue:
    j: float
    formula_used: Formula
    est_error: float
    phi0: float
    scale: float  # L1 mass of the integral, prefactor included
    n_interior_zeros: int | None = None  # set by j(); > 1 flags the FDF
    # configurations with extra fixed points inside the homoclinic orbit


DEFAULT_OPTIONS = QuadOptions()


def _j_with_formula(params, opts: QuadOptions, formula_code: int) -> StabilityValue:
    c = as_coeffs(params)
    jv, err, phi0, scale, status = _impl.j_eval(
        c.omega, c.c2, c.c3, c.c4, formula_code, opts.rel_tol, opts.max_refinements
    )
    if status == _impl.QUAD_NOT_EXISTS:
        cls = classify_existence(c)
        raise NotExistsError(f"J undefined at {params!r}: {cls.kind.value}")
    val = StabilityValue(
        j=jv,
        formula_used=Formula(formula_code if formula_code != _impl.FORMULA_GAUGE_ALT
                             else _impl.FORMULA_GAUGE),
        est_error=err,
        phi0=phi0,
        scale=scale,
    )
    if status == _impl.QUAD_NONCONVERGED:
        raise QuadratureNonConvergentError(
            f"quadrature above tolerance at {params!r} (est_error={err:.3e})",
            partial=val,
        )
    return val


def j_unit_interval(params, opts: QuadOptions = DEFAULT_OPTIONS) -> StabilityValue:
    """Fixed-domain form on (0,1); the paper's mesh formula."""
    return _j_with_formula(params, opts, _impl.FORMULA_UNIT)


def j_x_form(params, opts: QuadOptions = DEFAULT_OPTIONS) -> StabilityValue:
    """Form after the natural change of variables s = x^2."""
    return _j_with_formula(params, opts, _impl.FORMULA_X)


def j_gauge_form(params, opts: QuadOptions = DEFAULT_OPTIONS) -> StabilityValue:
    """Gauge A(x) = x^4 - phi0 x^3; the default form."""
    return _j_with_formula(params, opts, _impl.FORMULA_GAUGE)


def _j_gauge_alt(params, opts: QuadOptions = DEFAULT_OPTIONS) -> StabilityValue:
    """Second displayed gauge A(x) = phi0^2 x^2 - phi0 x^3 (test variant)."""
    return _j_with_formula(params, opts, _impl.FORMULA_GAUGE_ALT)


def j(params, opts: QuadOptions | None = None) -> StabilityValue:
    """Canonical entry point: classify, then evaluate the requested form
    (gauge by default).  Attaches the interior-zero count of g as metadata."""
    opts = opts or DEFAULT_OPTIONS
    cls = classify_existence(as_coeffs(params))
    if not cls.exists:
        raise NotExistsError(f"J undefined at {params!r}: {cls.kind.value}")
    val = _j_with_formula(params, opts, opts.formula.value)
    count, _ = interior_zero_count(params)
    return replace(val, n_interior_zeros=count)
