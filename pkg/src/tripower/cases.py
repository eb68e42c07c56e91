"""Model parameters for the triple-power standing wave problem.

The profile equation is ``phi'' = g(phi)`` with

    g(x) = omega*x - c2*x^2 - c3*x^3 - c4*x^4       (x >= 0)

and potential ``G(x) = integral_0^x g``.  The four sign cases F*F, F*D,
D*F, D*D map onto (c2, c3, c4) = (a1, -gamma, a3) with a1, a3 = +-1.
``GeneralCoeffs`` admits arbitrary (and zero) coefficients so that single-
and double-power closed forms can run through the same code paths.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass


class CaseSigns(enum.Enum):
    """Sign pattern (a1, a3) of the quadratic and quartic terms."""

    FF = (1, 1)
    FD = (1, -1)
    DF = (-1, 1)
    DD = (-1, -1)

    @property
    def a1(self) -> int:
        return self.value[0]

    @property
    def a3(self) -> int:
        return self.value[1]

    @property
    def label(self) -> str:
        return self.name.lower()

    @classmethod
    def parse(cls, s: str) -> "CaseSigns":
        try:
            return cls[s.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown case {s!r}; expected one of ff, fd, df, dd") from None


@dataclass(frozen=True)
class GeneralCoeffs:
    """Coefficients of g(x) = omega*x - c2*x^2 - c3*x^3 - c4*x^4."""

    omega: float
    c2: float
    c3: float
    c4: float

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")


@dataclass(frozen=True)
class ModelParams:
    """A point (omega, gamma) of the parameter half-plane for one sign case."""

    case: CaseSigns
    omega: float
    gamma: float

    def __post_init__(self):
        if not self.omega > 0.0:
            raise ValueError(f"omega must be positive, got {self.omega}")

    def coeffs(self) -> GeneralCoeffs:
        return GeneralCoeffs(self.omega, float(self.case.a1), -self.gamma, float(self.case.a3))


def as_coeffs(obj) -> GeneralCoeffs:
    """Accept either ModelParams or GeneralCoeffs."""
    if isinstance(obj, GeneralCoeffs):
        return obj
    if isinstance(obj, ModelParams):
        return obj.coeffs()
    raise TypeError(f"expected ModelParams or GeneralCoeffs, got {type(obj).__name__}")


class ExistenceKind(enum.Enum):
    EXISTS = "exists"
    BOUNDARY_DOUBLE_ZERO = "boundary"
    NO_POSITIVE_ZERO = "no_zero"


@dataclass(frozen=True)
class ExistenceClass:
    """Outcome of the (E1)/(E2) existence test.

    EXISTS carries the first positive zero ``phi0`` of G and ``g_at_phi0 < 0``;
    BOUNDARY_DOUBLE_ZERO carries the double-zero location ``t``;
    NO_POSITIVE_ZERO carries nothing.
    """

    kind: ExistenceKind
    phi0: float | None = None
    g_at_phi0: float | None = None
    t: float | None = None

    @property
    def exists(self) -> bool:
        return self.kind is ExistenceKind.EXISTS


class NotExistsError(ValueError):
    """Operation requires an EXISTS point of the parameter plane."""


class QuadratureNonConvergentError(RuntimeError):
    """Adaptive quadrature failed to meet its tolerance.

    Expected very close to the non-existence curve, where the stability
    integral genuinely diverges.  The partial value is attached.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class NonConvergenceError(RuntimeError):
    """Iterative solver ran out of iterations; best iterate attached."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best
