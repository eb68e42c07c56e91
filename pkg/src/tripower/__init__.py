"""Existence and stability maps for standing waves of the 1D nonlinear
Schroedinger equation with a triple-power nonlinearity.

Hot kernels (existence classification and the stability integral) run in a
compiled Cython extension when available, with a pure-Python fallback
selected automatically at import time.
"""
from ._impl import HAS_KERNEL
from .cases import (
    CaseSigns,
    ExistenceClass,
    ExistenceKind,
    GeneralCoeffs,
    ModelParams,
    NonConvergenceError,
    NotExistsError,
    QuadratureNonConvergentError,
)

__version__ = "0.1.0"

__all__ = [
    "HAS_KERNEL",
    "CaseSigns",
    "ExistenceClass",
    "ExistenceKind",
    "GeneralCoeffs",
    "ModelParams",
    "NonConvergenceError",
    "NotExistsError",
    "QuadratureNonConvergentError",
    "__version__",
]
