"""Select the compiled kernel when available, else the pure-Python fallback.

Set TRIPOWER_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the equivalence tests).
"""
from __future__ import annotations

import os

if os.environ.get("TRIPOWER_PURE_PYTHON"):
    from . import _fallback as impl
else:
    try:
        from . import _kernel as impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fallback as impl

HAS_KERNEL = impl.HAS_KERNEL

CODE_EXISTS = impl.CODE_EXISTS
CODE_BOUNDARY = impl.CODE_BOUNDARY
CODE_NO_ZERO = impl.CODE_NO_ZERO

QUAD_OK = impl.QUAD_OK
QUAD_NONCONVERGED = impl.QUAD_NONCONVERGED
QUAD_NOT_EXISTS = impl.QUAD_NOT_EXISTS

FORMULA_UNIT = impl.FORMULA_UNIT
FORMULA_X = impl.FORMULA_X
FORMULA_GAUGE = impl.FORMULA_GAUGE
FORMULA_GAUGE_ALT = impl.FORMULA_GAUGE_ALT

BOUNDARY_TOL = impl.BOUNDARY_TOL

classify = impl.classify
j_eval = impl.j_eval
classify_grid = impl.classify_grid
j_grid = impl.j_grid
