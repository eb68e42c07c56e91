import math

import numpy as np
import pytest

from tripower.cases import CaseSigns, ModelParams
from tripower.potential import classify_existence

ALL_CASES = [CaseSigns.FF, CaseSigns.FD, CaseSigns.DF, CaseSigns.DD]


def sample_exists_points(case, n, rng, omega_range=(1e-3, 5.0), gamma_range=(-10.0, 10.0),
                         g_margin=0.0):
    """Deterministic sample of EXISTS points of one case (log-uniform omega).

    g_margin > 0 keeps a safety distance from the double-zero boundary:
    g(phi0) < -g_margin * (1 + omega*phi0).
    """
    lo, hi = math.log10(omega_range[0]), math.log10(omega_range[1])
    pts = []
    while len(pts) < n:
        om = 10.0 ** rng.uniform(lo, hi)
        ga = rng.uniform(*gamma_range)
        p = ModelParams(case, om, ga)
        cls = classify_existence(p)
        if not cls.exists:
            continue
        if g_margin > 0.0 and cls.g_at_phi0 >= -g_margin * (1.0 + om * cls.phi0):
            continue
        pts.append((p, cls))
    return pts


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)
