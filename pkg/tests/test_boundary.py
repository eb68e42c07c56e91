import math

import numpy as np
import pytest

from tripower.boundary import (
    admissible_t_interval,
    dd_gamma_asymptote,
    ff_endpoint,
    ff_endpoint_t,
    gamma_no_curve,
    gamma_no_point,
    phi0_limits_across,
)
from tripower.cases import CaseSigns, ModelParams
from tripower.potential import classify_existence, eval_G, first_positive_zero


def test_ff_endpoint_constants():
    om1, ga1 = ff_endpoint()
    assert om1 == pytest.approx(2.0 * math.sqrt(5.0) / 27.0, abs=0.0)
    assert ga1 == pytest.approx(4.0 / math.sqrt(5.0), abs=0.0)
    assert om1 == pytest.approx(0.165635, abs=1e-6)
    assert ga1 == pytest.approx(1.788854, abs=1e-6)


def test_ff_endpoint_is_triple_zero():
    t = ff_endpoint_t()
    bp = gamma_no_point(t, CaseSigns.FF)
    om1, ga1 = ff_endpoint()
    assert bp.omega == pytest.approx(om1, rel=1e-15)
    assert bp.gamma == pytest.approx(ga1, rel=1e-15)
    assert bp.x0 == pytest.approx(t, rel=1e-13)


def test_fd_point_t1():
    bp = gamma_no_point(1.0, CaseSigns.FD)
    assert bp.omega == pytest.approx(8.0 / 15.0, rel=1e-15)
    assert bp.gamma == pytest.approx(-8.0 / 15.0, rel=1e-15)
    assert bp.x0 == pytest.approx(-4.0 / 3.0, rel=1e-15)


def test_dd_asymptote():
    assert dd_gamma_asymptote() == pytest.approx(-2.065591, abs=1e-6)
    t = math.sqrt(5.0 / 3.0) * (1.0 + 1e-9)
    bp = gamma_no_point(t, CaseSigns.DD)
    assert bp.omega == pytest.approx(0.0, abs=1e-8)
    assert bp.gamma == pytest.approx(dd_gamma_asymptote(), abs=1e-8)


def test_df_rejected():
    with pytest.raises(ValueError):
        gamma_no_point(1.0, CaseSigns.DF)
    with pytest.raises(ValueError):
        admissible_t_interval(CaseSigns.DF)


def test_inadmissible_t_rejected():
    with pytest.raises(ValueError):
        gamma_no_point(ff_endpoint_t() * 1.01, CaseSigns.FF)
    with pytest.raises(ValueError):
        gamma_no_point(-0.5, CaseSigns.FD)
    with pytest.raises(ValueError):
        gamma_no_point(1.0, CaseSigns.DD)  # below sqrt(5/3)


def test_curve_monotone_and_negative_slope():
    crv = gamma_no_curve(CaseSigns.FF, 0.01, ff_endpoint_t(), 100)
    om = crv.points[:, 0]
    ga = crv.points[:, 1]
    assert np.all(np.diff(om) > 0.0)
    assert np.all(np.diff(ga) < 0.0)
    # slope d gamma / d omega = -2/t^2 at an interior t of each step; the
    # secant equals -2/(t1*t2) up to O(dt^2) except where d omega/dt -> 0
    # at the endpoint t = sqrt5/3, so the last two steps are excluded
    slope = np.diff(ga) / np.diff(om)
    ref = -2.0 / (crv.t[:-1] * crv.t[1:])
    assert np.allclose(slope[:-2], ref[:-2], rtol=1e-3)


def test_curve_all_cases_negative_slope():
    for case, (lo, hi) in ((CaseSigns.FD, (0.2, 3.0)), (CaseSigns.DD, (1.4, 4.0))):
        crv = gamma_no_curve(case, lo, hi, 80)
        slope = np.diff(crv.points[:, 1]) / np.diff(crv.points[:, 0])
        assert np.all(slope < 0.0), case


def test_factorization_identity():
    # G(x) = -(a3/5) x^2 (x-t)^2 (x-x0) at curve points
    for case, t in ((CaseSigns.FF, 0.5), (CaseSigns.FD, 1.0), (CaseSigns.DD, 2.0)):
        bp = gamma_no_point(t, case)
        c = ModelParams(case, bp.omega, bp.gamma).coeffs()
        hi = 2.0 * max(abs(bp.x0), t)
        xs = np.linspace(0.0, hi, 500)
        fact = -(case.a3 / 5.0) * xs ** 2 * (xs - t) ** 2 * (xs - bp.x0)
        scale = np.max(np.abs(fact)) + 1.0
        assert np.max(np.abs(eval_G(xs, c) - fact)) <= 1e-10 * scale


def test_consistency_with_classifier():
    for case, ts in ((CaseSigns.FF, (0.1, 0.3, 0.5, 0.7)),
                     (CaseSigns.FD, (0.3, 1.0, 2.5)),
                     (CaseSigns.DD, (1.5, 2.0, 3.0))):
        for t in ts:
            bp = gamma_no_point(t, case)
            cls = classify_existence(ModelParams(case, bp.omega, bp.gamma))
            assert not cls.exists, (case, t)
            assert cls.t == pytest.approx(t, abs=1e-8)


def test_phi0_limits():
    below, above = phi0_limits_across(0.7, CaseSigns.FF)
    assert below == 0.7
    assert above == pytest.approx(5.0 / 4.2 - 0.35, rel=1e-12)
    assert above == pytest.approx(0.8405, abs=1e-4)

    below, above = phi0_limits_across(ff_endpoint_t(), CaseSigns.FF)
    assert above == pytest.approx(below, rel=1e-13)

    below, above = phi0_limits_across(1.0, CaseSigns.FD)
    assert below == 1.0 and above is None
    _, above = phi0_limits_across(2.0, CaseSigns.DD)
    assert above is None


def test_phi0_jump_lemma():
    # F*F at t=0.5: diagonal approach from below tends to t, from above to x0
    t = 0.5
    bp = gamma_no_point(t, CaseSigns.FF)
    x0 = bp.x0
    deltas = (1e-2, 1e-3, 1e-4)
    lo_seq = [first_positive_zero(ModelParams(CaseSigns.FF, bp.omega - d, bp.gamma - d))
              for d in deltas]
    hi_seq = [first_positive_zero(ModelParams(CaseSigns.FF, bp.omega + d, bp.gamma + d))
              for d in deltas]
    for a, b in zip(lo_seq, lo_seq[1:]):
        assert abs(b - t) < abs(a - t)
    for a, b in zip(hi_seq, hi_seq[1:]):
        assert abs(b - x0) < abs(a - x0)
    assert abs(lo_seq[-1] - t) < 5e-2
    assert abs(hi_seq[-1] - x0) < 5e-2
