"""Pure-Python implementation of the hot kernels.

Mirrors the compiled extension ``tripower._kernel`` exactly: closed-form
cubic roots, existence classification, and the stability integral evaluated
by adaptive Gauss-Kronrod 15(7) panels on regularized integrands.  Selected
at import time when the extension is unavailable (or when the environment
variable TRIPOWER_PURE_PYTHON is set).

All polynomials below are in ascending coefficients.  For g-coefficients
(omega, c2, c3, c4):

    g(x)  = omega*x - c2*x^2 - c3*x^3 - c4*x^4
    G(x)  = omega/2 x^2 - c2/3 x^3 - c3/4 x^4 - c4/5 x^5
    h(x)  = 2 G(x)/x^2   (cubic; positive roots of h = positive zeros of G)
    p(x)  = g(x)/x       (cubic; positive roots of p = positive zeros of g)
"""
from __future__ import annotations

import math

HAS_KERNEL = False

# classification codes shared with the compiled kernel
CODE_EXISTS = 0
CODE_BOUNDARY = 1
CODE_NO_ZERO = 2

# quadrature status codes
QUAD_OK = 0
QUAD_NONCONVERGED = 1
QUAD_NOT_EXISTS = 2

# integral formulas
FORMULA_UNIT = 0
FORMULA_X = 1
FORMULA_GAUGE = 2
FORMULA_GAUGE_ALT = 3

# default coefficient of the scale-aware double-zero threshold
# |g(phi0)| <= BOUNDARY_TOL * (1 + omega*phi0)
BOUNDARY_TOL = 1e-9

_MAX_PANELS = 2048


# ----------------------------------------------------------------------
# polynomial evaluation
# ----------------------------------------------------------------------

def g_val(x, om, c2, c3, c4):
    return x * (om - x * (c2 + x * (c3 + x * c4)))


def gprime_val(x, om, c2, c3, c4):
    return om - x * (2.0 * c2 + x * (3.0 * c3 + x * 4.0 * c4))


def G_val(x, om, c2, c3, c4):
    return x * x * (0.5 * om - x * (c2 / 3.0 + x * (0.25 * c3 + x * 0.2 * c4)))


def h_val(x, om, c2, c3, c4):
    return om - x * (2.0 * c2 / 3.0 + x * (0.5 * c3 + x * 0.4 * c4))


def p_val(x, om, c2, c3, c4):
    return om - x * (c2 + x * (c3 + x * c4))


def _h_coeffs(om, c2, c3, c4):
    return om, -2.0 * c2 / 3.0, -0.5 * c3, -0.4 * c4


def _p_coeffs(om, c2, c3, c4):
    return om, -c2, -c3, -c4


# ----------------------------------------------------------------------
# closed-form real roots of a0 + a1 x + a2 x^2 + a3 x^3
# ----------------------------------------------------------------------

def _cbrt(v):
    return math.copysign(abs(v) ** (1.0 / 3.0), v)


def _cubic_real_roots(a0, a1, a2, a3):
    """All real roots, ascending, by Cardano/trigonometric closed form with a
    two-step Newton polish on the original coefficients."""
    if a3 == 0.0:
        if a2 == 0.0:
            if a1 == 0.0:
                return []
            return [-a0 / a1]
        disc = a1 * a1 - 4.0 * a2 * a0
        if disc < 0.0:
            return []
        sq = math.sqrt(disc)
        if a1 >= 0.0:
            qq = -0.5 * (a1 + sq)
        else:
            qq = -0.5 * (a1 - sq)
        roots = [qq / a2]
        if qq != 0.0:
            roots.append(a0 / qq)
        return sorted(roots)
    # monic: x^3 + A x^2 + B x + C
    A = a2 / a3
    B = a1 / a3
    C = a0 / a3
    # depressed: y^3 + p_ y + q_, x = y - A/3
    p_ = B - A * A / 3.0
    q_ = 2.0 * A * A * A / 27.0 - A * B / 3.0 + C
    shift = -A / 3.0
    disc = 0.25 * q_ * q_ + p_ * p_ * p_ / 27.0
    roots = []
    if disc > 0.0:
        sq = math.sqrt(disc)
        u = _cbrt(-0.5 * q_ + sq)
        v = _cbrt(-0.5 * q_ - sq)
        roots.append(u + v + shift)
    elif p_ == 0.0 and q_ == 0.0:
        roots.append(shift)
    else:
        m = 2.0 * math.sqrt(-p_ / 3.0)
        arg = 3.0 * q_ / (p_ * m)
        arg = min(1.0, max(-1.0, arg))
        theta = math.acos(arg) / 3.0
        for k in range(3):
            roots.append(m * math.cos(theta - 2.0 * math.pi * k / 3.0) + shift)
    polished = []
    for r in roots:
        # guarded Newton polish: near a multiple root f and f' are both at
        # noise level and the raw step is garbage, so cap it and require
        # descent in |f|
        fr = abs(a0 + r * (a1 + r * (a2 + r * a3)))
        for _ in range(3):
            f = a0 + r * (a1 + r * (a2 + r * a3))
            fp = a1 + r * (2.0 * a2 + r * 3.0 * a3)
            if fp == 0.0:
                break
            step = f / fp
            if not abs(step) <= 1e-3 * (1.0 + abs(r)):
                break
            r_new = r - step
            f_new = abs(a0 + r_new * (a1 + r_new * (a2 + r_new * a3)))
            if f_new > fr:
                break
            r, fr = r_new, f_new
            if abs(step) <= 1e-16 * (1.0 + abs(r)):
                break
        polished.append(r)
    polished.sort()
    return polished


def _local_minima_of_h(om, c2, c3, c4):
    """Positive critical points of h with h'' >= 0 (candidate double zeros)."""
    h0, h1, h2, h3 = _h_coeffs(om, c2, c3, c4)
    crits = _cubic_real_roots(h1, 2.0 * h2, 3.0 * h3, 0.0)
    out = []
    for x in crits:
        if x > 0.0 and (2.0 * h2 + 6.0 * h3 * x) >= 0.0:
            out.append(x)
    return sorted(out)


# ----------------------------------------------------------------------
# existence classification
# ----------------------------------------------------------------------

def classify(om, c2, c3, c4, tol=BOUNDARY_TOL):
    """Classify (E1)/(E2): returns (code, x, g_at_x).

    code CODE_EXISTS: x = first positive zero phi0 of G, g(phi0) < 0.
    code CODE_BOUNDARY: x = double-zero location t, |g(t)| below threshold.
    code CODE_NO_ZERO: G > 0 for all x > 0.

    Near-tangency is detected at the local minima of h, where the identity
    g(x) = x*h(x) holds; this keeps the double-zero location accurate to
    machine precision even though the root pair is ill-conditioned.
    """
    h0, h1, h2, h3 = _h_coeffs(om, c2, c3, c4)
    roots = [r for r in _cubic_real_roots(h0, h1, h2, h3) if r > 0.0]
    r0 = roots[0] if roots else math.nan
    minima = _local_minima_of_h(om, c2, c3, c4)
    for xc in minima:
        if roots and xc >= r0 - 1e-12 * (1.0 + r0):
            break
        gc = xc * h_val(xc, om, c2, c3, c4)
        if abs(gc) <= tol * (1.0 + om * xc):
            return CODE_BOUNDARY, xc, gc
    if not roots:
        return CODE_NO_ZERO, math.nan, math.nan
    gv = g_val(r0, om, c2, c3, c4)
    if gv < -tol * (1.0 + om * r0):
        return CODE_EXISTS, r0, gv
    # tangency at the first zero: snap to the nearest critical point of h
    t = r0
    if minima:
        t = min(minima, key=lambda xc: abs(xc - r0))
        if abs(t - r0) > 0.5 * (1.0 + r0):
            t = r0
    return CODE_BOUNDARY, t, g_val(t, om, c2, c3, c4)


def first_positive_zero_bisect(om, c2, c3, c4, n_scan=2000):
    """Safeguarded-bisection fallback on sign changes of h = 2G/x^2.

    Misses exact tangencies by construction; used to cross-check the
    closed-form route at transversal points.
    """
    h0, h1, h2, h3 = _h_coeffs(om, c2, c3, c4)
    lead = None
    for c in (h3, h2, h1):
        if c != 0.0:
            lead = c
            break
    if lead is None:
        return None
    bound = 1.0 + max(abs(h0), abs(h1), abs(h2), abs(h3)) / abs(lead)
    lo = 0.0
    flo = h0
    hi = None
    for i in range(1, n_scan + 1):
        x = bound * i / n_scan
        fx = h_val(x, om, c2, c3, c4)
        if flo > 0.0 >= fx:
            hi = x
            break
        lo, flo = x, fx
    if hi is None:
        return None
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = h_val(mid, om, c2, c3, c4)
        if fm > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ----------------------------------------------------------------------
# Gauss-Kronrod 15(7)
# ----------------------------------------------------------------------

_XGK = (
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
)
_WGK = (
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
)
_WG = (0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469)


def _gk15(f, a, b):
    """One Gauss-Kronrod panel: returns (I, err)."""
    c = 0.5 * (a + b)
    hw = 0.5 * (b - a)
    fv = [0.0] * 15
    resk = 0.0
    resg = 0.0
    k = 0
    for i in range(7):
        f1 = f(c - hw * _XGK[i])
        f2 = f(c + hw * _XGK[i])
        fv[k] = f1
        fv[k + 1] = f2
        k += 2
        resk += _WGK[i] * (f1 + f2)
        if i % 2 == 1:
            resg += _WG[i // 2] * (f1 + f2)
    fc = f(c)
    fv[14] = fc
    resk += _WGK[7] * fc
    resg += _WG[3] * fc
    reskh = 0.5 * resk
    resasc = _WGK[7] * abs(fc - reskh)
    k = 0
    for i in range(7):
        resasc += _WGK[i] * (abs(fv[k] - reskh) + abs(fv[k + 1] - reskh))
        k += 2
    resasc *= hw
    err = abs(resk - resg) * hw
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    if not math.isfinite(resk):
        err = math.inf
    return resk * hw, err


def adaptive_gk(f, a, b, rel_tol, max_depth, seed_panels=4):
    """Adaptive GK15 with worst-panel-first bisection.

    Convergence target is rel_tol * max(|I|, 0.01*L1) so values near a zero
    crossing of the integral remain meaningful.  Returns (I, err, L1, status).
    """
    panels = []
    for i in range(seed_panels):
        lo = a + (b - a) * i / seed_panels
        hi = a + (b - a) * (i + 1) / seed_panels
        I, e = _gk15(f, lo, hi)
        panels.append([lo, hi, I, e, 0])
    while True:
        itot = 0.0
        l1 = 0.0
        etot = 0.0
        worst = -1
        worst_err = -1.0
        for idx, (lo, hi, I, e, d) in enumerate(panels):
            itot += I
            l1 += abs(I)
            etot += e
            if d < max_depth and e > worst_err:
                worst_err = e
                worst = idx
        target = rel_tol * max(abs(itot), 0.01 * l1)
        if math.isfinite(etot) and etot <= target:
            return itot, etot, l1, QUAD_OK
        if worst < 0 or len(panels) >= _MAX_PANELS:
            return itot, etot, l1, QUAD_NONCONVERGED
        lo, hi, I, e, d = panels[worst]
        mid = 0.5 * (lo + hi)
        I1, e1 = _gk15(f, lo, mid)
        I2, e2 = _gk15(f, mid, hi)
        panels[worst] = [lo, mid, I1, e1, d + 1]
        panels.append([mid, hi, I2, e2, d + 1])


# ----------------------------------------------------------------------
# stability integral J = d''(omega)
# ----------------------------------------------------------------------

def _divide_out_first_zero(b, om, c2, c3, c4):
    """Coefficients of Q with G(x) = x^2 (b - x) Q(x), by synthetic division
    of h by its root b.  Q > 0 on (0, b)."""
    h0, h1, h2, h3 = _h_coeffs(om, c2, c3, c4)
    w2 = -h3
    w1 = w2 * b - h2
    w0 = w1 * b - h1
    return 0.5 * w0, 0.5 * w1, 0.5 * w2


def j_eval(om, c2, c3, c4, formula, rel_tol, max_depth):
    """Stability integral at one parameter point.

    Returns (j, est_error, phi0, scale, status) where scale is the L1 mass of
    the integral (prefactor included); status is QUAD_OK / QUAD_NONCONVERGED /
    QUAD_NOT_EXISTS.
    """
    code, b, gb = classify(om, c2, c3, c4)
    if code != CODE_EXISTS:
        return math.nan, math.nan, math.nan, math.nan, QUAD_NOT_EXISTS

    if formula == FORMULA_UNIT:
        def phi_s(s):
            x = b * math.sqrt(s)
            hv = h_val(x, om, c2, c3, c4)
            if hv <= 0.0:
                hv = 5e-324
            dp = p_val(b, om, c2, c3, c4) - p_val(x, om, c2, c3, c4)
            return (3.0 + dp / hv) / (b * math.sqrt(hv))

        # s = v^2 below and s = 1-u^2 above remove the sqrt(s) cusp and the
        # (1-s)^(-1/2) endpoint singularity respectively
        half = math.sqrt(0.5)
        i1, e1, l1a, s1 = adaptive_gk(
            lambda v: phi_s(v * v) * 2.0 * v, 0.0, half, rel_tol, max_depth, 2
        )
        i2, e2, l1b, s2 = adaptive_gk(
            lambda u: phi_s(1.0 - u * u) * 2.0 * u, 0.0, half, rel_tol, max_depth, 2
        )
        integral = i1 + i2
        err = e1 + e2
        l1 = l1a + l1b
        status = QUAD_OK if (s1 == QUAD_OK and s2 == QUAD_OK) else QUAD_NONCONVERGED
        pref = -b ** 4 / (2.0 * gb)
    else:
        q0, q1, q2 = _divide_out_first_zero(b, om, c2, c3, c4)
        sqb = math.sqrt(b)

        if formula == FORMULA_GAUGE:
            def integrand(u):
                x = b * (1.0 - u * u)
                qv = q0 + x * (q1 + x * q2)
                if qv <= 0.0:
                    qv = 5e-324
                dv = om - c2 * (b + x) - c3 * (b * (b + x) + x * x) \
                    - c4 * (b * b * (b + x) + x * x * (b + x))
                return 2.0 * sqb * (8.0 * x * x * qv + x * dv) / (qv * math.sqrt(qv))
        elif formula == FORMULA_X:
            def integrand(u):
                x = b * (1.0 - u * u)
                qv = q0 + x * (q1 + x * q2)
                if qv <= 0.0:
                    qv = 5e-324
                wv = -c2 - c3 * (b + x) - c4 * (b * b + b * x + x * x)
                return 2.0 * b * sqb * x * (6.0 * qv + wv) / (qv * math.sqrt(qv))
        elif formula == FORMULA_GAUGE_ALT:
            def integrand(u):
                x = b * (1.0 - u * u)
                qv = q0 + x * (q1 + x * q2)
                if qv <= 0.0:
                    qv = 5e-324
                wv = -c2 - c3 * (b + x) - c4 * (b * b + b * x + x * x)
                return 2.0 * sqb * (4.0 * b * b * qv + b * b * wv - gb) / (qv * math.sqrt(qv))
        else:
            raise ValueError(f"unknown formula code {formula}")

        integral, err, l1, status = adaptive_gk(integrand, 0.0, 1.0, rel_tol, max_depth, 4)
        pref = -math.sqrt(2.0) / (4.0 * gb)

    return pref * integral, abs(pref) * err, b, abs(pref) * l1, status


def classify_grid(omegas, gammas, a1, a3, tol=BOUNDARY_TOL):
    """Vectorized-interface classification of (omega, gamma) pairs.

    Returns (codes, xs, gvals) as Python lists; the regions module wraps them
    into numpy arrays.
    """
    codes, xs, gs = [], [], []
    for om, ga in zip(omegas, gammas):
        code, x, gv = classify(om, float(a1), -ga, float(a3), tol)
        codes.append(code)
        xs.append(x)
        gs.append(gv)
    return codes, xs, gs


def j_grid(omegas, gammas, a1, a3, formula, rel_tol, max_depth):
    """J at each (omega, gamma) pair; returns (js, errs, phi0s, statuses)."""
    js, errs, phi0s, statuses = [], [], [], []
    for om, ga in zip(omegas, gammas):
        j, e, b, _, st = j_eval(om, float(a1), -ga, float(a3), formula, rel_tol, max_depth)
        js.append(j)
        errs.append(e)
        phi0s.append(b)
        statuses.append(st)
    return js, errs, phi0s, statuses
