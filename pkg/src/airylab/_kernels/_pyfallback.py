"""Pure-numpy twin of the compiled core.

Same algorithms as ``_core.pyx`` (double-double Maclaurin series, asymptotic
expansions, cyclic Jacobi) written against whole arrays, so the fallback stays
usable when no C compiler is around.  Kept in lockstep with the Cython source;
the kernel test module runs both backends against the same oracles.
"""

import numpy as np

SPLIT = 134217729.0  # 2**27 + 1

C1_HI, C1_LO = 0.3550280538878172, 2.05233632436212e-17
C2_HI, C2_LO = -0.2588194037928068, 2.522243111610832e-17
TWOPI_HI, TWOPI_LO = 6.283185307179586, 2.4492935982947064e-16
QUARTER_PI = 0.7853981633974483
INV_2SQRTPI = 0.28209479177387814
INV_SQRTPI = 0.5641895835477563

SERIES_CUT = 8.0

_NCOEF = 41


def _coef_tables():
    u = np.empty(_NCOEF)
    v = np.empty(_NCOEF)
    u[0] = v[0] = 1.0
    for k in range(1, _NCOEF):
        u[k] = u[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (
            216.0 * k * (2 * k - 1))
        v[k] = -u[k] * (6 * k + 1) / (6 * k - 1)
    return u, v


U_COEF, V_COEF = _coef_tables()


# -- double-double primitives on arrays -------------------------------------

def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick(a, b):
    s = a + b
    return s, b - (s - a)


def _two_prod(a, b):
    p = a * b
    t = SPLIT * a
    ahi = t - (t - a)
    alo = a - ahi
    t = SPLIT * b
    bhi = t - (t - b)
    blo = b - bhi
    return p, ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo


def _dd_add(xh, xl, yh, yl):
    sh, sl = _two_sum(xh, yh)
    return _quick(sh, sl + (xl + yl))


def _dd_mul(xh, xl, yh, yl):
    ph, pl = _two_prod(xh, yh)
    return _quick(ph, pl + (xh * yl + xl * yh))


def _dd_mul_d(xh, xl, d):
    ph, pl = _two_prod(xh, d)
    return _quick(ph, pl + xl * d)


def _dd_div_d(xh, xl, d):
    q1 = xh / d
    ph, pl = _two_prod(q1, d)
    rh, rl = _two_sum(xh, -ph)
    q2 = (rh + (rl + (xl - pl))) / d
    return _quick(q1, q2)


# -- Airy branches ------------------------------------------------------------

def _airy_series(x):
    zeros = np.zeros_like(x)
    x2h, x2l = _two_prod(x, x)
    x3h, x3l = _dd_mul(x2h, x2l, x, zeros)
    fh, fl = np.ones_like(x), zeros.copy()
    gh, gl = x.copy(), zeros.copy()
    fph, fpl = _dd_mul_d(x2h, x2l, 0.5)
    gph, gpl = np.ones_like(x), zeros.copy()
    tf = (fh.copy(), fl.copy())
    tg = (gh.copy(), gl.copy())
    tfp = (fph.copy(), fpl.copy())
    tgp = (gph.copy(), gpl.copy())
    for k in range(60):
        tf = _dd_div_d(*_dd_mul(*tf, x3h, x3l), (3 * k + 2) * (3 * k + 3))
        fh, fl = _dd_add(fh, fl, *tf)
        tg = _dd_div_d(*_dd_mul(*tg, x3h, x3l), (3 * k + 3) * (3 * k + 4))
        gh, gl = _dd_add(gh, gl, *tg)
        tfp = _dd_div_d(*_dd_mul(*tfp, x3h, x3l), (3 * k + 3) * (3 * k + 5))
        fph, fpl = _dd_add(fph, fpl, *tfp)
        tgp = _dd_div_d(*_dd_mul(*tgp, x3h, x3l), (3 * k + 1) * (3 * k + 3))
        gph, gpl = _dd_add(gph, gpl, *tgp)
        if np.all(np.abs(tf[0]) < 1e-26 * (1.0 + np.abs(fh))):
            break
    c1h = np.full_like(x, C1_HI)
    c1l = np.full_like(x, C1_LO)
    c2h = np.full_like(x, C2_HI)
    c2l = np.full_like(x, C2_LO)
    ah, al = _dd_add(*_dd_mul(fh, fl, c1h, c1l), *_dd_mul(gh, gl, c2h, c2l))
    bh, bl = _dd_add(*_dd_mul(fph, fpl, c1h, c1l), *_dd_mul(gph, gpl, c2h, c2l))
    return ah + al, bh + bl


def _airy_pos(x):
    zeta = (2.0 / 3.0) * x * np.sqrt(x)
    zinv = 1.0 / zeta
    sa = np.ones_like(x)
    sb = np.ones_like(x)
    fac = np.ones_like(x)
    alive = np.ones_like(x, dtype=bool)
    prev = np.full_like(x, 1e300)
    for k in range(1, _NCOEF):
        fac = -fac * zinv
        ta = U_COEF[k] * fac
        # per-point optimal truncation: freeze once terms start growing
        alive = alive & (np.abs(ta) < prev)
        if not alive.any():
            break
        sa = np.where(alive, sa + ta, sa)
        sb = np.where(alive, sb + V_COEF[k] * fac, sb)
        prev = np.where(alive, np.abs(ta), prev)
        if np.all(~alive | (prev < 1e-18)):
            break
    pref = np.exp(-zeta) * INV_2SQRTPI
    x4 = np.sqrt(np.sqrt(x))
    return pref * sa / x4, -pref * sb * x4


def _phase_mod_2pi(z):
    s = np.sqrt(z)
    ph, pl = _two_prod(s, s)
    rh, rl = _two_sum(z, -ph)
    corr = (rh + (rl - pl)) / (2.0 * s)
    sh, sl = _quick(s, corr)
    th, tl = _dd_mul(sh, sl, z, np.zeros_like(z))
    zh, zl = _dd_div_d(*_dd_mul_d(th, tl, 2.0), 3.0)
    n = np.floor(zh / TWOPI_HI + 0.5)
    mh, ml = _two_prod(n, TWOPI_HI)
    ml = ml + n * TWOPI_LO
    rh, rl = _dd_add(zh, zl, -mh, -ml)
    return rh + rl


def _airy_neg(x):
    z = -x
    zeta = (2.0 / 3.0) * z * np.sqrt(z)
    zr = _phase_mod_2pi(z)
    zinv = 1.0 / zeta
    zinv2 = zinv * zinv
    P = np.ones_like(x)
    R = np.ones_like(x)
    Q = U_COEF[1] * zinv
    S = V_COEF[1] * zinv
    f2 = np.ones_like(x)
    sgn = 1.0
    for k in range(1, (_NCOEF - 1) // 2):
        sgn = -sgn
        f2 = f2 * zinv2
        tp = sgn * U_COEF[2 * k] * f2
        tq = sgn * U_COEF[2 * k + 1] * f2 * zinv
        P += tp
        R += sgn * V_COEF[2 * k] * f2
        Q += tq
        S += sgn * V_COEF[2 * k + 1] * f2 * zinv
        if np.all(np.abs(tp) + np.abs(tq) < 1e-18):
            break
    c = np.cos(zr - QUARTER_PI)
    s = np.sin(zr - QUARTER_PI)
    z4 = np.sqrt(np.sqrt(z))
    return (c * P + s * Q) * INV_SQRTPI / z4, (s * R - c * S) * INV_SQRTPI * z4


def airy_pair(x):
    """Vectorized (Ai, Ai') over a 1-D float64 array.  No range checks here."""
    x = np.asarray(x, dtype=np.float64)
    ai = np.empty_like(x)
    aip = np.empty_like(x)
    mid = np.abs(x) <= SERIES_CUT
    pos = x > SERIES_CUT
    neg = x < -SERIES_CUT
    if mid.any():
        ai[mid], aip[mid] = _airy_series(x[mid])
    if pos.any():
        ai[pos], aip[pos] = _airy_pos(x[pos])
    if neg.any():
        ai[neg], aip[neg] = _airy_neg(x[neg])
    return ai, aip


# -- cyclic Jacobi ------------------------------------------------------------

def jacobi_eigh(a, tol_factor=1e-12, max_sweeps=50):
    """Diagonalize a symmetric matrix in place by cyclic Jacobi rotations.

    Same contract as the compiled version: (eigenvalues ascending, eigenvector
    columns, final off-diagonal Frobenius norm, sweeps used).
    """
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    v = np.eye(n)
    fro = np.linalg.norm(a)
    target = tol_factor * fro if fro > 0.0 else 0.0

    def off_norm(m):
        return np.sqrt(max(np.sum(m * m) - np.sum(np.diag(m) ** 2), 0.0))

    off = off_norm(a)
    sweep = 0
    while off > target and sweep < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                if abs(apq) < 1e-36 * (abs(app) + abs(aqq)):
                    a[p, q] = a[q, p] = 0.0
                    continue
                theta = 0.5 * (aqq - app) / apq
                t = np.sign(theta) if theta != 0 else 1.0
                t = t / (abs(theta) + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                rp = a[p, :].copy()
                a[p, :] = c * rp - s * a[q, :]
                a[q, :] = s * rp + c * a[q, :]
                cp = a[:, p].copy()
                a[:, p] = c * cp - s * a[:, q]
                a[:, q] = s * cp + c * a[:, q]
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                v[:, p] = c * vp - s * v[:, q]
                v[:, q] = s * vp + c * v[:, q]
        sweep += 1
        off = off_norm(a)

    if off > target:
        raise RuntimeError(
            f"jacobi_eigh: no convergence after {max_sweeps} sweeps "
            f"(off-norm {off:.3e}, target {target:.3e})")

    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order], off, sweep
