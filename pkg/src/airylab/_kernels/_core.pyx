# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled numeric core.

Hot kernels only: pointwise Airy Ai/Ai' evaluation (double-double Maclaurin
series for |x| <= 8, asymptotic expansions beyond) and the cyclic Jacobi
diagonalizer for dense symmetric matrices.  The pure-numpy twin lives in
``_pyfallback``; both expose the same call signatures.
"""

import numpy as np

from libc.math cimport cos, exp, fabs, floor, sin, sqrt

cdef double SPLIT = 134217729.0  # 2**27 + 1, Dekker splitter

# Ai(0), Ai'(0) and 2*pi carried to double-double precision; the low words
# matter because the series solutions grow like exp((2/3)x^{3/2}) on the
# positive axis while Ai itself decays.
cdef double C1_HI = 0.3550280538878172
cdef double C1_LO = 2.05233632436212e-17
cdef double C2_HI = -0.2588194037928068
cdef double C2_LO = 2.522243111610832e-17
cdef double TWOPI_HI = 6.283185307179586
cdef double TWOPI_LO = 2.4492935982947064e-16
cdef double QUARTER_PI = 0.7853981633974483
cdef double INV_2SQRTPI = 0.28209479177387814   # 1/(2 sqrt(pi))
cdef double INV_SQRTPI = 0.5641895835477563     # 1/sqrt(pi)

cdef double SERIES_CUT = 8.0

# asymptotic coefficient tables u_k and v_k (v_k = -u_k (6k+1)/(6k-1))
DEF NCOEF = 41
cdef double U_COEF[NCOEF]
cdef double V_COEF[NCOEF]

cdef void _init_coefs() noexcept:
    cdef int k
    U_COEF[0] = 1.0
    V_COEF[0] = 1.0
    for k in range(1, NCOEF):
        U_COEF[k] = U_COEF[k - 1] * (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (
            216.0 * k * (2 * k - 1))
        V_COEF[k] = -U_COEF[k] * (6 * k + 1) / (6 * k - 1)

_init_coefs()


# ---------------------------------------------------------------------------
# double-double primitives
# ---------------------------------------------------------------------------

cdef struct DD:
    double hi
    double lo


cdef inline DD dd_two_sum(double a, double b) noexcept nogil:
    cdef DD r
    cdef double bb
    r.hi = a + b
    bb = r.hi - a
    r.lo = (a - (r.hi - bb)) + (b - bb)
    return r


cdef inline DD dd_quick(double a, double b) noexcept nogil:
    cdef DD r
    r.hi = a + b
    r.lo = b - (r.hi - a)
    return r


cdef inline DD dd_two_prod(double a, double b) noexcept nogil:
    cdef DD r
    cdef double t, ahi, alo, bhi, blo
    r.hi = a * b
    t = SPLIT * a
    ahi = t - (t - a)
    alo = a - ahi
    t = SPLIT * b
    bhi = t - (t - b)
    blo = b - bhi
    r.lo = ((ahi * bhi - r.hi) + ahi * blo + alo * bhi) + alo * blo
    return r


cdef inline DD dd_add(DD x, DD y) noexcept nogil:
    cdef DD s = dd_two_sum(x.hi, y.hi)
    return dd_quick(s.hi, s.lo + (x.lo + y.lo))


cdef inline DD dd_mul(DD x, DD y) noexcept nogil:
    cdef DD p = dd_two_prod(x.hi, y.hi)
    return dd_quick(p.hi, p.lo + (x.hi * y.lo + x.lo * y.hi))


cdef inline DD dd_mul_d(DD x, double d) noexcept nogil:
    cdef DD p = dd_two_prod(x.hi, d)
    return dd_quick(p.hi, p.lo + x.lo * d)


cdef inline DD dd_div_d(DD x, double d) noexcept nogil:
    cdef double q1 = x.hi / d
    cdef DD p = dd_two_prod(q1, d)
    cdef DD r = dd_two_sum(x.hi, -p.hi)
    cdef double q2 = (r.hi + (r.lo + (x.lo - p.lo))) / d
    return dd_quick(q1, q2)


# ---------------------------------------------------------------------------
# Airy evaluation
# ---------------------------------------------------------------------------

cdef void _airy_series(double x, double* ai, double* aip) noexcept nogil:
    """Maclaurin series for |x| <= 8, double-double accumulation.

    Four two-term recurrences: the even/odd solutions f, g of y'' = x y and
    their derivatives.  Ai = Ai(0) f + Ai'(0) g.
    """
    cdef DD x2 = dd_two_prod(x, x)
    cdef DD x3 = dd_mul(x2, dd_quick(x, 0.0))
    cdef DD f = dd_quick(1.0, 0.0)
    cdef DD g = dd_quick(x, 0.0)
    cdef DD fp = dd_mul_d(x2, 0.5)
    cdef DD gp = dd_quick(1.0, 0.0)
    cdef DD tf = f, tg = g, tfp = fp, tgp = gp
    cdef DD c1 = dd_quick(C1_HI, C1_LO)
    cdef DD c2 = dd_quick(C2_HI, C2_LO)
    cdef DD a, b
    cdef int k
    for k in range(60):
        tf = dd_div_d(dd_mul(tf, x3), (3 * k + 2) * (3 * k + 3))
        f = dd_add(f, tf)
        tg = dd_div_d(dd_mul(tg, x3), (3 * k + 3) * (3 * k + 4))
        g = dd_add(g, tg)
        tfp = dd_div_d(dd_mul(tfp, x3), (3 * k + 3) * (3 * k + 5))
        fp = dd_add(fp, tfp)
        tgp = dd_div_d(dd_mul(tgp, x3), (3 * k + 1) * (3 * k + 3))
        gp = dd_add(gp, tgp)
        if fabs(tf.hi) < 1e-26 * (1.0 + fabs(f.hi)):
            break
    a = dd_add(dd_mul(c1, f), dd_mul(c2, g))
    b = dd_add(dd_mul(c1, fp), dd_mul(c2, gp))
    ai[0] = a.hi + a.lo
    aip[0] = b.hi + b.lo


cdef void _airy_pos(double x, double* ai, double* aip) noexcept nogil:
    """Exponential asymptotic branch for x > 8."""
    cdef double zeta = (2.0 / 3.0) * x * sqrt(x)
    cdef double zinv = 1.0 / zeta
    cdef double sa = 1.0, sb = 1.0, fac = 1.0, ta, tb, prev = 1e300
    cdef double pref, x4
    cdef int k
    for k in range(1, NCOEF):
        fac = -fac * zinv
        ta = U_COEF[k] * fac
        tb = V_COEF[k] * fac
        if fabs(ta) >= prev:  # divergence onset: stop at optimal truncation
            break
        sa += ta
        sb += tb
        prev = fabs(ta)
        if prev < 1e-18:
            break
    pref = exp(-zeta) * INV_2SQRTPI
    x4 = sqrt(sqrt(x))
    ai[0] = pref * sa / x4
    aip[0] = -pref * sb * x4


cdef double _phase_mod_2pi(double z) noexcept nogil:
    """zeta = (2/3) z^{3/2} reduced mod 2*pi, carried in double-double.

    A plain double zeta loses ~zeta*eps of phase, which at z = 400 already
    exceeds 1e-12; the reduction keeps the trig arguments accurate.
    """
    cdef double s = sqrt(z)
    cdef DD p = dd_two_prod(s, s)
    cdef DD r = dd_two_sum(z, -p.hi)
    cdef double corr = (r.hi + (r.lo - p.lo)) / (2.0 * s)
    cdef DD sd = dd_quick(s, corr)
    cdef DD zeta = dd_div_d(dd_mul_d(dd_mul(sd, dd_quick(z, 0.0)), 2.0), 3.0)
    cdef double n = floor(zeta.hi / TWOPI_HI + 0.5)
    cdef DD m = dd_two_prod(n, TWOPI_HI)
    m.lo = m.lo + n * TWOPI_LO
    cdef DD red = dd_add(zeta, dd_quick(-m.hi, -m.lo))
    return red.hi + red.lo


cdef void _airy_neg(double x, double* ai, double* aip) noexcept nogil:
    """Oscillatory asymptotic branch for x < -8 (modulus-phase form)."""
    cdef double z = -x
    cdef double zeta = (2.0 / 3.0) * z * sqrt(z)
    cdef double zr = _phase_mod_2pi(z)
    cdef double zinv = 1.0 / zeta
    cdef double zinv2 = zinv * zinv
    cdef double P = 1.0, R = 1.0
    cdef double Q = U_COEF[1] * zinv, S = V_COEF[1] * zinv
    cdef double f2 = 1.0, sgn = 1.0, tp, tq
    cdef double c, s, z4
    cdef int k
    for k in range(1, (NCOEF - 1) // 2):
        sgn = -sgn
        f2 = f2 * zinv2
        tp = sgn * U_COEF[2 * k] * f2
        tq = sgn * U_COEF[2 * k + 1] * f2 * zinv
        P += tp
        R += sgn * V_COEF[2 * k] * f2
        Q += tq
        S += sgn * V_COEF[2 * k + 1] * f2 * zinv
        if fabs(tp) + fabs(tq) < 1e-18:
            break
    c = cos(zr - QUARTER_PI)
    s = sin(zr - QUARTER_PI)
    z4 = sqrt(sqrt(z))
    ai[0] = (c * P + s * Q) * INV_SQRTPI / z4
    aip[0] = (s * R - c * S) * INV_SQRTPI * z4


cdef inline void _airy_one(double x, double* ai, double* aip) noexcept nogil:
    if x > SERIES_CUT:
        _airy_pos(x, ai, aip)
    elif x < -SERIES_CUT:
        _airy_neg(x, ai, aip)
    else:
        _airy_series(x, ai, aip)


def airy_pair(double[::1] x):
    """Vectorized (Ai, Ai') over a 1-D float64 array.  No range checks here."""
    cdef Py_ssize_t n = x.shape[0], i
    ai_arr = np.empty(n, dtype=np.float64)
    aip_arr = np.empty(n, dtype=np.float64)
    cdef double[::1] ai = ai_arr
    cdef double[::1] aip = aip_arr
    with nogil:
        for i in range(n):
            _airy_one(x[i], &ai[i], &aip[i])
    return ai_arr, aip_arr


# ---------------------------------------------------------------------------
# cyclic Jacobi eigensolver
# ---------------------------------------------------------------------------

def jacobi_eigh(double[:, ::1] a, double tol_factor=1e-12, int max_sweeps=50):
    """Diagonalize a symmetric matrix in place by cyclic Jacobi rotations.

    Returns (eigenvalues ascending, eigenvector columns, final off-diagonal
    Frobenius norm, sweeps used).  Raises RuntimeError when the off-norm has
    not dropped below tol_factor * ||A||_F within max_sweeps sweeps.
    """
    cdef Py_ssize_t n = a.shape[0]
    cdef Py_ssize_t p, q, i
    cdef double fro = 0.0, off, apq, app, aqq, theta, t, c, s, tmp
    cdef int sweep = 0
    v_arr = np.eye(n, dtype=np.float64)
    cdef double[:, ::1] v = v_arr
    if a.shape[1] != n:
        raise ValueError("matrix must be square")

    for p in range(n):
        for q in range(n):
            fro += a[p, q] * a[p, q]
    fro = sqrt(fro)
    cdef double target = tol_factor * fro if fro > 0.0 else 0.0

    off = _off_norm(a, n)
    while off > target and sweep < max_sweeps:
        with nogil:
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if apq == 0.0:
                        continue
                    app = a[p, p]
                    aqq = a[q, q]
                    if fabs(apq) < 1e-36 * (fabs(app) + fabs(aqq)):
                        a[p, q] = 0.0
                        a[q, p] = 0.0
                        continue
                    theta = 0.5 * (aqq - app) / apq
                    if theta >= 0.0:
                        t = 1.0 / (theta + sqrt(theta * theta + 1.0))
                    else:
                        t = -1.0 / (-theta + sqrt(theta * theta + 1.0))
                    c = 1.0 / sqrt(t * t + 1.0)
                    s = t * c
                    for i in range(n):
                        tmp = a[p, i]
                        a[p, i] = c * tmp - s * a[q, i]
                        a[q, i] = s * tmp + c * a[q, i]
                    for i in range(n):
                        tmp = a[i, p]
                        a[i, p] = c * tmp - s * a[i, q]
                        a[i, q] = s * tmp + c * a[i, q]
                    a[p, p] = app - t * apq
                    a[q, q] = aqq + t * apq
                    a[p, q] = 0.0
                    a[q, p] = 0.0
                    for i in range(n):
                        tmp = v[i, p]
                        v[i, p] = c * tmp - s * v[i, q]
                        v[i, q] = s * tmp + c * v[i, q]
        sweep += 1
        off = _off_norm(a, n)

    if off > target:
        raise RuntimeError(
            f"jacobi_eigh: no convergence after {max_sweeps} sweeps "
            f"(off-norm {off:.3e}, target {target:.3e})")

    w = np.empty(n, dtype=np.float64)
    cdef double[::1] wv = w
    for p in range(n):
        wv[p] = a[p, p]
    order = np.argsort(w, kind="stable")
    return w[order], v_arr[:, order], off, sweep


cdef double _off_norm(double[:, ::1] a, Py_ssize_t n) noexcept nogil:
    cdef double acc = 0.0
    cdef Py_ssize_t i, j
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j] * a[i, j]
    return sqrt(acc)
