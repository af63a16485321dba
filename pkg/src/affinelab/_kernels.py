"""Sampling kernels shared by the compiled and pure-Python backends.

Written in Cython's "pure Python" style: this file runs unmodified under
CPython and is also compiled to C as ``affinelab._kernels_cy`` at build
time.  Both backends execute the same sequence of IEEE-754 double
operations, so every sampler is bit-identical across backends.

Determinism constraints observed throughout:

* Only ``exp``/``log``/``sqrt``/``floor``/``fabs`` are taken from libm;
  CPython's ``math`` module delegates exactly these to the same library.
  ``math.lgamma`` is avoided on purpose (CPython ships its own
  implementation that can differ from libm in the last ulp); a local
  log-factorial (table + Stirling) is used instead.
* All integer work is explicit 64-bit wrap-around arithmetic (masked in
  Python, native in C).
* Every sampler consumes uniforms in a frozen, documented order.  Changing
  that order invalidates all stored regression values.

RNG: xoshiro256++, seeded from ``(master_seed, stream_id)`` through a
SplitMix64 chain (see ``seed_words``).  Distinct stream ids give streams
that are independent for all practical purposes; the mixing chain is part
of the stable on-disk contract.
"""

import array

import cython

if cython.compiled:
    from cython.cimports.libc.math import exp, expm1, fabs, floor, log, sqrt
else:
    from math import exp, expm1, fabs, floor, log, sqrt

IS_COMPILED = cython.compiled

_MASK = cython.declare(cython.ulonglong, 0xFFFFFFFFFFFFFFFF)
_GOLDEN = cython.declare(cython.ulonglong, 0x9E3779B97F4A7C15)
_U53 = cython.declare(cython.double, 1.0 / 9007199254740992.0)  # 2**-53
_HALF_LOG_2PI = cython.declare(cython.double, 0.9189385332046727)


# ---------------------------------------------------------------------------
# RNG core
# ---------------------------------------------------------------------------

@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _mix64(z: cython.ulonglong) -> cython.ulonglong:
    # SplitMix64 finalizer (a bijection on 64-bit words).
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


@cython.cfunc
@cython.exceptval(check=False)
def _seed_view(st: cython.ulonglong[:], master_seed: cython.ulonglong,
               stream_id: cython.ulonglong) -> cython.void:
    # Frozen v1 mixing chain: domain-separate the two words, then take four
    # SplitMix64 outputs as the xoshiro256++ state.
    z0: cython.ulonglong = _mix64(master_seed ^ 0x9E3779B97F4A7C15)
    z: cython.ulonglong = z0 ^ _mix64(stream_id ^ 0xD1B54A32D192ED03)
    z = (z + _GOLDEN) & _MASK
    s0: cython.ulonglong = _mix64(z)
    z = (z + _GOLDEN) & _MASK
    s1: cython.ulonglong = _mix64(z)
    z = (z + _GOLDEN) & _MASK
    s2: cython.ulonglong = _mix64(z)
    z = (z + _GOLDEN) & _MASK
    s3: cython.ulonglong = _mix64(z)
    if s0 == 0 and s1 == 0 and s2 == 0 and s3 == 0:
        s0 = _GOLDEN
    st[0] = s0
    st[1] = s1
    st[2] = s2
    st[3] = s3


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _next_u64(st: cython.ulonglong[:]) -> cython.ulonglong:
    # xoshiro256++
    s0: cython.ulonglong = st[0]
    s1: cython.ulonglong = st[1]
    s2: cython.ulonglong = st[2]
    s3: cython.ulonglong = st[3]
    tmp: cython.ulonglong = (s0 + s3) & _MASK
    result: cython.ulonglong = ((((tmp << 23) & _MASK) | (tmp >> 41)) + s0) & _MASK
    t: cython.ulonglong = (s1 << 17) & _MASK
    s2 ^= s0
    s3 ^= s1
    s1 ^= s2
    s0 ^= s3
    s2 ^= t
    s3 = ((s3 << 45) & _MASK) | (s3 >> 19)
    st[0] = s0
    st[1] = s1
    st[2] = s2
    st[3] = s3
    return result


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _u01(st: cython.ulonglong[:]) -> cython.double:
    # Uniform on [0, 1), 53 random bits.
    return (_next_u64(st) >> 11) * _U53


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _u01_pos(st: cython.ulonglong[:]) -> cython.double:
    # Uniform on (0, 1]; safe under log().
    return 1.0 - _u01(st)


def _new_state():
    return array.array("Q", (0, 0, 0, 0))


@cython.ccall
def seed_words(master_seed: cython.ulonglong, stream_id: cython.ulonglong) -> tuple:
    """Return the four xoshiro256++ state words for ``(master_seed, stream_id)``.

    Mixing chain (frozen): ``z = mix64(master ^ C1) ^ mix64(stream ^ C2)``,
    then four SplitMix64 outputs from ``z``; ``mix64`` is the SplitMix64
    finalizer.
    """
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    return (buf[0], buf[1], buf[2], buf[3])


# ---------------------------------------------------------------------------
# Scalar samplers
# ---------------------------------------------------------------------------

@cython.cfunc
@cython.exceptval(check=False)
def _normal(st: cython.ulonglong[:]) -> cython.double:
    # Marsaglia polar method; the second variate of each accepted pair is
    # intentionally discarded to keep the draw order stateless.
    u: cython.double
    v: cython.double
    s: cython.double
    while True:
        u = 2.0 * _u01(st) - 1.0
        v = 2.0 * _u01(st) - 1.0
        s = u * u + v * v
        if s >= 1.0 or s == 0.0:
            continue
        return u * sqrt(-2.0 * log(s) / s)


def _build_logfact():
    tab = array.array("d", [0.0])
    acc = 0.0
    for k in range(1, 128):
        acc += log(float(k))
        tab.append(acc)
    return tab


_LOGFACT = cython.declare(cython.double[:], _build_logfact())


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _log_factorial(k: cython.longlong) -> cython.double:
    # Exact cumulative table below 128, Stirling series above (abs error
    # < 3e-14 there); identical arithmetic on both backends.
    if k < 128:
        return _LOGFACT[k]
    kf: cython.double = k
    inv: cython.double = 1.0 / kf
    inv2: cython.double = inv * inv
    corr: cython.double = inv * (1.0 / 12.0 - inv2 * (1.0 / 360.0 - inv2 * (1.0 / 1260.0)))
    return (kf + 0.5) * log(kf) - kf + _HALF_LOG_2PI + corr


@cython.cfunc
@cython.exceptval(check=False)
def _poisson(st: cython.ulonglong[:], lam: cython.double) -> cython.longlong:
    # lam <= 0 consumes no draws.  Knuth inversion below 10, Hormann's PTRS
    # transformed rejection above.
    if lam <= 0.0:
        return 0
    k: cython.longlong
    if lam < 10.0:
        limit: cython.double = exp(-lam)
        k = 0
        p: cython.double = 1.0
        while True:
            p *= _u01_pos(st)
            if p <= limit:
                return k
            k += 1
    b: cython.double = 0.931 + 2.53 * sqrt(lam)
    a: cython.double = -0.059 + 0.02483 * b
    inv_alpha: cython.double = 1.1239 + 1.1328 / (b - 3.4)
    v_r: cython.double = 0.9277 - 3.6224 / (b - 2.0)
    loglam: cython.double = log(lam)
    u: cython.double
    v: cython.double
    us: cython.double
    kf: cython.double
    while True:
        u = _u01(st) - 0.5
        v = _u01_pos(st)
        us = 0.5 - fabs(u)
        if us < 1e-12:
            continue
        kf = floor((2.0 * a / us + b) * u + lam + 0.43)
        if us >= 0.07 and v <= v_r:
            break
        if kf < 0.0 or (us < 0.013 and v > us):
            continue
        if cython.compiled:
            k = cython.cast(cython.longlong, kf)
        else:
            k = int(kf)
        if log(v * inv_alpha / (a / (us * us) + b)) <= kf * loglam - lam - _log_factorial(k):
            return k
    if cython.compiled:
        k = cython.cast(cython.longlong, kf)
    else:
        k = int(kf)
    return k


@cython.cfunc
@cython.exceptval(check=False)
def _gamma(st: cython.ulonglong[:], shape: cython.double) -> cython.double:
    # Marsaglia-Tsang; unit scale.  shape <= 0 consumes no draws and yields 0.
    if shape <= 0.0:
        return 0.0
    boost: cython.double = 1.0
    if shape < 1.0:
        boost = exp(log(_u01_pos(st)) / shape)
        shape += 1.0
    d: cython.double = shape - 1.0 / 3.0
    c: cython.double = 1.0 / (3.0 * sqrt(d))
    x: cython.double
    x2: cython.double
    v: cython.double
    u: cython.double
    while True:
        x = _normal(st)
        v = 1.0 + c * x
        if v <= 0.0:
            continue
        v = v * v * v
        u = _u01_pos(st)
        x2 = x * x
        if u < 1.0 - 0.0331 * x2 * x2:
            return boost * d * v
        if log(u) < 0.5 * x2 + d * (1.0 - v + log(v)):
            return boost * d * v


# ---------------------------------------------------------------------------
# Exact square-root-diffusion transition
# ---------------------------------------------------------------------------

@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _cir_exact_step(st: cython.ulonglong[:], y: cython.double,
                    shape_base: cython.double, c: cython.double,
                    ebdt: cython.double) -> cython.double:
    # One transition of dY = (a - bY)dt + sigma*sqrt(Y) dW drawn from the
    # noncentral chi-square law as a Poisson-mixed gamma:
    #   shape_base = 2a/sigma^2, c = 4b/(sigma^2(1 - e^{-b dt}))
    #   (c = 4/(sigma^2 dt) at b = 0), ebdt = e^{-b dt}.
    # Draw order: Poisson count first, then the gamma variate.
    lam: cython.double = 0.5 * c * y * ebdt
    count: cython.longlong = _poisson(st, lam)
    shape: cython.double = shape_base + count
    if shape <= 0.0:
        return 0.0
    return 2.0 * _gamma(st, shape) / c


@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _cir_c_coeff(b: cython.double, dt: cython.double,
                 sigma2: cython.double) -> cython.double:
    if b == 0.0:
        return 4.0 / (sigma2 * dt)
    # -expm1 keeps full precision for |b*dt| near the rounding threshold
    return 4.0 * b / (sigma2 * -expm1(-b * dt))


@cython.ccall
def cir_transition(master_seed: cython.ulonglong, stream_id: cython.ulonglong,
                   y0: cython.double, a: cython.double, b: cython.double,
                   dt: cython.double, sigma2: cython.double) -> cython.double:
    """One exact transition draw over a step of length ``dt`` from ``y0``."""
    if dt <= 0.0:
        return y0
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    ebdt: cython.double = 1.0 if b == 0.0 else exp(-b * dt)
    return _cir_exact_step(st, y0, 2.0 * a / sigma2, _cir_c_coeff(b, dt, sigma2), ebdt)


# ---------------------------------------------------------------------------
# Path kernels
# ---------------------------------------------------------------------------

@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def fill_joint_path(y_out: cython.double[:], x_out: cython.double[:],
                    master_seed: cython.ulonglong, stream_id: cython.ulonglong,
                    a: cython.double, b: cython.double, m: cython.double,
                    theta: cython.double, y0: cython.double, x0: cython.double,
                    dt: cython.double, trapezoid: cython.bint):
    """Fill a joint (Y, X) path on a uniform grid.

    Per step (frozen draw order): exact Y transition, then one standard
    normal for X.  X uses the integrated-variance proxy ``Y_k * dt``
    (left endpoint) or ``(Y_k + Y_{k+1})/2 * dt`` when ``trapezoid``.
    """
    steps: cython.Py_ssize_t = y_out.shape[0] - 1
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    shape_base: cython.double = 2.0 * a
    c: cython.double = _cir_c_coeff(b, dt, 1.0)
    ebdt: cython.double = 1.0 if b == 0.0 else exp(-b * dt)
    y: cython.double = y0
    x: cython.double = x0
    y_out[0] = y
    x_out[0] = x
    k: cython.Py_ssize_t
    y_new: cython.double
    z: cython.double
    var: cython.double
    for k in range(steps):
        y_new = _cir_exact_step(st, y, shape_base, c, ebdt)
        z = _normal(st)
        var = (0.5 * (y + y_new) if trapezoid else y) * dt
        x = x + (m - theta * x) * dt + sqrt(var) * z
        y = y_new
        y_out[k + 1] = y
        x_out[k + 1] = x


@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def fill_observations(obs_out: cython.double[:],
                      master_seed: cython.ulonglong, stream_id: cython.ulonglong,
                      a: cython.double, b: cython.double, m: cython.double,
                      theta: cython.double, y0: cython.double, x0: cython.double,
                      steps_per_unit: cython.Py_ssize_t, trapezoid: cython.bint):
    """Record X at unit times 0..n without storing the fine path.

    Bit-identical to ``fill_joint_path`` on the grid [0, n] with
    ``n * steps_per_unit`` steps, subsampled at unit times.
    """
    n: cython.Py_ssize_t = obs_out.shape[0] - 1
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    dt: cython.double = 1.0 / steps_per_unit
    shape_base: cython.double = 2.0 * a
    c: cython.double = _cir_c_coeff(b, dt, 1.0)
    ebdt: cython.double = 1.0 if b == 0.0 else exp(-b * dt)
    y: cython.double = y0
    x: cython.double = x0
    obs_out[0] = x
    i: cython.Py_ssize_t
    j: cython.Py_ssize_t
    y_new: cython.double
    z: cython.double
    var: cython.double
    for i in range(n):
        for j in range(steps_per_unit):
            y_new = _cir_exact_step(st, y, shape_base, c, ebdt)
            z = _normal(st)
            var = (0.5 * (y + y_new) if trapezoid else y) * dt
            x = x + (m - theta * x) * dt + sqrt(var) * z
            y = y_new
        obs_out[i + 1] = x


@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def fill_limit_functionals(out: cython.double[:],
                           master_seed: cython.ulonglong, stream_id: cython.ulonglong,
                           a: cython.double, m: cython.double,
                           steps: cython.Py_ssize_t):
    """Sample the path functionals of the critical limit diffusion on [0, 1].

    The pair starts at (0, 0); Y advances by exact transitions, X by the
    left-endpoint Gaussian step (same draw order as ``fill_joint_path``).
    ``out`` receives (int_x, int_x2, x1, int_y, int_xdx) with left-endpoint
    Riemann sums; int_xdx is the half-difference identity
    ``(x1^2 - int_y)/2``, never a summed increment.
    """
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    dt: cython.double = 1.0 / steps
    shape_base: cython.double = 2.0 * a
    c: cython.double = 4.0 / dt
    y: cython.double = 0.0
    x: cython.double = 0.0
    int_x: cython.double = 0.0
    int_x2: cython.double = 0.0
    int_y: cython.double = 0.0
    k: cython.Py_ssize_t
    y_new: cython.double
    z: cython.double
    for k in range(steps):
        int_x += x * dt
        int_x2 += x * x * dt
        int_y += y * dt
        y_new = _cir_exact_step(st, y, shape_base, c, 1.0)
        z = _normal(st)
        x = x + m * dt + sqrt(y * dt) * z
        y = y_new
    out[0] = int_x
    out[1] = int_x2
    out[2] = x
    out[3] = int_y
    out[4] = 0.5 * (x * x - int_y)


@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def fill_limit_functionals_pair(out_fine: cython.double[:], out_half: cython.double[:],
                                master_seed: cython.ulonglong, stream_id: cython.ulonglong,
                                a: cython.double, m: cython.double,
                                steps: cython.Py_ssize_t):
    """Like ``fill_limit_functionals`` but also evaluates the same path on the
    half-resolution grid (even indices only), for refinement studies.

    ``steps`` must be even; ``out_half`` gets the functionals computed from
    every second grid point of the identical trajectory.
    """
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    dt: cython.double = 1.0 / steps
    dt2: cython.double = 2.0 * dt
    shape_base: cython.double = 2.0 * a
    c: cython.double = 4.0 / dt
    y: cython.double = 0.0
    x: cython.double = 0.0
    int_x: cython.double = 0.0
    int_x2: cython.double = 0.0
    int_y: cython.double = 0.0
    h_int_x: cython.double = 0.0
    h_int_x2: cython.double = 0.0
    h_int_y: cython.double = 0.0
    k: cython.Py_ssize_t
    y_new: cython.double
    z: cython.double
    for k in range(steps):
        int_x += x * dt
        int_x2 += x * x * dt
        int_y += y * dt
        if (k & 1) == 0:
            h_int_x += x * dt2
            h_int_x2 += x * x * dt2
            h_int_y += y * dt2
        y_new = _cir_exact_step(st, y, shape_base, c, 1.0)
        z = _normal(st)
        x = x + m * dt + sqrt(y * dt) * z
        y = y_new
    out_fine[0] = int_x
    out_fine[1] = int_x2
    out_fine[2] = x
    out_fine[3] = int_y
    out_fine[4] = 0.5 * (x * x - int_y)
    out_half[0] = h_int_x
    out_half[1] = h_int_x2
    out_half[2] = x
    out_half[3] = h_int_y
    out_half[4] = 0.5 * (x * x - h_int_y)


@cython.cfunc
@cython.inline
@cython.boundscheck(False)
@cython.wraparound(False)
@cython.exceptval(check=False)
def _draw_size(st: cython.ulonglong[:], vals: cython.double[:],
               cum: cython.double[:]) -> cython.double:
    # One categorical draw; cum[last] is forced to 1.0 at construction.
    u: cython.double = _u01(st)
    i: cython.Py_ssize_t = 0
    n: cython.Py_ssize_t = cum.shape[0]
    while i + 1 < n and u >= cum[i]:
        i += 1
    return vals[i]


@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def fill_cbi_path(y_out: cython.double[:],
                  master_seed: cython.ulonglong, stream_id: cython.ulonglong,
                  b_imm: cython.double, beta: cython.double, alpha2: cython.double,
                  n_rate: cython.double, n_vals: cython.double[:], n_cum: cython.double[:],
                  p_rate: cython.double, p_vals: cython.double[:], p_cum: cython.double[:],
                  p_mean: cython.double, y0: cython.double, dt: cython.double):
    """Euler full-truncation path of a finite-activity jump CBI process.

    Dynamics: dY = (b_imm + beta*Y) dt + sqrt(alpha2 * Y) dW, plus
    immigration jumps (Poisson rate ``n_rate``, sizes from the ``n`` law)
    and branching jumps at left-frozen intensity ``Y_k * p_rate`` (sizes
    from the ``p`` law) compensated by ``-Y_k * p_rate * p_mean * dt``.

    Per step (frozen draw order): diffusion normal (only when alpha2 > 0),
    immigration Poisson count then one uniform per jump, branching Poisson
    count (only when the frozen intensity is positive) then one uniform per
    jump.  Drift and diffusion evaluate at max(Y, 0); the step result is
    clamped at 0.
    """
    steps: cython.Py_ssize_t = y_out.shape[0] - 1
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    comp: cython.double = p_rate * p_mean
    y: cython.double = y0
    y_out[0] = y
    k: cython.Py_ssize_t
    jmp: cython.longlong
    j: cython.longlong
    yk: cython.double
    y_new: cython.double
    for k in range(steps):
        yk = y if y > 0.0 else 0.0
        y_new = y + (b_imm + beta * yk - comp * yk) * dt
        if alpha2 > 0.0:
            y_new += sqrt(alpha2 * yk * dt) * _normal(st)
        if n_rate > 0.0:
            jmp = _poisson(st, n_rate * dt)
            for j in range(jmp):
                y_new += _draw_size(st, n_vals, n_cum)
        if p_rate > 0.0 and yk > 0.0:
            jmp = _poisson(st, yk * p_rate * dt)
            for j in range(jmp):
                y_new += _draw_size(st, p_vals, p_cum)
        y = y_new if y_new > 0.0 else 0.0
        y_out[k + 1] = y


# ---------------------------------------------------------------------------
# Generator test-function batch
# ---------------------------------------------------------------------------

@cython.cfunc
@cython.inline
@cython.exceptval(check=False)
def _catalog_f(fid: cython.int, x1: cython.double, x2: cython.double) -> cython.double:
    if fid == 0:
        return 1.0
    if fid == 1:
        return x2
    if fid == 2:
        return x2 * x2
    return exp(-x1 - x2 * x2)


@cython.ccall
def generator_step_sums(master_seed: cython.ulonglong, stream_id: cython.ulonglong,
                        n_paths: cython.longlong, fid: cython.int,
                        a: cython.double, b: cython.double, m: cython.double,
                        theta: cython.double, x1: cython.double, x2: cython.double,
                        h: cython.double, trapezoid: cython.bint) -> tuple:
    """Mean and second moment of ``f`` after one joint step of size ``h``.

    Each path makes a single exact-Y / Gaussian-X step from ``(x1, x2)``;
    returns Kahan-compensated ``(sum_f, sum_f_sq)``.
    """
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    shape_base: cython.double = 2.0 * a
    c: cython.double = _cir_c_coeff(b, h, 1.0)
    ebdt: cython.double = 1.0 if b == 0.0 else exp(-b * h)
    sum_f: cython.double = 0.0
    comp_f: cython.double = 0.0
    sum_f2: cython.double = 0.0
    comp_f2: cython.double = 0.0
    i: cython.longlong
    y_new: cython.double
    z: cython.double
    var: cython.double
    xs: cython.double
    fv: cython.double
    t1: cython.double
    t2: cython.double
    for i in range(n_paths):
        y_new = _cir_exact_step(st, x1, shape_base, c, ebdt)
        z = _normal(st)
        var = (0.5 * (x1 + y_new) if trapezoid else x1) * h
        xs = x2 + (m - theta * x2) * h + sqrt(var) * z
        fv = _catalog_f(fid, y_new, xs)
        t1 = fv - comp_f
        t2 = sum_f + t1
        comp_f = (t2 - sum_f) - t1
        sum_f = t2
        t1 = fv * fv - comp_f2
        t2 = sum_f2 + t1
        comp_f2 = (t2 - sum_f2) - t1
        sum_f2 = t2
    return (sum_f, sum_f2)


# ---------------------------------------------------------------------------
# Raw-draw hooks for distributional tests
# ---------------------------------------------------------------------------

@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def fill_uniforms(out: cython.double[:], master_seed: cython.ulonglong,
                  stream_id: cython.ulonglong):
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    i: cython.Py_ssize_t
    for i in range(out.shape[0]):
        out[i] = _u01(st)


@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def fill_normals(out: cython.double[:], master_seed: cython.ulonglong,
                 stream_id: cython.ulonglong):
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    i: cython.Py_ssize_t
    for i in range(out.shape[0]):
        out[i] = _normal(st)


@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def fill_gammas(out: cython.double[:], master_seed: cython.ulonglong,
                stream_id: cython.ulonglong, shape: cython.double):
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    i: cython.Py_ssize_t
    for i in range(out.shape[0]):
        out[i] = _gamma(st, shape)


@cython.ccall
@cython.boundscheck(False)
@cython.wraparound(False)
def fill_poissons(out: cython.double[:], master_seed: cython.ulonglong,
                  stream_id: cython.ulonglong, lam: cython.double):
    buf = _new_state()
    st: cython.ulonglong[:] = buf
    _seed_view(st, master_seed, stream_id)
    i: cython.Py_ssize_t
    for i in range(out.shape[0]):
        out[i] = _poisson(st, lam)
