"""Hot numeric kernels, built twice: numba @njit scalar loops (default) and a
vectorized pure-numpy fallback selected by setting ICUP_DISABLE_NUMBA=1.

Three inner loops dominate runtime across the verification sweeps:

* the 2001-point gamma grid search (plus trisection refinement) for the
  weak-regime sum-rate,
* the golden-section search over the genie correlation parameter eta in the
  cognitive-channel sum-capacity bound,
* the vertex-enumeration LP used by the region oracle (all C(17,3) = 680
  hyperplane triples of the 3-variable rate polytope).

The active implementations are exported as ``optimize_gamma_impl``,
``cgrc_eta_max`` and ``vertex_enum_max``; the ``*_np`` builds are always
importable so the benchmark script can compare the two paths.
"""

from __future__ import annotations

import itertools
import math
import os

import numpy as np

GAMMA_GRID = 2001
ETA_GRID = 1001
ETA_TOL = 1e-10
FEAS_TOL = 1e-9
_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def numba_disabled() -> bool:
    return os.environ.get("ICUP_DISABLE_NUMBA", "").strip().lower() in {
        "1", "true", "yes", "on",
    }


NUMBA_ACTIVE = False
if not numba_disabled():
    try:
        from numba import njit as _njit

        NUMBA_ACTIVE = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        pass

if NUMBA_ACTIVE:
    def _jit(f):
        return _njit(cache=True)(f)
else:
    def _jit(f):
        return f


def apply_thread_cap(n: int) -> None:
    """Cap numba's worker count (no-op on the numpy path, which is serial)."""
    if NUMBA_ACTIVE:
        import numba

        numba.set_num_threads(max(1, min(n, numba.config.NUMBA_NUM_THREADS)))


@_jit
def _cap_s(x):
    return 0.5 * math.log2(1.0 + x)


@_jit
def weak_rate_scalar(p, a, c12, gamma):
    """Weak-regime achievable sum-rate at one cooperative power fraction."""
    pu = 1.0 / a
    rem = p - pu
    if rem < 0.0:
        rem = 0.0
    pv = gamma * rem
    pw = rem - pv
    pbig = (1.0 + math.sqrt(a)) ** 2 * pv
    den = pu + 2.0
    rtw = min(_cap_s(a * pw / den), 0.5 * _cap_s((1.0 + a) * pw / den))
    rv = _cap_s(pbig / den)
    if c12 < rv:
        rv = c12
    rb1 = _cap_s((pw * (1.0 + a) + pbig) / den)
    rb2 = 2.0 * rtw + rv
    rb3 = _cap_s((a * pw + pbig) / den) + rtw
    return 2.0 * _cap_s(pu / 2.0) + min(rb1, min(rb2, rb3))


@_jit
def _optimize_gamma_nb(p, a, c12):
    n = GAMMA_GRID
    best_g = 0.0
    best_r = weak_rate_scalar(p, a, c12, 0.0)
    for i in range(1, n):
        g = i / (n - 1.0)
        r = weak_rate_scalar(p, a, c12, g)
        if r > best_r:
            best_r = r
            best_g = g
    h = 1.0 / (n - 1.0)
    lo = best_g - h
    hi = best_g + h
    if lo < 0.0:
        lo = 0.0
    if hi > 1.0:
        hi = 1.0
    for _ in range(3):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        r1 = weak_rate_scalar(p, a, c12, m1)
        r2 = weak_rate_scalar(p, a, c12, m2)
        if r1 > best_r:
            best_r = r1
            best_g = m1
        if r2 > best_r:
            best_r = r2
            best_g = m2
        if r1 >= r2:
            hi = m2
        else:
            lo = m1
    return best_g, best_r


def weak_rate_grid_np(p, a, c12, gammas):
    """Vectorized weak-regime sum-rate over an array of gamma values."""
    pu = 1.0 / a
    rem = max(p - pu, 0.0)
    pv = gammas * rem
    pw = rem - pv
    pbig = (1.0 + math.sqrt(a)) ** 2 * pv
    den = pu + 2.0
    rtw = np.minimum(
        0.5 * np.log2(1.0 + a * pw / den),
        0.25 * np.log2(1.0 + (1.0 + a) * pw / den),
    )
    rb1 = 0.5 * np.log2(1.0 + (pw * (1.0 + a) + pbig) / den)
    rb2 = 2.0 * rtw + np.minimum(0.5 * np.log2(1.0 + pbig / den), c12)
    rb3 = 0.5 * np.log2(1.0 + (a * pw + pbig) / den) + rtw
    return 0.5 * math.log2(1.0 + pu / 2.0) * 2.0 + np.minimum(
        rb1, np.minimum(rb2, rb3)
    )


def _optimize_gamma_np(p, a, c12):
    gammas = np.linspace(0.0, 1.0, GAMMA_GRID)
    rates = weak_rate_grid_np(p, a, c12, gammas)
    i = int(np.argmax(rates))
    best_g = float(gammas[i])
    best_r = float(rates[i])
    h = 1.0 / (GAMMA_GRID - 1.0)
    lo = max(0.0, best_g - h)
    hi = min(1.0, best_g + h)
    for _ in range(3):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        r1 = weak_rate_scalar(p, a, c12, m1)
        r2 = weak_rate_scalar(p, a, c12, m2)
        if r1 > best_r:
            best_r, best_g = r1, m1
        if r2 > best_r:
            best_r, best_g = r2, m2
        if r1 >= r2:
            hi = m2
        else:
            lo = m1
    return best_g, best_r


@_jit
def _cgrc_obj(p, a, eta):
    arg = a * (1.0 - eta)
    if arg < 0.0:
        arg = 0.0
    t1 = math.log2(1.0 + a * p + p + 2.0 * p * math.sqrt(arg))
    t2 = math.log2((1.0 + eta * p) / (1.0 + eta * a * p))
    return t1 + t2


@_jit
def _cgrc_eta_max_nb(p, a):
    n = ETA_GRID
    best_e = 0.0
    best_v = _cgrc_obj(p, a, 0.0)
    for i in range(1, n):
        e = i / (n - 1.0)
        v = _cgrc_obj(p, a, e)
        if v > best_v:
            best_v = v
            best_e = e
    h = 1.0 / (n - 1.0)
    lo = best_e - h
    hi = best_e + h
    if lo < 0.0:
        lo = 0.0
    if hi > 1.0:
        hi = 1.0
    while hi - lo > ETA_TOL:
        m1 = hi - _INVPHI * (hi - lo)
        m2 = lo + _INVPHI * (hi - lo)
        v1 = _cgrc_obj(p, a, m1)
        v2 = _cgrc_obj(p, a, m2)
        if v1 > best_v:
            best_v = v1
            best_e = m1
        if v2 > best_v:
            best_v = v2
            best_e = m2
        if v1 >= v2:
            hi = m2
        else:
            lo = m1
    return 0.5 * best_v


def _cgrc_eta_max_np(p, a):
    etas = np.linspace(0.0, 1.0, ETA_GRID)
    t1 = np.log2(1.0 + a * p + p + 2.0 * p * np.sqrt(np.maximum(a * (1.0 - etas), 0.0)))
    t2 = np.log2((1.0 + etas * p) / (1.0 + etas * a * p))
    vals = t1 + t2
    i = int(np.argmax(vals))
    best_v = float(vals[i])
    h = 1.0 / (ETA_GRID - 1.0)
    lo = max(0.0, float(etas[i]) - h)
    hi = min(1.0, float(etas[i]) + h)
    while hi - lo > ETA_TOL:
        m1 = hi - _INVPHI * (hi - lo)
        m2 = lo + _INVPHI * (hi - lo)
        v1 = _cgrc_obj(p, a, m1)
        v2 = _cgrc_obj(p, a, m2)
        best_v = max(best_v, v1, v2)
        if v1 >= v2:
            hi = m2
        else:
            lo = m1
    return 0.5 * best_v


@_jit
def _vertex_enum_nb(A, b, c):
    n = A.shape[0]
    found = False
    best_obj = -1.0e300
    bx = 0.0
    by = 0.0
    bz = 0.0
    for i in range(n - 2):
        a11 = A[i, 0]
        a12 = A[i, 1]
        a13 = A[i, 2]
        for j in range(i + 1, n - 1):
            a21 = A[j, 0]
            a22 = A[j, 1]
            a23 = A[j, 2]
            for k in range(j + 1, n):
                a31 = A[k, 0]
                a32 = A[k, 1]
                a33 = A[k, 2]
                det = (
                    a11 * (a22 * a33 - a23 * a32)
                    - a12 * (a21 * a33 - a23 * a31)
                    + a13 * (a21 * a32 - a22 * a31)
                )
                if abs(det) < 1e-12:
                    continue
                r1 = b[i]
                r2 = b[j]
                r3 = b[k]
                x = (
                    r1 * (a22 * a33 - a23 * a32)
                    - a12 * (r2 * a33 - a23 * r3)
                    + a13 * (r2 * a32 - a22 * r3)
                ) / det
                y = (
                    a11 * (r2 * a33 - a23 * r3)
                    - r1 * (a21 * a33 - a23 * a31)
                    + a13 * (a21 * r3 - r2 * a31)
                ) / det
                z = (
                    a11 * (a22 * r3 - r2 * a32)
                    - a12 * (a21 * r3 - r2 * a31)
                    + r1 * (a21 * a32 - a22 * a31)
                ) / det
                feas = True
                for m in range(n):
                    if A[m, 0] * x + A[m, 1] * y + A[m, 2] * z > b[m] + FEAS_TOL:
                        feas = False
                        break
                if not feas:
                    continue
                obj = c[0] * x + c[1] * y + c[2] * z
                if (not found) or obj > best_obj + 1e-12:
                    found = True
                    best_obj = obj
                    bx, by, bz = x, y, z
                elif obj >= best_obj - 1e-12:
                    # deterministic lexicographic tie-break among near-ties
                    if x < bx or (x == bx and (y < by or (y == by and z < bz))):
                        bx, by, bz = x, y, z
                        if obj > best_obj:
                            best_obj = obj
    return found, best_obj, bx, by, bz


_COMBO_CACHE: dict[int, np.ndarray] = {}


def _combos(n: int) -> np.ndarray:
    if n not in _COMBO_CACHE:
        _COMBO_CACHE[n] = np.array(
            list(itertools.combinations(range(n), 3)), dtype=np.int64
        )
    return _COMBO_CACHE[n]


def _vertex_enum_np(A, b, c):
    idx = _combos(A.shape[0])
    M = A[idx]
    r = b[idx]
    det = np.linalg.det(M)
    ok = np.abs(det) >= 1e-12
    if not ok.any():
        return False, 0.0, 0.0, 0.0, 0.0
    V = np.linalg.solve(M[ok], r[ok][:, :, None])[:, :, 0]
    feas = np.all(V @ A.T <= b[None, :] + FEAS_TOL, axis=1)
    if not feas.any():
        return False, 0.0, 0.0, 0.0, 0.0
    V = V[feas]
    obj = V @ c
    best_obj = float(obj.max())
    top = V[obj >= best_obj - 1e-12]
    order = np.lexsort((top[:, 2], top[:, 1], top[:, 0]))
    v = top[order[0]]
    return True, best_obj, float(v[0]), float(v[1]), float(v[2])


if NUMBA_ACTIVE:
    optimize_gamma_impl = _optimize_gamma_nb
    cgrc_eta_max = _cgrc_eta_max_nb
    _vertex_enum = _vertex_enum_nb
else:
    optimize_gamma_impl = _optimize_gamma_np
    cgrc_eta_max = _cgrc_eta_max_np
    _vertex_enum = _vertex_enum_np


def vertex_enum_max(A, b, c):
    """Exact LP maximum over the vertices of {x : A x <= b}.

    Returns (optimum, vertex).  Raises ValueError on an empty feasible set,
    which cannot occur for polytopes built from the MAC constraints (the
    origin is always feasible there).
    """
    A = np.ascontiguousarray(A, dtype=np.float64)
    b = np.ascontiguousarray(b, dtype=np.float64)
    c = np.ascontiguousarray(c, dtype=np.float64)
    if A.shape[0] < 3 or A.shape[1] != 3:
        raise ValueError("need at least 3 constraints over 3 variables")
    found, obj, x, y, z = _vertex_enum(A, b, c)
    if not found:
        raise ValueError("empty feasible region")
    return obj, np.array([x, y, z])
