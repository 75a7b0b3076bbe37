"""Zeroth-order Bessel function of the first kind.

Self-contained two-regime evaluation: a rational fit in x**2 on |x| <= 5
and an amplitude-phase asymptotic form beyond, following the classical
Cephes (Moshier) coefficient sets.  Peak absolute error is a few 1e-16 on
[0, 30] and stays below 1e-13 relative to the sqrt(2/(pi*x)) envelope for
large arguments; the phase is reduced through the identity
cos(x - pi/4) = (cos x + sin x)/sqrt(2) so that accuracy survives
arguments up to 1e6 and beyond.

The quadrature engine calls this in its inner loop, so scalar floats and
numpy arrays are both accepted and no external special-function library
is used.
"""

from __future__ import annotations

import math

import numpy as np

_DR1 = 5.78318596294678452118
_DR2 = 30.4712623436620863991

_RP = (
    -4.79443220978201773821e9,
    1.95617491946556577543e12,
    -2.49248344360967716204e14,
    9.70862251047306323952e15,
)
_RQ = (  # monic, degree 8
    4.99563147152651017219e2,
    1.73785401676374683123e5,
    4.84409658339962045305e7,
    1.11855537045356834862e10,
    2.11277520115489217587e12,
    3.10518229857422583814e14,
    3.18121955943204943306e16,
    1.71086294081043136091e18,
)
_PP = (
    7.96936729297347051624e-4,
    8.28352392107440799803e-2,
    1.23953371646414299388e0,
    5.44725003058768775090e0,
    8.74716500199817011941e0,
    5.30324038235394892183e0,
    9.99999999999999997821e-1,
)
_PQ = (
    9.24408810558863637013e-4,
    8.56288474354474431428e-2,
    1.25352743901058953537e0,
    5.47097740330417105182e0,
    8.76190883237069594232e0,
    5.30605288235394617618e0,
    1.00000000000000000218e0,
)
_QP = (
    -1.13663838898469149931e-2,
    -1.28252718670509318512e0,
    -1.95539544257735972385e1,
    -9.32060152123768231369e1,
    -1.77681167980488050595e2,
    -1.47077505154951170175e2,
    -5.14105326766599330220e1,
    -6.05014350600728481186e0,
)
_QQ = (  # monic, degree 7
    6.43178256118178023184e1,
    8.56430025976980587198e2,
    3.88240183605401609683e3,
    7.24046774195652478189e3,
    5.93072701187316984827e3,
    2.06209331660327847417e3,
    2.42005740240291393179e2,
)

_SQRT_2_OVER_PI = math.sqrt(2.0 / math.pi)
_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _polevl(x, coeffs):
    acc = coeffs[0] * np.ones_like(x)
    for c in coeffs[1:]:
        acc = acc * x + c
    return acc


def _p1evl(x, coeffs):
    acc = x + coeffs[0]
    for c in coeffs[1:]:
        acc = acc * x + c
    return acc


def bessel_j0(x):
    """Evaluate J0(x) for finite real x.

    Accepts a scalar or a numpy array; returns a float for scalar input.
    Raises ValueError on non-finite input.  Exactly even by construction
    and clipped to [-1, 1] (the fits can overshoot by one ulp near x = 0).
    """
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError("bessel_j0 requires finite input")
    scalar = arr.ndim == 0
    ax = np.abs(np.atleast_1d(arr))
    out = np.empty_like(ax)

    small = ax <= 5.0
    if np.any(small):
        z = ax[small] ** 2
        tiny = z < 1e-10
        vals = np.empty_like(z)
        if np.any(tiny):
            vals[tiny] = 1.0 - 0.25 * z[tiny]
        rest = ~tiny
        if np.any(rest):
            zr = z[rest]
            vals[rest] = (
                (zr - _DR1) * (zr - _DR2) * _polevl(zr, _RP) / _p1evl(zr, _RQ)
            )
        out[small] = vals

    large = ~small
    if np.any(large):
        xl = ax[large]
        w = 5.0 / xl
        z = w * w
        p = _polevl(z, _PP) / _polevl(z, _PQ)
        q = _polevl(z, _QP) / _p1evl(z, _QQ)
        cx = np.cos(xl)
        sx = np.sin(xl)
        cos_xn = (cx + sx) * _INV_SQRT2  # cos(x - pi/4)
        sin_xn = (sx - cx) * _INV_SQRT2  # sin(x - pi/4)
        out[large] = _SQRT_2_OVER_PI * (p * cos_xn - w * q * sin_xn) / np.sqrt(xl)

    exact_zero = ax == 0.0
    if np.any(exact_zero):
        out[exact_zero] = 1.0
    np.clip(out, -1.0, 1.0, out=out)
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)
