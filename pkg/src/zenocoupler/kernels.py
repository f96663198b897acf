"""Singularity-stable kernels for the perturbative coefficients.

Every coefficient of the second-order solution is a coupling product times a
divided difference of ``E(w) = exp(i w z)`` on two or three frequency nodes:

    E[a, b]       = (E(a) - E(b)) / (a - b)
    E[x0, x1, x2] = (E[x1, x2] - E[x0, x1]) / (x2 - x0)

Vanishing detunings make nodes coincide, which is where the printed closed
forms have their removable 0/0 singularities.  Divided differences are smooth
in the nodes, so they are evaluated as:

* first order:  ``i z exp(i (a+b) z / 2) sinc((a-b) z / 2)`` (no cancellation);
* second order: the recursion above with the outermost pair (largest spread)
  in the denominator when ``spread * |z| >= EPS_SING``, otherwise the
  Maclaurin series of ``exp`` divided differences about the node centroid.

All functions broadcast over numpy arrays.
"""

from __future__ import annotations

from math import factorial

import numpy as np

from .errors import InvalidSignature

EPS_SING = 1e-3
# |y| <= EPS_SING: the first dropped term is ~ y**8 / 10! -> far below 1e-16.
_SERIES_TERMS = 8
_INV_FACT2 = np.array([1.0 / factorial(m + 2) for m in range(_SERIES_TERMS)])


def _scalar_or_array(x):
    return x[()] if isinstance(x, np.ndarray) and x.ndim == 0 else x


def sinc(x):
    """Unnormalised sin(x)/x with a Maclaurin branch for |x| < EPS_SING."""
    x = np.asarray(x, dtype=float)
    x2 = x * x
    series = 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)))
    small = np.abs(x) < EPS_SING
    with np.errstate(invalid="ignore", divide="ignore"):
        direct = np.sin(x) / x
    return _scalar_or_array(np.where(small, series, direct))


def expi_divdiff1(a, b, z):
    """First divided difference of exp(i w z) on nodes a, b."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    z = np.asarray(z, dtype=float)
    out = 1j * z * np.exp(0.5j * (a + b) * z) * sinc(0.5 * (a - b) * z)
    return _scalar_or_array(out)


def _series_divdiff2(x0, x1, x2, z):
    c = (x0 + x1 + x2) / 3.0
    y0, y1, y2 = (1j * z * (x - c) for x in (x0, x1, x2))
    # complete homogeneous symmetric polynomials h_m(y0, y1, y2)
    h0 = [y0 ** m for m in range(_SERIES_TERMS)]
    h1 = [h0[0]]
    for m in range(1, _SERIES_TERMS):
        h1.append(h0[m] + y1 * h1[m - 1])
    h2 = [h1[0]]
    for m in range(1, _SERIES_TERMS):
        h2.append(h1[m] + y2 * h2[m - 1])
    total = sum(h * w for h, w in zip(h2, _INV_FACT2))
    return np.exp(1j * c * z) * (1j * z) ** 2 * total


def expi_divdiff2(x0, x1, x2, z):
    """Second divided difference of exp(i w z) on nodes x0, x1, x2.

    Equals -z**2 / 2 when all nodes coincide.
    """
    x0, x1, x2, z = np.broadcast_arrays(*(np.asarray(v, dtype=float) for v in (x0, x1, x2, z)))
    lo, mid, hi = np.sort(np.stack([x0, x1, x2]), axis=0)
    spread = hi - lo
    small = spread * np.abs(z) < EPS_SING
    with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
        direct = (expi_divdiff1(mid, hi, z) - expi_divdiff1(lo, mid, z)) / spread
    out = np.where(small, _series_divdiff2(lo, mid, hi, z), direct)
    return _scalar_or_array(out)


def kernel_K1(x, z):
    """(1 - exp(-i z x)) / x, limit i z at x = 0."""
    return expi_divdiff1(0.0, -np.asarray(x, dtype=float), z)


def kernel_K3(x, z, sign=1):
    """(1 - exp(-i s z x) - i s x z) / x**2 for s = sign = +-1, limit z**2 / 2."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    x = np.asarray(x, dtype=float)
    return -expi_divdiff2(0.0, 0.0, -sign * x, z)


# signature -> (overall sign, node builder taking (u, v)).  Each entry is the
# printed three-exponential numerator over the product of its three
# denominators, with the coupling product stripped off.
_K2_CATALOG = {
    # (dA - d1 e^{-iz dS} - dS e^{iz d1}) / (dA d1 dS),  u = dS, v = dA
    "j3": (-1.0, lambda u, v: (0.0, -u, v - u)),
    # (dA + dS e^{-iz d2} - d2 e^{-iz dS}) / (dA dS d2),  u = dS, v = dA
    "j4": (1.0, lambda u, v: (0.0, -u, -u - v)),
    # (dD + dS e^{-iz d3} - d3 e^{-iz dS}) / (dD dS d3),  u = dS, v = dD
    "j6": (1.0, lambda u, v: (0.0, -u, -u - v)),
    "k4": (1.0, lambda u, v: (0.0, -u, -u - v)),
    # (-dD + dA e^{-iz d4} - d4 e^{-iz dA}) / (dA dD d4),  u = dA, v = dD
    "k6": (-1.0, lambda u, v: (0.0, -u, v - u)),
    # (dS + dA e^{iz d2} - d2 e^{iz dA}) / (dS dA d2),  u = dS, v = dA
    "l3": (1.0, lambda u, v: (0.0, v, v + u)),
    # (dS + d1 e^{iz dA} - dA e^{iz d1}) / (dS d1 dA),  u = dS, v = dA
    "l5": (1.0, lambda u, v: (0.0, v, v - u)),
    # (dD - dA e^{iz d4} + d4 e^{iz dA}) / (dD dA d4),  u = dA, v = dD
    "l6": (1.0, lambda u, v: (0.0, u, u - v)),
}

K2_SIGNATURES = tuple(_K2_CATALOG)


def kernel_K2(u, v, z, signature):
    """Three-exponential pattern ``signature`` evaluated at detunings (u, v).

    The argument roles per signature are listed in ``_K2_CATALOG``.
    """
    try:
        sign, nodes = _K2_CATALOG[signature]
    except KeyError:
        raise InvalidSignature(f"unknown kernel signature {signature!r}") from None
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return sign * expi_divdiff2(*nodes(u, v), z)


def stokes_zeno_kernel(dS, dD, z):
    """[dD + dS e^{i(dS+dD)z} - (dS+dD) e^{i dS z}] / (dS dD (dS+dD))."""
    dS = np.asarray(dS, dtype=float)
    return expi_divdiff2(0.0, dS, dS + dD, z)


def antistokes_zeno_kernel(dA, dD, z):
    """1/(dA(dA-dD)) - e^{i(dD-dA)z}/(dD(dA-dD)) + e^{-i dA z}/(dD dA)."""
    dA = np.asarray(dA, dtype=float)
    return expi_divdiff2(0.0, -dA, dD - dA, z)
