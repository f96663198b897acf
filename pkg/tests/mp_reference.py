"""Extended-precision reference values (mpmath, 50 digits).

Naive transcriptions of the printed coefficient and Zeno-parameter formulas,
evaluated with enough digits that the removable 0/0 cancellations are
harmless.  Used only by the tests.
"""

import mpmath as mp

mp.mp.dps = 50
I = mp.mpc(0, 1)


def E(x, z):
    return mp.exp(I * x * z)


# Distinct offsets far below double resolution keep every printed
# denominator nonzero; callers evaluate at RATIO_DPS digits.
_NUDGE = (mp.mpf("1e-45"), mp.mpf("2.3e-45"), mp.mpf("3.7e-45"))
RATIO_DPS = 130


def _d(dS, dA, dD):
    dS, dA, dD = (mp.mpf(x) + n for x, n in zip((dS, dA, dD), _NUDGE))
    return dS, dA, dD, dA - dS, dA + dS, dS + dD, dA - dD


def _high_precision(fn):
    def wrapped(*args, **kw):
        with mp.workdps(RATIO_DPS):
            out = fn(*args, **kw)
            return {k: +v for k, v in out.items()} if isinstance(out, dict) else +out
    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


def _extra_digits(*xs):
    """Digits lost to cancellation when the smallest argument is tiny."""
    small = min((abs(mp.mpf(x)) for x in xs if x != 0), default=mp.mpf(1))
    return 50 + max(0, int(-2 * mp.log10(small))) if small < 1 else 50


def K1(x, z):
    with mp.workdps(_extra_digits(mp.mpf(x) * mp.mpf(z))):
        x, z = mp.mpf(x), mp.mpf(z)
        return +((1 - E(-x, z)) / x)


def K3(x, z, sign=1):
    with mp.workdps(_extra_digits(mp.mpf(x) * mp.mpf(z))):
        x, z = mp.mpf(x), mp.mpf(z)
        return +((1 - E(-sign * x, z) - sign * I * x * z) / x ** 2)


@_high_precision
def stokes_ratios(g, chi, Gam, dS, dA, dD, z):
    dS, dA, dD, d1, d2, d3, d4 = _d(dS, dA, dD)
    z = mp.mpf(z)
    r = {}
    r[2] = g * (1 - E(-dS, z)) / dS
    r[3] = g * chi * (dA - d1 * E(-dS, z) - dS * E(d1, z)) / (dA * d1 * dS)
    r[4] = r[5] = g * chi * (dA + dS * E(-d2, z) - d2 * E(-dS, z)) / (dA * dS * d2)
    r[6] = r[7] = g * Gam * (dD + dS * E(-d3, z) - d3 * E(-dS, z)) / (dD * dS * d3)
    r[8] = g ** 2 * (1 - E(-dS, z) - I * dS * z) / dS ** 2
    r[9] = r[10] = -r[8]
    return r


@_high_precision
def phonon_ratios(g, chi, Gam, dS, dA, dD, z, printed=False):
    dS, dA, dD, d1, d2, d3, d4 = _d(dS, dA, dD)
    z = mp.mpf(z)
    r = {}
    r[2] = g * (1 - E(-dS, z)) / dS
    r[3] = chi * (1 - E(-dA, z)) / dA
    r[4] = r[5] = g * Gam * (dD + dS * E(-d3, z) - d3 * E(-dS, z)) / (dD * dS * d3)
    r[6] = r[7] = Gam * chi * (-dD + dA * E(-d4, z) - d4 * E(-dA, z)) / (dA * dD * d4)
    r[8] = -chi ** 2 * (1 - E(-dA, z) - I * dA * z) / dA ** 2
    r[11] = r[12] = -r[8]
    if printed:
        r[9] = -g ** 2 * (1 - E(dS, z) - I * dS * z) / dS ** 2
    else:
        r[9] = -g ** 2 * (1 - E(-dS, z) - I * dS * z) / dS ** 2
    r[10] = r[9]
    r[13] = -r[9]
    return r


@_high_precision
def antistokes_ratios(g, chi, Gam, dS, dA, dD, z, printed=False):
    dS, dA, dD, d1, d2, d3, d4 = _d(dS, dA, dD)
    z = mp.mpf(z)
    r = {}
    r[2] = -chi * (1 - E(dA, z)) / dA
    r[3] = r[4] = g * chi * (dS + dA * E(d2, z) - d2 * E(dA, z)) / (dS * dA * d2)
    r[5] = g * chi * (dS + d1 * E(dA, z) - dA * E(d1, z)) / (dS * d1 * dA)
    r[6] = r[7] = Gam * chi * (dD - dA * E(d4, z) + d4 * E(dA, z)) / (dD * dA * d4)
    if printed:
        r[8] = -chi ** 2 * (1 - E(-dA, z) + I * dA * z) / dA ** 2
    else:
        r[8] = -chi ** 2 * (1 - E(dA, z) + I * dA * z) / dA ** 2
    r[9] = r[10] = r[8]
    return r


@_high_precision
def zeno_b(Cb, theta2, dS, dD, z):
    """Printed three-cosine Stokes form."""
    dS, _, dD = _d(dS, 0, dD)[:3]
    z, t = mp.mpf(z), mp.mpf(theta2)
    return Cb * (mp.cos(t) / (dS * (dD + dS))
                 + mp.cos(dS * z + dD * z - t) / (dD * (dD + dS))
                 - mp.cos(dS * z - t) / (dD * dS))


@_high_precision
def zeno_d(Cd, theta1, dA, dD, z):
    """Printed three-cosine anti-Stokes form."""
    _, dA, dD = _d(0, dA, dD)[:3]
    z, t = mp.mpf(z), mp.mpf(theta1)
    return Cd * (mp.cos(t) / (dA * (dA - dD))
                 - mp.cos(t + dD * z - dA * z) / (dD * (dA - dD))
                 + mp.cos(t - dA * z) / (dD * dA))


def rel_err(approx, exact):
    exact = mp.mpc(exact)
    return float(abs(mp.mpc(complex(approx)) - exact) / abs(exact))
