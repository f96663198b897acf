"""Mean Stokes photon, phonon and anti-Stokes photon numbers to second order.

Every summand is kept as a labelled complex number (a ``term + c.c.`` pair or
a modulus-squared term) so that individual contributions can be compared
against the Fock-space oracle.  The mean is the real part of the ordered sum;
the discarded imaginary part is reported as ``imag_residual``.

Products ``x1 * conj(x_k)`` are evaluated as ``conj(x_k / x1)``, exact since
``|x1| = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coefficients import (
    AntiStokesCoefficients,
    PhononCoefficients,
    StokesCoefficients,
    antistokes_coeffs,
    phonon_coeffs,
    stokes_coeffs,
)
from .core import CoherentAmplitudes, CouplerConfig, Detunings

# summands proportional to the probe coupling Gamma
GAMMA_TERMS = {
    "b": ("j6", "j7"),
    "c": ("k4", "k5", "k6", "k7"),
    "d": ("l6", "l7"),
}


@dataclass(frozen=True)
class NumberExpectations:
    n_b: float
    n_c: float
    n_d: float
    imag_residual: float
    flags: tuple = ()

    def as_dict(self):
        return {"b": self.n_b, "c": self.n_c, "d": self.n_d}


def _cc(t):
    return t + np.conj(t)


def _amp_powers(amps: CoherentAmplitudes):
    a, a1, a2, b, c, d = (np.asarray(x, dtype=complex) for x in amps.as_tuple())
    n1, n2 = np.abs(a1) ** 2, np.abs(a2) ** 2
    nb, nc, nd = np.abs(b) ** 2, np.abs(c) ** 2, np.abs(d) ** 2
    return a, a1, a2, b, c, d, n1, n2, nb, nc, nd


def stokes_terms(amps: CoherentAmplitudes, jc: StokesCoefficients) -> dict:
    a, a1, a2, b, c, d, n1, n2, nb, nc, nd = _amp_powers(amps)
    r = {k: np.conj(jc.ratio(k)) for k in range(2, 11)}
    a1s, a2s = np.conj(a1), np.conj(a2)
    return {
        "seed": nb + 0j,
        "j2_sq": np.abs(jc.ratio(2)) ** 2 * n1 * n2 * (nc + 1) + 0j,
        "j2": _cc(r[2] * a1s * a2s * b * c),
        "j3": _cc(r[3] * a1s ** 2 * a2s ** 2 * b * d),
        "j4": _cc(r[4] * (n1 + 1) * b * c ** 2 * np.conj(d)),
        "j5": _cc(r[5] * n2 * b * c ** 2 * np.conj(d)),
        "j6": _cc(r[6] * (n1 + 1) * np.conj(a) * b * c),
        "j7": _cc(r[7] * n2 * np.conj(a) * b * c),
        "j8": _cc(r[8] * n1 * n2 * nb),
        "j9": _cc(r[9] * (n1 + 1) * nb * nc),
        "j10": _cc(r[10] * n2 * nb * nc),
    }


def phonon_terms(amps: CoherentAmplitudes, kc: PhononCoefficients) -> dict:
    a, a1, a2, b, c, d, n1, n2, nb, nc, nd = _amp_powers(amps)
    r = {k: np.conj(kc.ratio(k)) for k in range(2, 14)}
    a1s, a2s = np.conj(a1), np.conj(a2)
    return {
        "seed": nc + 0j,
        "k2_sq": np.abs(kc.ratio(2)) ** 2 * n1 * n2 * (nb + 1) + 0j,
        "k3_sq": np.abs(kc.ratio(3)) ** 2 * (n1 + 1) * (n2 + 1) * nd + 0j,
        "k2": _cc(r[2] * a1s * a2s * b * c),
        "k3": _cc(r[3] * a1 * a2 * c * np.conj(d)),
        "k4": _cc(r[4] * (n1 + 1) * np.conj(a) * b * c),
        "k5": _cc(r[5] * n2 * np.conj(a) * b * c),
        "k6": _cc(r[6] * n1 * a * c * np.conj(d)),
        "k7": _cc(r[7] * (n2 + 1) * a * c * np.conj(d)),
        # k2 k3^* = k1 r2 conj(k1 r3)
        "k2k3": _cc(kc.ratio(2) * np.conj(kc.ratio(3)) * a1 ** 2 * a2 ** 2 * np.conj(b) * np.conj(d)),
        "k8": _cc(r[8] * n1 * n2 * nc),
        "k9": _cc(r[9] * (n1 + 1) * nb * nc),
        "k10": _cc(r[10] * n2 * nb * nc),
        "k11": _cc(r[11] * n1 * nc * nd),
        "k12": _cc(r[12] * (n2 + 1) * nc * nd),
        "k13": _cc(r[13] * n1 * n2 * nc),
    }


def antistokes_terms(amps: CoherentAmplitudes, lc: AntiStokesCoefficients) -> dict:
    a, a1, a2, b, c, d, n1, n2, nb, nc, nd = _amp_powers(amps)
    r = {k: np.conj(lc.ratio(k)) for k in range(2, 11)}
    a1s, a2s = np.conj(a1), np.conj(a2)
    return {
        "seed": nd + 0j,
        "l2_sq": np.abs(lc.ratio(2)) ** 2 * n1 * n2 * nc + 0j,
        "l2": _cc(r[2] * a1s * a2s * np.conj(c) * d),
        "l3": _cc(r[3] * (n1 + 1) * np.conj(b) * np.conj(c) ** 2 * d),
        "l4": _cc(r[4] * n2 * np.conj(b) * np.conj(c) ** 2 * d),
        "l5": _cc(r[5] * a1s ** 2 * a2s ** 2 * b * d),
        "l6": _cc(r[6] * (n1 + 1) * np.conj(a) * np.conj(c) * d),
        "l7": _cc(r[7] * n2 * np.conj(a) * np.conj(c) * d),
        "l8": _cc(r[8] * (n1 + 1) * nc * nd),
        "l9": _cc(r[9] * n2 * nc * nd),
        "l10": _cc(r[10] * (n1 + 1) * (n2 + 1) * nd),
    }


def _total(terms: dict):
    total = 0j
    for t in terms.values():
        total = total + t
    return total


def mean_stokes(amps: CoherentAmplitudes, jc: StokesCoefficients):
    return np.real(_total(stokes_terms(amps, jc)))


def mean_phonon(amps: CoherentAmplitudes, kc: PhononCoefficients):
    return np.real(_total(phonon_terms(amps, kc)))


def mean_antistokes(amps: CoherentAmplitudes, lc: AntiStokesCoefficients):
    return np.real(_total(antistokes_terms(amps, lc)))


def all_terms(config: CouplerConfig, z, det: Detunings | None = None) -> dict:
    """Labelled summands for all three modes, keyed by ``'b' | 'c' | 'd'``."""
    det = config.detunings() if det is None else det
    f, c = config.freqs, config.couplings
    return {
        "b": stokes_terms(config.amps, stokes_coeffs(c, det, f.omega_b, z)),
        "c": phonon_terms(config.amps, phonon_coeffs(c, det, f.omega_c, z)),
        "d": antistokes_terms(config.amps, antistokes_coeffs(c, det, f.omega_d, z)),
    }


def expectations_from_terms(terms: dict, extra_flags=()) -> NumberExpectations:
    totals = {m: _total(t) for m, t in terms.items()}
    means = {m: np.real(v) for m, v in totals.items()}
    resid = max(float(np.max(np.abs(np.imag(v)))) for v in totals.values())
    flags = tuple(extra_flags)
    if any(np.any(v < 0) for v in means.values()):
        flags += ("perturbation_breakdown",)
    return NumberExpectations(
        n_b=_scalar(means["b"]), n_c=_scalar(means["c"]), n_d=_scalar(means["d"]),
        imag_residual=resid, flags=flags,
    )


def number_expectations(config: CouplerConfig, z, det: Detunings | None = None) -> NumberExpectations:
    """<N_b>, <N_c>, <N_d> at propagation length ``z``.

    Negative means are returned unchanged and flagged ``perturbation_breakdown``.
    """
    return expectations_from_terms(all_terms(config, z, det), config.flags())


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x
