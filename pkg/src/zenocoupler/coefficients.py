"""Second-order perturbative coefficients of the Stokes, phonon and anti-Stokes operators.

Each set stores the pure phase ``x1 = exp(i z omega)`` and the ratios
``r_k = x_k / x1`` (k >= 2); the coefficients themselves are exposed as
attributes ``j1 .. j10``, ``k1 .. k13``, ``l1 .. l10``.  Ratios that the
solution declares equal are the same object, so the stated equalities hold
bit for bit.

Two printed exponents are corrected here: the g**2 phonon family (k9, k10,
k13) and the chi**2 anti-Stokes family (l8, l9, l10) use the sign that makes
them members of the ``kernel_K3`` family.  The printed variants differ only
in the imaginary part (which diverges at zero detuning); their real parts,
the only part entering the number means, are identical.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import Couplings, Detunings
from .kernels import kernel_K1, kernel_K2, kernel_K3


class _CoefficientSet:
    _prefix = ""
    _n = 0

    def __getattr__(self, name):
        if name.startswith(self._prefix) and name[len(self._prefix):].isdigit():
            k = int(name[len(self._prefix):])
            if k == 1:
                return self.phase
            if 2 <= k <= self._n:
                return self.phase * self.ratio(k)
        raise AttributeError(name)

    def ratio(self, k: int):
        """x_k / x_1, equal to conj(x_1 x_k^*) because |x_1| = 1."""
        return getattr(self, f"r{k}")

    def as_dict(self):
        return {f"{self._prefix}{k}": getattr(self, f"{self._prefix}{k}") for k in range(1, self._n + 1)}


@dataclass(frozen=True)
class StokesCoefficients(_CoefficientSet):
    phase: complex
    r2: complex
    r3: complex
    r4: complex
    r6: complex
    r8: complex
    _prefix = "j"
    _n = 10

    @property
    def r5(self):
        return self.r4

    @property
    def r7(self):
        return self.r6

    @property
    def r9(self):
        return -self.r8

    @property
    def r10(self):
        return -self.r8


@dataclass(frozen=True)
class PhononCoefficients(_CoefficientSet):
    phase: complex
    r2: complex
    r3: complex
    r4: complex
    r6: complex
    r8: complex
    r9: complex
    _prefix = "k"
    _n = 13

    @property
    def r5(self):
        return self.r4

    @property
    def r7(self):
        return self.r6

    @property
    def r10(self):
        return self.r9

    @property
    def r11(self):
        return -self.r8

    @property
    def r12(self):
        return -self.r8

    @property
    def r13(self):
        return -self.r9


@dataclass(frozen=True)
class AntiStokesCoefficients(_CoefficientSet):
    phase: complex
    r2: complex
    r3: complex
    r5: complex
    r6: complex
    r8: complex
    _prefix = "l"
    _n = 10

    @property
    def r4(self):
        return self.r3

    @property
    def r7(self):
        return self.r6

    @property
    def r9(self):
        return self.r8

    @property
    def r10(self):
        return self.r8


def stokes_coeffs(c: Couplings, d: Detunings, omega_b, z) -> StokesCoefficients:
    g, chi, Gam = c.g, c.chi, c.Gamma
    return StokesCoefficients(
        phase=np.exp(1j * z * np.asarray(omega_b)),
        r2=g * kernel_K1(d.dS, z),
        r3=g * chi * kernel_K2(d.dS, d.dA, z, "j3"),
        r4=g * chi * kernel_K2(d.dS, d.dA, z, "j4"),
        r6=g * Gam * kernel_K2(d.dS, d.dD, z, "j6"),
        r8=g ** 2 * kernel_K3(d.dS, z, +1),
    )


def phonon_coeffs(c: Couplings, d: Detunings, omega_c, z) -> PhononCoefficients:
    g, chi, Gam = c.g, c.chi, c.Gamma
    return PhononCoefficients(
        phase=np.exp(1j * z * np.asarray(omega_c)),
        r2=g * kernel_K1(d.dS, z),
        r3=chi * kernel_K1(d.dA, z),
        r4=g * Gam * kernel_K2(d.dS, d.dD, z, "k4"),
        r6=Gam * chi * kernel_K2(d.dA, d.dD, z, "k6"),
        r8=-(chi ** 2) * kernel_K3(d.dA, z, +1),
        # printed with exp(+i z dS); see module docstring
        r9=-(g ** 2) * kernel_K3(d.dS, z, +1),
    )


def antistokes_coeffs(c: Couplings, d: Detunings, omega_d, z) -> AntiStokesCoefficients:
    chi, g, Gam = c.chi, c.g, c.Gamma
    return AntiStokesCoefficients(
        phase=np.exp(1j * z * np.asarray(omega_d)),
        # -chi (1 - e^{i z dA}) / dA
        r2=chi * kernel_K1(-np.asarray(d.dA, dtype=float), z),
        r3=g * chi * kernel_K2(d.dS, d.dA, z, "l3"),
        r5=g * chi * kernel_K2(d.dS, d.dA, z, "l5"),
        r6=Gam * chi * kernel_K2(d.dA, d.dD, z, "l6"),
        # printed with exp(-i z dA); see module docstring
        r8=-(chi ** 2) * kernel_K3(d.dA, z, -1),
    )
