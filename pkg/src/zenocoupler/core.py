"""Domain types, detuning algebra and phase bookkeeping.

Units: hbar = 1, every frequency and coupling is measured in units of the
Stokes coupling ``g`` and lengths enter as the dimensionless product ``g z``.
All dataclasses are immutable. Numeric fields are plain floats/complex for
single configurations, but every function here is written with numpy
operations so that array-valued fields broadcast (used for batch evaluation).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ZeroAmplitudePhase

MODES = ("p", "a1", "a2", "b", "c", "d")


def wrap_phase(phi):
    """Map angles onto (-pi, pi]."""
    out = np.pi - np.mod(np.pi - np.asarray(phi, dtype=float), 2 * np.pi)
    return float(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class Frequencies:
    """Mode frequencies (probe, pump 1, pump 2, Stokes, phonon, anti-Stokes)."""

    omega_p: float
    omega_a1: float
    omega_a2: float
    omega_b: float
    omega_c: float
    omega_d: float

    def as_tuple(self):
        return (self.omega_p, self.omega_a1, self.omega_a2,
                self.omega_b, self.omega_c, self.omega_d)

    def nonphysical(self) -> bool:
        return any(bool(np.any(np.asarray(w) <= 0)) for w in self.as_tuple())

    def __post_init__(self):
        if not all(np.all(np.isfinite(np.asarray(w, dtype=float))) for w in self.as_tuple()):
            raise ValueError("frequencies must be finite")


@dataclass(frozen=True)
class Couplings:
    """Stokes coupling g, anti-Stokes coupling chi, probe-pump coupling Gamma."""

    g: float = 1.0
    chi: float = 0.0
    Gamma: float = 0.0

    def __post_init__(self):
        for name in ("g", "chi", "Gamma"):
            if np.any(np.asarray(getattr(self, name)) < 0):
                raise ValueError(f"coupling {name} must be non-negative")


@dataclass(frozen=True)
class CoherentAmplitudes:
    """Initial coherent amplitudes alpha, alpha1, alpha2, beta, gamma, delta."""

    alpha: complex = 0j
    alpha1: complex = 0j
    alpha2: complex = 0j
    beta: complex = 0j
    gamma: complex = 0j
    delta: complex = 0j

    @classmethod
    def from_polar(cls, mags, phases=(0, 0, 0, 0, 0, 0)) -> "CoherentAmplitudes":
        vals = [m * np.exp(1j * p) for m, p in zip(mags, phases)]
        vals = [complex(v) if np.ndim(v) == 0 else v for v in vals]
        return cls(*vals)

    def as_tuple(self):
        return (self.alpha, self.alpha1, self.alpha2, self.beta, self.gamma, self.delta)

    def magnitudes(self):
        return tuple(np.abs(a) for a in self.as_tuple())

    def phases(self):
        """Phases in (-pi, pi]; zero for vanishing amplitudes."""
        return tuple(wrap_phase(np.angle(a)) for a in self.as_tuple())


@dataclass(frozen=True)
class Detunings:
    """Frequency mismatches dS, dA, dD and the composite d1..d4.

    Every kernel in the package is built from ``dS, dA, dD`` only, the
    composite ones being fixed linear combinations of them:
    d1 = dA - dS, d2 = dA + dS, d3 = dS + dD, d4 = dA - dD.
    """

    dS: float
    dA: float
    dD: float
    d1: float
    d2: float
    d3: float
    d4: float

    @classmethod
    def from_primary(cls, dS, dA, dD) -> "Detunings":
        return cls(dS, dA, dD, dA - dS, dA + dS, dS + dD, dA - dD)

    @classmethod
    def resonant(cls) -> "Detunings":
        return cls.from_primary(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class PhaseMismatch:
    theta1: float
    theta2: float


def detunings(freqs: Frequencies) -> Detunings:
    """Mismatches computed directly from the six mode frequencies."""
    wp, w1, w2, wb, wc, wd = freqs.as_tuple()
    return Detunings(
        dS=-w1 - w2 + wb + wc,
        dA=w1 + w2 + wc - wd,
        dD=w1 + w2 - wp,
        d1=2 * w1 + 2 * w2 - wb - wd,
        d2=wb + 2 * wc - wd,
        d3=wb + wc - wp,
        d4=wc - wd + wp,
    )


def with_detunings(freqs: Frequencies, dS=None, dA=None, dD=None) -> Frequencies:
    """Shift the probe, Stokes and anti-Stokes frequencies to realise the requested mismatches.

    Pump and phonon frequencies are held fixed; ``None`` keeps the current value.
    """
    cur = detunings(freqs)
    dS = cur.dS if dS is None else dS
    dA = cur.dA if dA is None else dA
    dD = cur.dD if dD is None else dD
    pump = freqs.omega_a1 + freqs.omega_a2
    return replace(
        freqs,
        omega_b=dS + pump - freqs.omega_c,
        omega_d=pump + freqs.omega_c - dA,
        omega_p=pump - dD,
    )


def _require_phase(amp, name):
    if np.any(np.abs(amp) == 0):
        raise ZeroAmplitudePhase(f"phase of {name} is undefined (zero amplitude)")


def phase_mismatches(amps: CoherentAmplitudes) -> PhaseMismatch:
    """theta1 = arg(delta) - arg(alpha) - arg(gamma), theta2 = arg(alpha) - arg(beta) - arg(gamma)."""
    for name in ("alpha", "beta", "gamma", "delta"):
        _require_phase(getattr(amps, name), name)
    pa, pb, pc, pd = (np.angle(x) for x in (amps.alpha, amps.beta, amps.gamma, amps.delta))
    return PhaseMismatch(wrap_phase(pd - pa - pc), wrap_phase(pa - pb - pc))


def with_phase_mismatch(amps: CoherentAmplitudes, theta1=None, theta2=None) -> CoherentAmplitudes:
    """Rotate delta (for theta1) and beta (for theta2) so the mismatches take the requested values."""
    pa = np.angle(amps.alpha)
    pc = np.angle(amps.gamma)
    new = {}
    if theta1 is not None:
        _require_phase(amps.delta, "delta")
        new["delta"] = np.abs(amps.delta) * np.exp(1j * wrap_phase(theta1 + pa + pc))
    if theta2 is not None:
        _require_phase(amps.beta, "beta")
        new["beta"] = np.abs(amps.beta) * np.exp(1j * wrap_phase(pa - pc - theta2))
    new = {k: complex(v) if np.ndim(v) == 0 else v for k, v in new.items()}
    return replace(amps, **new)


# Resonant reference frequencies: dS = dA = dD = 0.
RESONANT_FREQUENCIES = Frequencies(2.0, 1.0, 1.0, 1.5, 0.5, 2.5)


@dataclass(frozen=True)
class CouplerConfig:
    """Complete experiment description: frequencies, couplings and initial amplitudes."""

    freqs: Frequencies = RESONANT_FREQUENCIES
    couplings: Couplings = field(default_factory=Couplings)
    amps: CoherentAmplitudes = field(default_factory=CoherentAmplitudes)

    def detunings(self) -> Detunings:
        return detunings(self.freqs)

    def with_detunings(self, dS=None, dA=None, dD=None) -> "CouplerConfig":
        return replace(self, freqs=with_detunings(self.freqs, dS, dA, dD))

    def with_couplings(self, **kw) -> "CouplerConfig":
        return replace(self, couplings=replace(self.couplings, **kw))

    def with_amplitudes(self, **kw) -> "CouplerConfig":
        return replace(self, amps=replace(self.amps, **kw))

    def with_phase_mismatch(self, theta1=None, theta2=None) -> "CouplerConfig":
        return replace(self, amps=with_phase_mismatch(self.amps, theta1, theta2))

    def flags(self) -> tuple[str, ...]:
        return ("nonphysical_frequency",) if self.freqs.nonphysical() else ()
