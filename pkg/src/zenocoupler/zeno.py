"""Zeno parameters Z_b, Z_c, Z_d: closed forms, definitional difference,
resonant and phonon-excitation limits, classification and reductions.

Sign convention: Z < 0 is the quantum Zeno effect (QZE), Z > 0 the anti-Zeno
effect (QAZE).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

import numpy as np

from .core import CoherentAmplitudes, CouplerConfig, Couplings, Detunings
from .kernels import antistokes_zeno_kernel, stokes_zeno_kernel
from .observables import all_terms, expectations_from_terms


class ZenoClass(enum.Enum):
    QZE = "QZE"
    QAZE = "QAZE"
    NEITHER = "Neither"

    def __str__(self):
        return self.value


class Method(enum.Enum):
    CLOSED_FORM = "ClosedForm"
    DIFFERENCE = "Difference"
    RESONANT = "Resonant"
    PHONON_EXCITATION = "PhononExcitation"
    ORACLE = "Oracle"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, name) -> "Method":
        if isinstance(name, cls):
            return name
        key = str(name).replace("-", "").replace("_", "").lower()
        for m in cls:
            if m.value.lower() == key:
                return m
        raise ValueError(f"unknown method {name!r}; choose from {[m.value for m in cls]}")


class Reduction(enum.Enum):
    RAMAN = "raman"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ScalingCoefficients:
    c_b: float
    c_d: float


@dataclass(frozen=True)
class ZenoResult:
    z_b: float
    z_c: float
    z_d: float
    method: Method
    tol_class: float
    flags: tuple = ()

    @property
    def class_b(self):
        return classify(self.z_b, self.tol_class)

    @property
    def class_c(self):
        return classify(self.z_c, self.tol_class)

    @property
    def class_d(self):
        return classify(self.z_d, self.tol_class)

    def value(self, mode: str):
        return {"b": self.z_b, "c": self.z_c, "d": self.z_d}[mode]

    def classification(self, mode: str):
        return classify(self.value(mode), self.tol_class)


def classify(value, tol_class):
    """QZE below ``-tol_class``, QAZE above ``+tol_class``, Neither in between.

    Scalars give a :class:`ZenoClass`; arrays give an object array of them.
    """
    if np.any(np.asarray(tol_class) <= 0):
        raise ValueError("tol_class must be positive")
    v = np.asarray(value, dtype=float)
    out = np.where(v < -tol_class, ZenoClass.QZE,
                   np.where(v > tol_class, ZenoClass.QAZE, ZenoClass.NEITHER))
    return out[()] if out.ndim == 0 else out


def _pump_factor(amps: CoherentAmplitudes):
    return np.abs(amps.alpha1) ** 2 + np.abs(amps.alpha2) ** 2 + 1.0


def scaling_coefficients(c: Couplings, amps: CoherentAmplitudes) -> ScalingCoefficients:
    p = _pump_factor(amps)
    a, g_, b, d = (np.abs(x) for x in (amps.alpha, amps.gamma, amps.beta, amps.delta))
    return ScalingCoefficients(
        c_b=2.0 * c.Gamma * c.g * p * a * b * g_,
        c_d=2.0 * c.Gamma * c.chi * p * a * g_ * d,
    )


def default_tol_class(config: CouplerConfig, z):
    s = scaling_coefficients(config.couplings, config.amps)
    z2 = np.asarray(z, dtype=float) ** 2
    return 1e-9 * np.maximum(1.0, np.maximum(s.c_b * z2, s.c_d * z2))


def _result(zb, zd, method, config, z, tol_class, flags=(), zc=None):
    if tol_class is None:
        tol_class = default_tol_class(config, z)
    zc = zb - zd if zc is None else zc
    return ZenoResult(_scalar(zb), _scalar(zc), _scalar(zd), method, _scalar(tol_class), tuple(flags))


def _scalar(x):
    return float(x) if np.ndim(x) == 0 else x


def _phase_factors(amps: CoherentAmplitudes):
    """Unit-free phase carriers: |.|-weighted e^{-i theta2} and e^{+i theta1}.

    conj(alpha) beta gamma = |alpha beta gamma| e^{-i theta2} and
    alpha gamma conj(delta) = |alpha gamma delta| e^{-i theta1}; using the
    products directly keeps the result exactly zero when an amplitude vanishes.
    """
    a, b, g_, d = (np.asarray(x, dtype=complex) for x in
                   (amps.alpha, amps.beta, amps.gamma, amps.delta))
    return np.conj(a) * b * g_, np.conj(a) * np.conj(g_) * d


def _closed(config: CouplerConfig, det: Detunings, z):
    c = config.couplings
    p = _pump_factor(config.amps)
    sb, sd = _phase_factors(config.amps)
    zb = 2.0 * c.Gamma * c.g * p * np.real(sb * stokes_zeno_kernel(det.dS, det.dD, z))
    zd = 2.0 * c.Gamma * c.chi * p * np.real(sd * antistokes_zeno_kernel(det.dA, det.dD, z))
    return zb, zd


def zeno_closed(config: CouplerConfig, z, tol_class=None) -> ZenoResult:
    """Z_b = C_b Re[e^{-i theta2} F_b(dS, dD, z)], Z_d = C_d Re[e^{i theta1} F_d(dA, dD, z)], Z_c = Z_b - Z_d."""
    zb, zd = _closed(config, config.detunings(), z)
    return _result(zb, zd, Method.CLOSED_FORM, config, z, tol_class, config.flags())


def zeno_difference(config: CouplerConfig, z, tol_class=None) -> ZenoResult:
    """Mean numbers with the probe coupling minus those with Gamma = 0.

    Both sides are full evaluations; they are subtracted label by label so the
    large probe-independent summands cancel exactly instead of through
    rounding of the totals.
    """
    with_probe = all_terms(config, z)
    without = all_terms(config.with_couplings(Gamma=0.0), z)
    flags = list(config.flags())
    for terms in (with_probe, without):
        for f in expectations_from_terms(terms).flags:
            if f not in flags:
                flags.append(f)
    diff = {}
    for mode in ("b", "c", "d"):
        total = 0.0
        for label, t in with_probe[mode].items():
            total = total + np.real(t - without[mode][label])
        diff[mode] = total
    return _result(diff["b"], diff["d"], Method.DIFFERENCE, config, z, tol_class, flags, zc=diff["c"])


def zeno_resonant(config: CouplerConfig, z, tol_class=None) -> ZenoResult:
    """Resonant limit; the configured detunings are ignored."""
    s = scaling_coefficients(config.couplings, config.amps)
    sb, sd = _phase_factors(config.amps)
    # Re[e^{-i theta2}] = cos theta2, Re[e^{i theta1}] = cos theta1
    cos2 = _unit_real(sb)
    cos1 = _unit_real(sd)
    z2 = np.asarray(z, dtype=float) ** 2
    zb = -0.5 * s.c_b * z2 * cos2
    zd = -0.5 * s.c_d * z2 * cos1
    # Z_c = -(C_b cos theta2 - C_d cos theta1) z^2/2, formed as zb - zd
    return _result(zb, zd, Method.RESONANT, config, z, tol_class, config.flags())


def _unit_real(w):
    mag = np.abs(w)
    with np.errstate(invalid="ignore", divide="ignore"):
        return np.where(mag > 0, np.real(w) / np.where(mag > 0, mag, 1.0), 0.0)


def zeno_phonon_excitation(config: CouplerConfig, z, tol_class=None) -> ZenoResult:
    """Phonon-excitation condition dS = dD = -dA = Delta, Delta taken from the config's dD.

    Evaluated by specialising the closed forms, which gives
    Z_b = -C_b z^2/2 sinc^2(Delta z/2) cos(Delta z - theta2) and
    Z_d = -C_d z^2/2 sinc^2(Delta z/2) cos(Delta z + theta1).
    """
    delta = config.detunings().dD
    det = Detunings.from_primary(delta, -np.asarray(delta), delta)
    zb, zd = _closed(config, det, z)
    return _result(zb, zd, Method.PHONON_EXCITATION, config, z, tol_class, config.flags())


def evaluate(config: CouplerConfig, z, method=Method.CLOSED_FORM, tol_class=None) -> ZenoResult:
    method = Method.parse(method)
    if method is Method.ORACLE:
        raise ValueError("use oracle.oracle_zeno for the Fock-space oracle")
    fn = {
        Method.CLOSED_FORM: zeno_closed,
        Method.DIFFERENCE: zeno_difference,
        Method.RESONANT: zeno_resonant,
        Method.PHONON_EXCITATION: zeno_phonon_excitation,
    }[method]
    return fn(config, z, tol_class)


def reduce(config: CouplerConfig, variant) -> CouplerConfig:
    """Raman (alpha2 = 0) or degenerate hyper-Raman (alpha2 = alpha1) reduction."""
    if not isinstance(variant, Reduction):
        key = str(variant).lower().replace("-", "").replace("_", "")
        aliases = {"raman": Reduction.RAMAN, "degenerate": Reduction.DEGENERATE,
                   "degeneratehyperraman": Reduction.DEGENERATE}
        try:
            variant = aliases[key]
        except KeyError:
            raise ValueError(f"unknown reduction {variant!r}") from None
    a1 = config.amps.alpha1
    new_a2 = 0j if variant is Reduction.RAMAN else a1
    return replace(config, amps=replace(config.amps, alpha2=new_a2))
