"""Zeno and anti-Zeno parameters of a probe-coupled non-degenerate hyper-Raman coupler.

Second-order perturbative closed forms with singularity-stable kernels,
cross-checked against exact propagation in a truncated Fock space.
"""

from .core import (
    MODES,
    RESONANT_FREQUENCIES,
    CoherentAmplitudes,
    CouplerConfig,
    Couplings,
    Detunings,
    Frequencies,
    PhaseMismatch,
    detunings,
    phase_mismatches,
    with_detunings,
    with_phase_mismatch,
)
from .coefficients import antistokes_coeffs, phonon_coeffs, stokes_coeffs
from .observables import (
    NumberExpectations,
    mean_antistokes,
    mean_phonon,
    mean_stokes,
    number_expectations,
)
from .zeno import (
    Method,
    Reduction,
    ScalingCoefficients,
    ZenoClass,
    ZenoResult,
    classify,
    reduce,
    scaling_coefficients,
    zeno_closed,
    zeno_difference,
    zeno_phonon_excitation,
    zeno_resonant,
)

__version__ = "0.1.0"

__all__ = [
    "MODES", "RESONANT_FREQUENCIES", "CoherentAmplitudes", "CouplerConfig", "Couplings",
    "Detunings", "Frequencies", "PhaseMismatch", "detunings", "phase_mismatches",
    "with_detunings", "with_phase_mismatch", "antistokes_coeffs", "phonon_coeffs",
    "stokes_coeffs", "NumberExpectations", "mean_antistokes", "mean_phonon", "mean_stokes",
    "number_expectations", "Method", "Reduction", "ScalingCoefficients", "ZenoClass",
    "ZenoResult", "classify", "reduce", "scaling_coefficients", "zeno_closed",
    "zeno_difference", "zeno_phonon_excitation", "zeno_resonant", "__version__",
]
