from dataclasses import replace

import numpy as np
import pytest

from conftest import fig2_config, random_config
from zenocoupler.coefficients import antistokes_coeffs, phonon_coeffs, stokes_coeffs
from zenocoupler.core import (
    RESONANT_FREQUENCIES,
    CoherentAmplitudes,
    CouplerConfig,
    Couplings,
)
from zenocoupler.observables import (
    GAMMA_TERMS,
    all_terms,
    mean_antistokes,
    mean_phonon,
    mean_stokes,
    number_expectations,
)


def test_zero_length_gives_seeds(rng):
    for _ in range(20):
        cfg = random_config(rng)
        n = number_expectations(cfg, 0.0)
        a = cfg.amps
        assert n.n_b == np.abs(a.beta) ** 2
        assert n.n_c == np.abs(a.gamma) ** 2
        assert n.n_d == np.abs(a.delta) ** 2


def test_spontaneous_case():
    amps = CoherentAmplitudes.from_polar((2.0, 1.5, 1.2, 0, 0, 0), (0.3, 0.1, -0.4, 0, 0, 0))
    cfg = CouplerConfig(RESONANT_FREQUENCIES, Couplings(1.0, 0.5, 2.0), amps).with_detunings(0.2, -0.1, 0.3)
    z = 0.4
    d = cfg.detunings()
    j = stokes_coeffs(cfg.couplings, d, cfg.freqs.omega_b, z)
    k = phonon_coeffs(cfg.couplings, d, cfg.freqs.omega_c, z)
    pumps = abs(amps.alpha1) ** 2 * abs(amps.alpha2) ** 2
    assert mean_stokes(amps, j) == pytest.approx(abs(j.j2) ** 2 * pumps, rel=1e-14)
    assert mean_phonon(amps, k) == pytest.approx(abs(k.k2) ** 2 * pumps, rel=1e-14)
    l = antistokes_coeffs(cfg.couplings, d, cfg.freqs.omega_d, z)
    assert mean_antistokes(amps, l) == 0.0


def test_no_coupling_means_constant(rng):
    for _ in range(10):
        cfg = random_config(rng).with_couplings(g=0.0, chi=0.0, Gamma=0.0)
        for z in (0.0, 0.3, 5.0):
            n = number_expectations(cfg, z)
            a = cfg.amps
            assert (n.n_b, n.n_c, n.n_d) == (np.abs(a.beta) ** 2, np.abs(a.gamma) ** 2, np.abs(a.delta) ** 2)


def test_imaginary_residual_bound(rng):
    # 10^4 configurations evaluated in vectorised batches
    worst = 0.0
    for _ in range(100):
        mags = rng.uniform(0, 12, (6, 100))
        phases = rng.uniform(-np.pi, np.pi, (6, 100))
        amps = CoherentAmplitudes.from_polar(mags, phases)
        cfg = CouplerConfig(RESONANT_FREQUENCIES, Couplings(1.0, rng.uniform(0, 20), rng.uniform(0, 200)), amps)
        cfg = cfg.with_detunings(*rng.uniform(-0.1, 0.1, (3, 100)))
        z = rng.uniform(0, 1, 100)
        terms = all_terms(cfg, z)
        for mode in "bcd":
            total = sum(terms[mode].values())
            worst = max(worst, np.max(np.abs(total.imag) / np.maximum(1.0, np.abs(total.real))))
    assert worst <= 1e-10


def test_terms_sum_to_mean(rng):
    cfg = random_config(rng)
    terms = all_terms(cfg, 0.3)
    n = number_expectations(cfg, 0.3)
    assert sum(terms["b"].values()).real == n.n_b
    assert len(terms["b"]) == 11 and len(terms["c"]) == 16 and len(terms["d"]) == 11


def test_gamma_terms_are_the_only_probe_dependence(rng):
    cfg = random_config(rng)
    on = all_terms(cfg, 0.5)
    off = all_terms(cfg.with_couplings(Gamma=0.0), 0.5)
    for mode in "bcd":
        for label in on[mode]:
            if label in GAMMA_TERMS[mode]:
                assert np.all(off[mode][label] == 0)
            else:
                assert np.all(on[mode][label] == off[mode][label])


def test_symmetry_rephasing_invariance(rng):
    """Means are invariant under the rephasing generated by N_c + N_d - N_b."""
    for _ in range(50):
        cfg = random_config(rng, mag_max=3.0, det_max=1.0)
        phi = rng.uniform(-np.pi, np.pi)
        a = cfg.amps
        rot = replace(a, beta=a.beta * np.exp(-1j * phi), gamma=a.gamma * np.exp(1j * phi),
                      delta=a.delta * np.exp(1j * phi))
        z = rng.uniform(0, 1)
        n0 = number_expectations(cfg, z)
        n1 = number_expectations(replace(cfg, amps=rot), z)
        for x, y in ((n0.n_b, n1.n_b), (n0.n_c, n1.n_c), (n0.n_d, n1.n_d)):
            assert abs(x - y) <= 1e-12 * max(1.0, abs(x))


def test_theta_preserving_rephasing_is_not_a_symmetry_in_general():
    # rotating alpha, beta, gamma, delta with theta1, theta2 fixed changes j2-type cross terms
    cfg = fig2_config(0.01, 0.01, 0.001)
    pb, pc = 0.7, -0.3
    a = cfg.amps
    rot = replace(a, alpha=a.alpha * np.exp(1j * (pb + pc)), beta=a.beta * np.exp(1j * pb),
                  gamma=a.gamma * np.exp(1j * pc), delta=a.delta * np.exp(1j * (pb + 2 * pc)))
    n0 = number_expectations(cfg, 0.1)
    n1 = number_expectations(replace(cfg, amps=rot), 0.1)
    assert abs(n0.n_b - n1.n_b) > 1e-6


def test_perturbative_conservation_is_third_order(rng):
    for _ in range(5):
        mags = rng.uniform(0.1, 0.5, 6)
        cfg = CouplerConfig(RESONANT_FREQUENCIES, Couplings(1.0, 0.7, 1.3),
                            CoherentAmplitudes.from_polar(mags, rng.uniform(-3, 3, 6)))
        cfg = cfg.with_detunings(*rng.uniform(-1, 1, 3))

        def drift(z):
            n, n0 = number_expectations(cfg, z), number_expectations(cfg, 0.0)
            return (n.n_c + n.n_d - n.n_b) - (n0.n_c + n0.n_d - n0.n_b)

        z = 0.05 / 1.3
        d1, d2 = drift(z), drift(z / 2)
        assert abs(d1) <= 10 * (1.3 * z) ** 3 * (1 + mags.max() ** 2) ** 2
        assert 5 < d1 / d2 < 11


def test_negative_mean_is_flagged_not_clamped():
    n = number_expectations(fig2_config(), 0.1)
    assert n.n_d < 0
    assert "perturbation_breakdown" in n.flags


def test_nonphysical_flag_propagates():
    cfg = fig2_config(dS=-10.0)
    assert "nonphysical_frequency" in number_expectations(cfg, 0.1).flags
