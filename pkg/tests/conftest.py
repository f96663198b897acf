import sys
from pathlib import Path

import numpy as np
import pytest

from zenocoupler.core import (
    RESONANT_FREQUENCIES,
    CoherentAmplitudes,
    CouplerConfig,
    Couplings,
)

sys.path.insert(0, str(Path(__file__).parent))

FIG2_MAGS = (11.0, 10.0, 9.5, 8.0, 0.01, 1.0)
DESK_MAGS = (0.4, 0.4, 0.35, 0.3, 0.2, 0.2)


def fig2_config(dS=0.0, dA=0.0, dD=0.0, phases=(0,) * 6):
    cfg = CouplerConfig(RESONANT_FREQUENCIES, Couplings(1.0, 10.0, 100.0),
                        CoherentAmplitudes.from_polar(FIG2_MAGS, phases))
    return cfg.with_detunings(dS, dA, dD)


def desk_config(coupling=1.0, phases=(0,) * 6):
    return CouplerConfig(RESONANT_FREQUENCIES, Couplings(coupling, coupling, coupling),
                         CoherentAmplitudes.from_polar(DESK_MAGS, phases))


def random_config(rng, mag_max=12.0, det_max=0.1, zero=()):
    """Random stimulated configuration; amplitudes named in ``zero`` are set to 0."""
    mags = rng.uniform(0.0, mag_max, 6)
    for i, name in enumerate(("alpha", "alpha1", "alpha2", "beta", "gamma", "delta")):
        if name in zero:
            mags[i] = 0.0
    phases = rng.uniform(-np.pi, np.pi, 6)
    couplings = Couplings(1.0, rng.uniform(0, 20), rng.uniform(0, 200))
    cfg = CouplerConfig(RESONANT_FREQUENCIES, couplings, CoherentAmplitudes.from_polar(mags, phases))
    return cfg.with_detunings(*rng.uniform(-det_max, det_max, 3))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def fig2():
    return fig2_config()


@pytest.fixture
def desk():
    return desk_config()
