"""Configuration documents reproducing the published figure parameter sets, plus a desk-scale oracle case."""

from __future__ import annotations

import copy
import math

from .errors import UnknownPreset

_TWO_PI = 2.0 * math.pi

_FIG_BASE = {
    "schema_version": 1,
    "couplings": {"g": 1.0, "chi": 10.0, "Gamma": 100.0},
    "amplitudes": {
        "alpha": {"mag": 11.0, "phase": 0.0},
        "alpha1": {"mag": 10.0, "phase": 0.0},
        "alpha2": {"mag": 9.5, "phase": 0.0},
        "beta": {"mag": 8.0, "phase": 0.0},
        "gamma": {"mag": 0.01, "phase": 0.0},
        "delta": {"mag": 1.0, "phase": 0.0},
    },
    "phase_mismatch": {"theta1": 0.0, "theta2": 0.0},
    "method": "ClosedForm",
}

_Z_AXIS = {"name": "z", "min": 0.001, "max": 0.1, "count": 100}
_THETA = {"min": 0.0, "max": _TWO_PI, "count": 101}
_DET = {"min": -100.0, "max": 100.0, "count": 101}

Z_RANGE_NOTE = "assumption: the z axis range 0.001..0.1 is not printed; anchored on gz=0.1"


def _fig(detunings, z, axes, modes, notes):
    doc = copy.deepcopy(_FIG_BASE)
    doc["detunings"] = dict(detunings)
    doc["z"] = z
    doc["sweep"] = {"axes": axes, "modes": modes}
    doc["notes"] = notes
    return doc


def _presets():
    fig2_det = {"dS": 0.01, "dA": 0.01, "dD": 0.001}
    fig3_det = {"dS": 0.0, "dA": 0.0, "dD": 0.001}
    fig4_det = {"dS": 0.0, "dA": 0.0, "dD": 0.0}
    det_range = "assumption: detuning axis range is not printed; chosen to cover the plotted sign structure"
    return {
        "fig2a": _fig(fig2_det, 0.1, [_Z_AXIS, {"name": "theta2", **_THETA}], ["b"],
                      ["Stokes Zeno parameter vs theta2 and z", Z_RANGE_NOTE]),
        "fig2b": _fig(fig2_det, 0.1, [_Z_AXIS, {"name": "theta1", **_THETA}], ["d"],
                      ["anti-Stokes Zeno parameter vs theta1 and z", Z_RANGE_NOTE]),
        "fig2c": _fig(fig2_det, 0.1, [_Z_AXIS, {"name": "theta1=theta2", **_THETA}], ["c"],
                      ["phonon Zeno parameter vs theta1=theta2 and z", Z_RANGE_NOTE]),
        "fig2d": _fig(fig2_det, 0.1, [{"name": "theta1", **_THETA}, {"name": "theta2", **_THETA}], ["c"],
                      ["phonon Zeno parameter vs theta1 and theta2",
                       "assumption: panel (d) read as the theta1 x theta2 map at gz=0.1"]),
        "fig3a": _fig(fig3_det, 0.1, [_Z_AXIS, {"name": "dS=dA", "min": 0.0, "max": 100.0, "count": 101}], ["b"],
                      ["Stokes Zeno parameter vs dS=dA and z", Z_RANGE_NOTE, det_range]),
        "fig3b": _fig(fig3_det, 0.1, [_Z_AXIS, {"name": "dS=dA", "min": 0.0, "max": 100.0, "count": 101}], ["d"],
                      ["anti-Stokes Zeno parameter vs dS=dA and z", Z_RANGE_NOTE, det_range]),
        "fig3c": _fig(fig3_det, 0.1, [_Z_AXIS, {"name": "dS=dA", "min": 0.0, "max": 100.0, "count": 101}], ["c"],
                      ["phonon Zeno parameter vs dS=dA and z", Z_RANGE_NOTE, det_range]),
        "fig4a": _fig(fig4_det, 0.1, [{"name": "dD", **_DET}, {"name": "dS", **_DET}], ["b"],
                      ["Stokes Zeno parameter vs dS and dD at gz=0.1", det_range]),
        "fig4b": _fig(fig4_det, 0.1, [{"name": "dD", **_DET}, {"name": "dS=dA", **_DET}], ["d"],
                      ["anti-Stokes Zeno parameter vs dA=dS and dD at gz=0.1", det_range]),
        "fig4c": _fig(fig4_det, 0.1, [{"name": "dD", **_DET}, {"name": "dS=dA", **_DET}], ["c"],
                      ["phonon Zeno parameter vs dA=dS and dD at gz=0.1", det_range]),
        "fig4d": _fig({"dS": 0.0, "dA": 0.0, "dD": 0.001}, 0.1,
                      [{"name": "dA", **_DET}, {"name": "dS", **_DET}], ["c"],
                      ["phonon Zeno parameter vs dS and dA at dD=1e-3, gz=0.1", det_range]),
        "desk": {
            "schema_version": 1,
            "frequencies": {"omega_p": 2.0, "omega_a1": 1.0, "omega_a2": 1.0,
                            "omega_b": 1.5, "omega_c": 0.5, "omega_d": 2.5},
            "couplings": {"g": 1.0, "chi": 1.0, "Gamma": 1.0},
            "amplitudes": {
                "alpha": {"mag": 0.4, "phase": 0.0},
                "alpha1": {"mag": 0.4, "phase": 0.0},
                "alpha2": {"mag": 0.35, "phase": 0.0},
                "beta": {"mag": 0.3, "phase": 0.0},
                "gamma": {"mag": 0.2, "phase": 0.0},
                "delta": {"mag": 0.2, "phase": 0.0},
            },
            "z": 0.05,
            "method": "ClosedForm",
            "oracle": {"cutoffs": [4, 4, 4, 4, 4, 4], "rtol": 1e-10, "leakage_tol": 1e-4},
            "notes": "desk-scale case small enough for the Fock-space oracle",
        },
    }


PRESET_NAMES = tuple(_presets())


def preset_document(name: str) -> dict:
    try:
        return _presets()[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; choose from {', '.join(PRESET_NAMES)}") from None
