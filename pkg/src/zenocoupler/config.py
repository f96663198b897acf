"""Run-configuration documents: loading, schema validation, construction of domain objects.

A document is plain JSON data (see ``config_schema.json``).  Amplitudes are
given as ``{mag, phase}`` pairs; optional ``detunings`` and
``phase_mismatch`` sections are applied on top of the frequencies and
amplitudes, in that order.
"""

from __future__ import annotations

import copy
import json
from importlib import resources

import jsonschema

from .core import (
    RESONANT_FREQUENCIES,
    CoherentAmplitudes,
    CouplerConfig,
    Couplings,
    Frequencies,
)
from .errors import ConfigError, ZeroAmplitudePhase
from .oracle import FockConfig
from .zeno import Method

SCHEMA_VERSION = 1
AMP_NAMES = ("alpha", "alpha1", "alpha2", "beta", "gamma", "delta")
DETUNING_KEYS = ("dS", "dA", "dD")
THETA_KEYS = ("theta1", "theta2")


def _load_schema():
    text = resources.files(__package__).joinpath("config_schema.json").read_text()
    return json.loads(text)


SCHEMA = _load_schema()
_VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)


def _path(parts) -> str:
    return ".".join(str(p) for p in parts) or "<root>"


def validate_document(doc) -> dict:
    """Raise :class:`ConfigError` (with the offending field path) if ``doc`` is invalid."""
    err = jsonschema.exceptions.best_match(_VALIDATOR.iter_errors(doc))
    if err is not None:
        raise ConfigError(err.message, _path(err.absolute_path))
    for i, ax in enumerate(doc.get("sweep", {}).get("axes", [])):
        if ax["max"] < ax["min"]:
            raise ConfigError("axis max must be >= min", f"sweep.axes.{i}.max")
        if ax["name"] == "z" and ax["min"] < 0:
            raise ConfigError("z axis must be non-negative", f"sweep.axes.{i}.min")
    names = [ax["name"] for ax in doc.get("sweep", {}).get("axes", [])]
    touched = [set(n.split("=")) for n in names]
    for i in range(len(touched)):
        for j in range(i):
            if touched[i] & touched[j]:
                raise ConfigError(f"axes {names[j]!r} and {names[i]!r} overlap", f"sweep.axes.{i}.name")
    return doc


def load_document(path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"not valid JSON: {exc}", "<root>") from None
    return validate_document(doc)


def dump_document(doc, path=None) -> str:
    text = json.dumps(doc, indent=2, sort_keys=False) + "\n"
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def build_config(doc, overrides=None):
    """Return ``(CouplerConfig, z)`` for ``doc`` with optional point overrides.

    ``overrides`` may set any of dS, dA, dD, theta1, theta2, z.
    """
    overrides = dict(overrides or {})
    freqs = Frequencies(**doc["frequencies"]) if "frequencies" in doc else RESONANT_FREQUENCIES
    det = dict(doc.get("detunings", {}))
    det.update({k: overrides[k] for k in DETUNING_KEYS if k in overrides})
    c = doc["couplings"]
    couplings = Couplings(g=c["g"], chi=c["chi"], Gamma=c["Gamma"])
    amps_doc = doc["amplitudes"]
    amps = CoherentAmplitudes.from_polar(
        [amps_doc[n]["mag"] for n in AMP_NAMES],
        [amps_doc[n].get("phase", 0.0) for n in AMP_NAMES],
    )
    config = CouplerConfig(freqs, couplings, amps)
    if det:
        config = config.with_detunings(det.get("dS"), det.get("dA"), det.get("dD"))
    pm = dict(doc.get("phase_mismatch", {}))
    pm.update({k: overrides[k] for k in THETA_KEYS if k in overrides})
    if pm:
        try:
            config = config.with_phase_mismatch(pm.get("theta1"), pm.get("theta2"))
        except ZeroAmplitudePhase as exc:
            raise ConfigError(str(exc), "phase_mismatch") from None
    z = overrides.get("z", doc["z"])
    return config, z


def method_of(doc) -> Method:
    return Method.parse(doc.get("method", "ClosedForm"))


def fock_of(doc) -> FockConfig:
    o = doc.get("oracle", {})
    kw = {}
    if "cutoffs" in o:
        kw["cutoffs"] = tuple(o["cutoffs"])
    for k in ("rtol", "leakage_tol", "max_dimension"):
        if k in o:
            kw[k] = o[k]
    return FockConfig(**kw)


def with_overrides(doc, **fields) -> dict:
    """Deep copy of ``doc`` with point values written into their sections."""
    new = copy.deepcopy(doc)
    for k, v in fields.items():
        if v is None:
            continue
        if k in DETUNING_KEYS:
            new.setdefault("detunings", {})[k] = v
        elif k in THETA_KEYS:
            new.setdefault("phase_mismatch", {})[k] = v
        elif k in ("z", "method"):
            new[k] = v
        else:
            raise KeyError(k)
    return validate_document(new)
