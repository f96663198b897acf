"""Parameter sweeps, crossover detection and table output."""

from __future__ import annotations

import csv
import io
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

import numpy as np

from .config import build_config, fock_of, method_of, validate_document
from .errors import BudgetExceeded, ConfigError, ZenoCouplerError
from .presets import preset_document
from .zeno import Method, ZenoResult, evaluate

ORACLE_GRID_LIMIT = 1000
MODE_ORDER = ("b", "c", "d")


@dataclass(frozen=True)
class Axis:
    name: str
    min: float
    max: float
    count: int

    def grid(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.count)

    def keys(self) -> tuple:
        """Config fields driven by this axis (two for linked axes)."""
        return tuple(self.name.split("="))


@dataclass(frozen=True)
class SweepSpec:
    document: dict
    axes: tuple
    modes: tuple = MODE_ORDER
    method: Method = Method.CLOSED_FORM

    @property
    def shape(self):
        return tuple(a.count for a in self.axes)

    @property
    def size(self) -> int:
        return int(np.prod(self.shape)) if self.axes else 1


@dataclass(frozen=True)
class CrossoverPoint:
    coordinates: tuple
    mode: str
    bracket_width: float
    bracket: tuple = ()


@dataclass
class SweepTable:
    columns: list
    rows: list = field(default_factory=list)
    document: dict = field(default_factory=dict)


def spec_from_document(doc, method=None) -> SweepSpec:
    doc = validate_document(doc)
    sweep = doc.get("sweep", {})
    axes = tuple(Axis(a["name"], float(a["min"]), float(a["max"]), int(a["count"]))
                 for a in sweep.get("axes", []))
    modes = tuple(m for m in MODE_ORDER if m in sweep.get("modes", MODE_ORDER))
    method = method_of(doc) if method is None else Method.parse(method)
    spec = SweepSpec(doc, axes, modes, method)
    if method is Method.ORACLE and spec.size > ORACLE_GRID_LIMIT:
        raise BudgetExceeded(f"oracle sweep of {spec.size} points exceeds the {ORACLE_GRID_LIMIT}-point guard")
    return spec


def figure_preset(name: str) -> SweepSpec:
    return spec_from_document(preset_document(name))


def grid_points(spec: SweepSpec):
    """Axis-value tuples in row order (outer axis slowest, ascending)."""
    grids = [a.grid() for a in spec.axes]
    return list(itertools.product(*grids))


def point_overrides(axes, values) -> dict:
    out = {}
    for ax, v in zip(axes, values):
        for key in ax.keys():
            out[key] = float(v)
    return out


def evaluate_point(doc, overrides, method) -> ZenoResult:
    config, z = build_config(doc, overrides)
    method = Method.parse(method)
    if method is Method.ORACLE:
        from .oracle import oracle_zeno

        return oracle_zeno(config, z, fock_of(doc))
    return evaluate(config, z, method)


def _fmt(x) -> str:
    # shortest repr that round-trips a double
    return repr(float(x))


def _row(spec, values):
    row = {a.name: _fmt(v) for a, v in zip(spec.axes, values)}
    try:
        res = evaluate_point(spec.document, point_overrides(spec.axes, values), spec.method)
    except (ArithmeticError, ValueError, RuntimeError, ZenoCouplerError) as exc:
        for m in spec.modes:
            row[f"Z_{m}"] = "nan"
        for m in spec.modes:
            row[f"class_{m}"] = ""
        row.update(method=str(spec.method), flags="", error=f"{type(exc).__name__}: {exc}")
        return row
    for m in spec.modes:
        row[f"Z_{m}"] = _fmt(res.value(m))
    for m in spec.modes:
        row[f"class_{m}"] = str(res.classification(m))
    row.update(method=str(res.method), flags="|".join(res.flags), error="")
    return row


def _row_task(args):
    spec, values = args
    return _row(spec, values)


def columns_for(spec: SweepSpec) -> list:
    return ([a.name for a in spec.axes] + [f"Z_{m}" for m in spec.modes]
            + [f"class_{m}" for m in spec.modes] + ["method", "flags", "error"])


def run_sweep(spec: SweepSpec, threads: int = 1) -> SweepTable:
    """Evaluate every grid point; rows come back in grid order regardless of ``threads``."""
    points = grid_points(spec)
    if threads and threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            chunk = max(1, len(points) // (4 * threads))
            rows = list(pool.map(_row_task, ((spec, p) for p in points), chunksize=chunk))
    else:
        rows = [_row(spec, p) for p in points]
    return SweepTable(columns_for(spec), rows, spec.document)


def table_to_csv(table: SweepTable) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=table.columns, lineterminator="\n")
    w.writeheader()
    w.writerows(table.rows)
    return buf.getvalue()


def table_to_json(table: SweepTable, manifest_extra=None) -> str:
    from . import __version__

    manifest = {
        "code_version": __version__,
        "generated_utc": datetime.now(timezone.utc).isoformat(),
        "config": table.document,
    }
    manifest.update(manifest_extra or {})
    rows = [{k: (v if k in _TEXT_COLS or k.startswith("class_") else _num(v)) for k, v in r.items()}
            for r in table.rows]
    return json.dumps({"manifest": manifest, "columns": table.columns, "rows": rows}, indent=2) + "\n"


_TEXT_COLS = {"method", "flags", "error"}


def _num(v):
    x = float(v)
    return x if np.isfinite(x) else None


def write_table(table: SweepTable, path=None, fmt="csv") -> str:
    text = table_to_csv(table) if fmt == "csv" else table_to_json(table)
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text


def _z_value(spec, outer_values, inner_value, mode):
    vals = tuple(outer_values) + (inner_value,)
    res = evaluate_point(spec.document, point_overrides(spec.axes, vals), spec.method)
    return res.value(mode), res.tol_class


def find_crossovers(spec: SweepSpec, mode: str, tol_axis: float, max_iter: int = 200) -> list:
    """Sign changes of Z_mode along the innermost axis, refined by bisection.

    Grid points classified Neither (|Z| <= tol_class) are skipped when
    looking for brackets, so floating-point noise around an identically
    vanishing Z cannot produce roots.  An empty list means no sign change.
    """
    if not spec.axes:
        raise ConfigError("crossover search needs at least one sweep axis", "sweep.axes")
    if mode not in MODE_ORDER:
        raise ValueError(f"mode must be one of {MODE_ORDER}")
    if tol_axis <= 0:
        raise ValueError("tol_axis must be positive")
    outer_axes, inner = spec.axes[:-1], spec.axes[-1]
    inner_grid = inner.grid()
    found = []
    for outer in itertools.product(*(a.grid() for a in outer_axes)):
        signed = []
        for x in inner_grid:
            zval, tol = _z_value(spec, outer, x, mode)
            if np.isfinite(zval) and abs(zval) > tol:
                signed.append((float(x), np.sign(zval)))
        for (x0, s0), (x1, s1) in zip(signed, signed[1:]):
            if s0 == s1:
                continue
            lo, hi = x0, x1
            for _ in range(max_iter):
                if hi - lo <= tol_axis:
                    break
                mid = 0.5 * (lo + hi)
                zm, _ = _z_value(spec, outer, mid, mode)
                if zm == 0:
                    lo = hi = mid
                    break
                if np.sign(zm) == s0:
                    lo = mid
                else:
                    hi = mid
            found.append(CrossoverPoint(tuple(float(o) for o in outer) + (0.5 * (lo + hi),),
                                        mode, hi - lo, (lo, hi)))
    return found
