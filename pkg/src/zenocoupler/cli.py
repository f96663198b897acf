"""Command-line entry point: ``zenocoupler {eval,sweep,crossover,preset,oracle-compare}``.

Failures print one JSON object ``{"error": ..., "message": ..., "path": ...}``
on stderr and exit with status 2 (bad input) or 1 (evaluation failure or
oracle disagreement).
"""

from __future__ import annotations

import argparse
import json
import sys

from .config import build_config, dump_document, fock_of, load_document, validate_document
from .core import MODES
from .errors import ConfigError, UnknownPreset, ZenoCouplerError
from .observables import number_expectations
from .presets import PRESET_NAMES, preset_document
from .sweep import (
    MODE_ORDER,
    evaluate_point,
    find_crossovers,
    run_sweep,
    spec_from_document,
    write_table,
)
from .zeno import Method, zeno_closed

METHOD_CHOICES = [m.value for m in Method]
POINT_KEYS = ("z", "theta1", "theta2", "dS", "dA", "dD")

# desk-scale agreement bound for oracle-compare
REL_TOL = 0.05
ABS_TOL = 1e-9


def _emit_error(kind, message, path="", code=1):
    sys.stderr.write(json.dumps({"error": kind, "message": message, "path": path}) + "\n")
    return code


def _document(args):
    if getattr(args, "config", None):
        return load_document(args.config)
    if getattr(args, "preset", None):
        return validate_document(preset_document(args.preset))
    raise ConfigError("either --config or --preset is required", "--config")


def _emit(text, out):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_common(p, with_point=False):
    src = p.add_mutually_exclusive_group()
    src.add_argument("--config", metavar="PATH", help="configuration document (JSON)")
    src.add_argument("--preset", choices=PRESET_NAMES, help="use a built-in preset instead of --config")
    p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")
    p.add_argument("--format", choices=("csv", "json"), default=None)
    p.add_argument("--method", choices=METHOD_CHOICES, default=None)
    p.add_argument("--seed", type=int, default=None, help="reserved; no stochastic components")
    if with_point:
        for k in POINT_KEYS:
            p.add_argument(f"--{k}", type=float, default=None, help=f"override {k}")


def _cmd_eval(args):
    doc = _document(args)
    method = args.method or doc.get("method", "ClosedForm")
    overrides = {k: getattr(args, k) for k in POINT_KEYS if getattr(args, k) is not None}
    res = evaluate_point(doc, overrides, method)
    fmt = args.format or "text"
    if fmt == "json":
        payload = {"method": str(res.method), "tol_class": res.tol_class, "flags": list(res.flags)}
        for m in MODE_ORDER:
            payload[f"Z_{m}"] = res.value(m)
            payload[f"class_{m}"] = str(res.classification(m))
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv":
        cols = [f"Z_{m}" for m in MODE_ORDER] + [f"class_{m}" for m in MODE_ORDER] + ["method", "flags"]
        vals = ([repr(float(res.value(m))) for m in MODE_ORDER]
                + [str(res.classification(m)) for m in MODE_ORDER] + [str(res.method), "|".join(res.flags)])
        text = ",".join(cols) + "\n" + ",".join(vals) + "\n"
    else:
        lines = [f"Z_{m}={res.value(m)!r} class_{m}={res.classification(m)}" for m in MODE_ORDER]
        lines.append(f"method={res.method}")
        if res.flags:
            lines.append("flags=" + "|".join(res.flags))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def _cmd_sweep(args):
    doc = _document(args)
    spec = spec_from_document(doc, args.method)
    table = run_sweep(spec, threads=args.threads)
    fmt = args.format or doc.get("output", {}).get("format", "csv")
    out = args.out or doc.get("output", {}).get("path")
    text = write_table(table, None, fmt)
    _emit(text, out)
    failed = sum(1 for r in table.rows if r["error"])
    if failed:
        sys.stderr.write(json.dumps({"warning": "row_errors", "count": failed}) + "\n")
    return 0


def _cmd_crossover(args):
    doc = _document(args)
    spec = spec_from_document(doc, args.method)
    cross = doc.get("crossover", {})
    mode = args.mode or cross.get("mode") or spec.modes[0]
    tol = args.tol if args.tol is not None else cross.get("tol", 1e-6)
    points = find_crossovers(spec, mode, tol)
    names = [a.name for a in spec.axes]
    if (args.format or "csv") == "json":
        text = json.dumps([{"coordinates": dict(zip(names, p.coordinates)), "mode": p.mode,
                            "bracket": list(p.bracket), "bracket_width": p.bracket_width}
                           for p in points], indent=2) + "\n"
    else:
        rows = [",".join(names + ["mode", "bracket_lo", "bracket_hi", "bracket_width"])]
        for p in points:
            rows.append(",".join([repr(c) for c in p.coordinates] + [p.mode] +
                                 [repr(p.bracket[0]), repr(p.bracket[1]), repr(p.bracket_width)]))
        text = "\n".join(rows) + "\n"
    _emit(text, args.out)
    if not points:
        sys.stderr.write(json.dumps({"info": "no_sign_change", "mode": mode}) + "\n")
    return 0


def _cmd_preset(args):
    doc = preset_document(args.name)
    _emit(dump_document(doc), args.out)
    return 0


def _close(a, b):
    return abs(a - b) <= max(REL_TOL * abs(b), ABS_TOL)


def _cmd_oracle_compare(args):
    from .oracle import oracle_numbers, oracle_zeno

    doc = _document(args) if (args.config or args.preset) else preset_document("desk")
    config, z = build_config(doc)
    fock = fock_of(doc)
    pert = zeno_closed(config, z)
    orac = oracle_zeno(config, z, fock)
    n_pert = number_expectations(config, z).as_dict()
    n_orac = oracle_numbers(config, z, fock)
    rows = []
    ok = True
    for m in MODE_ORDER:
        for label, a, b in ((f"Z_{m}", pert.value(m), orac.value(m)), (f"N_{m}", n_pert[m], n_orac[m])):
            agree = _close(a, b)
            ok &= agree
            rows.append({"quantity": label, "perturbative": a, "oracle": b,
                         "abs_diff": abs(a - b), "agree": agree})
    extra = {f"N_{m}": n_orac[m] for m in MODES if m not in MODE_ORDER}
    if (args.format or "text") == "json":
        text = json.dumps({"z": z, "cutoffs": list(fock.cutoffs), "rows": rows,
                           "oracle_other_modes": extra, "agree": ok}, indent=2) + "\n"
    else:
        lines = [f"oracle-compare z={z!r} cutoffs={list(fock.cutoffs)} "
                 f"bound=max({REL_TOL:g} rel, {ABS_TOL:g} abs)"]
        lines.append(f"{'quantity':<8} {'perturbative':>24} {'oracle':>24} {'abs_diff':>12}  agree")
        for r in rows:
            lines.append(f"{r['quantity']:<8} {r['perturbative']:>24.16g} {r['oracle']:>24.16g} "
                         f"{r['abs_diff']:>12.3e}  {'yes' if r['agree'] else 'NO'}")
        lines.append("agreement: " + ("PASS" if ok else "FAIL"))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    if not ok:
        return _emit_error("Disagreement", "perturbative and oracle values differ beyond the bound")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zenocoupler", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="Zeno parameters at a single point")
    _add_common(p, with_point=True)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sweep", help="run the sweep described by a config")
    _add_common(p)
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("crossover", help="QZE/QAZE crossovers along the innermost axis")
    _add_common(p)
    p.add_argument("--mode", choices=MODE_ORDER, default=None)
    p.add_argument("--tol", type=float, default=None, help="bracket width (axis units)")
    p.set_defaults(func=_cmd_crossover)

    p = sub.add_parser("preset", help="emit a built-in preset as a config document")
    p.add_argument("name", choices=PRESET_NAMES)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=_cmd_preset)

    p = sub.add_parser("oracle-compare", help="perturbative vs exact Fock-space values (desk scale)")
    _add_common(p)
    p.set_defaults(func=_cmd_oracle_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        return _emit_error("ConfigError", str(exc), exc.path, code=2)
    except UnknownPreset as exc:
        return _emit_error("UnknownPreset", str(exc.args[0]), code=2)
    except FileNotFoundError as exc:
        return _emit_error("FileNotFoundError", str(exc), getattr(exc, "filename", "") or "", code=2)
    except (ZenoCouplerError, ValueError, ArithmeticError) as exc:
        return _emit_error(type(exc).__name__, str(exc))


if __name__ == "__main__":
    sys.exit(main())
