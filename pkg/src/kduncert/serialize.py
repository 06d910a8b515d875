"""JSON wire formats for every public object.

Complex numbers are always [re, im] pairs and floats are emitted with 17
significant digits, so serialized output round-trips exactly and identical
inputs produce byte-identical files.
"""

from __future__ import annotations

import json

import numpy as np

from .core import DensityMatrix, Povm, RankOnePvm, rank_one_pvm, validate_density, validate_povm
from .errors import ValidationError
from .kdtable import KdTable
from .optimize import OptimizerConfig, SupremumResult
from .uncertainty import Decomposition, Flavor
from .witness import WitnessReport


def _fmt_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValidationError(f"non-finite float {x!r} cannot be serialized")
    return format(float(x), ".17g")


def dumps(obj) -> str:
    """Deterministic JSON emitter (insertion-ordered keys, .17g floats)."""
    out = []
    _emit(obj, out)
    return "".join(out)


def _emit(obj, out):
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_fmt_float(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(", ")
            out.append(json.dumps(str(k)))
            out.append(": ")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(", ")
            _emit(v, out)
        out.append("]")
    else:
        raise ValidationError(f"cannot serialize {type(obj).__name__}")


def _require(obj, key, kind, where):
    if not isinstance(obj, dict) or key not in obj:
        raise ValidationError(f"{where}: missing field '{key}'")
    val = obj[key]
    if kind is float:
        if not isinstance(val, (int, float)) or isinstance(val, bool):
            raise ValidationError(f"{where}: field '{key}' must be a number")
        return float(val)
    if kind is int:
        if not isinstance(val, int) or isinstance(val, bool):
            raise ValidationError(f"{where}: field '{key}' must be an integer")
        return val
    if not isinstance(val, kind):
        raise ValidationError(f"{where}: field '{key}' must be {kind.__name__}")
    return val


def matrix_to_json(m) -> dict:
    a = np.asarray(m, dtype=complex)
    return {
        "d": int(a.shape[0]),
        "re_im": [[float(x.real), float(x.imag)] for x in a.reshape(-1)],
    }


def matrix_from_json(obj, where="matrix") -> np.ndarray:
    d = _require(obj, "d", int, where)
    entries = _require(obj, "re_im", list, where)
    if d < 1 or len(entries) != d * d:
        raise ValidationError(f"{where}: 're_im' must hold {d * d} entries, got {len(entries)}")
    flat = []
    for i, pair in enumerate(entries):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise ValidationError(f"{where}: 're_im' entry {i} must be a [re, im] pair")
        flat.append(complex(pair[0], pair[1]))
    return np.array(flat, dtype=complex).reshape(d, d)


def density_from_json(obj) -> DensityMatrix:
    return validate_density(matrix_from_json(obj, where="state"))


def povm_to_json(povm: Povm) -> dict:
    return {
        "d": povm.dim,
        "effects": [matrix_to_json(e) for e in povm.effects],
        "labels": list(povm.labels),
    }


def povm_from_json(obj) -> Povm:
    d = _require(obj, "d", int, "povm")
    effects_json = _require(obj, "effects", list, "povm")
    effects = [matrix_from_json(e, where=f"povm effect {i}") for i, e in enumerate(effects_json)]
    for i, e in enumerate(effects):
        if e.shape[0] != d:
            raise ValidationError(f"povm effect {i}: dim {e.shape[0]} != declared d {d}")
    labels = obj.get("labels")
    return validate_povm(effects, labels)


def pvm_to_json(pvm: RankOnePvm) -> dict:
    return matrix_to_json(pvm.basis_unitary)


def pvm_from_json(obj) -> RankOnePvm:
    return rank_one_pvm(matrix_from_json(obj, where="basis"))


def kdtable_to_json(t: KdTable) -> dict:
    return {
        "n_a": t.n_a,
        "n_b": t.n_b,
        "values": [[float(x.real), float(x.imag)] for x in t.values.reshape(-1)],
    }


def config_to_json(cfg: OptimizerConfig) -> dict:
    return {
        "n_restarts": cfg.n_restarts,
        "max_iters": cfg.max_iters,
        "rel_tol": cfg.rel_tol,
        "step_init": cfg.step_init,
        "seed": cfg.seed,
        "include_structured_starts": cfg.include_structured_starts,
    }


def config_from_json(obj) -> OptimizerConfig:
    kwargs = {}
    fields = {
        "n_restarts": int,
        "max_iters": int,
        "rel_tol": float,
        "step_init": float,
        "seed": int,
        "include_structured_starts": bool,
    }
    for name, kind in fields.items():
        if name in obj:
            kwargs[name] = _require(obj, name, kind, "optimizer config")
    return OptimizerConfig(**kwargs)


def supremum_to_json(result: SupremumResult) -> dict:
    out = {
        "value": result.value,
        "best_basis": matrix_to_json(result.best_basis.basis_unitary),
        "per_restart_values": list(result.per_restart_values),
        "converged": result.converged,
        "iterations_used": result.iterations_used,
    }
    if result.per_effect_values is not None:
        out["per_effect_values"] = list(result.per_effect_values)
    return out


def decomposition_to_json(dec: Decomposition) -> dict:
    out = {
        "flavor": dec.flavor.value,
        "total": dec.total,
        "quantum": dec.quantum,
        "classical": dec.classical,
        "probs": list(dec.probs),
    }
    if dec.diagnostics is not None:
        out["diagnostics"] = supremum_to_json(dec.diagnostics)
    return out


def flavor_from_name(name: str) -> Flavor:
    for fl in Flavor:
        if fl.value.lower() == str(name).lower():
            return fl
    raise ValidationError(f"flavor must be 'NRe' or 'NCl', got {name!r}")


def witness_report_to_json(report: WitnessReport) -> dict:
    entry = None
    if report.witness_entry is not None:
        w = report.witness_entry
        entry = {
            "a": w.a,
            "b": w.b,
            "weak_value": [float(w.weak_value.real), float(w.weak_value.imag)],
            "basis": matrix_to_json(w.basis.basis_unitary),
        }
    return {
        "contextual": report.contextual,
        "nre": report.nre,
        "ncl": report.ncl,
        "witness": entry,
    }


def load_measurement(obj):
    """Dispatch a measurement JSON object: POVM if it has effects, else a basis unitary."""
    if isinstance(obj, dict) and "effects" in obj:
        return povm_from_json(obj)
    if isinstance(obj, dict) and "re_im" in obj:
        return pvm_from_json(obj)
    raise ValidationError("measurement: expected an object with 'effects' or 're_im'")
