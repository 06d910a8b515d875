"""Command-line front end: JSON in, JSON out, deterministic under a fixed seed.

Exit codes: 0 success, 1 selftest failure, 2 validation error, 3 dimension
mismatch, 4 optimizer non-convergence. The default seed is 0; KDUNCERT_SEED
overrides it and an explicit --seed flag wins over both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import serialize
from .core import Povm, RankOnePvm, haar_random_unitary, random_density, random_povm, rank_one_pvm
from .errors import DimMismatchError, KdUncertError, ValidationError, WitnessNotFoundError
from .kdtable import kd_table, table_nonclassicality, table_nonreality
from .optimize import OptimizerConfig
from .selftest import run_selftest
from .uncertainty import (
    Flavor,
    bound_asymmetry,
    decompose,
    infimum_total,
    outcome_probs,
    s_entropy,
    uncertainty_relation_bound,
)
from .witness import contextuality_witness

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_VALIDATION = 2
EXIT_DIM_MISMATCH = 3
EXIT_NOT_CONVERGED = 4


def _read_json(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: malformed JSON ({exc.msg} at line {exc.lineno})") from exc


def _write_output(obj, path):
    text = serialize.dumps(obj) + "\n"
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _default_seed() -> int:
    env = os.environ.get("KDUNCERT_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise ValidationError(f"KDUNCERT_SEED must be an integer, got {env!r}") from exc


def _config_from_args(args) -> OptimizerConfig:
    kwargs = {"seed": args.seed if args.seed is not None else _default_seed()}
    if getattr(args, "restarts", None) is not None:
        kwargs["n_restarts"] = args.restarts
    if getattr(args, "max_iters", None) is not None:
        kwargs["max_iters"] = args.max_iters
    if getattr(args, "rel_tol", None) is not None:
        kwargs["rel_tol"] = args.rel_tol
    return OptimizerConfig(**kwargs)


def _load_measurement(path: str):
    return serialize.load_measurement(_read_json(path))


def _as_povm(measurement) -> Povm:
    if isinstance(measurement, RankOnePvm):
        return measurement.as_povm()
    return measurement


def _as_pvm(measurement, which: str) -> RankOnePvm:
    if isinstance(measurement, RankOnePvm):
        return measurement
    d = measurement.dim
    if measurement.n_outcomes != d:
        raise ValidationError(f"{which}: expected a rank-1 PVM, got {measurement.n_outcomes} effects in dim {d}")
    cols = []
    for i, e in enumerate(measurement.effects):
        w, v = np.linalg.eigh(e)
        if abs(w[-1] - 1.0) > 1e-8 or (d > 1 and abs(w[-2]) > 1e-8):
            raise ValidationError(f"{which}: effect {i} is not a rank-1 projector")
        cols.append(v[:, -1])
    return rank_one_pvm(np.column_stack(cols))


def cmd_kd_table(args) -> int:
    state = serialize.density_from_json(_read_json(args.state))
    first = _as_povm(_load_measurement(args.povm))
    second = _as_povm(_load_measurement(args.basis))
    table = kd_table(state, first, second)
    out = serialize.kdtable_to_json(table)
    out["nonreality"] = table_nonreality(table)
    out["nonclassicality"] = table_nonclassicality(table)
    _write_output(out, args.output)
    return EXIT_OK


def cmd_decompose(args) -> int:
    state = serialize.density_from_json(_read_json(args.state))
    povm = _as_povm(_load_measurement(args.povm))
    flavor = serialize.flavor_from_name(args.flavor)
    cfg = _config_from_args(args)
    dec = decompose(state, povm, flavor, cfg)
    _write_output(serialize.decomposition_to_json(dec), args.output)
    if dec.diagnostics is not None and not dec.diagnostics.converged:
        return EXIT_NOT_CONVERGED
    return EXIT_OK


def cmd_witness(args) -> int:
    state = serialize.density_from_json(_read_json(args.state))
    povm = _as_povm(_load_measurement(args.povm))
    cfg = _config_from_args(args)
    report = contextuality_witness(state, povm, cfg, threshold=args.threshold)
    _write_output(serialize.witness_report_to_json(report), args.output)
    return EXIT_OK


def cmd_infimum(args) -> int:
    state = serialize.density_from_json(_read_json(args.state))
    flavor = serialize.flavor_from_name(args.flavor)
    value, achieving = infimum_total(state, flavor)
    out = {"value": value, "achieving_povm": serialize.povm_to_json(achieving)}
    _write_output(out, args.output)
    return EXIT_OK


def cmd_bounds(args) -> int:
    state = serialize.density_from_json(_read_json(args.state))
    pvm = _as_pvm(_load_measurement(args.pvm), "pvm")
    cfg = _config_from_args(args)
    ent = s_entropy(outcome_probs(state, pvm.as_povm()))
    bound = bound_asymmetry(state, pvm, cfg)
    out = {
        "asymmetry_bound": bound,
        "s_entropy": ent,
        "asymmetry_margin": ent - bound,
    }
    if bound > ent + 1e-6:
        raise KdUncertError(f"asymmetry bound {bound!r} exceeds entropy {ent!r}")
    if args.pvm2 is not None:
        pvm2 = _as_pvm(_load_measurement(args.pvm2), "pvm2")
        rel = uncertainty_relation_bound(state, pvm, pvm2, cfg)
        s_sum = ent + s_entropy(outcome_probs(state, pvm2.as_povm()))
        if rel > s_sum + 1e-6:
            raise KdUncertError(f"relation bound {rel!r} exceeds entropy sum {s_sum!r}")
        out["relation_bound"] = rel
        out["s_sum"] = s_sum
        out["relation_margin"] = s_sum - rel
    _write_output(out, args.output)
    return EXIT_OK


def cmd_random(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    if args.kind == "state":
        rank = args.rank if args.rank is not None else args.d
        obj = serialize.matrix_to_json(random_density(args.d, rank, seed).matrix)
    elif args.kind == "povm":
        obj = serialize.povm_to_json(random_povm(args.d, args.outcomes, seed))
    else:
        obj = serialize.matrix_to_json(haar_random_unitary(args.d, seed))
    _write_output(obj, args.output)
    return EXIT_OK


def cmd_selftest(args) -> int:
    dims = tuple(int(x) for x in args.dims.split(","))
    seed = args.seed if args.seed is not None else _default_seed()
    passed, results = run_selftest(
        dims=dims, samples=args.samples, seed=seed, inject_failure=args.inject_failure
    )
    for r in results:
        sys.stderr.write(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}\n")
    out = {
        "passed": passed,
        "failed": [r.name for r in results if not r.ok],
        "results": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
    }
    _write_output(out, args.output)
    return EXIT_OK if passed else EXIT_SELFTEST


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kduncert",
        description="Kirkwood-Dirac quasiprobabilities and measurement-uncertainty decomposition.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p):
        p.add_argument("--output", "-o", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=None, help="seed (default KDUNCERT_SEED or 0)")

    def add_optimizer(p):
        p.add_argument("--restarts", type=int, default=None, help="random restarts")
        p.add_argument("--max-iters", dest="max_iters", type=int, default=None)
        p.add_argument("--rel-tol", dest="rel_tol", type=float, default=None)

    p = sub.add_parser("kd-table", help="quasiprobability table and its quantumness functionals")
    p.add_argument("state")
    p.add_argument("povm")
    p.add_argument("basis")
    add_common(p)
    p.set_defaults(fn=cmd_kd_table)

    p = sub.add_parser("decompose", help="total/quantum/classical uncertainty decomposition")
    p.add_argument("state")
    p.add_argument("povm")
    p.add_argument("--flavor", default="NRe", help="NRe or NCl")
    add_common(p)
    add_optimizer(p)
    p.set_defaults(fn=cmd_decompose)

    p = sub.add_parser("witness", help="contextuality witness via strange weak values")
    p.add_argument("state")
    p.add_argument("povm")
    p.add_argument("--threshold", type=float, default=1e-7)
    add_common(p)
    add_optimizer(p)
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("infimum", help="minimum total uncertainty over all measurements")
    p.add_argument("state")
    p.add_argument("--flavor", default="NRe")
    add_common(p)
    p.set_defaults(fn=cmd_infimum)

    p = sub.add_parser("bounds", help="asymmetry lower bound and entropic uncertainty relation")
    p.add_argument("state")
    p.add_argument("pvm")
    p.add_argument("pvm2", nargs="?", default=None)
    add_common(p)
    add_optimizer(p)
    p.set_defaults(fn=cmd_bounds)

    p = sub.add_parser("random", help="emit random state/povm/pvm fixtures")
    p.add_argument("kind", choices=("state", "povm", "pvm"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rank", type=int, default=None, help="state rank (default d)")
    p.add_argument("--outcomes", type=int, default=2, help="POVM outcome count")
    add_common(p)
    p.set_defaults(fn=cmd_random)

    p = sub.add_parser("selftest", help="run the full property suite")
    p.add_argument("--dims", default="2,3,4")
    p.add_argument("--samples", type=int, default=8)
    p.add_argument("--inject-failure", default=None, help=argparse.SUPPRESS)
    add_common(p)
    p.set_defaults(fn=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except DimMismatchError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_DIM_MISMATCH
    except WitnessNotFoundError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NOT_CONVERGED
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_VALIDATION
    except KdUncertError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_SELFTEST


if __name__ == "__main__":
    sys.exit(main())
