"""Property suite behind the CLI selftest: every module invariant, at a runtime-scaled sample count.

Each property draws seeded random instances, checks its inequality or
identity at the module's stated tolerance, and reports one pass/fail line.
The pytest acceptance suite runs the same checks at full scale; the CLI
selftest exists so a deployed install can re-verify itself.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    DensityMatrix,
    _haar,
    _pvm_unchecked,
    commutator,
    haar_random_unitary,
    operator_sqrt,
    partial_trace,
    random_density,
    random_povm,
    rank_one_pvm,
    spectral_decompose,
    tensor,
    trace_norm,
    validate_density,
    validate_povm,
)
from .errors import KdUncertError
from .kdtable import johansen_components, kd_table, table_nonclassicality, table_nonreality
from .optimize import (
    OptimizerConfig,
    quantum_nonclassicality,
    quantum_nonreality,
    quantum_nonreality_variational,
    sup_over_pvm,
)
from .uncertainty import (
    Flavor,
    bound_asymmetry,
    coarse_grain,
    decompose,
    impurity_s,
    impurity_t,
    infimum_total,
    outcome_probs,
    s_entropy,
    t_entropy,
    total_uncertainty,
    uncertainty_relation_bound,
)
from .witness import (
    contextuality_witness,
    disturbance_nonreality,
    quantum_via_weak_values,
    weak_values,
)


class PropertyFailure(KdUncertError):
    """A selftest property did not hold at its stated tolerance."""


@dataclass(frozen=True)
class PropertyResult:
    name: str
    ok: bool
    detail: str


def _rng(seed, *tags):
    return np.random.default_rng([seed, *tags])


def _light_cfg(seed, restarts=3):
    return OptimizerConfig(n_restarts=restarts, max_iters=300, seed=seed)


def _rand_state(d, rng, rank=None) -> DensityMatrix:
    if rank is None:
        rank = int(rng.integers(1, d + 1))
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    m = g @ g.conj().T
    return validate_density(m / np.trace(m).real)


def _rand_pure(d, rng) -> DensityMatrix:
    return _rand_state(d, rng, rank=1)


def _rand_povm(d, n, rng):
    draws = []
    for _ in range(n):
        g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        draws.append(g @ g.conj().T)
    total = np.sum(draws, axis=0)
    w, v = np.linalg.eigh(total)
    inv_sqrt = (v / np.sqrt(w)) @ v.conj().T
    return validate_povm([inv_sqrt @ a @ inv_sqrt for a in draws])


def _rand_pvm(d, rng):
    return rank_one_pvm(_haar(d, rng))


def _rand_rank1_povm(d, n, rng):
    """Random POVM of rank-1 effects (every effect trace is <= 1)."""
    draws = []
    for _ in range(n):
        g = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        draws.append(np.outer(g, g.conj()))
    total = np.sum(draws, axis=0)
    w, v = np.linalg.eigh(total)
    inv_sqrt = (v / np.sqrt(w)) @ v.conj().T
    return validate_povm([inv_sqrt @ a @ inv_sqrt for a in draws])


def _rand_hermitian(d, rng):
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return g + g.conj().T


def _commuting_pair(d, rng):
    """Random (state, POVM) diagonal in a common random basis."""
    u = _haar(d, rng)
    lam = rng.random(d) + 0.05
    lam /= lam.sum()
    rho = validate_density((u * lam) @ u.conj().T)
    weights = rng.random((d, 2)) + 0.1
    weights /= weights.sum(axis=1, keepdims=True)
    effects = [(u * weights[:, i]) @ u.conj().T for i in range(2)]
    return rho, validate_povm(effects)


def _require(cond, msg):
    if not cond:
        raise PropertyFailure(msg)


def _maximally_coherent(d) -> DensityMatrix:
    v = np.ones(d, dtype=complex) / np.sqrt(d)
    return validate_density(np.outer(v, v.conj()))


# --- qstate-core properties -------------------------------------------------


def prop_trace_norm_hermitian(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            h = _rand_hermitian(d, _rng(seed, 10, i, d))
            gap = abs(trace_norm(h) - np.abs(np.linalg.eigvalsh(h)).sum())
            worst = max(worst, gap)
    _require(worst <= 1e-9, f"trace_norm vs eigenvalue sum off by {worst:.2e}")
    return f"worst gap {worst:.2e}"


def prop_spectral_roundtrip(dims, samples, seed):
    worst = 0.0
    count = 0
    for i in range(samples):
        for d in range(2, 9):
            rng = _rng(seed, 11, i, d)
            h = _rand_hermitian(d, rng)
            if i % 3 == 0:
                # force a degenerate block
                w, v = np.linalg.eigh(h)
                w[: d // 2 + 1] = w[0]
                h = (v * w) @ v.conj().T
            dec = spectral_decompose(h)
            recon = np.sum(
                [lam * p for lam, p in zip(dec.eigenvalues, dec.eigenprojectors)], axis=0
            )
            worst = max(worst, float(np.abs(recon - h).max()))
            total = np.sum(dec.eigenprojectors, axis=0)
            worst = max(worst, float(np.abs(total - np.eye(d)).max()))
            for a in range(len(dec.eigenprojectors)):
                for b in range(a + 1, len(dec.eigenprojectors)):
                    worst = max(
                        worst,
                        float(np.abs(dec.eigenprojectors[a] @ dec.eigenprojectors[b]).max()),
                    )
            count += 1
    _require(worst <= 1e-9, f"spectral reconstruction off by {worst:.2e}")
    return f"{count} matrices, worst residual {worst:.2e}"


def prop_operator_sqrt(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 12, i, d)
            g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
            h = g @ g.conj().T
            r = operator_sqrt(h)
            worst = max(worst, float(np.abs(r @ r - h).max()))
    _require(worst <= 1e-8, f"sqrt squared deviates by {worst:.2e}")
    return f"worst residual {worst:.2e}"


def prop_random_validators(dims, samples, seed):
    n = 0
    for i in range(samples):
        for d in dims:
            random_density(d, 1 + i % d, seed=int(_rng(seed, 13, i, d).integers(2**31)))
            random_povm(d, 2 + i % 3, seed=int(_rng(seed, 14, i, d).integers(2**31)))
            u = haar_random_unitary(d, seed=int(_rng(seed, 15, i, d).integers(2**31)))
            rank_one_pvm(u)
            n += 3
    return f"{n} seeded draws validated"


def prop_partial_trace_tensor(dims, samples, seed):
    worst = 0.0
    for i in range(3 * samples):
        rng = _rng(seed, 16, i)
        r1 = _rand_state(2, rng)
        r2 = _rand_state(3, rng)
        prod = tensor(r1.matrix, r2.matrix)
        worst = max(worst, float(np.abs(partial_trace(prod, (2, 3), 0) - r1.matrix).max()))
        worst = max(worst, float(np.abs(partial_trace(prod, (2, 3), 1) - r2.matrix).max()))
    _require(worst <= 1e-10, f"partial trace recovers factors up to {worst:.2e}")
    return f"worst factor residual {worst:.2e}"


# --- kd-quasiprob properties ------------------------------------------------


def prop_kd_marginals(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 20, i, d)
            rho = _rand_state(d, rng)
            first = _rand_povm(d, 2 + i % 3, rng)
            second = _rand_povm(d, 2 + (i + 1) % 3, rng)
            t = kd_table(rho, first, second)
            pa = [np.trace(m @ rho.matrix) for m in first.effects]
            pb = [np.trace(m @ rho.matrix) for m in second.effects]
            worst = max(worst, float(np.abs(t.marginal_a() - np.array(pa)).max()))
            worst = max(worst, float(np.abs(t.marginal_b() - np.array(pb)).max()))
            worst = max(worst, abs(t.values.sum() - 1.0))
    _require(worst <= 1e-9, f"marginals off by {worst:.2e}")
    return f"worst marginal residual {worst:.2e}"


def prop_kd_commuting_real(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 21, i, d)
            rho, povm = _commuting_pair(d, rng)
            second = _rand_povm(d, d, rng)
            t = kd_table(rho, povm, second)
            worst = max(worst, float(np.abs(t.values.imag).max()))
            worst = max(worst, float(max(0.0, -(t.values.real.min()))))
    _require(worst <= 1e-10, f"commuting table not real-nonnegative: {worst:.2e}")
    return f"worst deviation {worst:.2e}"


def prop_kd_nonclassicality_nonneg(dims, samples, seed):
    low = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 22, i, d)
            t = kd_table(_rand_state(d, rng), _rand_povm(d, 2, rng), _rand_povm(d, 3, rng))
            low = min(low, table_nonclassicality(t))
    _require(low >= 0.0, f"nonclassicality dropped to {low:.2e}")
    return f"min value {low:.2e}"


def prop_kd_diagonal_eigenvalues(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 23, i, d)
            u = _haar(d, rng)
            lam = rng.random(d) + 0.05
            lam /= lam.sum()
            rho = validate_density((u * lam) @ u.conj().T)
            pvm = rank_one_pvm(u).as_povm()
            t = kd_table(rho, pvm, pvm)
            worst = max(worst, float(np.abs(np.diag(t.values) - lam).max()))
            off = t.values - np.diag(np.diag(t.values))
            worst = max(worst, float(np.abs(off).max()))
    _require(worst <= 1e-9, f"diagonal table mismatch {worst:.2e}")
    return f"worst entry residual {worst:.2e}"


def prop_johansen(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 24, i, d)
            rho = _rand_state(d, rng)
            first = _rand_pvm(d, rng)
            second = _rand_pvm(d, rng)
            comp = johansen_components(rho, first, second)
            t = kd_table(rho, first, second)
            worst = max(worst, float(np.abs(comp.total() - t.values).max()))
            worst = max(
                worst,
                float(np.abs(np.abs(comp.imag_part.imag) - np.abs(t.values.imag)).max()),
            )
    _require(worst <= 1e-9, f"component sum off by {worst:.2e}")
    return f"worst reconstruction residual {worst:.2e}"


# --- pvm-optimize properties ------------------------------------------------


def prop_variational_trace_norm(dims, samples, seed):
    cfg = OptimizerConfig(n_restarts=8, max_iters=300, seed=seed)
    worst = 0.0
    for i in range(samples):
        for d in (2, 3, 4):
            rng = _rng(seed, 30, i, d)
            h = _rand_hermitian(d, rng)
            if i % 2:
                h = 1j * h
            target = trace_norm(h)

            def objective(pvm, h=h):
                u = pvm.basis_unitary
                return float(np.abs(np.einsum("ib,ij,jb->b", u.conj(), h, u)).sum())

            got = sup_over_pvm(objective, d, cfg).value
            worst = max(worst, abs(got - target))
    _require(worst <= 1e-6, f"variational trace norm off by {worst:.2e}")
    return f"worst |sup - trace_norm| {worst:.2e}"


def prop_unitary_covariance(dims, samples, seed):
    worst_exact = 0.0
    worst_var = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 31, i, d)
            rho = _rand_state(d, rng)
            povm = _rand_povm(d, 2 + i % 2, rng)
            v = _haar(d, rng)
            rho_v = validate_density(v @ rho.matrix @ v.conj().T)
            povm_v = validate_povm([v @ m @ v.conj().T for m in povm.effects])
            worst_exact = max(
                worst_exact,
                abs(quantum_nonreality(rho, povm) - quantum_nonreality(rho_v, povm_v)),
            )
            if i < 6:
                cfg = _light_cfg(seed + i)
                a = quantum_nonclassicality(rho, povm, cfg).value
                b = quantum_nonclassicality(rho_v, povm_v, cfg).value
                worst_var = max(worst_var, abs(a - b))
    _require(worst_exact <= 1e-9, f"exact covariance off by {worst_exact:.2e}")
    _require(worst_var <= 1e-6, f"variational covariance off by {worst_var:.2e}")
    return f"exact {worst_exact:.2e}, variational {worst_var:.2e}"


def prop_mixing_convexity(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 32, i, d)
            p = float(rng.random())
            rho1, rho2 = _rand_state(d, rng), _rand_state(d, rng)
            mixed = validate_density(p * rho1.matrix + (1 - p) * rho2.matrix)
            q = float(rng.random())
            povm1 = _rand_povm(d, 2, rng)
            povm2 = _rand_povm(d, 2, rng)
            povm_mix = validate_povm(
                [q * a + (1 - q) * b for a, b in zip(povm1.effects, povm2.effects)]
            )
            lhs = quantum_nonreality(mixed, povm_mix)
            rhs = (
                q * p * quantum_nonreality(rho1, povm1)
                + q * (1 - p) * quantum_nonreality(rho2, povm1)
                + (1 - q) * p * quantum_nonreality(rho1, povm2)
                + (1 - q) * (1 - p) * quantum_nonreality(rho2, povm2)
            )
            worst = max(worst, lhs - rhs)
    _require(worst <= 1e-6, f"convexity violated by {worst:.2e}")
    return f"worst lhs-rhs {worst:.2e}"


def prop_flavors_vanish_together(dims, samples, seed):
    eps = 1e-7
    checked = 0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 33, i, d)
            if i % 2 == 0:
                rho, povm = _commuting_pair(d, rng)
            else:
                rho, povm = _rand_state(d, rng), _rand_povm(d, 2, rng)
            nre = quantum_nonreality(rho, povm)
            ncl = quantum_nonclassicality(rho, povm, _light_cfg(seed + i, restarts=2)).value
            _require(
                (nre > eps) == (ncl > eps),
                f"flavors disagree: nre={nre:.3e}, ncl={ncl:.3e}",
            )
            checked += 1
    return f"{checked} instances, flags agree"


def prop_partial_access(dims, samples, seed):
    worst = 0.0
    worst_var = 0.0
    eye2 = np.eye(2)
    for i in range(3 * samples):
        rng = _rng(seed, 34, i)
        rho12 = _rand_state(4, rng)
        rho1 = validate_density(partial_trace(rho12.matrix, (2, 2), 0))
        povm1 = _rand_povm(2, 2, rng)
        lifted = validate_povm([tensor(m, eye2) for m in povm1.effects])
        gap = quantum_nonreality(rho1, povm1) - quantum_nonreality(rho12, lifted)
        worst = max(worst, gap)
        if i < 4:
            cfg = _light_cfg(seed + i, restarts=4)
            gap_v = (
                quantum_nonclassicality(rho1, povm1, cfg).value
                - quantum_nonclassicality(rho12, lifted, cfg).value
            )
            worst_var = max(worst_var, gap_v)
    _require(worst <= 1e-6, f"reduced state exceeded joint by {worst:.2e}")
    _require(worst_var <= 1e-6, f"variational reduced exceeded joint by {worst_var:.2e}")
    return f"worst reduced-joint gap {worst:.2e} (exact), {worst_var:.2e} (NCl)"


def prop_coarsegrain_monotone(dims, samples, seed):
    worst = 0.0
    worst_var = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 35, i, d)
            rho = _rand_state(d, rng)
            povm = _rand_povm(d, 4, rng)
            merged = coarse_grain(povm, [(0, 1), (2, 3)])
            gap = quantum_nonreality(rho, merged) - quantum_nonreality(rho, povm)
            worst = max(worst, gap)
            if i < 3 and d == dims[0]:
                cfg = _light_cfg(seed + i)
                gap_v = (
                    quantum_nonclassicality(rho, merged, cfg).value
                    - quantum_nonclassicality(rho, povm, cfg).value
                )
                worst_var = max(worst_var, gap_v)
    _require(worst <= 1e-6, f"coarse-graining increased quantumness by {worst:.2e}")
    _require(worst_var <= 1e-6, f"variational coarse-graining gap {worst_var:.2e}")
    return f"worst merged-original gap {worst:.2e}"


def prop_nre_variational_agreement(dims, samples, seed):
    worst = 0.0
    for i in range(2 * samples):
        for d in (2, 3):
            rng = _rng(seed, 36, i, d)
            rho = _rand_state(d, rng)
            povm = _rand_pvm(d, rng).as_povm()
            exact = quantum_nonreality(rho, povm)
            res = quantum_nonreality_variational(rho, povm, _light_cfg(seed + i, restarts=4))
            worst = max(worst, abs(res.value - exact))
            _require(
                max(res.per_restart_values) <= res.value + 1e-12,
                "per-restart value exceeded aggregate",
            )
    _require(worst <= 1e-6, f"variational nonreality off by {worst:.2e}")
    return f"worst |variational - exact| {worst:.2e}"


# --- uncertainty properties -------------------------------------------------


def prop_quantum_bounded_by_total(dims, samples, seed):
    worst = 0.0
    worst_eq = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 40, i, d)
            rho = _rand_state(d, rng)
            povm = _rand_povm(d, 2 + i % 2, rng)
            cfg = _light_cfg(seed + i, restarts=2)
            for flavor in Flavor:
                dec = decompose(rho, povm, flavor, cfg)
                worst = max(worst, dec.quantum - dec.total)
            # equality for pure states and rank-1 PVMs
            pure = _rand_pure(d, rng)
            pvm = _rand_pvm(d, rng).as_povm()
            cfg_eq = _light_cfg(seed + i, restarts=3)
            for flavor in Flavor:
                dec = decompose(pure, pvm, flavor, cfg_eq)
                worst_eq = max(worst_eq, abs(dec.total - dec.quantum))
    _require(worst <= 1e-6, f"quantum exceeded total by {worst:.2e}")
    _require(worst_eq <= 1e-6, f"pure/PVM equality off by {worst_eq:.2e}")
    return f"bound slack {worst:.2e}, equality gap {worst_eq:.2e}"


def prop_commuting_entirely_classical(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 41, i, d)
            rho, povm = _commuting_pair(d, rng)
            cfg = _light_cfg(seed + i, restarts=2)
            for flavor in Flavor:
                dec = decompose(rho, povm, flavor, cfg)
                worst = max(worst, abs(dec.quantum))
                worst = max(worst, abs(dec.classical - dec.total))
    _require(worst <= 1e-8, f"commuting case quantum part {worst:.2e}")
    return f"worst quantum part {worst:.2e}"


def prop_classical_concavity(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 42, i, d)
            p = float(rng.random())
            rho1, rho2 = _rand_state(d, rng), _rand_state(d, rng)
            mixed = validate_density(p * rho1.matrix + (1 - p) * rho2.matrix)
            povm = _rand_povm(d, 2, rng)
            cfg = _light_cfg(seed + i)
            for flavor in Flavor:
                if flavor is Flavor.NCL and i >= 5:
                    continue
                c_mix = decompose(mixed, povm, flavor, cfg).classical
                c_1 = decompose(rho1, povm, flavor, cfg).classical
                c_2 = decompose(rho2, povm, flavor, cfg).classical
                worst = max(worst, p * c_1 + (1 - p) * c_2 - c_mix)
    _require(worst <= 1e-6, f"classical concavity violated by {worst:.2e}")
    return f"worst mixture gap {worst:.2e}"


def prop_permutation_invariance(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 43, i, d)
            rho = _rand_state(d, rng)
            povm = _rand_povm(d, 3, rng)
            perm = validate_povm(
                [povm.effects[2], povm.effects[0], povm.effects[1]],
                [povm.labels[2], povm.labels[0], povm.labels[1]],
            )
            for flavor in (Flavor.NRE,):
                a = decompose(rho, povm, flavor)
                b = decompose(rho, perm, flavor)
                worst = max(worst, abs(a.total - b.total))
                worst = max(worst, abs(a.quantum - b.quantum))
                worst = max(worst, abs(a.classical - b.classical))
    _require(worst <= 1e-9, f"permutation changed decomposition by {worst:.2e}")
    return f"worst permutation residual {worst:.2e}"


def prop_decomposition_covariance(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 44, i, d)
            rho = _rand_state(d, rng)
            povm = _rand_povm(d, 2, rng)
            v = _haar(d, rng)
            rho_v = validate_density(v @ rho.matrix @ v.conj().T)
            povm_v = validate_povm([v @ m @ v.conj().T for m in povm.effects])
            cfg = _light_cfg(seed + i)
            for flavor in Flavor:
                if flavor is Flavor.NCL and i >= 5:
                    continue
                a = decompose(rho, povm, flavor, cfg)
                b = decompose(rho_v, povm_v, flavor, cfg)
                worst = max(worst, abs(a.total - b.total))
                worst = max(worst, abs(a.quantum - b.quantum))
                worst = max(worst, abs(a.classical - b.classical))
    _require(worst <= 1e-6, f"unitary conjugation changed decomposition by {worst:.2e}")
    return f"worst covariance residual {worst:.2e}"


def prop_maximal_trichotomy(dims, samples, seed):
    worst = 0.0
    for d in dims:
        cfg = _light_cfg(seed, restarts=4)
        coherent = _maximally_coherent(d)
        comp = rank_one_pvm(np.eye(d)).as_povm()
        dec = decompose(coherent, comp, Flavor.NRE)
        worst = max(worst, abs(dec.total - np.sqrt(d - 1)), abs(dec.quantum - np.sqrt(d - 1)))
        dec = decompose(coherent, comp, Flavor.NCL, cfg)
        worst = max(worst, abs(dec.total - (np.sqrt(d) - 1)), abs(dec.quantum - (np.sqrt(d) - 1)))
        mixed = validate_density(np.eye(d) / d)
        pvm = _rand_pvm(d, _rng(seed, 45, d)).as_povm()
        for flavor in Flavor:
            dec = decompose(mixed, pvm, flavor, cfg)
            worst = max(worst, abs(dec.classical - dec.total), abs(dec.quantum))
        degenerate = validate_povm([np.eye(d) / d] * d)
        rho = _rand_state(d, _rng(seed, 46, d))
        for flavor in Flavor:
            dec = decompose(rho, degenerate, flavor, cfg)
            worst = max(worst, abs(dec.classical - dec.total), abs(dec.quantum))
    _require(worst <= 1e-6, f"maximal-uncertainty cases off by {worst:.2e}")
    return f"worst case residual {worst:.2e}"


def prop_coherence_faithfulness(dims, samples, seed):
    eps = 1e-8
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 47, i, d)
            pvm = _rand_pvm(d, rng)
            u = pvm.basis_unitary
            lam = rng.random(d) + 0.05
            lam /= lam.sum()
            diagonal = validate_density((u * lam) @ u.conj().T)
            _require(
                quantum_nonreality(diagonal, pvm.as_povm()) <= eps,
                "diagonal state scored nonzero quantum part",
            )
            coherent = _rand_pure(d, rng)
            q = quantum_nonreality(coherent, pvm.as_povm())
            diag_part = np.abs(np.diag(u.conj().T @ coherent.matrix @ u)).sum()
            if 1.0 - diag_part > 1e-6:
                _require(q > eps, f"coherent state scored {q:.2e} <= {eps}")
    return "quantum part vanishes exactly on basis-diagonal states"


def prop_infimum_impurity(dims, samples, seed):
    worst = 0.0
    worst_quant = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 48, i, d)
            rho = _rand_state(d, rng)
            lam = np.clip(np.linalg.eigvalsh(rho.matrix), 0.0, 1.0)
            for flavor in Flavor:
                value, achieving = infimum_total(rho, flavor)
                analytic = (
                    float(np.sqrt(lam * (1 - lam)).sum())
                    if flavor is Flavor.NRE
                    else float(np.sqrt(lam).sum() - 1.0)
                )
                worst = max(worst, abs(value - analytic))
                # the impurity floors the total only for measurements with
                # unit-bounded effect traces; rank-1 POVMs all qualify
                povm = _rand_rank1_povm(d, d + i % (d + 1), rng)
                worst = max(worst, value - total_uncertainty(rho, povm, flavor))
                worst_quant = max(worst_quant, quantum_nonreality(rho, achieving))
            if i < 2:
                value, achieving = infimum_total(rho, Flavor.NCL)
                ncl = quantum_nonclassicality(rho, achieving, _light_cfg(seed + i, restarts=2))
                worst_quant = max(worst_quant, ncl.value)
    _require(worst <= 1e-9, f"infimum mismatch {worst:.2e}")
    _require(worst_quant <= 1e-9, f"achieving POVM quantum part {worst_quant:.2e}")
    return f"worst infimum residual {worst:.2e}"


def prop_tsallis_relation(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 49, i, d)
            p = rng.random(d) + 0.01
            p /= p.sum()
            t = t_entropy(p)
            tsallis_half = (np.sqrt(p).sum() - 1.0) / (1.0 - 0.5)
            worst = max(worst, abs(2.0 * t - tsallis_half))
    _require(worst <= 1e-12, f"Tsallis half-entropy relation off by {worst:.2e}")
    return f"worst residual {worst:.2e}"


def prop_asymmetry_bound(dims, samples, seed):
    worst = 0.0
    cfg = _light_cfg(seed, restarts=4)
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 50, i, d)
            rho = _rand_state(d, rng)
            pvm = _rand_pvm(d, rng)
            bound = bound_asymmetry(rho, pvm, cfg)
            ent = s_entropy(outcome_probs(rho, pvm.as_povm()))
            worst = max(worst, bound - ent)
    _require(worst <= 1e-6, f"asymmetry bound exceeded entropy by {worst:.2e}")
    return f"worst bound-entropy slack {worst:.2e}"


def prop_entropic_relation(dims, samples, seed):
    worst = 0.0
    cfg = _light_cfg(seed, restarts=4)
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 51, i, d)
            rho = _rand_state(d, rng)
            pvm_a = _rand_pvm(d, rng)
            pvm_b = _rand_pvm(d, rng)
            bound = uncertainty_relation_bound(rho, pvm_a, pvm_b, cfg)
            total = s_entropy(outcome_probs(rho, pvm_a.as_povm())) + s_entropy(
                outcome_probs(rho, pvm_b.as_povm())
            )
            worst = max(worst, bound - total)
    _require(worst <= 1e-6, f"relation bound exceeded entropy sum by {worst:.2e}")
    return f"worst bound-sum slack {worst:.2e}"


# --- witness properties -----------------------------------------------------


def prop_weak_value_factorization(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 60, i, d)
            rho = _rand_state(d, rng)
            povm = _rand_povm(d, 2 + i % 3, rng)
            basis = _rand_pvm(d, rng)
            table = weak_values(rho, povm, basis)
            kdt = kd_table(rho, povm, basis.as_povm())
            prod = table.values * table.postselect_probs[np.newaxis, :]
            defined = ~np.broadcast_to(table.undefined_mask, prod.shape)
            worst = max(worst, float(np.abs((prod - kdt.values))[defined].max()))
    _require(worst <= 1e-9, f"factorization identity off by {worst:.2e}")
    return f"worst factorization residual {worst:.2e}"


def prop_weak_value_integrands(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 61, i, d)
            rho = _rand_state(d, rng)
            povm = _rand_povm(d, 2, rng)
            basis = _rand_pvm(d, rng)
            nre, ncl = quantum_via_weak_values(rho, povm, basis)
            t = kd_table(rho, povm, basis.as_povm())
            worst = max(worst, abs(nre - table_nonreality(t)))
            worst = max(worst, abs(ncl - table_nonclassicality(t)))
    _require(worst <= 1e-9, f"weak-value integrands off by {worst:.2e}")
    return f"worst integrand residual {worst:.2e}"


def prop_witness_consistency(dims, samples, seed):
    checked = 0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 62, i, d)
            if i % 2 == 0:
                rho, povm = _commuting_pair(d, rng)
            else:
                rho, povm = _rand_state(d, rng), _rand_povm(d, 2, rng)
            report = contextuality_witness(rho, povm, _light_cfg(seed + i, restarts=2))
            _require(report.flavors_agree, "NRe and NCl channels disagreed")
            if report.contextual:
                entry = report.witness_entry
                table = weak_values(rho, povm, entry.basis)
                a_idx = povm.labels.index(entry.a)
                again = complex(table.values[a_idx, entry.b])
                _require(abs(again - entry.weak_value) <= 1e-9, "witness entry not reproducible")
                _require(
                    abs(again.imag) > report.threshold or again.real < -report.threshold,
                    "witness entry not strange",
                )
            checked += 1
    return f"{checked} instances, channels agree and witnesses re-verify"


def prop_disturbance_identity(dims, samples, seed):
    worst = 0.0
    for i in range(samples):
        for d in dims:
            rng = _rng(seed, 63, i, d)
            rho = _rand_state(d, rng)
            pvm = _rand_pvm(d, rng)
            worst = max(
                worst,
                abs(disturbance_nonreality(rho, pvm) - quantum_nonreality(rho, pvm.as_povm())),
            )
    _require(worst <= 1e-9, f"disturbance identity off by {worst:.2e}")
    return f"worst identity residual {worst:.2e}"


PROPERTIES = (
    ("core.trace_norm_hermitian", prop_trace_norm_hermitian),
    ("core.spectral_roundtrip", prop_spectral_roundtrip),
    ("core.operator_sqrt", prop_operator_sqrt),
    ("core.random_validators", prop_random_validators),
    ("core.partial_trace_tensor", prop_partial_trace_tensor),
    ("kd.marginals", prop_kd_marginals),
    ("kd.commuting_real", prop_kd_commuting_real),
    ("kd.nonclassicality_nonneg", prop_kd_nonclassicality_nonneg),
    ("kd.diagonal_eigenvalues", prop_kd_diagonal_eigenvalues),
    ("kd.johansen_reconstruction", prop_johansen),
    ("opt.variational_trace_norm", prop_variational_trace_norm),
    ("opt.flavors_vanish_together", prop_flavors_vanish_together),
    ("opt.unitary_covariance", prop_unitary_covariance),
    ("opt.mixing_convexity", prop_mixing_convexity),
    ("opt.nre_variational_agreement", prop_nre_variational_agreement),
    ("opt.partial_access_monotone", prop_partial_access),
    ("opt.coarsegrain_monotone", prop_coarsegrain_monotone),
    ("unc.quantum_bounded_by_total", prop_quantum_bounded_by_total),
    ("unc.commuting_entirely_classical", prop_commuting_entirely_classical),
    ("unc.classical_concavity", prop_classical_concavity),
    ("unc.permutation_invariance", prop_permutation_invariance),
    ("unc.decomposition_covariance", prop_decomposition_covariance),
    ("unc.maximal_trichotomy", prop_maximal_trichotomy),
    ("unc.coherence_faithfulness", prop_coherence_faithfulness),
    ("unc.infimum_impurity", prop_infimum_impurity),
    ("unc.tsallis_relation", prop_tsallis_relation),
    ("unc.asymmetry_bound", prop_asymmetry_bound),
    ("unc.entropic_relation", prop_entropic_relation),
    ("wit.factorization", prop_weak_value_factorization),
    ("wit.weak_value_integrands", prop_weak_value_integrands),
    ("wit.contextuality_consistency", prop_witness_consistency),
    ("wit.disturbance_identity", prop_disturbance_identity),
)


def run_selftest(dims=(2, 3, 4), samples=8, seed=0, inject_failure=None):
    """Run every property; returns (all_passed, [PropertyResult])."""
    dims = tuple(int(d) for d in dims)
    results = []
    for name, fn in PROPERTIES:
        if inject_failure == name:
            results.append(PropertyResult(name=name, ok=False, detail="injected failure (test mode)"))
            continue
        try:
            detail = fn(dims, samples, seed)
            results.append(PropertyResult(name=name, ok=True, detail=detail))
        except PropertyFailure as exc:
            results.append(PropertyResult(name=name, ok=False, detail=str(exc)))
    return all(r.ok for r in results), results
