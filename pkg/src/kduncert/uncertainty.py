"""Total/quantum/classical decomposition of measurement uncertainty.

Two flavors of the decomposition exist side by side. The NRe flavor
quantifies total uncertainty by sum_a sqrt(p_a (1 - p_a)) and its quantum
part by the (exact) nonreality quantumness; the NCl flavor uses
sum_a sqrt(p_a) - 1 and the (variational) nonclassicality quantumness.
The classical part is the difference in both cases. The infimum of the
total over all measurements is a state functional: the matching impurity.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DensityMatrix,
    Povm,
    RankOnePvm,
    commutator,
    trace_norm,
    validate_povm,
)
from .errors import BadDistributionError, BadPartitionError, DimMismatchError
from .optimize import (
    OptimizerConfig,
    SupremumResult,
    quantum_nonclassicality,
    quantum_nonreality,
)

PROB_ATOL = 1e-9


class Flavor(enum.Enum):
    """Which of the two decompositions is being computed."""

    NRE = "NRe"
    NCL = "NCl"


@dataclass(frozen=True)
class Decomposition:
    """Additive split of the total measurement uncertainty.

    classical == total - quantum by construction; diagnostics carries the
    optimizer record for the NCl flavor and is None on the exact NRe path.
    """

    flavor: Flavor
    total: float
    quantum: float
    classical: float
    probs: tuple
    diagnostics: SupremumResult | None = None


def outcome_probs(state: DensityMatrix, povm: Povm) -> list:
    """Born probabilities p_a = Tr{M^a rho}, clamped to [0, 1]."""
    if state.dim != povm.dim:
        raise DimMismatchError(f"state dim {state.dim} != POVM dim {povm.dim}")
    probs = []
    for m in povm.effects:
        p = float(np.trace(m @ state.matrix).real)
        if p < -1e-10 or p > 1.0 + 1e-10:
            raise BadDistributionError(f"probability {p:.12g} outside [0, 1]")
        probs.append(min(max(p, 0.0), 1.0))
    total = sum(probs)
    if abs(total - 1.0) > PROB_ATOL:
        raise BadDistributionError(f"probabilities sum to {total:.12g}")
    return probs


def _check_probs(probs):
    p = [float(x) for x in probs]
    for x in p:
        if x < -1e-10 or x > 1.0 + 1e-10:
            raise BadDistributionError(f"probability {x:.12g} outside [0, 1]")
    if abs(sum(p) - 1.0) > PROB_ATOL:
        raise BadDistributionError(f"probabilities sum to {sum(p):.12g}")
    return [min(max(x, 0.0), 1.0) for x in p]


def s_entropy(probs) -> float:
    """sum_a sqrt(p_a (1 - p_a)); zero iff deterministic, maximal at uniform."""
    p = _check_probs(probs)
    return float(sum(math.sqrt(x * (1.0 - x)) for x in p))


def t_entropy(probs) -> float:
    """sum_a sqrt(p_a) - 1; equals half of the order-1/2 Tsallis entropy."""
    p = _check_probs(probs)
    return float(sum(math.sqrt(x) for x in p) - 1.0)


def total_uncertainty(state: DensityMatrix, povm: Povm, flavor: Flavor) -> float:
    """Entropy of the outcome distribution, per the requested flavor."""
    probs = outcome_probs(state, povm)
    return s_entropy(probs) if flavor is Flavor.NRE else t_entropy(probs)


def decompose(state: DensityMatrix, povm: Povm, flavor: Flavor, cfg: OptimizerConfig | None = None) -> Decomposition:
    """Split the total uncertainty into quantum and classical parts.

    The NRe quantum part is exact (commutator trace norms); the NCl quantum
    part runs the multistart supremum and reports its diagnostics.
    """
    if cfg is None:
        cfg = OptimizerConfig()
    probs = outcome_probs(state, povm)
    if flavor is Flavor.NRE:
        total = s_entropy(probs)
        quantum = quantum_nonreality(state, povm)
        diagnostics = None
    else:
        total = t_entropy(probs)
        result = quantum_nonclassicality(state, povm, cfg)
        quantum = result.value
        diagnostics = result
    return Decomposition(
        flavor=flavor,
        total=total,
        quantum=quantum,
        classical=total - quantum,
        probs=tuple(probs),
        diagnostics=diagnostics,
    )


def _state_eigvals(state: DensityMatrix):
    w = np.linalg.eigvalsh(state.matrix)
    return np.clip(w, 0.0, 1.0)


def impurity_s(state: DensityMatrix) -> float:
    """Tr{(rho - rho^2)^(1/2)} = sum_j sqrt(lambda_j - lambda_j^2)."""
    w = _state_eigvals(state)
    return float(np.sqrt(w * (1.0 - w)).sum())


def impurity_t(state: DensityMatrix) -> float:
    """Tr{sqrt(rho)} - 1 = sum_j sqrt(lambda_j) - 1."""
    w = _state_eigvals(state)
    return float(np.sqrt(w).sum() - 1.0)


def infimum_total(state: DensityMatrix, flavor: Flavor):
    """Minimum of the total uncertainty over sharp-effect measurements, with a minimizer.

    The value is the flavor's impurity of the state; it is attained by the
    eigenprojectors of rho (any rank-1 refinement of degenerate blocks gives
    the same value, since only the spectrum enters). The achieving
    measurement commutes with the state, so its quantum part vanishes and
    the minimum is entirely classical; both facts are asserted here.

    The impurity floors the total uncertainty only for measurements whose
    effects have trace at most one (every rank-1 POVM qualifies): coarser
    effects can suppress outcome entropy trivially, down to zero for the
    single-outcome measurement {I}.
    """
    w, v = np.linalg.eigh(state.matrix)
    effects = [np.outer(v[:, j], v[:, j].conj()) for j in range(state.dim)]
    achieving = validate_povm(effects)
    value = impurity_s(state) if flavor is Flavor.NRE else impurity_t(state)
    achieved = total_uncertainty(state, achieving, flavor)
    # sqrt amplifies machine-eps probability noise to ~1.5e-8 when an
    # eigenvalue sits at 0 or 1, so the self-check tolerance cannot be
    # tighter than sqrt(eps) for rank-deficient states
    if abs(achieved - value) > 1e-7:
        raise AssertionError(
            f"eigenbasis measurement scores {achieved!r}, expected impurity {value!r}"
        )
    quant = quantum_nonreality(state, achieving)
    if quant > 1e-9:
        raise AssertionError(f"achieving POVM has nonzero quantum part {quant!r}")
    return value, achieving


def coarse_grain(povm: Povm, partition) -> Povm:
    """Merge effects over a disjoint partition of the outcome indices."""
    blocks = [tuple(int(i) for i in block) for block in partition]
    seen = sorted(i for block in blocks for i in block)
    if seen != list(range(povm.n_outcomes)):
        raise BadPartitionError(
            f"partition {blocks} does not cover indices 0..{povm.n_outcomes - 1} exactly once"
        )
    effects = []
    labels = []
    for block in blocks:
        effects.append(np.sum([povm.effects[i] for i in block], axis=0))
        labels.append("+".join(povm.labels[i] for i in block))
    return validate_povm(effects, labels)


def _corner_values(d: int):
    # +1/-1 sign vectors with first entry pinned to +1 (global sign is immaterial)
    for rest in itertools.product((1.0, -1.0), repeat=d - 1):
        yield np.array((1.0,) + rest)


def bound_asymmetry(state: DensityMatrix, pvm: RankOnePvm, cfg: OptimizerConfig | None = None) -> float:
    """Largest normalized commutator trace norm over observables diagonal in the basis.

    Maximizes ||[A, rho]||_1 / (2 ||A||_inf) with A = sum_j lambda_j Pi^j.
    The objective is scale invariant, so eigenvalues live in [-1, 1]; it is
    convex in lambda, so sign corners are exhaustive for the dimensions
    handled here (corner set evaluated for d <= 10), with multistart
    coordinate ascent as refinement on top.
    """
    if cfg is None:
        cfg = OptimizerConfig()
    d = state.dim
    if pvm.dim != d:
        raise DimMismatchError(f"state dim {d} != PVM dim {pvm.dim}")
    rho = state.matrix
    projs = pvm.projectors()

    def objective(lam: np.ndarray) -> float:
        scale = float(np.abs(lam).max())
        if scale < 1e-12:
            return 0.0
        a_op = np.sum([x * p for x, p in zip(lam, projs)], axis=0)
        return 0.5 * trace_norm(commutator(a_op, rho)) / scale

    best = 0.0
    if d <= 10:
        for lam in _corner_values(d):
            best = max(best, objective(lam))

    def refine(lam0: np.ndarray) -> float:
        lam = lam0.copy()
        val = objective(lam)
        step = 0.25
        while step > 1e-5:
            improved = False
            for j in range(d):
                for s in (step, -step):
                    cand = lam.copy()
                    cand[j] = min(1.0, max(-1.0, cand[j] + s))
                    v = objective(cand)
                    if v > val + 1e-13:
                        lam, val = cand, v
                        improved = True
            if not improved:
                step *= 0.5
        return val

    n_starts = min(cfg.n_restarts, 8)
    for r in range(n_starts):
        rng = np.random.default_rng([cfg.seed, 2, r])
        best = max(best, refine(rng.uniform(-1.0, 1.0, size=d)))
    return best


def uncertainty_relation_bound(
    state: DensityMatrix,
    pvm_a: RankOnePvm,
    pvm_b: RankOnePvm,
    cfg: OptimizerConfig | None = None,
) -> float:
    """Largest normalized |Tr{[A, B] rho}| over observables diagonal in each basis.

    Tr{[A, B] rho} is bilinear in the eigenvalue vectors and purely
    imaginary, so the box maximum sits at sign corners; for one side the
    optimal corner is the sign pattern of a matrix-vector product, making
    the corner sweep exact. Alternating sign iterations from random starts
    refine larger dimensions.
    """
    if cfg is None:
        cfg = OptimizerConfig()
    d = state.dim
    if pvm_a.dim != d or pvm_b.dim != d:
        raise DimMismatchError(f"state dim {d} vs bases {pvm_a.dim}, {pvm_b.dim}")
    rho = state.matrix
    pa = pvm_a.projectors()
    pb = pvm_b.projectors()
    # c[j, k] = Tr{[Pi_a^j, Pi_b^k] rho} is purely imaginary; work with its imag part
    c = np.empty((d, d))
    for j in range(d):
        for k in range(d):
            c[j, k] = float(np.trace(commutator(pa[j], pb[k]) @ rho).imag)

    best = 0.0
    if d <= 6:
        for beta in _corner_values(d):
            best = max(best, float(np.abs(c @ beta).sum()))
    else:
        n_starts = max(4, min(cfg.n_restarts, 16))
        for r in range(n_starts):
            rng = np.random.default_rng([cfg.seed, 3, r])
            beta = np.sign(rng.standard_normal(d))
            beta[beta == 0] = 1.0
            for _ in range(50):
                alpha = np.sign(c @ beta)
                alpha[alpha == 0] = 1.0
                new_beta = np.sign(c.T @ alpha)
                new_beta[new_beta == 0] = 1.0
                if np.array_equal(new_beta, beta):
                    break
                beta = new_beta
            best = max(best, float(abs(alpha @ c @ beta)))
    return best
