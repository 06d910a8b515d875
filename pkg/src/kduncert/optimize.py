"""Supremum over rank-1 PVM bases: exact where a closed form exists, multistart ascent otherwise.

The nonreality quantumness of a state relative to a POVM has an exact
expression through commutator trace norms, so that path never optimizes.
The nonclassicality quantumness has no closed form; it is evaluated per
effect by coordinate ascent over the unitary manifold from a deterministic
set of structured and Haar-random starts.

Ascent parametrization: the candidate basis is U0 * exp(i H(theta)) with H
built from the elementary Hermitian basis (pair rotations plus diagonal
phases, d^2 real parameters). Accepted moves fold the rotation into U0, so
iterates stay exactly unitary. Step halving refines; stalls trigger probe
sweeps with large angles and exact 2x2 diagonalizers, which cross the
absolute-value kinks that trap plain small-step ascent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DensityMatrix,
    Povm,
    RankOnePvm,
    _haar,
    _pvm_unchecked,
    commutator,
    fourier_matrix,
    mub_bases,
    trace_norm,
)
from .errors import DimMismatchError, ValidationError

_STEP_FLOOR = 3e-9
_BIG_ANGLES = (math.pi / 4, 3 * math.pi / 8, math.pi / 2)
NEGATIVE_CLAMP = 1e-9


@dataclass(frozen=True)
class OptimizerConfig:
    """Multistart ascent knobs; defaults favor accuracy over speed."""

    n_restarts: int = 32
    max_iters: int = 500
    rel_tol: float = 1e-8
    step_init: float = 0.1
    seed: int = 0
    include_structured_starts: bool = True

    def __post_init__(self):
        if self.n_restarts < 1:
            raise ValidationError(f"n_restarts must be >= 1, got {self.n_restarts}")
        if not self.rel_tol > 0:
            raise ValidationError(f"rel_tol must be > 0, got {self.rel_tol}")


@dataclass(frozen=True)
class SupremumResult:
    """Achieved supremum with the maximizing basis and per-restart diagnostics.

    For a single optimization, value == max(per_restart_values) and
    best_basis is the basis of the first restart attaining it within 1e-12.
    For per-effect aggregates (the quantum uncertainties), value sums the
    per-effect suprema, per_restart_values are the restart-synchronized
    aggregates (each <= value), and per_effect_values / per_effect_bases
    carry the individual maximizations.
    """

    value: float
    best_basis: RankOnePvm
    per_restart_values: tuple
    converged: bool
    iterations_used: int
    per_effect_values: tuple | None = None
    per_effect_bases: tuple | None = None


def _rot2(kind: int, c: float):
    cs, sn = math.cos(c), math.sin(c)
    if kind == 0:
        return (cs, 1j * sn, 1j * sn, cs)
    return (cs, -sn, sn, cs)


def _diag2_candidates(m00, m01, m10, m11):
    """Unitaries diagonalizing the Hermitian / anti-Hermitian parts of a 2x2 block."""
    out = []
    for phase in (1.0, 1j):
        a = (m00 / phase).real
        b = (m11 / phase).real
        c = 0.5 * ((m01 / phase) + (m10 / phase).conjugate()).conjugate()
        ac = abs(c)
        if ac < 1e-300:
            continue
        half = 0.5 * (a - b)
        lp = 0.5 * (a + b) + math.hypot(half, ac)
        v0, v1 = c.conjugate(), lp - a
        n = math.hypot(abs(v0), abs(v1))
        if n < 1e-300:
            continue
        v0, v1 = v0 / n, v1 / n
        out.append((v0, -v1, v1, v0.conjugate()))
    return out


def _ascend_abs(k_op: np.ndarray, u0: np.ndarray, max_iters: int, rel_tol: float, step_init: float):
    """Maximize sum_b |u_b^dag K u_b| by pair-coordinate ascent on the basis columns.

    Column phases leave every term invariant, so only the d(d-1) pair
    rotations are swept. Cached K-column products make each trial O(d).
    Returns (value, basis, converged, accepting_sweeps + 1).
    """
    d = k_op.shape[0]
    u = np.array(u0, dtype=complex)
    if d == 1:
        return abs(complex(u[:, 0].conj() @ k_op @ u[:, 0])), u, True, 1
    w = k_op @ u
    t = np.einsum("ib,ib->b", u.conj(), w).copy()
    val = float(np.abs(t).sum())
    step = step_init
    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    converged = False
    escape = False
    moves = 0
    # fine angle grid for stall probes; see _ascend_generic. Here each grid
    # point costs only 2x2 scalar algebra, so two scans are nearly free.
    grid = [math.pi * (g + 1) / 49.0 for g in range(48)]
    grid_budget = 2
    for _ in range(max_iters):
        sweep_start = val
        improved = False
        use_grid = escape and grid_budget > 0 and (grid_budget == 2 or step <= 1e-3)
        for (j, k) in pairs:
            uj = u[:, j]
            uk = u[:, k]
            wj = w[:, j]
            wk = w[:, k]
            m00 = t[j]
            m11 = t[k]
            m01 = complex(uj.conj() @ wk)
            m10 = complex(uk.conj() @ wj)
            base = abs(m00) + abs(m11)
            c = step / math.sqrt(2.0)
            cands = [_rot2(0, c), _rot2(0, -c), _rot2(1, c), _rot2(1, -c)]
            if escape:
                for cc in _BIG_ANGLES:
                    cands.append(_rot2(0, cc))
                    cands.append(_rot2(1, cc))
                cands.extend(_diag2_candidates(m00, m01, m10, m11))
                if use_grid:
                    for cc in grid:
                        cands.append(_rot2(0, cc))
                        cands.append(_rot2(1, cc))
            best_gain = 1e-14 * max(1.0, abs(val))
            best = None
            for (r00, r01, r10, r11) in cands:
                n00 = r00.conjugate() * (m00 * r00 + m01 * r10) + r10.conjugate() * (m10 * r00 + m11 * r10)
                n11 = r01.conjugate() * (m00 * r01 + m01 * r11) + r11.conjugate() * (m10 * r01 + m11 * r11)
                gain = abs(n00) + abs(n11) - base
                if gain > best_gain:
                    best_gain = gain
                    best = (r00, r01, r10, r11, n00, n11)
            if best is not None:
                r00, r01, r10, r11, n00, n11 = best
                nuj = uj * r00 + uk * r10
                nuk = uj * r01 + uk * r11
                nwj = wj * r00 + wk * r10
                nwk = wj * r01 + wk * r11
                u[:, j] = nuj
                u[:, k] = nuk
                w[:, j] = nwj
                w[:, k] = nwk
                t[j] = n00
                t[k] = n11
                val += best_gain
                improved = True
                # walk the accepted generator while it keeps paying, so a
                # sweep crosses a whole slope instead of one step of it
                for _ in range(64):
                    m00 = t[j]
                    m11 = t[k]
                    m01 = complex(u[:, j].conj() @ w[:, k])
                    m10 = complex(u[:, k].conj() @ w[:, j])
                    n00 = r00.conjugate() * (m00 * r00 + m01 * r10) + r10.conjugate() * (m10 * r00 + m11 * r10)
                    n11 = r01.conjugate() * (m00 * r01 + m01 * r11) + r11.conjugate() * (m10 * r01 + m11 * r11)
                    gain = abs(n00) + abs(n11) - (abs(m00) + abs(m11))
                    if gain <= 1e-14 * max(1.0, abs(val)):
                        break
                    uj = u[:, j].copy()
                    uk = u[:, k].copy()
                    wj = w[:, j].copy()
                    wk = w[:, k].copy()
                    u[:, j] = uj * r00 + uk * r10
                    u[:, k] = uj * r01 + uk * r11
                    w[:, j] = wj * r00 + wk * r10
                    w[:, k] = wj * r01 + wk * r11
                    t[j] = n00
                    t[k] = n11
                    val += gain
        if improved:
            moves += 1
            if escape:
                escape = False
                step = step_init
            elif val - sweep_start < rel_tol * max(1.0, abs(val)):
                # tiny progress at a coarse step means refine, not crawl
                if step <= 1e-4:
                    converged = True
                    break
                step *= 0.5
        else:
            if not escape:
                escape = True
                continue
            if use_grid:
                grid_budget -= 1
            escape = False
            step *= 0.5
            if step < _STEP_FLOOR:
                converged = True
                break
    return val, u, converged, moves + 1


def _ascend_generic(fn, u0: np.ndarray, max_iters: int, rel_tol: float, step_init: float):
    """Black-box variant of the ascent: fn maps a basis matrix to a real value.

    Sweeps all d^2 coordinates (pair rotations and diagonal phases); stalls
    trigger large-angle probes. Used where the objective has no separable
    structure to exploit.
    """
    d = u0.shape[0]
    u = np.array(u0, dtype=complex)
    val = float(fn(u))
    if d == 1:
        return val, u, True, 1
    step = step_init
    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    converged = False
    escape = False
    moves = 0
    # stall probes scan a fine angle grid: plateaus of the objective can hide
    # narrow improving craters that fixed large angles miss. The grid is
    # step-independent, so rescanning it at every stall level buys nothing;
    # two scans per restart (first stall, final check) cover it.
    grid = [math.pi * (g + 1) / 49.0 for g in range(48)]
    grid_budget = 2
    for _ in range(max_iters):
        sweep_start = val
        improved = False
        # first scan at the first stall, second reserved for the settled regime
        use_grid = escape and grid_budget > 0 and (grid_budget == 2 or step <= 1e-3)
        for (j, k) in pairs:
            c = step / math.sqrt(2.0)
            angles = [(0, c), (0, -c), (1, c), (1, -c)]
            if escape:
                angles += [(kind, cc) for kind in (0, 1) for cc in _BIG_ANGLES]
                if use_grid:
                    angles += [(kind, cc) for kind in (0, 1) for cc in grid]
            for kind, ang in angles:
                r00, r01, r10, r11 = _rot2(kind, ang)
                cand = u.copy()
                cand[:, j] = u[:, j] * r00 + u[:, k] * r10
                cand[:, k] = u[:, j] * r01 + u[:, k] * r11
                v = float(fn(cand))
                if v > val + 1e-14 * max(1.0, abs(val)):
                    u = cand
                    val = v
                    improved = True
                    for _ in range(64):
                        cand = u.copy()
                        cand[:, j] = u[:, j] * r00 + u[:, k] * r10
                        cand[:, k] = u[:, j] * r01 + u[:, k] * r11
                        v = float(fn(cand))
                        if v <= val + 1e-14 * max(1.0, abs(val)):
                            break
                        u = cand
                        val = v
                    break
        for j in range(d):
            for s in (step, -step):
                cand = u.copy()
                cand[:, j] = u[:, j] * complex(math.cos(s), math.sin(s))
                v = float(fn(cand))
                if v > val + 1e-14 * max(1.0, abs(val)):
                    u = cand
                    val = v
                    improved = True
                    break
        if improved:
            moves += 1
            if escape:
                escape = False
                step = step_init
            elif val - sweep_start < rel_tol * max(1.0, abs(val)):
                if step <= 1e-4:
                    converged = True
                    break
                step *= 0.5
        else:
            if not escape:
                escape = True
                continue
            if use_grid:
                grid_budget -= 1
            escape = False
            step *= 0.5
            if step < _STEP_FLOOR:
                converged = True
                break
    return val, u, converged, moves + 1


def _start_list(d: int, cfg: OptimizerConfig, extra_starts, stream_tag):
    starts = []
    if cfg.include_structured_starts:
        starts.append(np.eye(d, dtype=complex))
        starts.append(fourier_matrix(d))
        starts.extend(np.asarray(s, dtype=complex) for s in extra_starts)
    for r in range(cfg.n_restarts):
        starts.append(_haar(d, np.random.default_rng(list(stream_tag) + [r])))
    return starts


def _pick_best(per_restart, tol=1e-12):
    best = max(per_restart)
    for i, v in enumerate(per_restart):
        if v >= best - tol:
            return i
    return 0


def sup_over_pvm(objective, d: int, cfg: OptimizerConfig, extra_starts=()) -> SupremumResult:
    """Maximize a black-box objective over rank-1 PVM bases of dimension d.

    Starts are the identity and Fourier bases plus any caller-supplied
    structured bases (e.g. the state's eigenbasis), followed by n_restarts
    Haar draws on streams derived from (seed, restart index). The first
    restart attaining the maximum within 1e-12 wins, so results are
    deterministic under a fixed seed regardless of scheduling.
    """

    def fn(u):
        return objective(_pvm_unchecked(u))

    starts = _start_list(d, cfg, extra_starts, (cfg.seed, 0))
    runs = [_ascend_generic(fn, u0, cfg.max_iters, cfg.rel_tol, cfg.step_init) for u0 in starts]
    values = tuple(r[0] for r in runs)
    idx = _pick_best(values)
    _, best_u, conv, iters = runs[idx]
    return SupremumResult(
        value=max(values),
        best_basis=_pvm_unchecked(best_u),
        per_restart_values=values,
        converged=conv,
        iterations_used=iters,
    )


def _sup_abs_diag(k_op: np.ndarray, cfg: OptimizerConfig, extra_starts, stream_tag):
    """Specialized engine for objectives sum_b |u_b^dag K u_b| (runs list shared)."""
    d = k_op.shape[0]
    starts = _start_list(d, cfg, extra_starts, stream_tag)
    runs = [_ascend_abs(k_op, u0, cfg.max_iters, cfg.rel_tol, cfg.step_init) for u0 in starts]
    values = tuple(r[0] for r in runs)
    idx = _pick_best(values)
    return max(values), runs[idx][1], runs[idx][2], runs[idx][3], values


def _check_dims(state: DensityMatrix, povm: Povm):
    if state.dim != povm.dim:
        raise DimMismatchError(f"state dim {state.dim} != POVM dim {povm.dim}")


def quantum_nonreality(state: DensityMatrix, povm: Povm) -> float:
    """Nonreality quantumness of the state relative to the POVM, in closed form.

    Each per-effect supremum of the imaginary l1-mass over PVM bases equals
    half the trace norm of the commutator [M^a, rho], because the
    commutator is normal and the trace norm has a variational expression
    over rank-1 PVMs. No optimization is involved.
    """
    _check_dims(state, povm)
    rho = state.matrix
    return sum(0.5 * trace_norm(commutator(m, rho)) for m in povm.effects)


def _eigbasis(h: np.ndarray) -> np.ndarray:
    return np.linalg.eigh(0.5 * (h + h.conj().T))[1]


def _povm_basis(povm: Povm):
    """Unitary whose columns generate the POVM, when its effects form a rank-1 PVM."""
    d = povm.dim
    if povm.n_outcomes != d:
        return None
    cols = []
    for e in povm.effects:
        w, v = np.linalg.eigh(e)
        if abs(w[-1] - 1.0) > 1e-8:
            return None
        if d > 1 and abs(w[-2]) > 1e-8:
            return None
        cols.append(v[:, -1])
    u = np.column_stack(cols)
    if np.abs(u.conj().T @ u - np.eye(d)).max() > 1e-8:
        return None
    return u


def quantum_nonreality_variational(state: DensityMatrix, povm: Povm, cfg: OptimizerConfig) -> SupremumResult:
    """Nonreality quantumness by explicit per-effect optimization.

    Exists to validate the ascent engine against the exact commutator form;
    production code should call quantum_nonreality instead. Starts are kept
    generic (identity, Fourier, eigenbasis of the state, Haar) so agreement
    with the closed form genuinely exercises the optimizer.
    """
    _check_dims(state, povm)
    rho = state.matrix
    d = state.dim
    extra = [_eigbasis(rho)]
    effect_values = []
    effect_bases = []
    effect_conv = []
    iters = 0
    per_restart = None
    for a, m in enumerate(povm.effects):
        k_op = commutator(m, rho) / 2j
        v, u, conv, it, values = _sup_abs_diag(k_op, cfg, extra, (cfg.seed, a))
        effect_values.append(v)
        effect_bases.append(_pvm_unchecked(u))
        effect_conv.append(conv)
        iters = max(iters, it)
        per_restart = values if per_restart is None else tuple(x + y for x, y in zip(per_restart, values))
    total = float(sum(effect_values))
    idx = int(np.argmax(effect_values))
    return SupremumResult(
        value=total,
        best_basis=effect_bases[idx],
        per_restart_values=per_restart,
        converged=all(effect_conv),
        iterations_used=iters,
        per_effect_values=tuple(effect_values),
        per_effect_bases=tuple(effect_bases),
    )


def quantum_nonclassicality(state: DensityMatrix, povm: Povm, cfg: OptimizerConfig) -> SupremumResult:
    """Nonclassicality quantumness: per-effect suprema of the modulus mass, minus one.

    Each effect is maximized independently over rank-1 PVM bases. Structured
    starts add the mutually-unbiased family (exact maximizers for pure
    states), their lifts by the measurement basis when the POVM is itself a
    rank-1 PVM, the state eigenbasis, and eigenbases of the Hermitian parts
    of M^a rho; all are covariant under simultaneous unitaries, which keeps
    the reported value basis-independent in practice.
    """
    _check_dims(state, povm)
    rho = state.matrix
    d = state.dim
    mubs = mub_bases(d)
    basis_u = _povm_basis(povm)
    common = list(mubs)
    if basis_u is not None:
        common.append(basis_u)
        common.extend(basis_u @ m for m in mubs)
    common.append(_eigbasis(rho))
    effect_values = []
    effect_bases = []
    effect_conv = []
    iters = 0
    per_restart = None
    for a, m in enumerate(povm.effects):
        k_op = m @ rho
        # eigenbases of phase-rotated Hermitian parts: covariant under
        # simultaneous unitaries and close to the maximizer for many K
        extra = common + [
            _eigbasis(k_op * complex(math.cos(t), -math.sin(t)))
            for t in (0.0, math.pi / 4, math.pi / 2, 3 * math.pi / 4)
        ]
        v, u, conv, it, values = _sup_abs_diag(k_op, cfg, extra, (cfg.seed, a))
        effect_values.append(v)
        effect_bases.append(_pvm_unchecked(u))
        effect_conv.append(conv)
        iters = max(iters, it)
        per_restart = values if per_restart is None else tuple(x + y for x, y in zip(per_restart, values))
    total = float(sum(effect_values)) - 1.0
    if -NEGATIVE_CLAMP <= total < 0.0:
        total = 0.0
    idx = int(np.argmax(effect_values))
    return SupremumResult(
        value=total,
        best_basis=effect_bases[idx],
        per_restart_values=tuple(v - 1.0 for v in per_restart),
        converged=all(effect_conv),
        iterations_used=iters,
        per_effect_values=tuple(effect_values),
        per_effect_bases=tuple(effect_bases),
    )


def brute_force_sup_qubit(objective, grid_density: int) -> float:
    """Exhaustive qubit oracle: scan Bloch angles on a nested grid, then refine.

    The grid is theta = pi k / g (k = 0..g), phi = 2 pi j / (2g), so doubling
    grid_density only adds points and the scanned maximum is monotone in g.
    Golden-section refinement around the best cell alternates axes; the
    returned value is the maximum over every evaluation.
    """
    g = int(grid_density)
    if g < 2:
        raise ValidationError(f"grid_density must be >= 2, got {g}")

    def value(theta, phi):
        ct, st = math.cos(theta / 2.0), math.sin(theta / 2.0)
        ph = complex(math.cos(phi), math.sin(phi))
        u = np.array([[ct, -ph.conjugate() * st], [ph * st, ct]], dtype=complex)
        return float(objective(_pvm_unchecked(u)))

    best = -math.inf
    best_t = best_p = 0.0
    for k in range(g + 1):
        theta = math.pi * k / g
        for j in range(2 * g):
            phi = math.pi * j / g
            v = value(theta, phi)
            if v > best:
                best, best_t, best_p = v, theta, phi

    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0

    def golden(fn, lo, hi, rounds=40):
        nonlocal best
        a, b = lo, hi
        x1 = b - inv_phi * (b - a)
        x2 = a + inv_phi * (b - a)
        f1, f2 = fn(x1), fn(x2)
        for _ in range(rounds):
            if f1 < f2:
                a, x1, f1 = x1, x2, f2
                x2 = a + inv_phi * (b - a)
                f2 = fn(x2)
            else:
                b, x2, f2 = x2, x1, f1
                x1 = b - inv_phi * (b - a)
                f1 = fn(x1)
        x = 0.5 * (a + b)
        fx = fn(x)
        best = max(best, fx)
        return x

    dt = math.pi / g
    for _ in range(3):
        best_t = golden(lambda t: value(t, best_p), max(0.0, best_t - dt), min(math.pi, best_t + dt))
        best_p = golden(lambda p: value(best_t, p), best_p - dt, best_p + dt)
    return best


def sup_over_product_pvm(objective, dims, cfg: OptimizerConfig, extra_starts=()) -> SupremumResult:
    """Maximize over product bases Pi^{b_1} x ... x Pi^{b_N}, one unitary per factor.

    Same multistart contract as sup_over_pvm, with coordinate ascent cycling
    over each factor's pair rotations. extra_starts entries are tuples of
    per-factor matrices.
    """
    dims = [int(x) for x in dims]
    if any(x < 1 for x in dims):
        raise DimMismatchError(f"invalid factor dims {dims}")
    total_d = 1
    for x in dims:
        total_d *= x

    def kron_all(mats):
        out = mats[0]
        for m in mats[1:]:
            out = np.kron(out, m)
        return out

    def fn(mats):
        return float(objective(_pvm_unchecked(kron_all(mats))))

    starts = []
    if cfg.include_structured_starts:
        starts.append([np.eye(x, dtype=complex) for x in dims])
        starts.append([fourier_matrix(x) for x in dims])
        for s in extra_starts:
            starts.append([np.asarray(m, dtype=complex) for m in s])
    for r in range(cfg.n_restarts):
        # same stream as sup_over_pvm so a single-factor run is identical to it
        rng = np.random.default_rng([cfg.seed, 0, r])
        starts.append([_haar(x, rng) for x in dims])

    def ascend_product(mats0):
        mats = [np.array(m, dtype=complex) for m in mats0]
        val = fn(mats)
        step = cfg.step_init
        converged = False
        escape = False
        moves = 0
        factor_pairs = [
            (f, j, k) for f, x in enumerate(dims) for j in range(x) for k in range(j + 1, x)
        ]
        if not factor_pairs:
            return val, mats, True, 1
        grid = [math.pi * (g + 1) / 49.0 for g in range(48)]
        grid_budget = 2
        for _ in range(cfg.max_iters):
            sweep_start = val
            improved = False
            use_grid = escape and grid_budget > 0 and (grid_budget == 2 or step <= 1e-3)
            for (f, j, k) in factor_pairs:
                c = step / math.sqrt(2.0)
                angles = [(0, c), (0, -c), (1, c), (1, -c)]
                if escape:
                    angles += [(kind, cc) for kind in (0, 1) for cc in _BIG_ANGLES]
                    if use_grid:
                        angles += [(kind, cc) for kind in (0, 1) for cc in grid]
                for kind, ang in angles:
                    r00, r01, r10, r11 = _rot2(kind, ang)
                    cand = mats[f].copy()
                    cand[:, j] = mats[f][:, j] * r00 + mats[f][:, k] * r10
                    cand[:, k] = mats[f][:, j] * r01 + mats[f][:, k] * r11
                    trial = list(mats)
                    trial[f] = cand
                    v = fn(trial)
                    if v > val + 1e-14 * max(1.0, abs(val)):
                        mats = trial
                        val = v
                        improved = True
                        for _ in range(64):
                            cand = mats[f].copy()
                            cand[:, j] = mats[f][:, j] * r00 + mats[f][:, k] * r10
                            cand[:, k] = mats[f][:, j] * r01 + mats[f][:, k] * r11
                            trial = list(mats)
                            trial[f] = cand
                            v = fn(trial)
                            if v <= val + 1e-14 * max(1.0, abs(val)):
                                break
                            mats = trial
                            val = v
                        break
            if improved:
                moves += 1
                if escape:
                    escape = False
                    step = cfg.step_init
                elif val - sweep_start < cfg.rel_tol * max(1.0, abs(val)):
                    if step <= 1e-4:
                        converged = True
                        break
                    step *= 0.5
            else:
                if not escape:
                    escape = True
                    continue
                if use_grid:
                    grid_budget -= 1
                escape = False
                step *= 0.5
                if step < _STEP_FLOOR:
                    converged = True
                    break
        return val, mats, converged, moves + 1

    runs = [ascend_product(s) for s in starts]
    values = tuple(r[0] for r in runs)
    idx = _pick_best(values)
    _, best_mats, conv, iters = runs[idx]
    return SupremumResult(
        value=max(values),
        best_basis=_pvm_unchecked(kron_all(best_mats)),
        per_restart_values=values,
        converged=conv,
        iterations_used=iters,
    )
