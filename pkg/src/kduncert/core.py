"""Validated quantum objects and the dense complex linear algebra they need.

Operators are plain complex numpy arrays; the dataclasses below wrap them
with validated invariants (Hermiticity, positivity, completeness, unitarity)
and are immutable after construction. All randomness is driven by explicit
seeds, never shared state.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadRankError,
    DimMismatchError,
    IncompleteSumError,
    EffectNotPsdError,
    NotHermitianError,
    NotPsdError,
    NotUnitaryError,
    NotUnitTraceError,
    SingularSumError,
    ValidationError,
)

HERM_ATOL = 1e-10       # Hermiticity / PSD / unitarity validation
COMPLETENESS_ATOL = 1e-9  # POVM and projector completeness
DEGENERACY_GAP = 1e-9   # eigenvalues closer than this share one eigenprojector


def as_operator(m) -> np.ndarray:
    """Coerce input to a square complex matrix with finite entries."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.real)) or not np.all(np.isfinite(a.imag)):
        raise ValidationError("matrix has non-finite entries")
    return a


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


def herm_deviation(m: np.ndarray) -> float:
    return float(np.abs(m - m.conj().T).max())


@dataclass(frozen=True)
class DensityMatrix:
    """Trace-one positive-semidefinite Hermitian operator."""

    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)


@dataclass(frozen=True)
class Povm:
    """Finite list of PSD effects resolving the identity."""

    effects: tuple
    labels: tuple

    @property
    def dim(self) -> int:
        return self.effects[0].shape[0]

    @property
    def n_outcomes(self) -> int:
        return len(self.effects)


@dataclass(frozen=True)
class RankOnePvm:
    """Orthonormal rank-1 projector basis, stored as the unitary of its columns."""

    basis_unitary: np.ndarray

    @property
    def dim(self) -> int:
        return self.basis_unitary.shape[0]

    def vector(self, b: int) -> np.ndarray:
        return self.basis_unitary[:, b]

    def projector(self, b: int) -> np.ndarray:
        v = self.basis_unitary[:, b]
        return np.outer(v, v.conj())

    def projectors(self) -> list:
        return [self.projector(b) for b in range(self.dim)]

    def as_povm(self) -> Povm:
        effects = tuple(_frozen(p) for p in self.projectors())
        labels = tuple(str(b) for b in range(self.dim))
        return Povm(effects=effects, labels=labels)


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (descending, degeneracies merged) with their eigenprojectors."""

    eigenvalues: tuple
    eigenprojectors: tuple


def validate_density(m) -> DensityMatrix:
    """Validate Hermiticity, unit trace and positivity; return a DensityMatrix."""
    a = as_operator(m)
    dev = herm_deviation(a)
    if dev > HERM_ATOL:
        raise NotHermitianError(f"state is not Hermitian: max |m - m^dag| = {dev:.3e}")
    tr = complex(np.trace(a))
    if abs(tr - 1.0) > HERM_ATOL:
        raise NotUnitTraceError(f"state trace is {tr:.12g}, deviation {abs(tr - 1.0):.3e}")
    w = np.linalg.eigvalsh(0.5 * (a + a.conj().T))
    if w[0] < -HERM_ATOL:
        raise NotPsdError(f"state is not PSD: min eigenvalue {w[0]:.3e}")
    return DensityMatrix(matrix=_frozen(a))


def validate_povm(effects, labels=None) -> Povm:
    """Validate each effect (Hermitian PSD) and completeness; return a Povm."""
    if len(effects) == 0:
        raise ValidationError("a POVM needs at least one effect")
    ops = [as_operator(e) for e in effects]
    d = ops[0].shape[0]
    for i, e in enumerate(ops):
        if e.shape[0] != d:
            raise DimMismatchError(f"effect {i} has dim {e.shape[0]}, expected {d}")
        dev = herm_deviation(e)
        if dev > HERM_ATOL:
            raise EffectNotPsdError(f"effect {i} is not Hermitian: deviation {dev:.3e}")
        w = np.linalg.eigvalsh(0.5 * (e + e.conj().T))
        if w[0] < -HERM_ATOL:
            raise EffectNotPsdError(f"effect {i} is not PSD: min eigenvalue {w[0]:.3e}")
    total = sum(ops)
    dev = float(np.abs(total - np.eye(d)).max())
    if dev > COMPLETENESS_ATOL:
        raise IncompleteSumError(f"effects do not resolve identity: max |sum - I| = {dev:.3e}")
    if labels is None:
        labels = tuple(str(i) for i in range(len(ops)))
    else:
        labels = tuple(str(x) for x in labels)
        if len(labels) != len(ops):
            raise ValidationError(f"{len(labels)} labels for {len(ops)} effects")
    return Povm(effects=tuple(_frozen(e) for e in ops), labels=labels)


def rank_one_pvm(u) -> RankOnePvm:
    """Validate unitarity of the column basis; return a RankOnePvm."""
    a = as_operator(u)
    d = a.shape[0]
    dev = float(np.abs(a.conj().T @ a - np.eye(d)).max())
    if dev > HERM_ATOL:
        raise NotUnitaryError(f"basis is not unitary: max |U^dag U - I| = {dev:.3e}")
    return RankOnePvm(basis_unitary=_frozen(a))


def _pvm_unchecked(u: np.ndarray) -> RankOnePvm:
    # internal hot path: caller guarantees unitarity
    return RankOnePvm(basis_unitary=u)


def spectral_decompose(h) -> SpectralDecomposition:
    """Eigendecompose a Hermitian operator, merging eigenvalues closer than DEGENERACY_GAP.

    Eigenvalues come out descending; each projector has rank equal to the
    multiplicity of its (merged) eigenvalue, so the decomposition is unique
    even for degenerate spectra.
    """
    a = as_operator(h)
    dev = herm_deviation(a)
    if dev > HERM_ATOL:
        raise NotHermitianError(f"operator is not Hermitian: deviation {dev:.3e}")
    w, v = np.linalg.eigh(0.5 * (a + a.conj().T))
    w, v = w[::-1], v[:, ::-1]
    values = []
    projectors = []
    i = 0
    while i < len(w):
        j = i + 1
        while j < len(w) and w[j - 1] - w[j] < DEGENERACY_GAP:
            j += 1
        block = v[:, i:j]
        values.append(float(np.mean(w[i:j])))
        projectors.append(_frozen(block @ block.conj().T))
        i = j
    return SpectralDecomposition(eigenvalues=tuple(values), eigenprojectors=tuple(projectors))


def trace_norm(m) -> float:
    """Schatten 1-norm: the sum of singular values."""
    a = as_operator(m)
    return float(np.linalg.svd(a, compute_uv=False).sum())


def operator_norm(m) -> float:
    """Largest singular value."""
    a = as_operator(m)
    return float(np.linalg.svd(a, compute_uv=False)[0])


def operator_sqrt(h) -> np.ndarray:
    """Square root of a PSD Hermitian operator in its eigenbasis.

    Eigenvalues in [-HERM_ATOL, 0) are clamped to zero; anything more
    negative is an error, never silently fixed.
    """
    a = as_operator(h)
    dev = herm_deviation(a)
    if dev > HERM_ATOL:
        raise NotHermitianError(f"operator is not Hermitian: deviation {dev:.3e}")
    w, v = np.linalg.eigh(0.5 * (a + a.conj().T))
    if w[0] < -HERM_ATOL:
        raise NotPsdError(f"operator is not PSD: min eigenvalue {w[0]:.3e}")
    w = np.sqrt(np.clip(w, 0.0, None))
    return (v * w) @ v.conj().T


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a @ b - b @ a


def _haar(d: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(z)
    diag = np.diag(r)
    return q * (diag / np.abs(diag))


def haar_random_unitary(d: int, seed) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Ginibre matrix.

    The R diagonal is phase-corrected so the distribution is exactly Haar
    (plain QR is not). Deterministic for a given seed.
    """
    if d < 1:
        raise ValidationError(f"dimension must be >= 1, got {d}")
    return _haar(d, np.random.default_rng(seed))


def random_density(d: int, rank: int, seed) -> DensityMatrix:
    """Random state from the Ginibre ensemble: G G^dag / Tr, with G of shape d x rank."""
    if not 1 <= rank <= d:
        raise BadRankError(f"rank must be in [1, {d}], got {rank}")
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    m = g @ g.conj().T
    return validate_density(m / np.trace(m).real)


def random_povm(d: int, n_outcomes: int, seed) -> Povm:
    """Random POVM by symmetrized normalization of Ginibre PSD draws.

    M^i = S^{-1/2} A_i S^{-1/2} with A_i = G_i G_i^dag and S = sum A_i,
    which resolves identity exactly up to roundoff.
    """
    if n_outcomes < 1:
        raise ValidationError(f"n_outcomes must be >= 1, got {n_outcomes}")
    rng = np.random.default_rng(seed)
    draws = []
    for _ in range(n_outcomes):
        g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
        draws.append(g @ g.conj().T)
    total = np.sum(draws, axis=0)
    w, v = np.linalg.eigh(total)
    if w[0] < 1e-12:
        raise SingularSumError(f"effect sum is singular: min eigenvalue {w[0]:.3e}")
    inv_sqrt = (v / np.sqrt(w)) @ v.conj().T
    effects = [inv_sqrt @ a @ inv_sqrt for a in draws]
    return validate_povm(effects)


def tensor(a, b) -> np.ndarray:
    """Kronecker product."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


def partial_trace(m, dims, keep: int) -> np.ndarray:
    """Reduce a bipartite operator to one factor.

    dims is (d1, d2); keep is 0 for the first factor, 1 for the second.
    """
    d1, d2 = int(dims[0]), int(dims[1])
    a = as_operator(m)
    if a.shape[0] != d1 * d2:
        raise DimMismatchError(f"operator dim {a.shape[0]} != {d1} * {d2}")
    if keep not in (0, 1):
        raise ValidationError(f"keep must be 0 or 1, got {keep}")
    t = a.reshape(d1, d2, d1, d2)
    if keep == 0:
        return np.trace(t, axis1=1, axis2=3)
    return np.trace(t, axis1=0, axis2=2)


def fourier_matrix(d: int) -> np.ndarray:
    """Discrete Fourier unitary; its columns are unbiased to the computational basis."""
    j = np.arange(d)
    return np.exp(2j * np.pi * np.outer(j, j) / d) / np.sqrt(d)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def mub_bases(d: int) -> list:
    """Bases mutually unbiased to the computational basis (and to each other for prime d).

    For prime d this is the standard quadratic-phase Fourier family; for
    composite d only the plain Fourier basis is returned.
    """
    f = fourier_matrix(d)
    if d == 2:
        return [f, np.diag([1.0, 1.0j]) @ f]
    if not _is_prime(d):
        return [f]
    m = np.arange(d)
    return [np.diag(np.exp(2j * np.pi * k * m * m / d)) @ f for k in range(d)]
