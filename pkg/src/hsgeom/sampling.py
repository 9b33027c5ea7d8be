"""Random density matrices distributed by the Hilbert-Schmidt measure.

Two equivalent constructions are provided: projecting a Ginibre matrix
(``rho = A^dag A / tr A^dag A``) and partial-tracing a random pure state of
a doubled system.  The real-symmetric ensemble uses an N x (N+1) Gaussian
matrix, which is the rectangular shape whose Wishart exponent vanishes and
reproduces the linear eigenvalue repulsion of the real HS measure; this
choice is validated statistically in the verify module rather than assumed.

Randomness comes from numpy's Philox counter-based generator keyed by
``(seed, stream)``, so independent streams for parallel chunks are cheap
and draws are reproducible regardless of thread count.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

__all__ = [
    "make_rng",
    "sample_hs_density",
    "sample_hs_batch",
    "sample_pure_partial_trace",
    "sample_pure_partial_trace_batch",
    "eigvals_hermitian",
    "gell_mann_basis",
    "bloch_vector",
    "density_from_bloch",
    "is_positive",
]

_MASK64 = (1 << 64) - 1

HERMITICITY_TOL = 1e-12
POSITIVITY_TOL = 1e-10


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Counter-based generator for the given (seed, stream) pair.

    Distinct streams are statistically independent, so parallel workers can
    each take one stream without coordination.
    """
    if seed < 0 or stream < 0:
        raise ValueError("seed and stream must be nonnegative")
    return np.random.Generator(np.random.Philox(key=[seed & _MASK64, stream & _MASK64]))


def _ginibre(n: int, field: str, rng: np.random.Generator, size: int) -> np.ndarray:
    if field == "complex":
        return rng.standard_normal((size, n, n)) + 1j * rng.standard_normal((size, n, n))
    if field == "real":
        return rng.standard_normal((size, n, n + 1))
    raise ValueError(f"field must be 'complex' or 'real', got {field!r}")


def sample_hs_batch(n: int, field: str, rng: np.random.Generator, size: int) -> np.ndarray:
    """Batch of HS-distributed density matrices, shape (size, n, n).

    Parameters
    ----------
    n : matrix size, >= 2.
    field : 'complex' for Hermitian matrices, 'real' for real symmetric.
    rng : generator from ``make_rng`` (or any numpy Generator).
    size : number of samples.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    a = _ginibre(n, field, rng, size)
    if field == "complex":
        w = np.einsum("sji,sjk->sik", a.conj(), a)
    else:
        w = np.einsum("sij,skj->sik", a, a)
    tr = np.einsum("sii->s", w).real
    # tr == 0 has probability zero; redraw defensively if it ever happens.
    while np.any(tr == 0):
        bad = np.flatnonzero(tr == 0)
        a = _ginibre(n, field, rng, bad.size)
        if field == "complex":
            w[bad] = np.einsum("sji,sjk->sik", a.conj(), a)
        else:
            w[bad] = np.einsum("sij,skj->sik", a, a)
        tr = np.einsum("sii->s", w).real
    return w / tr[:, None, None]


def sample_hs_density(n: int, field: str = "complex", rng: np.random.Generator | None = None) -> np.ndarray:
    """One HS-distributed density matrix of size n."""
    if rng is None:
        raise ValueError("pass an explicit rng; sampling is always seeded here")
    return sample_hs_batch(n, field, rng, 1)[0]


def sample_pure_partial_trace_batch(n: int, rng: np.random.Generator, size: int) -> np.ndarray:
    """HS samples via partial trace of random pure states of an n x n system."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    # A Haar-random unit vector in C^(n^2), reshaped to n x n; the norm
    # cancels in the trace division so the Gaussian need not be normalized.
    c = rng.standard_normal((size, n, n)) + 1j * rng.standard_normal((size, n, n))
    w = np.einsum("sij,skj->sik", c, c.conj())
    tr = np.einsum("sii->s", w).real
    while np.any(tr == 0):
        bad = np.flatnonzero(tr == 0)
        c = rng.standard_normal((bad.size, n, n)) + 1j * rng.standard_normal((bad.size, n, n))
        w[bad] = np.einsum("sij,skj->sik", c, c.conj())
        tr = np.einsum("sii->s", w).real
    return w / tr[:, None, None]


def sample_pure_partial_trace(n: int, rng: np.random.Generator) -> np.ndarray:
    """One HS-distributed density matrix obtained by the partial-trace construction."""
    return sample_pure_partial_trace_batch(n, rng, 1)[0]


def eigvals_hermitian(h: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Eigenvalues of a Hermitian (or stacked Hermitian) matrix, nonincreasing.

    Raises if the input deviates from Hermiticity by more than ``tol``
    (absolute, entrywise).
    """
    h = np.asarray(h)
    if h.ndim < 2 or h.shape[-1] != h.shape[-2]:
        raise ValueError(f"expected square matrices, got shape {h.shape}")
    defect = np.abs(h - np.conj(np.swapaxes(h, -1, -2))).max()
    if defect > tol:
        raise ValueError(f"matrix is not Hermitian to {tol:g} (defect {defect:g})")
    return np.linalg.eigvalsh(h)[..., ::-1]


@lru_cache(maxsize=None)
def _gell_mann_cached(n: int) -> np.ndarray:
    d = n * n - 1
    basis = np.zeros((d, n, n), dtype=complex)
    idx = 0
    for j in range(n):
        for k in range(j + 1, n):
            basis[idx, j, k] = basis[idx, k, j] = 1 / np.sqrt(2)
            idx += 1
    for j in range(n):
        for k in range(j + 1, n):
            basis[idx, j, k] = -1j / np.sqrt(2)
            basis[idx, k, j] = 1j / np.sqrt(2)
            idx += 1
    for l in range(1, n):
        diag = np.zeros(n)
        diag[:l] = 1
        diag[l] = -l
        basis[idx, np.arange(n), np.arange(n)] = diag / np.sqrt(l * (l + 1))
        idx += 1
    basis.setflags(write=False)
    return basis


def gell_mann_basis(n: int) -> np.ndarray:
    """Orthonormal traceless Hermitian basis, shape (n^2 - 1, n, n).

    Normalized so tr(b_i b_j) = delta_ij; for n = 2 these are the Pauli
    matrices divided by sqrt(2).
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return _gell_mann_cached(n)


def bloch_vector(rho: np.ndarray) -> np.ndarray:
    """Coherence vector of a density matrix: tau_i = tr(rho b_i), length n^2 - 1."""
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected one square matrix, got shape {rho.shape}")
    basis = gell_mann_basis(rho.shape[0])
    return np.einsum("ij,dji->d", rho, basis).real


def density_from_bloch(tau: np.ndarray, n: int) -> np.ndarray:
    """Matrix I/n + sum_i tau_i b_i; Hermitian and unit trace, not necessarily positive."""
    tau = np.asarray(tau, dtype=float)
    if tau.shape != (n * n - 1,):
        raise ValueError(f"expected {n * n - 1} coefficients for n={n}, got shape {tau.shape}")
    return np.eye(n) / n + np.einsum("d,dij->ij", tau, gell_mann_basis(n))


def is_positive(h: np.ndarray, tol: float = POSITIVITY_TOL) -> bool:
    """True iff the minimum eigenvalue is >= -tol."""
    return bool(eigvals_hermitian(h)[..., -1].min() >= -tol)
