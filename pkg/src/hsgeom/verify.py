"""Monte Carlo cross-checks of the exact formulas.

Each check ties one side of the package to the other: sampled spectra
against the closed-form eigenvalue densities, simplex integrals against
the exact normalization constants, and uniform sampling of the Bloch ball
against the exact volume ratio.  Estimators are chunked with one Philox
stream per chunk and merged in chunk order, so results are bit-identical
for any worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import integrate
from scipy.stats import chi2

from .constants import EnsembleParams, c_norm, log_c_norm
from .exactnum import exact_sqrt
from .groups import ball_volume
from .mixedstates import StateSpace, vol_mixed
from .sampling import (
    POSITIVITY_TOL,
    gell_mann_basis,
    make_rng,
    sample_hs_batch,
)

__all__ = [
    "MCEstimate",
    "mc_norm_constant",
    "mc_purity",
    "mc_hit_or_miss_fraction",
    "spectral_fit_test",
    "check_norm_constant",
    "check_purity",
    "check_hit_or_miss",
    "check_spectral",
    "run_suite",
    "SUITES",
]


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    stderr: float
    n_samples: int
    seed: int
    chunks: int


def _chunked_mean(chunk_fn, n_samples: int, seed: int, chunks: int, workers: int) -> MCEstimate:
    """Mean/stderr of ``chunk_fn(rng, size)`` values over ``chunks`` streams.

    The reduction is a fixed-order sum over per-chunk (sum, sum-of-squares)
    pairs, which is what makes the estimate independent of ``workers``.
    """
    if n_samples <= 0 or chunks <= 0:
        raise ValueError("n_samples and chunks must be positive")
    if n_samples % chunks:
        raise ValueError(f"n_samples={n_samples} must be divisible by chunks={chunks}")
    size = n_samples // chunks

    def one(stream: int) -> tuple[float, float]:
        values = np.asarray(chunk_fn(make_rng(seed, stream), size), dtype=float)
        return float(values.sum()), float(np.square(values).sum())

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            stats = list(pool.map(one, range(chunks)))
    else:
        stats = [one(i) for i in range(chunks)]

    total = math.fsum(s for s, _ in stats)
    total_sq = math.fsum(ss for _, ss in stats)
    mean = total / n_samples
    var = max(total_sq - n_samples * mean * mean, 0.0) / (n_samples - 1) if n_samples > 1 else 0.0
    return MCEstimate(
        mean=mean,
        stderr=math.sqrt(var / n_samples),
        n_samples=n_samples,
        seed=seed,
        chunks=chunks,
    )


def mc_norm_constant(
    n: int,
    alpha: float,
    beta: float,
    n_samples: int,
    seed: int,
    chunks: int = 10,
    workers: int = 1,
) -> MCEstimate:
    """Importance-sampling estimate of 1/C_n^(alpha, beta).

    Eigenvalues are drawn from Dirichlet(alpha, ..., alpha), which matches
    the prod L^(alpha-1) factor of the target exactly and leaves only the
    eigenvalue-repulsion product as weight.  The variance grows quickly
    with n; fine for n <= 4, exposed but high-variance beyond that.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"alpha and beta must be positive, got ({alpha}, {beta})")
    # Dirichlet density = Gamma(n a)/Gamma(a)^n * prod L^(a-1); only its
    # constant part needs undoing.
    log_dirichlet_const = math.lgamma(n * alpha) - n * math.lgamma(alpha)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]

    def chunk(rng: np.random.Generator, size: int) -> np.ndarray:
        lam = rng.dirichlet([alpha] * n, size)
        w = np.full(size, math.exp(-log_dirichlet_const))
        for i, j in pairs:
            w *= np.abs(lam[:, i] - lam[:, j]) ** beta
        return w

    return _chunked_mean(chunk, n_samples, seed, chunks, workers)


def mc_purity(
    n: int,
    field: str,
    n_samples: int,
    seed: int,
    chunks: int = 10,
    workers: int = 1,
) -> MCEstimate:
    """Mean purity tr(rho^2) over HS-distributed density matrices."""

    def chunk(rng: np.random.Generator, size: int) -> np.ndarray:
        rho = sample_hs_batch(n, field, rng, size)
        return np.einsum("sij,sij->s", rho, rho.conj()).real

    return _chunked_mean(chunk, n_samples, seed, chunks, workers)


def mc_hit_or_miss_fraction(
    n: int,
    n_samples: int,
    seed: int,
    chunks: int = 10,
    workers: int = 1,
) -> MCEstimate:
    """Fraction of points of the radius-R_N coherence-vector ball that are states.

    The expected value is the exact volume of the state space divided by the
    volume of that ball.
    """
    d = n * n - 1
    radius = math.sqrt((n - 1) / n)
    basis = gell_mann_basis(n)
    eye = np.eye(n) / n

    def chunk(rng: np.random.Generator, size: int) -> np.ndarray:
        g = rng.standard_normal((size, d))
        u = rng.random(size)
        scale = radius * u ** (1.0 / d) / np.linalg.norm(g, axis=1)
        rho = eye + np.einsum("s,sd,dij->sij", scale, g, basis)
        lowest = np.linalg.eigvalsh(rho)[:, 0]
        return (lowest >= -POSITIVITY_TOL).astype(float)

    return _chunked_mean(chunk, n_samples, seed, chunks, workers)


# -- spectral goodness of fit -------------------------------------------------


def _max_eigenvalue_cdf_n3() -> tuple[np.ndarray, np.ndarray]:
    """Grid of P(max eigenvalue <= t) for the complex n=3 density, by quadrature."""
    norm = float(c_norm(EnsembleParams(3, Fraction(1), 2)).to_float())

    def density(y: float, x: float) -> float:
        z = 1.0 - x - y
        return norm * ((x - y) * (y - z) * (x - z)) ** 2

    def cdf(t: float) -> float:
        if t <= 1 / 3:
            return 0.0
        if t >= 1.0:
            return 1.0
        # Region of the simplex where all three eigenvalues are <= t.
        val, _ = integrate.dblquad(
            density,
            max(0.0, 1.0 - 2.0 * t),
            t,
            lambda x: max(0.0, 1.0 - t - x),
            lambda x: min(t, 1.0 - x),
            epsabs=1e-11,
            epsrel=1e-10,
        )
        return val

    ts = np.linspace(1 / 3, 1.0, 321)
    return ts, np.array([cdf(t) for t in ts])


@lru_cache(maxsize=None)
def _cdf_grid(n: int, field: str) -> tuple[tuple[float, ...], tuple[float, ...]]:
    if (n, field) == (3, "complex"):
        ts, cs = _max_eigenvalue_cdf_n3()
        return tuple(ts), tuple(cs)
    raise ValueError(f"no reference spectral marginal for n={n}, field={field!r}")


def _reference_edges(n: int, field: str, bins: int) -> np.ndarray:
    """Equal-probability bin edges of the largest-eigenvalue marginal."""
    u = np.linspace(0.0, 1.0, bins + 1)
    if (n, field) == (2, "complex"):
        # CDF of the ordered top eigenvalue is (2t-1)^3 on [1/2, 1].
        return (1.0 + u ** (1.0 / 3.0)) / 2.0
    if (n, field) == (2, "real"):
        # CDF (2t-1)^2 on [1/2, 1].
        return (1.0 + np.sqrt(u)) / 2.0
    ts, cs = _cdf_grid(n, field)
    edges = np.interp(u, cs, ts)
    edges[0], edges[-1] = ts[0], ts[-1]
    return edges


def spectral_fit_test(
    n: int,
    field: str,
    n_samples: int,
    bins: int,
    seed: int,
    sampler=None,
) -> tuple[float, float]:
    """Chi-square fit of sampled top eigenvalues against the reference marginal.

    Bins are equal-probability under the reference distribution, so every
    expected count is n_samples/bins.  ``sampler(rng, size) -> (size, n)``
    spectra can be supplied to test an alternative generator (used for
    negative controls); the default is the HS sampler itself.

    Returns (statistic, p_value) with bins - 1 degrees of freedom.
    """
    if bins < 5:
        raise ValueError(f"need at least 5 bins, got {bins}")
    rng = make_rng(seed)
    if sampler is None:
        spectra = np.linalg.eigvalsh(sample_hs_batch(n, field, rng, n_samples))
    else:
        spectra = np.asarray(sampler(rng, n_samples))
    lam_max = spectra.max(axis=-1)
    edges = _reference_edges(n, field, bins)
    counts, _ = np.histogram(lam_max, bins=edges)
    expected = n_samples / bins
    statistic = float(((counts - expected) ** 2 / expected).sum())
    return statistic, float(chi2.sf(statistic, bins - 1))


# -- named checks with analytic expectations ----------------------------------

# Mean purity under the HS measure, from integrating the eigenvalue densities
# (the complex n=3 value is confirmed by quadrature in the test suite).
PURITY_ORACLE = {
    (2, "complex"): Fraction(4, 5),
    (2, "real"): Fraction(3, 4),
    (3, "complex"): Fraction(3, 5),
}

SUITES = ("norm", "purity", "spectral", "hitmiss", "all")


def _verdict(check: str, expected: float, est: MCEstimate) -> dict:
    if est.stderr > 0:
        sigmas = abs(est.mean - expected) / est.stderr
        ok = sigmas <= 3.0
    else:
        sigmas = 0.0 if est.mean == expected else None
        ok = est.mean == expected
    return {
        "check": check,
        "expected": expected,
        "estimate": est.mean,
        "stderr": est.stderr,
        "sigmas": sigmas,
        "pass": ok,
    }


def check_norm_constant(n, alpha, beta, n_samples, seed, chunks=10, workers=1) -> dict:
    expected = math.exp(-log_c_norm(n, float(alpha), float(beta)))
    est = mc_norm_constant(n, float(alpha), float(beta), n_samples, seed, chunks, workers)
    name = f"norm/n={n}/alpha={alpha}/beta={beta}/samples={n_samples}/seed={seed}"
    return _verdict(name, expected, est)


def check_purity(n, field, n_samples, seed, chunks=10, workers=1) -> dict:
    try:
        expected = float(PURITY_ORACLE[(n, field)])
    except KeyError:
        raise ValueError(f"no purity oracle for n={n}, field={field!r}") from None
    est = mc_purity(n, field, n_samples, seed, chunks, workers)
    return _verdict(f"purity/n={n}/{field}/samples={n_samples}/seed={seed}", expected, est)


def check_hit_or_miss(n, n_samples, seed, chunks=10, workers=1) -> dict:
    space = StateSpace(n, "complex")
    d = space.dim
    ball = ball_volume(d) * exact_sqrt(Fraction(n - 1, n)).pow_int(d)
    expected = (vol_mixed(space) / ball).to_float()
    est = mc_hit_or_miss_fraction(n, n_samples, seed, chunks, workers)
    return _verdict(f"hitmiss/n={n}/samples={n_samples}/seed={seed}", expected, est)


def check_spectral(n, field, n_samples, seed, bins=20) -> dict:
    statistic, p_value = spectral_fit_test(n, field, n_samples, bins, seed)
    return {
        "check": f"spectral/n={n}/{field}/samples={n_samples}/bins={bins}/seed={seed}",
        "expected": 0.001,
        "estimate": p_value,
        "stderr": None,
        "sigmas": None,
        "pass": p_value > 0.001,
    }


# Constants entering the exact volume and area formulas; the norm suite
# covers each of them at every n up to 4.
_NORM_PARAMS = ((1, 2), (3, 2), (1, 1), (2, 1))


def run_suite(
    suite: str,
    n: int | None = None,
    field: str | None = None,
    alpha=None,
    beta=None,
    n_samples: int | None = None,
    seed: int = 0,
    chunks: int = 10,
    workers: int = 1,
) -> list[dict]:
    """Run one named suite (or 'all') and return its check reports."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; pick one of {SUITES}")
    checks: list[dict] = []
    if suite in ("norm", "all"):
        samples = n_samples or 1_000_000
        if alpha is not None or beta is not None:
            if alpha is None or beta is None or n is None:
                raise ValueError("norm suite with explicit parameters needs --n, --alpha and --beta")
            checks.append(check_norm_constant(n, alpha, beta, samples, seed, chunks, workers))
        else:
            sizes = [n] if n else [1, 2, 3, 4]
            for size in sizes:
                for a, b in _NORM_PARAMS:
                    checks.append(check_norm_constant(size, a, b, samples, seed, chunks, workers))
    if suite in ("purity", "all"):
        samples = n_samples or 100_000
        combos = [(n, field)] if n and field else sorted(PURITY_ORACLE)
        for size, fld in combos:
            checks.append(check_purity(size, fld, samples, seed, chunks, workers))
    if suite in ("spectral", "all"):
        samples = n_samples or 100_000
        combos = [(n, field)] if n and field else [(2, "complex"), (2, "real")]
        for size, fld in combos:
            checks.append(check_spectral(size, fld, samples, seed))
    if suite in ("hitmiss", "all"):
        if n:
            combos = [(n, n_samples or 100_000)]
        else:
            combos = [(2, n_samples or 100_000), (3, n_samples or 1_000_000)]
        for size, samples in combos:
            checks.append(check_hit_or_miss(size, samples, seed, chunks, workers))
    return checks
