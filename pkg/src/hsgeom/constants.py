"""Normalization constants of eigenvalue densities on the probability simplex.

The joint density of interest on {L_1..L_N >= 0, sum L_i = 1} is

    prod_i L_i^(alpha-1) * prod_{i<j} |L_i - L_j|^beta

and ``c_norm`` returns the constant that normalizes it.  The closed form
comes from the Laguerre-ensemble integral; with beta in {1, 2} and
half-integer alpha every Gamma factor is exact, which is the only regime
the exact volume formulas need.  A log-space float path covers arbitrary
positive (alpha, beta) for Monte Carlo work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import ExactValue, ONE, gamma_exact

__all__ = ["EnsembleParams", "laguerre_integral", "c_norm", "log_c_norm"]


@dataclass(frozen=True)
class EnsembleParams:
    """Exact-mode parameters: matrix size n, half-integer alpha > 0, beta in {1, 2}."""

    n: int
    alpha: Fraction
    beta: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.alpha <= 0 or (2 * self.alpha).denominator != 1:
            raise ValueError(f"alpha must be a positive integer or half-integer, got {self.alpha}")
        if self.beta not in (1, 2):
            raise ValueError(f"beta must be 1 or 2 in exact mode, got {self.beta}")


def laguerre_integral(params: EnsembleParams) -> ExactValue:
    """Exact value of the Laguerre-ensemble integral.

    prod_{j=1}^{n} Gamma(1 + j*beta/2) * Gamma(alpha + (j-1)*beta/2)
    divided by Gamma(1 + beta/2)^n.
    """
    n, alpha, beta = params.n, params.alpha, Fraction(params.beta)
    out = ONE
    for j in range(1, n + 1):
        out = out * gamma_exact(1 + j * beta / 2) * gamma_exact(alpha + (j - 1) * beta / 2)
    return out / gamma_exact(1 + beta / 2).pow_int(n)


def c_norm(params: EnsembleParams) -> ExactValue:
    """Normalization constant C_n^(alpha, beta) of the simplex eigenvalue density."""
    n, alpha, beta = params.n, params.alpha, Fraction(params.beta)
    return gamma_exact(alpha * n + beta * n * (n - 1) / 2) / laguerre_integral(params)


def log_c_norm(n: int, alpha: float, beta: float) -> float:
    """Natural log of C_n^(alpha, beta) for arbitrary positive alpha, beta.

    Runs entirely through lgamma, so it is usable far beyond the exact-mode
    parameter range and never overflows.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if alpha <= 0 or beta <= 0:
        raise ValueError(f"alpha and beta must be positive, got ({alpha}, {beta})")
    total = math.lgamma(alpha * n + beta * n * (n - 1) / 2.0)
    for j in range(1, n + 1):
        total -= math.lgamma(1 + j * beta / 2.0)
        total -= math.lgamma(alpha + (j - 1) * beta / 2.0)
        total += math.lgamma(1 + beta / 2.0)
    return total
