"""Exact geometry of the convex body of density matrices under the HS metric.

The set of N x N density matrices (complex Hermitian or real symmetric,
positive semidefinite, unit trace) is a compact convex body of dimension
N^2 - 1, resp. N(N+1)/2 - 1.  This module computes, exactly:

  * its volume and the hyperarea of its boundary,
  * the volumes of the rank-deficient edges (states of rank N - k),
  * inscribed/circumscribed radii and the boundary-to-volume ratio gamma,

plus the volume-equivalent radius and the ball-ratio coefficients chi as
floats (evaluated in log space so large N does not overflow), and the same
gamma/volume data for the reference bodies: balls, cubes, regular
simplices, diamonds and spheres.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .constants import EnsembleParams, c_norm
from .exactnum import ExactValue, PI, exact_sqrt, from_rational, gamma_exact
from .groups import Convention, CosetSpec, Family, ball_volume, sphere_volume, vol_coset

__all__ = [
    "StateSpace",
    "GeometrySummary",
    "ReferenceKind",
    "ReferenceBody",
    "vol_mixed",
    "vol_edge",
    "geometry",
    "reference_body",
]

COMPLEX = "complex"
REAL = "real"


@dataclass(frozen=True)
class StateSpace:
    """State space of N x N density matrices over the complex or real field."""

    n: int
    field: str = COMPLEX

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"state space needs n >= 2, got {self.n}")
        if self.field not in (COMPLEX, REAL):
            raise ValueError(f"field must be '{COMPLEX}' or '{REAL}', got {self.field!r}")

    @property
    def dim(self) -> int:
        """Ambient (affine) dimension of the body."""
        if self.field == COMPLEX:
            return self.n**2 - 1
        return self.n * (self.n + 1) // 2 - 1


def vol_mixed(space: StateSpace) -> ExactValue:
    """Exact HS volume of the state space."""
    n = space.n
    if space.field == COMPLEX:
        # sqrt(N) (2 pi)^(N(N-1)/2) Gamma(1)...Gamma(N) / Gamma(N^2)
        out = exact_sqrt(n) * (2 * PI).pow_int(n * (n - 1) // 2)
        for j in range(1, n + 1):
            out = out * gamma_exact(j)
        return out / gamma_exact(n * n)
    # sqrt(N)/N! * Vol_A[real flag] / C_N^(1,1)
    flag = vol_coset(CosetSpec(Family.REAL_FLAG, n), Convention.A)
    return exact_sqrt(n) * flag / (factorial(n) * c_norm(EnsembleParams(n, Fraction(1), 1)))


def vol_edge(space: StateSpace, k: int) -> ExactValue:
    """Exact HS volume of the order-k edge: states of rank N - k.

    k = 0 is the full body, k = 1 its boundary hyperarea, k = N - 1 the set
    of pure states.
    """
    n = space.n
    if not 0 <= k <= n - 1:
        raise ValueError(f"rank deficiency must be in [0, {n - 1}], got {k}")
    if space.field == COMPLEX:
        flag_family, alpha, beta = Family.COMPLEX_FLAG, Fraction(1 + 2 * k), 2
    else:
        flag_family, alpha, beta = Family.REAL_FLAG, Fraction(1 + k), 1
    flag_ratio = vol_coset(CosetSpec(flag_family, n), Convention.A) / vol_coset(
        CosetSpec(flag_family, k), Convention.A
    )
    norm = c_norm(EnsembleParams(n - k, alpha, beta))
    return exact_sqrt(n - k) * flag_ratio / (factorial(n - k) * norm)


@dataclass(frozen=True)
class GeometrySummary:
    """Radii and shape coefficients of a state space.

    ``circumradius`` R and ``inradius`` r = R/(N-1) are exact;
    ``effective_radius`` is the radius of the ball with the same volume.
    ``gamma`` is the exact boundary-area/volume ratio.  chi1 = (r/rho)^D and
    chi2 = (rho/R)^D compare against inscribed/circumscribed balls; their
    plain-float forms underflow for large N, so the log10 forms are also
    provided.
    """

    circumradius: ExactValue
    inradius: ExactValue
    effective_radius: float
    gamma: ExactValue
    chi1_log10: float
    chi2_log10: float
    chi_log10: float

    @property
    def chi1(self) -> float:
        return 10.0**self.chi1_log10

    @property
    def chi2(self) -> float:
        return 10.0**self.chi2_log10

    @property
    def chi(self) -> float:
        return 10.0**self.chi_log10


def geometry(space: StateSpace) -> GeometrySummary:
    """Radii, gamma and chi coefficients of the state space."""
    n, d = space.n, space.dim
    circum = exact_sqrt(Fraction(n - 1, n))
    inscribed = circum / (n - 1)
    log_rho = (vol_mixed(space).log10() - ball_volume(d).log10()) / d
    gamma = vol_edge(space, 1) / vol_mixed(space)
    chi1_log10 = d * (inscribed.log10() - log_rho)
    chi2_log10 = d * (log_rho - circum.log10())
    return GeometrySummary(
        circumradius=circum,
        inradius=inscribed,
        effective_radius=10.0**log_rho,
        gamma=gamma,
        chi1_log10=chi1_log10,
        chi2_log10=chi2_log10,
        chi_log10=chi1_log10 + chi2_log10,
    )


class ReferenceKind(enum.Enum):
    BALL = "ball"
    CUBE = "cube"
    SIMPLEX = "simplex"
    DIAMOND = "diamond"
    SPHERE = "sphere"


@dataclass(frozen=True)
class ReferenceBody:
    """Volume and boundary ratio of a reference body; spheres have no ratio."""

    kind: ReferenceKind
    volume: ExactValue
    boundary_ratio: ExactValue | None

    @property
    def gamma(self) -> ExactValue:
        if self.boundary_ratio is None:
            raise ValueError("a sphere is a boundary itself and has no area/volume ratio")
        return self.boundary_ratio


def reference_body(kind: ReferenceKind | str, dim: int, side=1) -> ReferenceBody:
    """Exact volume and gamma of a reference body of the given dimension.

    ``side`` is the edge length (cube, simplex, diamond) or radius (ball,
    sphere); any rational or ExactValue is accepted.
    """
    kind = ReferenceKind(kind)
    if dim < 1:
        raise ValueError(f"dimension must be >= 1, got {dim}")
    scale = side if isinstance(side, ExactValue) else from_rational(side)
    if scale.sign <= 0:
        raise ValueError("side or radius must be positive")
    scaled = scale.pow_int(dim)
    if kind is ReferenceKind.BALL:
        return ReferenceBody(kind, scaled * ball_volume(dim), from_rational(dim) / scale)
    if kind is ReferenceKind.CUBE:
        return ReferenceBody(kind, scaled, from_rational(2 * dim) / scale)
    if kind is ReferenceKind.SPHERE:
        return ReferenceBody(kind, scaled * sphere_volume(dim), None)
    # Regular simplex of side L: L^D sqrt(D+1) / (sqrt(2^D) D!); a diamond is
    # two simplices glued along a face, with 2D instead of D+1 boundary faces.
    simplex_vol = scaled * exact_sqrt(Fraction(dim + 1, 2**dim)) / factorial(dim)
    slope = exact_sqrt(Fraction(2 * dim, dim + 1))
    if kind is ReferenceKind.SIMPLEX:
        return ReferenceBody(kind, simplex_vol, slope * (dim * (dim + 1)) / scale)
    return ReferenceBody(kind, 2 * simplex_vol, slope * dim**2 / scale)
