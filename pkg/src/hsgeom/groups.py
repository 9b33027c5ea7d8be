"""Exact volumes of compact matrix groups and their quotients.

Covers U(N), SU(N), O(N), SO(N), complex/real projective spaces and flag
manifolds under the three common scalings of the invariant metric:

    A -- off-diagonal prefactor 2, diagonal 1 ("unit trace" scaling),
    B -- all prefactors 1 (volumes become products of unit-sphere volumes),
    C -- half the trace form (diagonal prefactor 1/2).

Conventions are carried as data so cross-convention identities stay
testable.  For the orthogonal family the metric has no diagonal terms and
B and C coincide.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exactnum import ExactValue, ONE, exact_sqrt, from_rational, gamma_exact

__all__ = [
    "Convention",
    "Family",
    "CosetSpec",
    "sphere_volume",
    "ball_volume",
    "vol_group",
    "vol_coset",
]


class Convention(enum.Enum):
    A = "A"
    B = "B"
    C = "C"


class Family(enum.Enum):
    UNITARY = "U"
    SPECIAL_UNITARY = "SU"
    ORTHOGONAL = "O"
    SPECIAL_ORTHOGONAL = "SO"
    COMPLEX_PROJECTIVE = "CP"
    REAL_PROJECTIVE = "RP"
    COMPLEX_FLAG = "FlC"
    REAL_FLAG = "FlR"


_GROUP_FAMILIES = frozenset(
    {Family.UNITARY, Family.SPECIAL_UNITARY, Family.ORTHOGONAL, Family.SPECIAL_ORTHOGONAL}
)


@dataclass(frozen=True)
class CosetSpec:
    """A group or coset family plus its size (group order N, or dimension k)."""

    family: Family
    n: int

    def __post_init__(self):
        if self.family in _GROUP_FAMILIES:
            if self.n < 1:
                raise ValueError(f"{self.family.value}({self.n}): group size must be >= 1")
        elif self.n < 0:
            raise ValueError(f"{self.family.value}({self.n}): dimension must be >= 0")


def sphere_volume(k: int) -> ExactValue:
    """Volume of the unit k-sphere S^k in R^(k+1): 2 pi^((k+1)/2) / Gamma((k+1)/2)."""
    if k < 0:
        raise ValueError(f"sphere dimension must be >= 0, got {k}")
    return 2 * ExactValue(1, Fraction(1), 1, k + 1) / gamma_exact(Fraction(k + 1, 2))


def ball_volume(k: int) -> ExactValue:
    """Volume of the unit k-ball B^k: pi^(k/2) / Gamma(k/2 + 1)."""
    if k < 0:
        raise ValueError(f"ball dimension must be >= 0, got {k}")
    return ExactValue(1, Fraction(1), 1, k) / gamma_exact(Fraction(k, 2) + 1)


def _vol_unitary(n: int, conv: Convention) -> ExactValue:
    # a_X * 2^n * pi^(n(n+1)/2) / (0! 1! ... (n-1)!)
    if n == 0:
        return ONE
    if conv is Convention.A:
        scale = from_rational(Fraction(2) ** (n * (n - 1) // 2))
    elif conv is Convention.B:
        scale = ONE
    else:
        scale = exact_sqrt(Fraction(1, 2**n))
    out = scale * (2**n) * ExactValue(1, Fraction(1), 1, n * (n + 1))
    for k in range(n):
        out = out / gamma_exact(k + 1)
    return out


def _vol_orthogonal(n: int, conv: Convention) -> ExactValue:
    # B (= C): product of unit-sphere volumes S^0 ... S^(n-1);
    # A: extra sqrt(2) per off-diagonal entry, 2^(n(n-1)/4) in total.
    if n == 0:
        return ONE
    out = ONE
    for k in range(1, n + 1):
        out = out * sphere_volume(k - 1)
    if conv is Convention.A:
        out = out * exact_sqrt(Fraction(2) ** (n * (n - 1) // 2))
    return out


def vol_group(spec: CosetSpec, conv: Convention = Convention.A) -> ExactValue:
    """Exact volume of U(N), SU(N), O(N) or SO(N) under the given convention."""
    n = spec.n
    if spec.family is Family.UNITARY:
        return _vol_unitary(n, conv)
    if spec.family is Family.SPECIAL_UNITARY:
        # SU(N) is not U(N)/U(1): the determinant constraint stretches the
        # quotient by sqrt(N).
        return exact_sqrt(n) * _vol_unitary(n, conv) / _vol_unitary(1, conv)
    if spec.family is Family.ORTHOGONAL:
        return _vol_orthogonal(n, conv)
    if spec.family is Family.SPECIAL_ORTHOGONAL:
        return _vol_orthogonal(n, conv) / 2
    raise ValueError(f"{spec.family.value} is not a group family; use vol_coset")


def vol_coset(spec: CosetSpec, conv: Convention = Convention.A) -> ExactValue:
    """Exact volume of CP^k, RP^k, or a complex/real flag manifold."""
    n = spec.n
    if spec.family is Family.COMPLEX_PROJECTIVE:
        scale = from_rational(2**n) if conv is Convention.A else ONE
        return scale * ExactValue(1, Fraction(1), 1, 2 * n) / gamma_exact(n + 1)
    if spec.family is Family.REAL_PROJECTIVE:
        # O(k+1) / (O(1) x O(k)); under B this is Vol(S^k)/2.
        return _vol_orthogonal(n + 1, conv) / (2 * _vol_orthogonal(n, conv))
    if spec.family is Family.COMPLEX_FLAG:
        # U(N) / U(1)^N; sizes 0 and 1 both give volume 1.
        return _vol_unitary(n, conv) / _vol_unitary(1, conv).pow_int(n)
    if spec.family is Family.REAL_FLAG:
        # O(N) / O(1)^N with Vol[O(1)] = 2.
        return _vol_orthogonal(n, conv) / from_rational(2**n)
    raise ValueError(f"{spec.family.value} is a group family; use vol_group")
