"""Exact arithmetic in the multiplicative field of values q * sqrt(r) * pi^(p/2).

Every closed-form quantity produced by this package (state-space volumes,
boundary areas, group volumes, shape ratios) is a product of rationals,
factorials, powers of pi, sqrt(pi) and square roots of integers.  All of
them live in the set

    { sign * q * sqrt(r) * pi^(p/2) :  q rational > 0, r squarefree, p integer }

which is closed under multiplication and division.  Addition of unlike
radicals is deliberately not supported; no formula here needs it, and
omitting it keeps the canonical form unique so equality is field-by-field
comparison.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp

__all__ = [
    "ExactValue",
    "ZERO",
    "ONE",
    "PI",
    "from_rational",
    "exact_sqrt",
    "gamma_exact",
    "parse",
]

# mpmath working precision (bits) for float conversion; generous margin over
# the 53 bits of a double so the rounded result is the nearest double.
_CONVERT_PREC = 96


def _squarefree(n: int) -> tuple[int, int]:
    """Split n > 0 as s^2 * r with r squarefree; returns (s, r).

    Trial division only: radicands reachable from the formulas here stay in
    the low thousands, far below any size where factoring matters.
    """
    if n <= 0:
        raise ValueError(f"radicand must be positive, got {n}")
    s, r = 1, 1
    d = 2
    while d * d <= n:
        while n % (d * d) == 0:
            n //= d * d
            s *= d
        if n % d == 0:
            n //= d
            r *= d
        d += 1
    return s, r * n


@dataclass(frozen=True)
class ExactValue:
    """A number sign * q * sqrt(r) * pi^(p/2) in canonical form.

    Fields: ``sign`` in {-1, 0, +1}; ``q`` a positive rational in lowest
    terms; ``r`` a squarefree positive integer; ``p`` an integer half-exponent
    of pi.  Zero is uniquely (0, 1, 1, 0).  Two values are equal iff all four
    fields match, so ``==`` is exact algebraic equality.
    """

    sign: int
    q: Fraction
    r: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "p", int(self.p))
        if self.sign not in (-1, 0, 1):
            raise ValueError(f"sign must be -1, 0 or +1, got {self.sign}")
        if self.sign == 0:
            if (self.q, self.r, self.p) != (Fraction(1), 1, 0):
                raise ValueError("zero must be represented as (0, 1, 1, 0)")
            return
        if self.q <= 0:
            raise ValueError(f"q must be positive, got {self.q}")
        if self.r < 1 or _squarefree(self.r)[0] != 1:
            raise ValueError(f"r must be a squarefree positive integer, got {self.r}")

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "ExactValue":
        if isinstance(x, ExactValue):
            return x
        if isinstance(x, (int, Fraction)):
            return from_rational(x)
        return NotImplemented

    def __mul__(self, other) -> "ExactValue":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        sign = self.sign * other.sign
        if sign == 0:
            return ZERO
        # sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)*(r2/g)) with g = gcd(r1, r2);
        # the remaining factors are coprime and squarefree, so no trial
        # division is needed here.
        g = math.gcd(self.r, other.r)
        return ExactValue(
            sign,
            self.q * other.q * g,
            (self.r // g) * (other.r // g),
            self.p + other.p,
        )

    __rmul__ = __mul__

    def _inverse(self) -> "ExactValue":
        if self.sign == 0:
            raise ZeroDivisionError("division by exact zero")
        # 1/sqrt(r) = sqrt(r)/r keeps the radicand unchanged.
        return ExactValue(self.sign, 1 / (self.q * self.r), self.r, -self.p)

    def __truediv__(self, other) -> "ExactValue":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other._inverse()

    def __rtruediv__(self, other) -> "ExactValue":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self._inverse()

    def __neg__(self) -> "ExactValue":
        if self.sign == 0:
            return ZERO
        return ExactValue(-self.sign, self.q, self.r, self.p)

    def pow_int(self, k: int) -> "ExactValue":
        """Integer power; k < 0 requires a nonzero base."""
        k = int(k)
        if k == 0:
            return ONE
        if self.sign == 0:
            if k > 0:
                return ZERO
            raise ZeroDivisionError("zero to a negative power")
        if k < 0:
            return self._inverse().pow_int(-k)
        return ExactValue(
            self.sign if k % 2 else 1,
            self.q**k * Fraction(self.r) ** (k // 2),
            self.r if k % 2 else 1,
            self.p * k,
        )

    __pow__ = pow_int

    # -- conversion ---------------------------------------------------------

    def _mpf(self):
        v = mp.mpf(self.q.numerator) / mp.mpf(self.q.denominator)
        if self.r != 1:
            v *= mp.sqrt(self.r)
        if self.p:
            v *= mp.power(mp.pi, mp.mpf(self.p) / 2)
        return self.sign * v

    def to_float(self) -> float:
        """Nearest double (0.0 or inf if outside the double range)."""
        if self.sign == 0:
            return 0.0
        with mp.workprec(_CONVERT_PREC):
            return float(self._mpf())

    def log10(self) -> float:
        """log10 of the value, computed term by term in log space.

        Never overflows, so it stays meaningful for quantities at matrix
        sizes where the value itself leaves the double range.
        """
        if self.sign <= 0:
            raise ValueError("log10 requires a positive value")
        with mp.workprec(_CONVERT_PREC):
            t = mp.log10(mp.mpf(self.q.numerator)) - mp.log10(mp.mpf(self.q.denominator))
            if self.r != 1:
                t += mp.log10(mp.mpf(self.r)) / 2
            if self.p:
                t += mp.mpf(self.p) / 2 * mp.log10(mp.pi)
            return float(t)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        """Canonical grammar ``[-]a/b[*sqrt(r)][*pi^(p/2)]``, unit factors omitted."""
        if self.sign == 0:
            return "0"
        parts = [
            str(self.q.numerator)
            if self.q.denominator == 1
            else f"{self.q.numerator}/{self.q.denominator}"
        ]
        if self.r != 1:
            parts.append(f"sqrt({self.r})")
        if self.p != 0:
            parts.append(f"pi^({self.p}/2)")
        body = "*".join(parts)
        return "-" + body if self.sign < 0 else body


ZERO = ExactValue(0, Fraction(1), 1, 0)
ONE = ExactValue(1, Fraction(1), 1, 0)
PI = ExactValue(1, Fraction(1), 1, 2)


def from_rational(x) -> ExactValue:
    """Embed a rational (int, Fraction, or numerator/denominator pair) in the field."""
    x = Fraction(x)
    if x == 0:
        return ZERO
    return ExactValue(1 if x > 0 else -1, abs(x), 1, 0)


def exact_sqrt(x) -> ExactValue:
    """Exact square root of a nonnegative rational: sqrt(a/b) = sqrt(a*b)/b."""
    x = Fraction(x)
    if x < 0:
        raise ValueError(f"square root of negative rational {x}")
    if x == 0:
        return ZERO
    s, r = _squarefree(x.numerator * x.denominator)
    return ExactValue(1, Fraction(s, x.denominator), r, 0)


def gamma_exact(x) -> ExactValue:
    """Gamma at a positive integer or half-integer argument, exactly.

    Gamma(n) = (n-1)!;  Gamma(k + 1/2) = (2k)!/(4^k k!) * sqrt(pi).
    """
    x = Fraction(x)
    if x <= 0 or (2 * x).denominator != 1:
        raise ValueError(f"gamma_exact needs a positive integer or half-integer, got {x}")
    if x.denominator == 1:
        return from_rational(math.factorial(x.numerator - 1))
    k = (x.numerator - 1) // 2
    return ExactValue(
        1, Fraction(math.factorial(2 * k), 4**k * math.factorial(k)), 1, 1
    )


_GRAMMAR = re.compile(
    r"^(?P<neg>-)?(?P<num>\d+)(?:/(?P<den>\d+))?"
    r"(?:\*sqrt\((?P<rad>\d+)\))?"
    r"(?:\*pi\^\((?P<p>-?\d+)/2\))?$"
)


def parse(text: str) -> ExactValue:
    """Inverse of ``str``: parse the canonical grammar back into an ExactValue."""
    m = _GRAMMAR.match(text.strip())
    if m is None:
        raise ValueError(f"not a valid exact-value literal: {text!r}")
    num = int(m.group("num"))
    den = int(m.group("den") or 1)
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    if num == 0:
        if m.group("neg") or m.group("rad") or m.group("p"):
            raise ValueError(f"zero must be written as plain '0', got {text!r}")
        return ZERO
    sign = -1 if m.group("neg") else 1
    return ExactValue(sign, Fraction(num, den), int(m.group("rad") or 1), int(m.group("p") or 0))
