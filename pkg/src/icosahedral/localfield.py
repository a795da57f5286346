"""5-adic valuations and the square-unit test behind the quintic family.

The family quintic q_t = x^5 + Bx + C with B = (9-5t^2)/t^2 and
C = 4(9-5t^2)/(5t^2) has its parameter recovered by
t = 75C^2/sqrt(256B^5 + 3125C^4); the hypothesis tested here is that this
t is the square of a 5-adic unit.  Over the units, squares are exactly the
elements whose residue mod 5 is a quadratic residue, so the test is pure
rational arithmetic.

The Artin-Schreier identity places q_t in local coordinates: with t = u^2
and y a root of y^4 = 256u^4/(625(5u^4 - 9)),

    q_t(x / (5y/4)) * (5y/4)^5 = x^5 - x - y

holds identically in x over Q(u)[y].  Since v5(y^4) = -4 for any 5-adic
unit u, y has valuation -1/1 in a totally ramified quartic extension, the
shape that makes x^5 - x - y an Artin-Schreier equation at 5.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .exact import Poly, RatFunc, power_basis_algebra
from .quintic import trinomial_t

__all__ = [
    "Valuation5",
    "v5",
    "is_square_5adic_unit",
    "theorem_hypothesis",
    "artin_schreier_identity",
]


@total_ordering
@dataclass(frozen=True)
class Valuation5:
    """Exponent of 5 in a rational; value is an int, or math.inf for 0."""

    value: float

    @property
    def is_infinite(self) -> bool:
        return self.value == math.inf

    def __add__(self, other: "Valuation5") -> "Valuation5":
        return Valuation5(self.value + other.value)

    def __lt__(self, other: "Valuation5") -> bool:
        return self.value < other.value

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.value)


def v5(x) -> Valuation5:
    """5-adic valuation of a rational; Valuation5(math.inf) for 0."""
    x = Fraction(x)
    if not x:
        return Valuation5(math.inf)
    v, n, d = 0, x.numerator, x.denominator
    while n % 5 == 0:
        n //= 5
        v += 1
    while d % 5 == 0:
        d //= 5
        v -= 1
    return Valuation5(v)


def _unit_residue(x: Fraction) -> int:
    # residue mod 5 of a rational with v5 = 0
    return x.numerator * pow(x.denominator, -1, 5) % 5


def is_square_5adic_unit(t) -> bool:
    """Whether t is the square of a 5-adic unit.

    By Hensel's lemma at the odd prime 5, a unit is a square exactly when
    its residue is a quadratic residue, so the test is v5(t) = 0 and
    t mod 5 in {1, 4}.
    """
    t = Fraction(t)
    if not t or v5(t).value != 0:
        return False
    return _unit_residue(t) in (1, 4)


def theorem_hypothesis(B, C) -> bool:
    """Whether x^5 + Bx + C has a parameter t that is a square unit.

    True iff 256B^5 + 3125C^4 is a positive rational square (so t exists)
    and t = 75C^2/sqrt(256B^5 + 3125C^4) is the square of a 5-adic unit.
    Requires C != 0.
    """
    t = trinomial_t(B, C)
    return t is not None and is_square_5adic_unit(t)


def _artin_schreier_algebra():
    # Q(u)[y] / (y^4 - 256u^4/(625(5u^4 - 9)))
    num = Poly.over_q([0, 0, 0, 0, 256])
    den = Poly.over_q([-5625, 0, 0, 0, 3125])
    y4 = RatFunc(num, den)
    rz, ro = RatFunc.constants("u")

    def coerce(c):
        if isinstance(c, RatFunc):
            return c
        return RatFunc.from_scalar(Fraction(c))

    return power_basis_algebra("AS(u)", 4, (y4, rz, rz, rz),
                               scalar_zero=rz, scalar_one=ro, coerce=coerce)


def artin_schreier_identity() -> bool:
    """Check q_t(x/(5y/4)) * (5y/4)^5 = x^5 - x - y identically in x.

    Works in Q(u)[y]/(y^4 - 256u^4/(625(5u^4 - 9))) with t = u^2, where
    the family coefficients read B = (9-5u^4)/u^4 and C = 4(9-5u^4)/(5u^4).
    The left side is x^5 + B w^4 x + C w^5 with w = 5y/4, so the identity
    pins the x-coefficient to -1 and the constant term to -y.
    """
    fld = _artin_schreier_algebra()
    dom = fld.domain()
    u4 = Poly.over_q([0, 0, 0, 0, 1])
    nine_minus = Poly.over_q([9, 0, 0, 0, -5])
    b = fld.from_scalar(RatFunc(nine_minus, u4))
    c = fld.from_scalar(RatFunc(nine_minus.scale(4), u4.scale(5)))
    w = fld.gen(1) * Fraction(5, 4)
    lhs = Poly((c * w ** 5, b * w ** 4, fld.zero, fld.zero, fld.zero, fld.one),
               dom)
    rhs = Poly((-fld.gen(1), -fld.one, fld.zero, fld.zero, fld.zero, fld.one),
               dom)
    return lhs == rhs
