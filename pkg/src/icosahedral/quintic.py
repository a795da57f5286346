"""Principal quintics x^5 + Ax^2 + Bx + C: invariants and parametrizations.

The j-equation attached to such a quintic is

    delta^5 j^2 - 1728 (gamma4^3 - gamma6^2 + delta^5) j + 1728^2 gamma4^3 = 0,

whose two roots are the j-invariants the quintic can arise from via the
degree-five resolvents of the icosa module; its discriminant equals
5*Disc(q) times the square of an explicit rational in (A, B, C).

The trinomial family

    q_t(x) = x^5 + 5((9-5t^2)/(5t^2)) x + 4((9-5t^2)/(5t^2))

has Disc(q_t) t^10 = 2^8 3^2 (9-5t^2)^4, so its discriminant is always a
positive rational square and the parameter is recovered by

    t = 75 C^2 / sqrt(256 B^5 + 3125 C^4)   (positive root),

which is invariant under rescaling x -> cx of the monic trinomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional

from .exact import quadratic_field, sqrt_exact

__all__ = [
    "Quintic",
    "QuinticInvariants",
    "TrinomialClass",
    "invariants",
    "j_candidates",
    "resolvent_coeffs",
    "family_quintic",
    "trinomial_t",
    "canonical_trinomial",
    "scaling_equivalent",
    "solvable_family",
    "solvability_obstruction",
    "hyperelliptic_search",
]


@dataclass(frozen=True)
class Quintic:
    """The quintic x^5 + a*x^2 + b*x + c."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "c", Fraction(self.c))

    def coeff_vector(self):
        """Dense coefficient list, constant term first."""
        one = Fraction(1)
        zero = Fraction(0)
        return [self.c, self.b, self.a, zero, zero, one]

    def __call__(self, x):
        x = Fraction(x)
        return x ** 5 + self.a * x ** 2 + self.b * x + self.c


@dataclass(frozen=True)
class QuinticInvariants:
    """delta, gamma4, gamma6 and the discriminant of a principal quintic."""

    delta: Fraction
    gamma4: Fraction
    gamma6: Fraction
    disc: Fraction


@dataclass(frozen=True)
class TrinomialClass:
    """A trinomial x^5 + Bx + C with its scaling parameter when defined.

    ``t`` is present exactly when C != 0 and 256 B^5 + 3125 C^4 is a
    positive rational square.
    """

    b: Fraction
    c: Fraction
    t: Optional[Fraction]

    @staticmethod
    def from_coeffs(b, c):
        b, c = Fraction(b), Fraction(c)
        t = trinomial_t(b, c) if c else None
        return TrinomialClass(b, c, t)


def invariants(q: Quintic) -> QuinticInvariants:
    """Evaluate the four invariant polynomials in (A, B, C) exactly."""
    A, B, C = q.a, q.b, q.c
    delta = Fraction(A ** 4 - 5 * B ** 3 + 25 * A * B * C, 5 ** 4)
    gamma4 = Fraction(
        128 * A ** 4 * B ** 2 - 192 * A ** 5 * C - 600 * A * B ** 3 * C
        + 1000 * A ** 2 * B * C ** 2 - 144 * B ** 5 + 3125 * C ** 4,
        12 ** 2 * 5 ** 5)
    gamma6 = Fraction(
        1728 * A ** 10 + 10400 * A ** 6 * B ** 3 + 405000 * A ** 2 * B ** 6
        - 180000 * A ** 7 * B * C - 1170000 * A ** 3 * B ** 4 * C
        + 1725000 * A ** 4 * B ** 2 * C ** 2 - 1800000 * A ** 5 * C ** 3
        + 2812500 * A * B ** 3 * C ** 3 - 4687500 * A ** 2 * B * C ** 4
        - 2025000 * B ** 5 * C ** 2 - 9765625 * C ** 6,
        12 ** 3 * 5 ** 10)
    disc = (-27 * A ** 4 * B ** 2 + 108 * A ** 5 * C - 1600 * A * B ** 3 * C
            + 2250 * A ** 2 * B * C ** 2 + 256 * B ** 5 + 3125 * C ** 4)
    return QuinticInvariants(delta, gamma4, gamma6, Fraction(disc))


def j_candidates(q: Quintic):
    """Solve the j-equation of q exactly.

    Returns the two roots (with multiplicity) as Fractions when the
    quadratic splits over Q, otherwise as conjugate elements of the
    quadratic algebra Q[r]/(r^2 - 5*disc).  The quadratic's discriminant
    is checked to be 5*disc times a rational square before taking roots.

    Requires delta != 0; otherwise the j-equation degenerates.
    """
    inv = invariants(q)
    if not inv.delta:
        raise ValueError("degenerate quintic: delta = 0")
    qa = inv.delta ** 5
    qb = -1728 * (inv.gamma4 ** 3 - inv.gamma6 ** 2 + inv.delta ** 5)
    qc = 1728 ** 2 * inv.gamma4 ** 3
    disc_j = qb * qb - 4 * qa * qc
    if not disc_j:
        # the square cofactor in disc_j = 5*disc*(cofactor)^2 can vanish
        root = -qb / (2 * qa)
        return (root, root)
    if not inv.disc:
        raise ArithmeticError("simple roots with vanishing discriminant")
    cof = sqrt_exact(disc_j / (5 * inv.disc))
    if cof is None:
        raise ArithmeticError("j-equation discriminant is not 5*disc times a square")
    s = sqrt_exact(5 * inv.disc)
    if s is not None:
        return ((-qb + cof * s) / (2 * qa), (-qb - cof * s) / (2 * qa))
    fld = quadratic_field(5 * inv.disc)
    half = 1 / (2 * qa)
    r = fld.gen(1)
    base = fld.from_scalar(-qb * half)
    off = r * (cof * half)
    return (base + off, base - off)


def resolvent_coeffs(m, n, j):
    """Coefficients (A, B, C) of the quintic attached to (m, n) at j.

    These are the closed forms whose values at (m, w) make
    x^5 + Ax^2 + Bx + C the exact minimal relation of the five resolvents
    built in icosa with parameters (m, 12w); see
    icosa.verify_resolvent_quintic for the machine check of that identity.

    Requires j outside {0, 1728}.
    """
    m, n, j = Fraction(m), Fraction(n), Fraction(j)
    if j == 0 or j == 1728:
        raise ValueError("j must avoid 0 and 1728")
    e = 1 / (1728 - j)
    A = -Fraction(20, 1) / j * ((2 * m ** 3 + 3 * m ** 2 * n)
                                + 432 * (6 * m * n ** 2 + n ** 3) * e)
    B = -Fraction(5, 1) / j * (m ** 4
                               - 864 * (3 * m ** 2 * n ** 2 + 2 * m * n ** 3) * e
                               - 559872 * n ** 4 * e ** 2)
    C = -Fraction(1, 1) / j * (m ** 5
                               - 1440 * m ** 3 * n ** 2 * e
                               + 62208 * (15 * m * n ** 4 + 4 * n ** 5) * e ** 2)
    return (A, B, C)


def family_quintic(t) -> Quintic:
    """The trinomial q_t = x^5 + ((9-5t^2)/t^2) x + (4(9-5t^2)/(5t^2)).

    Requires t != 0.  9 - 5t^2 cannot vanish at rational t.
    """
    t = Fraction(t)
    if not t:
        raise ValueError("t must be nonzero")
    k = 9 - 5 * t ** 2
    assert k != 0
    return Quintic(Fraction(0), k / t ** 2, 4 * k / (5 * t ** 2))


def trinomial_t(B, C) -> Optional[Fraction]:
    """Recover t = 75 C^2 / sqrt(256 B^5 + 3125 C^4) for x^5 + Bx + C.

    Uses the positive square root; returns None when the radicand is not
    a positive rational square.  Requires C != 0.
    """
    B, C = Fraction(B), Fraction(C)
    if not C:
        raise ValueError("C must be nonzero")
    root = sqrt_exact(256 * B ** 5 + 3125 * C ** 4)
    if not root:
        return None
    return 75 * C ** 2 / root


def canonical_trinomial(c5, B, C):
    """Normalize a trinomial c5 x^5 + Bx + C for table comparison.

    Clears denominators to a primitive integer vector with positive
    leading coefficient, then applies x -> -x (and a global sign) when
    needed so the constant coefficient is positive.  Returns integers
    (c5, B, C).
    """
    c5, B, C = Fraction(c5), Fraction(B), Fraction(C)
    if not c5:
        raise ValueError("leading coefficient must be nonzero")
    lcm = 1
    for f in (c5, B, C):
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in (c5, B, C)]
    g = gcd(gcd(abs(ints[0]), abs(ints[1])), abs(ints[2]))
    ints = [v // g for v in ints]
    if ints[0] < 0:
        ints = [-v for v in ints]
    if ints[2] < 0:
        # x -> -x negates the odd-degree terms; renormalize the sign of x^5
        ints = [ints[0], ints[1], -ints[2]]
    return tuple(ints)


def scaling_equivalent(q1, q2) -> bool:
    """Whether two trinomials differ by x -> cx and an overall scalar.

    Arguments are (c5, B, C) triples.  After passing to monic form
    x^5 + Bx + C, the test is for a rational c != 0 with
    (B2, C2) = (B1 c^4, C1 c^5); both constants must be nonzero.
    """
    b1, c1 = _monic_trinomial(q1)
    b2, c2 = _monic_trinomial(q2)
    if not c1 or not c2:
        raise ValueError("trinomials must have nonzero constant term")
    if not b1 or not b2:
        if b1 or b2:
            return False
        return _is_fifth_power(c2 / c1)
    ratio_b = b2 / b1
    c = (c2 / c1) / ratio_b
    return b2 == b1 * c ** 4 and c2 == c1 * c ** 5


def _monic_trinomial(q):
    c5, B, C = (Fraction(v) for v in q)
    if not c5:
        raise ValueError("leading coefficient must be nonzero")
    return B / c5, C / c5


def _int_root5(n: int) -> int:
    if n < 0:
        return -_int_root5(-n)
    if n == 0:
        return 0
    lo, hi = 0, 1 << ((n.bit_length() + 4) // 5 + 1)
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid ** 5 <= n:
            lo = mid
        else:
            hi = mid
    return lo


def _is_fifth_power(x: Fraction) -> bool:
    rn = _int_root5(x.numerator)
    rd = _int_root5(x.denominator)
    return rn ** 5 == x.numerator and rd ** 5 == x.denominator


def solvable_family(v, w):
    """The (B, C) pair of the solvable square-discriminant trinomials.

    B = 20 (v^2+v-1)(v^2-v-1) w^4 / (v^2+1)^2,
    C = 16 (v^2+v-1)(2v^2+3v-2) w^5 / (v^2+1)^2.
    """
    v, w = Fraction(v), Fraction(w)
    d = (v ** 2 + 1) ** 2
    B = 20 * (v ** 2 + v - 1) * (v ** 2 - v - 1) * w ** 4 / d
    C = 16 * (v ** 2 + v - 1) * (2 * v ** 2 + 3 * v - 2) * w ** 5 / d
    return (B, C)


def solvability_obstruction(v):
    """The (w, t) forced on the solvable family by the trinomial shape.

    w = (v^2-v-1)/(2v^2+3v-2),
    t = 3 (v^2+1)(2v^2+3v-2)^2 / (5 (2v^3+2v^2-v+1)(v^3+v^2+2v-2)).

    Raises when a denominator vanishes at v.
    """
    v = Fraction(v)
    dw = 2 * v ** 2 + 3 * v - 2
    dt = 5 * (2 * v ** 3 + 2 * v ** 2 - v + 1) * (v ** 3 + v ** 2 + 2 * v - 2)
    if not dw or not dt:
        raise ValueError("denominator vanishes at this v")
    w = (v ** 2 - v - 1) / dw
    t = 3 * (v ** 2 + 1) * dw ** 2 / dt
    return (w, t)


def hyperelliptic_search(height_bound: int):
    """Search y^2 = 15(x^2+1)(2x^3+2x^2-x+1)(x^3+x^2+2x-2) for points.

    Scans every rational x = p/q in lowest terms with
    max(|p|, |q|) <= height_bound, in Farey order for 0 <= p <= q extended
    by sign flips and reciprocals, and returns the (x, y >= 0) pairs
    where the right side is a rational square.  Bounded evidence only:
    an empty result is not a proof of emptiness.
    """
    if height_bound < 1:
        raise ValueError("height bound must be at least 1")
    points = []

    def test(p, q):
        # y^2 q^8 = 15 (p^2+q^2)(2p^3+2p^2q-pq^2+q^3)(p^3+p^2q+2pq^2-2q^3)
        m = 15 * (p * p + q * q) \
            * (2 * p ** 3 + 2 * p * p * q - p * q * q + q ** 3) \
            * (p ** 3 + p * p * q + 2 * p * q * q - 2 * q ** 3)
        if m < 0:
            return
        r = isqrt(m)
        if r * r == m:
            points.append((Fraction(p, q), Fraction(r, q ** 4)))

    test(0, 1)
    test(1, 1)
    test(-1, 1)
    a, b, c, d = 0, 1, 1, height_bound
    while c <= height_bound:
        k = (height_bound + b) // d
        a, b, c, d = c, d, k * c - a, k * d - b
        if a == b:
            break
        for p, q in ((a, b), (-a, b), (b, a), (-b, a)):
            test(p, q)
    return points
