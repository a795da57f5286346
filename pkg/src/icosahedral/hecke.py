"""Finite residue rings of Z[eps] and the quadratic-twist character omega.

Z[eps] is the ring of integers of Q(sqrt5), eps^2 = 1 - eps, sqrt5 = 2eps+1.
Elements a + b*eps are reduced modulo one of the ideals (4), (8), (sqrt5),
(8 sqrt5); the quotient sizes are the norms 16, 64, 5, and 320, and the unit
groups have orders 12, 48, 4, and 192.

Characters on those unit groups take values in the cyclic group of 24th
roots of unity, stored as exponents mod 24 (the smallest group containing
-1, zeta6, zeta12, and zeta4).  char_from_generators assigns values on a
generating set and propagates them multiplicatively, rejecting assignments
that are inconsistent with the relations of the unit group or that fail to
reach every unit.

The character of interest is omega = omega4^3 * omega8^3 * omega5 on the
units mod 8 sqrt5, built from

    omega4: -1 -> -1, eps -> zeta6       (conductor 4),
    omega8: -1 -> -1, 1+4eps -> -1, eps -> zeta12   (conductor 8),
    omega5: eps -> zeta4                 (conductor sqrt5),

each component evaluated through the projection to its own modulus.  The
verifications run over all 192 units: omega(sigma x)/omega(x) equals the
Kronecker symbol (-2 / N(x)) and omega(x)^2 equals
chi_{-4}(N(x)) * omega5(N(x))^-1 with omega5 on the right the Teichmuller
character mod 5 (2 -> i); both norms are well defined because
N(x + 8 sqrt5 z) = N(x) mod 40.  sigma is the conjugation eps -> -1-eps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .exact import QEPSI

__all__ = [
    "RootOfUnity",
    "ResidueRing",
    "Character",
    "residue_ring",
    "unit_group",
    "char_from_generators",
    "omega4",
    "omega8",
    "omega5",
    "omega",
    "verify_sigma_identity",
    "verify_square_identity",
    "verify_positive_units",
]

KRONECKER_M2 = {1: 1, 3: 1, 5: -1, 7: -1}
TEICHMULLER_EXP = {1: 0, 2: 6, 3: 18, 4: 12}   # values 1, i, -i, -1 in mu24


@dataclass(frozen=True)
class RootOfUnity:
    """zeta24^exponent with multiplication as exponent addition."""

    exponent: int

    def __post_init__(self):
        object.__setattr__(self, "exponent", self.exponent % 24)

    def __mul__(self, o: "RootOfUnity") -> "RootOfUnity":
        return RootOfUnity(self.exponent + o.exponent)

    def __pow__(self, n: int) -> "RootOfUnity":
        return RootOfUnity(self.exponent * n)

    def inv(self) -> "RootOfUnity":
        return RootOfUnity(-self.exponent)

    def is_one(self) -> bool:
        return self.exponent == 0

    @classmethod
    def one(cls) -> "RootOfUnity":
        return cls(0)

    @classmethod
    def minus_one(cls) -> "RootOfUnity":
        return cls(12)

    @classmethod
    def sign(cls, s: int) -> "RootOfUnity":
        if s == 1:
            return cls(0)
        if s == -1:
            return cls(12)
        raise ValueError("sign must be +1 or -1")


class ResidueRing:
    """Z[eps]/(m) with elements as canonical pairs (a, b) for a + b*eps.

    The ideal (m) for m = x + y*eps has Z-basis (x, y) and (y, x - y); the
    canonical form reduces against the Hermite form of that lattice.
    """

    def __init__(self, label: str, modulus):
        self.label = label
        x, y = modulus
        self.modulus = (x, y)
        r1, r2 = (x, y), (y, x - y)
        # Hermite form [[d1, e], [0, d2]] of the two rows
        a0, b0 = r1
        a1, b1 = r2
        while a1:
            q = a0 // a1
            a0, b0, a1, b1 = a1, b1, a0 - q * a1, b0 - q * b1
        d1, e = abs(a0), b0 if a0 > 0 else -b0
        # second row has first entry 0; its second entry is det/d1
        d2 = abs(x * (x - y) - y * y) // d1
        self.d1, self.e, self.d2 = d1, e % d2, d2

    def reduce(self, pair):
        a, b = pair
        q = a // self.d1
        return (a - q * self.d1, (b - q * self.e) % self.d2)

    @property
    def zero(self):
        return self.reduce((0, 0))

    @property
    def one(self):
        return self.reduce((1, 0))

    @property
    def eps(self):
        return self.reduce((0, 1))

    def add(self, x, y):
        return self.reduce((x[0] + y[0], x[1] + y[1]))

    def neg(self, x):
        return self.reduce((-x[0], -x[1]))

    def mul(self, x, y):
        a, b = x
        c, d = y
        # (a + b eps)(c + d eps) with eps^2 = 1 - eps
        return self.reduce((a * c + b * d, a * d + b * c - b * d))

    def pow(self, x, n: int):
        out = self.one
        for _ in range(n):
            out = self.mul(out, x)
        return out

    def sigma(self, x):
        # eps -> -1 - eps
        a, b = x
        return self.reduce((a - b, -b))

    def norm(self, x) -> int:
        # x * sigma(x) = a^2 - ab - b^2, an integer class mod N(m)/gcd
        a, b = x
        return a * a - a * b - b * b

    def elements(self):
        return [(a, b) for a in range(self.d1) for b in range(self.d2)]

    @lru_cache(maxsize=None)
    def units(self):
        out = []
        elems = self.elements()
        for x in elems:
            if any(self.mul(x, y) == self.one for y in elems):
                out.append(x)
        return tuple(out)


_SUPPORTED = {
    "4": ("4", (4, 0)),
    "8": ("8", (8, 0)),
    "sqrt5": ("sqrt5", (1, 2)),
    "8sqrt5": ("8sqrt5", (8, 16)),
}


@lru_cache(maxsize=None)
def residue_ring(m) -> ResidueRing:
    """The ring Z[eps]/(m) for m in {4, 8, "sqrt5", "8sqrt5"}."""
    key = str(m)
    if key not in _SUPPORTED:
        raise ValueError(f"unsupported modulus {m!r}")
    label, coords = _SUPPORTED[key]
    return ResidueRing(label, coords)


def unit_group(m):
    """The units of Z[eps]/(m) as canonical pairs."""
    return list(residue_ring(m).units())


@dataclass(frozen=True)
class Character:
    """A multiplicative map from the units of a residue ring into mu24."""

    ring: ResidueRing
    table: dict

    def __call__(self, x) -> RootOfUnity:
        x = self.ring.reduce(x)
        if x not in self.table:
            raise ValueError("argument is not a unit of the ring")
        return self.table[x]

    def is_multiplicative(self) -> bool:
        units = self.ring.units()
        return all(self(self.ring.mul(x, y)) == self(x) * self(y)
                   for x in units for y in units)


def char_from_generators(m, gens, images) -> Character:
    """Extend gen -> image multiplicatively over the full unit group.

    Values propagate by breadth-first multiplication; any relation among the
    generators whose image product is nontrivial is reported as an
    inconsistency, and the generators must reach every unit.
    """
    ring = residue_ring(m)
    gens = [ring.reduce(g) for g in gens]
    units = set(ring.units())
    for g in gens:
        if g not in units:
            raise ValueError("generator is not a unit")
    table = {ring.one: RootOfUnity.one()}
    frontier = [ring.one]
    while frontier:
        nxt = []
        for x in frontier:
            for g, img in zip(gens, images):
                y = ring.mul(x, g)
                val = table[x] * img
                if y in table:
                    if table[y] != val:
                        raise ValueError("images are inconsistent with the "
                                         "unit-group relations")
                else:
                    table[y] = val
                    nxt.append(y)
        frontier = nxt
    if len(table) != len(units):
        raise ValueError("generators do not generate the unit group")
    return Character(ring, table)


@lru_cache(maxsize=1)
def omega4() -> Character:
    """Conductor-4 component: -1 -> -1, eps -> zeta6."""
    ring = residue_ring(4)
    return char_from_generators(
        4, [ring.neg(ring.one), ring.eps],
        [RootOfUnity.minus_one(), RootOfUnity(4)])


@lru_cache(maxsize=1)
def omega8() -> Character:
    """Conductor-8 component: -1 -> -1, 1+4eps -> -1, eps -> zeta12."""
    ring = residue_ring(8)
    return char_from_generators(
        8, [ring.neg(ring.one), ring.reduce((1, 4)), ring.eps],
        [RootOfUnity.minus_one(), RootOfUnity.minus_one(), RootOfUnity(2)])


@lru_cache(maxsize=1)
def omega5() -> Character:
    """Conductor-sqrt5 component: eps -> zeta4."""
    return char_from_generators("sqrt5", [residue_ring("sqrt5").eps],
                                [RootOfUnity(6)])


@lru_cache(maxsize=1)
def omega() -> Character:
    """omega4^3 * omega8^3 * omega5 on the units mod 8 sqrt5.

    Each unit is pushed through the projections to the component moduli;
    the projections are ring maps because (4), (8), (sqrt5) all contain
    (8 sqrt5).
    """
    ring = residue_ring("8sqrt5")
    w4, w8, w5 = omega4(), omega8(), omega5()
    table = {}
    for x in ring.units():
        val = w4(x) ** 3 * w8(x) ** 3 * w5(x)
        table[x] = val
    return Character(ring, table)


def _norm_residue(ring: ResidueRing, x, modulus: int) -> int:
    n = ring.norm(x) % modulus
    if gcd(n, modulus) != 1:
        raise ArithmeticError("unit norm shares a factor with the modulus")
    return n


def verify_sigma_identity() -> bool:
    """Check omega(sigma x) / omega(x) = (-2 / N(x)) on all 192 units."""
    ring = residue_ring("8sqrt5")
    w = omega()
    for x in ring.units():
        lhs = w(ring.sigma(x)) * w(x).inv()
        rhs = RootOfUnity.sign(KRONECKER_M2[_norm_residue(ring, x, 8)])
        if lhs != rhs:
            return False
    return True


def verify_square_identity() -> bool:
    """Check omega(x)^2 = chi_{-4}(N(x)) * omega5(N(x))^-1 on all 192 units.

    chi_{-4} is the nontrivial character mod 4 and omega5 on the right is
    the Teichmuller character mod 5 with 2 -> i.
    """
    ring = residue_ring("8sqrt5")
    w = omega()
    for x in ring.units():
        lhs = w(x) ** 2
        chi4 = RootOfUnity.sign(1 if _norm_residue(ring, x, 4) == 1 else -1)
        teich = RootOfUnity(TEICHMULLER_EXP[_norm_residue(ring, x, 5)])
        if lhs != chi4 * teich.inv():
            return False
    return True


def verify_positive_units() -> bool:
    """omega is trivial on the totally positive units, the even powers of eps."""
    ring = residue_ring("8sqrt5")
    w = omega()
    eps2 = ring.mul(ring.eps, ring.eps)
    return w(eps2).is_one() and w(ring.mul(eps2, eps2)).is_one()


def omega_epsilon() -> RootOfUnity:
    """The computed value omega(eps), reported rather than assumed."""
    return omega()(residue_ring("8sqrt5").eps)


def omega_value_group() -> tuple:
    """Sorted exponents of the subgroup of mu24 actually hit by omega."""
    return tuple(sorted({v.exponent for v in omega().table.values()}))
