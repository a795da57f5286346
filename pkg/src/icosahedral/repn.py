"""The order Z[eps, i][1/2], its prime above 5, and a matrix lift of
Z(F5)*SL2(F5).

The ambient algebra has basis {1, eps, i, i*eps} with eps^2 = 1 - eps and
i^2 = -1, so eps is the real quadratic unit with 2*eps + 1 = sqrt5 and the
order contains Z[eps] and the Gaussian integers at once.  Inverting 2 makes
the matrix entries below integral.

varpi = i(eps + 1) - 1 generates a prime above 5: the residue homomorphism
eps -> 2, i -> 2, 1/2 -> 3 lands in F5 and kills varpi, and the explicit
identities verified by verify_varpi_identities show 2 - eps, 2 - i, and
sqrt5 all lie in the kernel.

The group of 2x2 matrices over F5 whose determinant is a nonzero square
(order 240) is enumerated by breadth-first closure from the shadows of

    S = (1/2) [[eps, varpi + 2], [varpi, eps]],
    T = [[0, -1], [1, 0]],
    U(a, d) = diag(omega5(a), omega5(d)),

where omega5 is the multiplicative lift 1 -> 1, 2 -> i, 3 -> -i, 4 -> -1
of F5^x fixed by omega5(x) = x under the residue homomorphism.  lift_pi
sends each group element to the product of lifted generators along its
first-discovery word; verify_homomorphism certifies multiplicativity,
verify_relations checks the braid-like generator relations together with
the documented failure at a/d = +-2, and verify_congruence checks that the
residue homomorphism applied entrywise is the identity on all 240 elements
and that the lift is faithful.

Every function takes the branch omega5(2) = i; pass conjugate_branch=True
for the complex-conjugate convention (the prime generated by the conjugate
of varpi), under which the residue homomorphism sends i -> 3.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import QEPSI

__all__ = [
    "F5Matrix",
    "RepMatrix",
    "varpi",
    "teichmuller",
    "residue_hom",
    "verify_varpi_identities",
    "pi_generators",
    "enumerate_group",
    "lift_pi",
    "verify_homomorphism",
    "verify_relations",
    "verify_congruence",
]

_WORD_CAP = 40
_SQUARES = (1, 4)


def _oe(x):
    if isinstance(x, (int, Fraction)):
        return QEPSI.from_scalar(x)
    return x


def varpi(conjugate_branch: bool = False):
    """The prime generator i(eps + 1) - 1 (conjugate branch: its i -> -i image)."""
    eps1 = QEPSI.gen(1) + 1
    i = -QEPSI.gen(2) if conjugate_branch else QEPSI.gen(2)
    return i * eps1 - 1


def teichmuller(a: int, conjugate_branch: bool = False):
    """Multiplicative lift of a in F5^x: 1 -> 1, 2 -> i, 3 -> -i, 4 -> -1."""
    a %= 5
    if a == 0:
        raise ValueError("0 has no multiplicative lift")
    i = -QEPSI.gen(2) if conjugate_branch else QEPSI.gen(2)
    return (QEPSI.one, i, -i, -QEPSI.one)[a - 1]


def _coord_mod5(c: Fraction) -> int:
    den = c.denominator
    if den & (den - 1):
        raise ValueError("denominator is not a power of 2")
    return c.numerator * pow(den, -1, 5) % 5


def residue_hom(x, conjugate_branch: bool = False) -> int:
    """Reduction to F5 by eps -> 2, i -> 2 (3 on the conjugate branch), 1/2 -> 3.

    Defined on elements whose coordinate denominators are powers of 2; the
    kernel meets Z[eps, i] in the prime generated by varpi.
    """
    a, b, c, d = (_coord_mod5(v) for v in _oe(x).coords)
    iv = 3 if conjugate_branch else 2
    return (a + 2 * b + iv * c + 2 * iv * d) % 5


def verify_varpi_identities(conjugate_branch: bool = False) -> bool:
    """Check 2 - eps = eps^2 w w^c, 2 - omega5(2) = eps w (eps w^c - 1),
    and sqrt5 = eps w w^c for w = varpi, plus residue_hom = 0 on each left side.
    """
    eps = QEPSI.gen(1)
    w = varpi(conjugate_branch)
    wc = w.conj("conj")
    omega2 = teichmuller(2, conjugate_branch)
    sqrt5 = eps * 2 + 1
    pairs = (
        (QEPSI.from_scalar(2) - eps, eps * eps * w * wc),
        (QEPSI.from_scalar(2) - omega2, eps * w * (eps * wc - 1)),
        (sqrt5, eps * w * wc),
    )
    return all(lhs == rhs and residue_hom(lhs, conjugate_branch) == 0
               for lhs, rhs in pairs)


@dataclass(frozen=True)
class F5Matrix:
    """2x2 matrix over F5; entries stored as integers in 0..4."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, getattr(self, name) % 5)

    @classmethod
    def identity(cls) -> "F5Matrix":
        return cls(1, 0, 0, 1)

    def __mul__(self, o: "F5Matrix") -> "F5Matrix":
        return F5Matrix(self.a * o.a + self.b * o.c,
                        self.a * o.b + self.b * o.d,
                        self.c * o.a + self.d * o.c,
                        self.c * o.b + self.d * o.d)

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % 5


@dataclass(frozen=True)
class RepMatrix:
    """2x2 matrix over the order, multiplied and inverted exactly."""

    a: object
    b: object
    c: object
    d: object

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _oe(getattr(self, name)))

    @classmethod
    def identity(cls) -> "RepMatrix":
        return cls(QEPSI.one, QEPSI.zero, QEPSI.zero, QEPSI.one)

    def __mul__(self, o: "RepMatrix") -> "RepMatrix":
        return RepMatrix(self.a * o.a + self.b * o.c,
                         self.a * o.b + self.b * o.d,
                         self.c * o.a + self.d * o.c,
                         self.c * o.b + self.d * o.d)

    def __pow__(self, n: int) -> "RepMatrix":
        if n < 0:
            return self.inv() ** (-n)
        out = RepMatrix.identity()
        for _ in range(n):
            out = out * self
        return out

    def det(self):
        return self.a * self.d - self.b * self.c

    def inv(self) -> "RepMatrix":
        k = self.det().inv()
        return RepMatrix(self.d * k, -self.b * k, -self.c * k, self.a * k)

    def residue(self, conjugate_branch: bool = False) -> F5Matrix:
        return F5Matrix(*(residue_hom(v, conjugate_branch)
                          for v in (self.a, self.b, self.c, self.d)))

    def key(self):
        return (self.a.coords, self.b.coords, self.c.coords, self.d.coords)


def _admissible_pairs():
    return tuple((a, d) for a in range(1, 5) for d in range(1, 5)
                 if a * d % 5 in _SQUARES)


def _diag_lift(a: int, d: int, conjugate_branch: bool = False) -> RepMatrix:
    return RepMatrix(teichmuller(a, conjugate_branch), 0, 0,
                     teichmuller(d, conjugate_branch))


def pi_generators(conjugate_branch: bool = False):
    """(S, T, U) with U a builder requiring ad to be a nonzero square mod 5."""
    eps = QEPSI.gen(1)
    w = varpi(conjugate_branch)
    half = Fraction(1, 2)
    S = RepMatrix(eps * half, (w + 2) * half, w * half, eps * half)
    T = RepMatrix(0, -1, 1, 0)

    def U(a: int, d: int) -> RepMatrix:
        if (a * d) % 5 not in _SQUARES:
            raise ValueError("ad must be a nonzero square mod 5")
        return _diag_lift(a, d, conjugate_branch)

    return S, T, U


def _shadow_generators():
    gens = [F5Matrix(1, 1, 0, 1), F5Matrix(0, -1, 1, 0)]
    gens.extend(F5Matrix(a, 0, 0, d) for a, d in _admissible_pairs())
    return tuple(gens)


@lru_cache(maxsize=1)
def _group_data():
    """BFS closure of the shadow generators.

    Discovery order is deterministic: the queue advances in layers and each
    layer multiplies by the generators in a fixed order, so elements appear
    sorted by (word length, word) lexicographically.
    """
    gens = _shadow_generators()
    ident = F5Matrix.identity()
    words = {ident: ()}
    parents = {}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            w = words[g]
            if len(w) >= _WORD_CAP:
                raise ArithmeticError("generator word exceeded the length cap")
            for idx, s in enumerate(gens):
                h = g * s
                if h not in words:
                    words[h] = w + (idx,)
                    parents[h] = (g, idx)
                    order.append(h)
                    nxt.append(h)
        frontier = nxt
    return tuple(order), words, parents


def enumerate_group():
    """All 240 matrices over F5 with square nonzero determinant, BFS order."""
    return list(_group_data()[0])


@lru_cache(maxsize=2)
def _lift_table(conjugate_branch: bool = False):
    S, T, _ = pi_generators(conjugate_branch)
    lifts = [S, T]
    lifts.extend(_diag_lift(a, d, conjugate_branch)
                 for a, d in _admissible_pairs())
    order, _, parents = _group_data()
    table = {order[0]: RepMatrix.identity()}
    for g in order[1:]:
        parent, idx = parents[g]
        table[g] = table[parent] * lifts[idx]
    return table


def lift_pi(g: F5Matrix, conjugate_branch: bool = False) -> RepMatrix:
    """The exact lift of g along its BFS generator word."""
    table = _lift_table(conjugate_branch)
    if g not in table:
        raise ValueError("matrix is not in the square-determinant group")
    return table[g]


def verify_homomorphism(trials: int = 200, seed: int = 20260815,
                        exhaustive: bool = False) -> bool:
    """Certify lift_pi(g) lift_pi(h) = lift_pi(gh) on sampled or all pairs."""
    order = enumerate_group()
    table = _lift_table(False)
    if exhaustive:
        pairs = ((g, h) for g in order for h in order)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(order), rng.choice(order)) for _ in range(trials))
    return all(table[g] * table[h] == table[g * h] for g, h in pairs)


def verify_relations() -> bool:
    """Check the generator relations, including the documented failure.

    (1) T U(a,d) T^-1 = U(d,a) for all admissible (a, d);
    (2) U(a,d) S U(a,d)^-1 = S^n with n = a/d, which is +-1 for admissible
        pairs; diagonal lifts with a/d = +-2 must violate it;
    (3) T S^d T^-1 = U(a,d) S^-d T^-1 S^-a whenever ad = 1 mod 5.
    """
    S, T, U = pi_generators()
    Tinv = T.inv()
    for a, d in _admissible_pairs():
        if T * U(a, d) * Tinv != U(d, a):
            return False
        n = a * pow(d, -1, 5) % 5
        if U(a, d) * S * U(a, d).inv() != S ** n:
            return False
    for a, d in ((1, 1), (2, 3), (3, 2), (4, 4)):
        lhs = T * S ** d * Tinv
        rhs = U(a, d) * S ** (5 - d) * Tinv * S ** (5 - a)
        if lhs != rhs:
            return False
    for a, d in ((2, 1), (3, 1), (1, 2), (1, 3)):
        n = a * pow(d, -1, 5) % 5
        M = _diag_lift(a, d)
        if M * S * M.inv() == S ** n:
            return False
    return True


def verify_congruence(conjugate_branch: bool = False) -> bool:
    """residue_hom o lift_pi is the identity on all 240 elements; lift faithful."""
    order = enumerate_group()
    table = _lift_table(conjugate_branch)
    if any(table[g].residue(conjugate_branch) != g for g in order):
        return False
    return len({table[g].key() for g in order}) == len(order)
