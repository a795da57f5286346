import random
from fractions import Fraction

import pytest
import sympy as sp

from icosahedral import quintic
from icosahedral.exact import RatFunc, sqrt_exact
from icosahedral.quintic import (
    Quintic, TrinomialClass, canonical_trinomial, family_quintic,
    hyperelliptic_search, invariants, j_candidates, resolvent_coeffs,
    scaling_equivalent, solvable_family, solvability_obstruction, trinomial_t,
)


def rand_frac(rng, lo=-12, hi=12, den=7):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def test_disc_against_sympy():
    x, A, B, C = sp.symbols("x A B C")
    generic = sp.discriminant(x ** 5 + A * x ** 2 + B * x + C, x)
    rng = random.Random(101)
    for _ in range(8):
        q = Quintic(rand_frac(rng), rand_frac(rng), rand_frac(rng))
        want = generic.subs({A: sp.Rational(q.a), B: sp.Rational(q.b),
                             C: sp.Rational(q.c)})
        assert sp.Rational(invariants(q).disc) == want


def test_disc_trinomial_form():
    # with A = 0 the discriminant collapses to 256 B^5 + 3125 C^4
    rng = random.Random(5)
    for _ in range(6):
        b, c = rand_frac(rng), rand_frac(rng)
        assert invariants(Quintic(0, b, c)).disc == 256 * b ** 5 + 3125 * c ** 4
    assert invariants(Quintic(0, 4, Fraction(16, 5))).disc == 589824 == 768 ** 2
    assert invariants(Quintic(0, 20, -16)).disc == 1024000000 == 32000 ** 2


def test_jequation_discriminant_factorization():
    # quadratic discriminant of the j-equation = 5*disc times an explicit square
    rng = random.Random(17)
    for _ in range(20):
        q = Quintic(rand_frac(rng), rand_frac(rng), rand_frac(rng))
        iv = invariants(q)
        if not iv.delta or not iv.disc:
            continue
        qa = iv.delta ** 5
        qb = -1728 * (iv.gamma4 ** 3 - iv.gamma6 ** 2 + iv.delta ** 5)
        qc = 1728 ** 2 * iv.gamma4 ** 3
        ratio = (qb * qb - 4 * qa * qc) / (5 * iv.disc)
        assert sqrt_exact(ratio) is not None
        A, B, C = q.a, q.b, q.c
        f1 = (8 * A ** 5 * C + 8 * A ** 4 * B ** 2 - 250 * A ** 2 * B * C ** 2
              - 225 * A * B ** 3 * C + 81 * B ** 5 + 3125 * C ** 4)
        f2 = (64 * A ** 10 + 1000 * A ** 7 * B * C - 800 * A ** 6 * B ** 3
              + 3125 * A ** 5 * C ** 3 - 3125 * A ** 4 * B ** 2 * C ** 2
              + 625 * A ** 3 * B ** 4 * C - 625 * A ** 2 * B ** 6
              - 3125 * B ** 5 * C ** 2)
        assert ratio == (f1 * f2 / Fraction(5 ** 18)) ** 2


def test_j_candidates_t1_row():
    roots = j_candidates(Quintic(0, 4, Fraction(16, 5)))
    iv = invariants(Quintic(0, 4, Fraction(16, 5)))
    # irrational conjugate pair in Q[r]/(r^2 - 5*disc)
    qa = iv.delta ** 5
    qb = -1728 * (iv.gamma4 ** 3 - iv.gamma6 ** 2 + iv.delta ** 5)
    qc = 1728 ** 2 * iv.gamma4 ** 3
    for r in roots:
        assert not r.is_rational()
        assert (r * r * qa + r * qb + qc) == 0
    assert (roots[0] + roots[1]).rational_value() == -qb / qa
    assert (roots[0] * roots[1]).rational_value() == qc / qa
    # r^2 = 5*disc in the ambient algebra
    gen = roots[0].field.gen(1)
    assert (gen * gen).rational_value() == 5 * iv.disc


def test_j_candidates_rational_split():
    # x^5 + 2x: the square cofactor vanishes, leaving a double rational root
    assert j_candidates(Quintic(0, 2, 0)) == (1728, 1728)
    with pytest.raises(ValueError):
        j_candidates(Quintic(0, 0, 1))  # delta = 0


def test_j_candidates_split_when_5disc_square():
    # quintics built from rational (m, n, j) have 5*disc a rational square,
    # so the quadratic splits and both roots come back as Fractions
    q = Quintic(*resolvent_coeffs(1, 1, 2))
    iv = invariants(q)
    assert sqrt_exact(5 * iv.disc) is not None
    roots = j_candidates(q)
    assert all(isinstance(r, Fraction) for r in roots)
    assert Fraction(2) in roots and roots[0] != roots[1]


def test_resolvent_coeffs_collapse_and_errors():
    m, j = Fraction(3, 2), Fraction(11, 4)
    assert resolvent_coeffs(m, 0, j) == (
        -40 * m ** 3 / j, -5 * m ** 4 / j, -m ** 5 / j)
    for bad in (0, 1728):
        with pytest.raises(ValueError):
            resolvent_coeffs(1, 1, bad)


def test_resolvent_coeffs_direct_substitution():
    A, B, C = resolvent_coeffs(1, 1, 2)
    e = Fraction(1, 1726)
    assert A == Fraction(-20, 2) * (5 + 432 * 7 * e)
    assert B == Fraction(-5, 2) * (1 - 864 * 5 * e - 559872 * e ** 2)
    assert C == Fraction(-1, 2) * (1 - 1440 * e + 62208 * 19 * e ** 2)


def test_resolvent_roundtrip_through_j_equation():
    rng = random.Random(29)
    done = 0
    while done < 10:
        m, n = rand_frac(rng, -9, 9, 5), rand_frac(rng, -9, 9, 5)
        j = Fraction(rng.randint(1, 4000), rng.randint(1, 7))
        if j == 1728 or (not m and not n):
            continue
        q = Quintic(*resolvent_coeffs(m, n, j))
        if not invariants(q).delta:
            continue
        assert j in j_candidates(q)
        done += 1


def test_family_quintic_table_rows():
    q1 = family_quintic(1)
    assert (q1.a, q1.b, q1.c) == (0, 4, Fraction(16, 5))
    assert canonical_trinomial(1, q1.b, q1.c) == (5, 20, 16)
    q3 = family_quintic(3)
    assert canonical_trinomial(1, q3.b, q3.c) == (5, -20, 16)
    q35 = family_quintic(Fraction(3, 5))
    assert canonical_trinomial(1, q35.b, q35.c) == (1, 20, 16)
    with pytest.raises(ValueError):
        family_quintic(0)


def test_family_disc_identity_symbolic():
    # Disc(q_t) t^10 = 2^8 3^2 (9-5t^2)^4 as rational functions in t
    t = RatFunc.var()
    k = 9 - 5 * t * t
    B = k / (t * t)
    C = 4 * k / (5 * t * t)
    disc = 256 * B ** 5 + 3125 * C ** 4
    assert disc * t ** 10 == 2 ** 8 * 3 ** 2 * k ** 4
    # the pieces of the t-recovery, also symbolically
    assert 75 * C * C * t ** 5 == 48 * k * k * t
    assert disc == (48 * k * k / t ** 5) ** 2


def test_trinomial_t_table_values():
    assert trinomial_t(4, Fraction(16, 5)) == 1
    assert trinomial_t(Fraction(-25, 4), Fraction(25, 2)) == Fraction(15, 11)
    assert trinomial_t(1, Fraction(8, 5)) == Fraction(4, 3)
    assert trinomial_t(-1, Fraction(4, 5)) == Fraction(3, 2)
    assert trinomial_t(1, 1) is None          # 3381 is not a square
    assert trinomial_t(-1, Fraction(1, 2)) is None  # negative radicand
    with pytest.raises(ValueError):
        trinomial_t(4, 0)


def test_trinomial_t_recovers_family_parameter():
    rng = random.Random(31)
    for _ in range(12):
        t = rand_frac(rng, -15, 15, 8)
        if not t:
            continue
        q = family_quintic(t)
        assert trinomial_t(q.b, q.c) == abs(t)


def test_trinomial_t_scaling_invariance():
    rng = random.Random(37)
    done = 0
    while done < 20:
        b, c = rand_frac(rng), rand_frac(rng)
        k = rand_frac(rng, -8, 8, 5)
        if not c or not k:
            continue
        assert trinomial_t(b, c) == trinomial_t(b * k ** 4, c * k ** 5)
        done += 1


def test_trinomial_class():
    tc = TrinomialClass.from_coeffs(4, Fraction(16, 5))
    assert tc.t == 1
    assert TrinomialClass.from_coeffs(1, 1).t is None
    assert TrinomialClass.from_coeffs(3, 0).t is None


def test_canonical_trinomial():
    assert canonical_trinomial(1, 4, Fraction(16, 5)) == (5, 20, 16)
    assert canonical_trinomial(5, -20, -16) == (5, -20, 16)
    assert canonical_trinomial(5, 20, 16) == (5, 20, 16)
    assert canonical_trinomial(-2, 4, -6) == (1, -2, 3)


def test_scaling_equivalent():
    q43 = family_quintic(Fraction(4, 3))
    assert canonical_trinomial(1, q43.b, q43.c) == (80, 5, 4)
    assert scaling_equivalent((1, q43.b, q43.c), (5, 5, 8))
    assert not scaling_equivalent((5, 20, 16), (5, -20, 16))
    assert scaling_equivalent((5, 20, 16), (5, 20, 16))
    # pure fifth-power scaling when B = 0
    assert scaling_equivalent((1, 0, 3), (1, 0, 3 * 2 ** 5))
    assert not scaling_equivalent((1, 0, 3), (1, 0, 6))


def test_solvable_family():
    assert solvable_family(Fraction(7, 3), 0) == (0, 0)
    assert solvable_family(1, 1) == (-5, 12)
    rng = random.Random(11)
    for _ in range(10):
        v, w = rand_frac(rng, -20, 20, 9), rand_frac(rng, -20, 20, 9)
        B, C = solvable_family(v, w)
        assert sqrt_exact(256 * B ** 5 + 3125 * C ** 4) is not None


def test_solvability_obstruction():
    assert solvability_obstruction(1) == (Fraction(-1, 3), Fraction(27, 20))
    assert solvability_obstruction(0) == (Fraction(1, 2), Fraction(-6, 5))
    for bad in (Fraction(1, 2), -2):  # 2v^2 + 3v - 2 = 0
        with pytest.raises(ValueError):
            solvability_obstruction(bad)


def test_obstruction_consistency_with_family():
    rng = random.Random(3)
    done = 0
    while done < 5:
        v = rand_frac(rng, -12, 12, 7)
        try:
            w, t = solvability_obstruction(v)
        except ValueError:
            continue
        if not t or not w:
            continue
        B, C = solvable_family(v, w)
        if not C:
            continue
        q = family_quintic(t)
        assert scaling_equivalent((1, q.b, q.c), (1, B, C))
        done += 1


def test_hyperelliptic_curve_values():
    # right side 15(x^2+1)(2x^3+2x^2-x+1)(x^3+x^2+2x-2) at sample points
    def rhs(x):
        x = Fraction(x)
        return (15 * (x ** 2 + 1) * (2 * x ** 3 + 2 * x ** 2 - x + 1)
                * (x ** 3 + x ** 2 + 2 * x - 2))

    assert rhs(0) == -30
    assert rhs(1) == 240
    assert sqrt_exact(240) is None


def test_hyperelliptic_search_small_heights_empty():
    assert hyperelliptic_search(1) == []
    assert hyperelliptic_search(60) == []
    with pytest.raises(ValueError):
        hyperelliptic_search(0)


def test_hyperelliptic_search_enumeration(monkeypatch):
    # of the seven height-2 rationals {0, +-1, +-2, +-1/2}, exactly three
    # give a nonnegative cleared right side and reach the square test
    seen = []
    orig = quintic.isqrt
    monkeypatch.setattr(quintic, "isqrt", lambda n: seen.append(n) or orig(n))
    hyperelliptic_search(2)
    assert len(seen) == 3
