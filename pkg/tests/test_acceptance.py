"""End-to-end acceptance checks, one per shipped guarantee, with runtime
budgets asserted where a guarantee includes one."""

import random
import time
from fractions import Fraction

from icosahedral import hecke, icosa, localfield, qcurve, repn
from icosahedral.exact import Poly, QEPSI, QSQRT5, RatFunc
from icosahedral.quintic import (
    Quintic, family_quintic, hyperelliptic_search, invariants, trinomial_t,
)

SEED = 20260815


def test_01_fundamental_identity_under_10s():
    started = time.monotonic()
    assert icosa.verify_fundamental_identity()
    assert time.monotonic() - started < 10


def test_02_invariance_of_j_mu_lambda():
    # S additionally checks mu o S = mu and lambda o S != lambda
    for label in ("S", "T", "U"):
        assert icosa.verify_invariance(label)


def test_03_resolvent_grid_under_10min():
    started = time.monotonic()
    grid = icosa.resolvent_grid()
    assert len(grid) == 36
    for m, n in grid:
        assert icosa.verify_resolvent_quintic(m, n)
    assert time.monotonic() - started < 600


def test_04_table_parameters_exact():
    assert trinomial_t(20, -16) == Fraction(3, 5)
    assert trinomial_t(Fraction(-25, 4), Fraction(25, 2)) == Fraction(15, 11)
    assert trinomial_t(4, Fraction(16, 5)) == 1
    assert trinomial_t(-4, Fraction(16, 5)) == 3
    assert trinomial_t(-1, Fraction(4, 5)) == Fraction(3, 2)
    assert trinomial_t(1, Fraction(8, 5)) == Fraction(4, 3)


def test_05_disc_identity_symbolic():
    t = RatFunc.var()
    k = 9 - 5 * t * t
    disc = 256 * (k / (t * t)) ** 5 + 3125 * (4 * k / (5 * t * t)) ** 4
    assert disc * t ** 10 == 2 ** 8 * 3 ** 2 * k ** 4


def _j_equation_member(t):
    iv = invariants(family_quintic(t))
    qa = iv.delta ** 5
    qb = -1728 * (iv.gamma4 ** 3 - iv.gamma6 ** 2 + iv.delta ** 5)
    qc = 1728 ** 2 * iv.gamma4 ** 3
    j = qcurve.j_invariant(qcurve.curve_from_t(t))
    return j * j * qa + j * qb + QSQRT5.from_scalar(qc) == QSQRT5.zero


def test_06_qcurve_bundle():
    assert qcurve.verify_isogeny_codomain()
    for p in (11, 19, 41):
        assert qcurve.verify_isogeny_composition(p, trials=20, seed=SEED)
    s5 = QSQRT5.gen(1)
    published = qcurve.EllipticCurve(QSQRT5, QSQRT5.from_scalar(5) - s5, s5,
                                     QSQRT5.zero)
    assert qcurve.j_invariant(qcurve.curve_from_t(1)) \
        == qcurve.j_invariant(published)
    assert _j_equation_member(Fraction(1))
    rng = random.Random(SEED)
    picked = []
    while len(picked) < 5:
        t = Fraction(rng.randint(-999, 999), rng.randint(1, 60))
        if t and t not in picked:
            picked.append(t)
    for t in picked:
        assert _j_equation_member(t)


def test_07_klein_link_rational_samples():
    samples = (Fraction(2), Fraction(-25, 3), Fraction(5, 7), Fraction(64),
               Fraction(-1), Fraction(1000))
    assert len(samples) >= 5
    for j in samples:
        assert qcurve.verify_klein_link(j)


def test_08_representation_bundle_under_1min():
    started = time.monotonic()
    group = repn.enumerate_group()
    assert len(group) == 240
    lifts = {g: repn.lift_pi(g) for g in group}
    assert len({m.key() for m in lifts.values()}) == 240
    S, T, U = repn.pi_generators()
    assert S ** 5 == repn.RepMatrix.identity()
    assert T ** 4 == repn.RepMatrix.identity()
    for a in range(1, 5):
        for d in range(1, 5):
            if a * d % 5 in (1, 4):
                assert U(a, d) ** 4 == repn.RepMatrix.identity()
    assert repn.verify_relations()
    assert repn.verify_congruence()
    assert repn.verify_varpi_identities()
    assert time.monotonic() - started < 60


def test_09_hecke_identities_under_10s():
    started = time.monotonic()
    assert hecke.verify_sigma_identity()
    assert hecke.verify_square_identity()
    assert hecke.verify_positive_units()
    assert time.monotonic() - started < 10


def test_10_localfield_bundle():
    assert localfield.artin_schreier_identity()
    truth = {Fraction(1): True, Fraction(3): False, Fraction(3, 5): False,
             Fraction(4, 9): True}
    for t, want in truth.items():
        assert localfield.is_square_5adic_unit(t) is want
    rng = random.Random(SEED)
    count = 0
    while count < 20:
        u = Fraction(rng.randint(-400, 400), rng.randint(1, 60))
        if not u or localfield.v5(u).value != 0:
            continue
        q = family_quintic(u * u)
        assert localfield.theorem_hypothesis(q.b, q.c)
        count += 1
    assert localfield.theorem_hypothesis(4, Fraction(16, 5)) is True
    assert localfield.theorem_hypothesis(20, -16) is False
    assert localfield.theorem_hypothesis(-4, Fraction(16, 5)) is False


def test_11_hyperelliptic_search_under_1min():
    started = time.monotonic()
    assert hyperelliptic_search(1000) == []
    assert time.monotonic() - started < 60


def test_12_mutation_suite():
    # every exact-identity check must reject its documented one-coefficient
    # mutation; the passing forms are covered by the tests above

    # fundamental identity: bump one numerator coefficient of lambda
    inv = icosa.build_invariants()
    coeffs = list(inv.lam.num.coeffs)
    coeffs[3] += 1
    bad_lam = RatFunc(Poly(coeffs, inv.lam.num.dom), inv.lam.den)
    assert icosa._j_from_lambda(bad_lam) != icosa._j_from_mu(inv.mu)

    # resolvent quintic: the n-normalization (n in place of n/12)
    m, n = Fraction(0), Fraction(1)
    _, _, _, prodW, Jn, Jd, D = icosa._resolvent_parts()
    c2 = icosa._project_rational(icosa._resolvent_coeff_polys(m, n)[2])
    alpha = 2 * m ** 3 + 3 * m ** 2 * n
    beta = 6 * m * n ** 2 + n ** 3
    An = Jd * (D.scale(alpha) + Jd.scale(432 * beta)).scale(-20)
    assert c2 * (Jn * D) != prodW * An

    # disc identity: wrong exponent on (9 - 5t^2)
    t = RatFunc.var()
    k = 9 - 5 * t * t
    disc = 256 * (k / (t * t)) ** 5 + 3125 * (4 * k / (5 * t * t)) ** 4
    assert disc * t ** 10 != 2 ** 8 * 3 ** 2 * k ** 3

    # isogeny codomain: shift the x-coefficient r by 1
    r = qcurve.curve_from_t(1).a4
    assert qcurve._codomain_identity(QSQRT5, r)
    assert not qcurve._codomain_identity(QSQRT5, r + 1)

    # linking transform: 31104 -> 31105 in the inverse map
    j = Fraction(2)
    g = qcurve.x5sum_resolvent(qcurve.curve_from_j(j))
    qp = qcurve.mu_sextic(j)
    den = (Poly.over_q([2, 1]) ** 5).scale(j) \
        - Poly.over_q([0, 0, 0, 1728]) * Poly.over_q([34, 10, 1])
    assert (qp.compose_frac(Poly.over_q([0, 0, 0, 31104]), den) % g).is_zero()
    assert not (qp.compose_frac(Poly.over_q([0, 0, 0, 31105]), den)
                % g).is_zero()

    # Artin-Schreier: 256 -> 255 in the structure constant (and so in y^4)
    from icosahedral.exact import power_basis_algebra
    rz, ro = RatFunc.constants("u")

    def coerce(c):
        if isinstance(c, RatFunc):
            return c
        return RatFunc.from_scalar(Fraction(c))

    y4 = RatFunc(Poly.over_q([0, 0, 0, 0, 255]),
                 Poly.over_q([-5625, 0, 0, 0, 3125]))
    fld = power_basis_algebra("ASmut12(u)", 4, (y4, rz, rz, rz),
                              scalar_zero=rz, scalar_one=ro, coerce=coerce)
    dom = fld.domain()
    u4 = Poly.over_q([0, 0, 0, 0, 1])
    nine = Poly.over_q([9, 0, 0, 0, -5])
    b = fld.from_scalar(RatFunc(nine, u4))
    c = fld.from_scalar(RatFunc(nine.scale(4), u4.scale(5)))
    w = fld.gen(1) * Fraction(5, 4)
    lhs = Poly((c * w ** 5, b * w ** 4, fld.zero, fld.zero, fld.zero,
                fld.one), dom)
    rhs = Poly((-fld.gen(1), -fld.one, fld.zero, fld.zero, fld.zero,
                fld.one), dom)
    assert lhs != rhs

    # varpi identity: 2 + eps in place of 2 - eps
    eps = QEPSI.gen(1)
    w = repn.varpi()
    wc = w.conj("conj")
    assert QEPSI.from_scalar(2) - eps == eps * eps * w * wc
    assert QEPSI.from_scalar(2) + eps != eps * eps * w * wc

    # Hecke character: omega4^2 in place of omega4^3 breaks both identities
    ring = hecke.residue_ring("8sqrt5")
    w4, w8, w5 = hecke.omega4(), hecke.omega8(), hecke.omega5()
    mut = hecke.Character(ring, {x: w4(x) ** 2 * w8(x) ** 3 * w5(x)
                                 for x in ring.units()})
    sigma_bad = square_bad = 0
    for x in ring.units():
        if mut(ring.sigma(x)) * mut(x).inv() != hecke.RootOfUnity.sign(
                hecke.KRONECKER_M2[ring.norm(x) % 8]):
            sigma_bad += 1
        chi4 = hecke.RootOfUnity.sign(1 if ring.norm(x) % 4 == 1 else -1)
        teich = hecke.RootOfUnity(hecke.TEICHMULLER_EXP[ring.norm(x) % 5])
        if mut(x) ** 2 != chi4 * teich.inv():
            square_bad += 1
    assert sigma_bad > 0 and square_bad > 0
