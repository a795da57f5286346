"""Exact arithmetic kernel.

Rationals, a handful of small Q-algebras given by explicit structure
constants, dense polynomials, rational functions, gcds and resultants.
Everything is immutable and exact; there is no floating point anywhere.

Scalars default to ``fractions.Fraction``.  An algebra element is a
coordinate vector over a :class:`FieldDescriptor` holding a basis-by-basis
multiplication table; only the fixed algebras needed by the rest of the
package are provided (Q, Q(sqrt5), Q(zeta5), Q(eps,i), Q(sqrt5,sqrt-2), F5,
plus ad-hoc quadratic and power-basis extensions).  Polynomials are dense
coefficient tuples, lowest degree first, over any exact coefficient domain.
Multiplication over Q and over Fraction-coordinate algebras packs
coefficients into big integers (Kronecker substitution) instead of
schoolbook convolution, which is what keeps the large identity checks cheap.

Resultant sign convention: ``resultant(p, q)`` is the determinant of the
Sylvester matrix with the rows built from p listed first, equivalently
lc(p)^deg(q) * prod q(a) over the roots a of p, so
resultant(x - a, x - b) = a - b.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "Fraction",
    "GF5",
    "FieldDescriptor",
    "AlgElement",
    "Domain",
    "QDOM",
    "Poly",
    "RatFunc",
    "field_tower",
    "quadratic_field",
    "power_basis_algebra",
    "alg_arith",
    "embed",
    "poly_gcd",
    "resultant",
    "ratfunc_compose",
    "sqrt_exact",
    "poly_sqrt",
]


def sqrt_exact(x):
    """Return the nonnegative rational square root of x, or None.

    Non-square input is a normal outcome, not an error.
    """
    x = Fraction(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


class GF5:
    """Element of the field with five elements."""

    __slots__ = ("v",)
    _INV = (0, 1, 3, 2, 4)

    def __init__(self, v):
        if isinstance(v, GF5):
            v = v.v
        elif isinstance(v, Fraction):
            d = v.denominator % 5
            if d == 0:
                raise ZeroDivisionError("denominator divisible by 5")
            v = v.numerator * GF5._INV[d]
        self.v = v % 5

    def __add__(self, o):
        return GF5(self.v + GF5(o).v)

    __radd__ = __add__

    def __sub__(self, o):
        return GF5(self.v - GF5(o).v)

    def __rsub__(self, o):
        return GF5(GF5(o).v - self.v)

    def __mul__(self, o):
        return GF5(self.v * GF5(o).v)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GF5(o)
        if o.v == 0:
            raise ZeroDivisionError("division by zero in GF(5)")
        return GF5(self.v * GF5._INV[o.v])

    def __rtruediv__(self, o):
        return GF5(o) / self

    def __neg__(self):
        return GF5(-self.v)

    def __pow__(self, n):
        return GF5(pow(self.v, n, 5))

    def __eq__(self, o):
        try:
            return self.v == GF5(o).v
        except (TypeError, ZeroDivisionError):
            return NotImplemented

    def __hash__(self):
        return hash(("GF5", self.v))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"GF5({self.v})"


class FieldDescriptor:
    """A finite-dimensional commutative Q-algebra by structure constants.

    ``table[i][j]`` holds the coordinates of basis_i * basis_j.  Scalars are
    Fractions by default but may be any exact field (rational functions for
    parametric towers, GF5 for the mod-5 descriptor); ``scalar`` coerces
    ints and Fractions into the scalar domain.
    """

    def __init__(self, name, basis, table, scalar_zero=Fraction(0),
                 scalar_one=Fraction(1), involutions=None, coerce=None):
        self.name = name
        self.basis = tuple(basis)
        self.dim = len(self.basis)
        self.table = tuple(tuple(tuple(row) for row in line) for line in table)
        self.scalar_zero = scalar_zero
        self.scalar_one = scalar_one
        self.involutions = dict(involutions or {})
        self._coerce = coerce
        if len(self.table) != self.dim or any(len(line) != self.dim for line in self.table):
            raise ValueError("multiplication table shape mismatch")

    def scalar(self, c):
        if self._coerce is not None:
            return self._coerce(c)
        return Fraction(c)

    def element(self, coords):
        coords = tuple(coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates")
        return AlgElement(self, tuple(self.scalar(c) if isinstance(c, (int, Fraction)) else c
                                      for c in coords))

    def from_scalar(self, c):
        coords = [self.scalar(0)] * self.dim
        coords[0] = self.scalar(c) if isinstance(c, (int, Fraction)) else c
        return AlgElement(self, tuple(coords))

    @property
    def zero(self):
        return self.from_scalar(0)

    @property
    def one(self):
        return self.from_scalar(1)

    def gen(self, i):
        """The i-th basis element as an algebra element."""
        coords = [self.scalar(0)] * self.dim
        coords[i] = self.scalar(1)
        return AlgElement(self, tuple(coords))

    def verify_table(self):
        """Exhaustively check commutativity and associativity on the basis."""
        gens = [self.gen(i) for i in range(self.dim)]
        for a in gens:
            for b in gens:
                if (a * b) != (b * a):
                    raise ValueError(f"{self.name}: table not commutative")
                for c in gens:
                    if ((a * b) * c) != (a * (b * c)):
                        raise ValueError(f"{self.name}: table not associative")
        return True

    def domain(self):
        kind = "alg" if self._coerce is None else "gen"
        return Domain(self.zero, self.one, kind, self)

    def __repr__(self):
        return f"FieldDescriptor({self.name})"


class AlgElement:
    """Element of a structure-constant algebra: a coordinate vector."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def _lift(self, other):
        if isinstance(other, AlgElement):
            if other.field is not self.field:
                raise ValueError("mixed algebras")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgElement(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return AlgElement(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return AlgElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.field.scalar(other)
            return AlgElement(self.field, tuple(a * c for a in self.coords))
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        f = self.field
        zero = f.scalar_zero
        out = [zero] * f.dim
        table = f.table
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(o.coords):
                if not b:
                    continue
                ab = a * b
                for k, s in enumerate(table[i][j]):
                    if s:
                        out[k] = out[k] + ab * s
        return AlgElement(f, tuple(out))

    __rmul__ = __mul__

    def inv(self):
        """Inverse via Gaussian elimination on the multiplication matrix."""
        f = self.field
        n = f.dim
        # columns: coordinates of self * basis_j
        cols = [(self * f.gen(j)).coords for j in range(n)]
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]
        rhs = [f.scalar(1 if i == 0 else 0) for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if mat[r][col]), None)
            if piv is None:
                raise ZeroDivisionError(f"non-invertible element of {f.name}")
            if piv != col:
                mat[col], mat[piv] = mat[piv], mat[col]
                rhs[col], rhs[piv] = rhs[piv], rhs[col]
            p = mat[col][col]
            mat[col] = [x / p for x in mat[col]]
            rhs[col] = rhs[col] / p
            for r in range(n):
                if r != col and mat[r][col]:
                    m = mat[r][col]
                    mat[r] = [x - m * y for x, y in zip(mat[r], mat[col])]
                    rhs[r] = rhs[r] - m * rhs[col]
        return AlgElement(f, tuple(rhs))

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = self.field.scalar(other)
            return AlgElement(self.field, tuple(a / c for a in self.coords))
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, n):
        if n < 0:
            return self.inv() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self, name):
        """Apply a named involution (a coordinate-matrix map) of the algebra."""
        mat = self.field.involutions[name]
        n = self.field.dim
        out = []
        for i in range(n):
            acc = self.field.scalar_zero
            for j in range(n):
                s = mat[i][j]
                if s:
                    acc = acc + self.coords[j] * s
            out.append(acc)
        return AlgElement(self.field, tuple(out))

    def is_rational(self):
        return not any(self.coords[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_scalar(other)
        if not isinstance(other, AlgElement) or other.field is not self.field:
            return NotImplemented
        return self.coords == other.coords

    def __bool__(self):
        return any(bool(c) for c in self.coords)

    def __repr__(self):
        terms = []
        for c, b in zip(self.coords, self.field.basis):
            if c:
                terms.append(f"{c}" if b == "1" else f"{c}*{b}")
        return " + ".join(terms) if terms else "0"


def power_basis_algebra(name, dim, top, scalar_zero=Fraction(0),
                        scalar_one=Fraction(1), gen_name="y", coerce=None):
    """Algebra Q[y]/(y^dim - top) with basis 1, y, ..., y^(dim-1).

    ``top`` gives the coordinates of y^dim in the power basis.
    """
    top = tuple(top)
    zero, one = scalar_zero, scalar_one

    def reduced_power(e):
        # coordinates of y^e for e < 2*dim - 1
        if e < dim:
            v = [zero] * dim
            v[e] = one
            return v
        v = [zero] * dim
        carry = list(top)  # y^dim
        for _ in range(e - dim):
            # multiply carry by y
            lead = carry[dim - 1]
            carry = [zero] + carry[:-1]
            if lead:
                carry = [c + lead * t for c, t in zip(carry, top)]
        return carry

    table = [[reduced_power(i + j) for j in range(dim)] for i in range(dim)]
    basis = ["1"] + [f"{gen_name}^{k}" if k > 1 else gen_name for k in range(1, dim)]
    return FieldDescriptor(name, basis, table, zero, one, coerce=coerce)


def _neg_identity_signs(signs):
    """Diagonal involution matrix from a tuple of +-1 signs."""
    n = len(signs)
    return tuple(tuple(Fraction(signs[i]) if i == j else Fraction(0) for j in range(n))
                 for i in range(n))


def _build_qsqrt5():
    fd = power_basis_algebra("Qsqrt5", 2, (Fraction(5), Fraction(0)), gen_name="s5")
    fd.involutions["sigma"] = _neg_identity_signs((1, -1))
    return fd


def _build_qzeta5():
    # zeta^4 = -1 - zeta - zeta^2 - zeta^3
    return power_basis_algebra("Qzeta5", 4, (Fraction(-1),) * 4, gen_name="z5")


def _build_qepsi():
    # basis 1, eps, i, i*eps with eps^2 = 1 - eps and i^2 = -1
    F = Fraction

    def v(a=0, b=0, c=0, d=0):
        return (F(a), F(b), F(c), F(d))

    table = [
        [v(1), v(0, 1), v(0, 0, 1), v(0, 0, 0, 1)],
        [v(0, 1), v(1, -1), v(0, 0, 0, 1), v(0, 0, 1, -1)],
        [v(0, 0, 1), v(0, 0, 0, 1), v(-1), v(0, -1)],
        [v(0, 0, 0, 1), v(0, 0, 1, -1), v(0, -1), v(-1, 1)],
    ]
    fd = FieldDescriptor("QepsI", ("1", "eps", "i", "i*eps"), table)
    fd.involutions["conj"] = _neg_identity_signs((1, 1, -1, -1))
    return fd


def _build_qsqrt5m2():
    # basis 1, s5, m2, m10 with s5^2 = 5, m2^2 = -2, m10 = s5*m2
    F = Fraction

    def v(a=0, b=0, c=0, d=0):
        return (F(a), F(b), F(c), F(d))

    table = [
        [v(1), v(0, 1), v(0, 0, 1), v(0, 0, 0, 1)],
        [v(0, 1), v(5), v(0, 0, 0, 1), v(0, 0, 5)],
        [v(0, 0, 1), v(0, 0, 0, 1), v(-2), v(0, -2)],
        [v(0, 0, 0, 1), v(0, 0, 5), v(0, -2), v(-10)],
    ]
    fd = FieldDescriptor("Qsqrt5sqrtm2", ("1", "s5", "m2", "m10"), table)
    fd.involutions["sigma"] = _neg_identity_signs((1, -1, 1, -1))
    return fd


def _build_q():
    return FieldDescriptor("Q", ("1",), (((Fraction(1),),),))


def _build_f5():
    return FieldDescriptor("F5", ("1",), (((GF5(1),),),),
                           scalar_zero=GF5(0), scalar_one=GF5(1), coerce=GF5)


Q = _build_q()
QSQRT5 = _build_qsqrt5()
QZETA5 = _build_qzeta5()
QEPSI = _build_qepsi()
QSQRT5M2 = _build_qsqrt5m2()
F5 = _build_f5()

_NAMED = {"Q": Q, "Qsqrt5": QSQRT5, "Qzeta5": QZETA5, "QepsI": QEPSI,
          "Qsqrt5sqrtm2": QSQRT5M2, "F5": F5}


def quadratic_field(d):
    """Q[r]/(r^2 - d) for a rational d (a field iff d is not a square)."""
    d = Fraction(d)
    return power_basis_algebra(f"Qadj({d})", 2, (d, Fraction(0)), gen_name="r")


def field_tower(name, params=()):
    """Return one of the named descriptors, verified.

    With a parameter symbol the scalar domain becomes the field of rational
    functions over Q in that symbol (coordinates are then RatFunc values).
    """
    if name not in _NAMED:
        raise ValueError(f"unknown field descriptor {name!r}")
    base = _NAMED[name]
    base.verify_table()
    if not params:
        return base
    if len(params) != 1:
        raise ValueError("at most one transcendental parameter is supported")
    rz, ro = RatFunc.constants(params[0])
    lift = {0: rz, 1: ro}

    def coerce(c):
        if isinstance(c, RatFunc):
            return c
        c = Fraction(c)
        if c not in lift:
            lift[c] = RatFunc(Poly((c,), QDOM), Poly.one(QDOM), _normalized=True)
        return lift[c]

    table = [[tuple(coerce(s) for s in cell) for cell in line] for line in base.table]
    fd = FieldDescriptor(f"{base.name}({params[0]})", base.basis, table,
                         rz, ro, involutions=base.involutions, coerce=coerce)
    return fd


def alg_arith(a, b, op):
    """Dispatch arithmetic in a structure-constant algebra by name."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "inv":
        return a.inv()
    raise ValueError(f"unknown op {op!r}")


# Images of source basis elements inside the target algebra.
_EMBEDDINGS = {}


def _embedding(src, dst):
    key = (src.name, dst.name)
    if key in _EMBEDDINGS:
        return _EMBEDDINGS[key]
    images = None
    if src is Q:
        images = (dst.one,)
    elif src is QSQRT5 and dst is QZETA5:
        # sqrt5 = 2(z + z^4) + 1 = -1 - 2 z^2 - 2 z^3
        images = (dst.one, dst.element((-1, 0, -2, -2)))
    elif src is QSQRT5 and dst is QEPSI:
        # eps = (sqrt5 - 1)/2, so sqrt5 = 1 + 2 eps
        images = (dst.one, dst.element((1, 2, 0, 0)))
    elif src is QSQRT5 and dst is QSQRT5M2:
        images = (dst.one, dst.gen(1))
    if images is None:
        raise ValueError(f"no embedding {src.name} -> {dst.name}")
    _EMBEDDINGS[key] = images
    return images


def embed(el, dst):
    """Embed an algebra element into a larger named algebra."""
    if el.field is dst:
        return el
    images = _embedding(el.field, dst)
    acc = dst.zero
    for c, im in zip(el.coords, images):
        if c:
            acc = acc + im * c
    return acc


class Domain:
    """Coefficient domain marker for polynomials.

    kind is "q" (Fraction scalars, Kronecker fast path), "alg"
    (AlgElement with Fraction coordinates, coordinatewise Kronecker), or
    "gen" (anything exact; schoolbook).
    """

    __slots__ = ("zero", "one", "kind", "field")

    def __init__(self, zero, one, kind, field=None):
        self.zero = zero
        self.one = one
        self.kind = kind
        self.field = field

    @staticmethod
    def for_polys(inner):
        return Domain(Poly((), inner), Poly((inner.one,), inner), "gen")

    @staticmethod
    def generic(zero, one):
        return Domain(zero, one, "gen")


QDOM = Domain(Fraction(0), Fraction(1), "q")


def _kron_mul_int(f, g):
    """Multiply integer coefficient lists via one big-integer product."""
    if not f or not g:
        return []
    mf = max(abs(c) for c in f)
    mg = max(abs(c) for c in g)
    if mf == 0 or mg == 0:
        return [0] * (len(f) + len(g) - 1)
    bound = mf * mg * min(len(f), len(g))
    L = bound.bit_length() + 2
    half = 1 << (L - 1)
    mask = (1 << L) - 1
    F = 0
    for c in reversed(f):
        F = (F << L) + c
    G = 0
    for c in reversed(g):
        G = (G << L) + c
    N = F * G
    out = []
    for _ in range(len(f) + len(g) - 1):
        d = N & mask
        if d >= half:
            d -= mask + 1
        out.append(d)
        N = (N - d) >> L
    return out


def _clear_denominators(coeffs):
    den = 1
    for c in coeffs:
        den = den * (c.denominator // math.gcd(den, c.denominator))
    return [int(c * den) for c in coeffs], den


def _mul_frac_lists(f, g):
    fi, df = _clear_denominators(f)
    gi, dg = _clear_denominators(g)
    prod = _kron_mul_int(fi, gi)
    d = df * dg
    return [Fraction(c, d) for c in prod]


class Poly:
    """Dense polynomial over an exact coefficient domain."""

    __slots__ = ("coeffs", "dom")

    def __init__(self, coeffs, dom):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coeffs = tuple(coeffs)
        self.dom = dom

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(dom):
        return Poly((), dom)

    @staticmethod
    def one(dom):
        return Poly((dom.one,), dom)

    @staticmethod
    def x(dom):
        return Poly((dom.zero, dom.one), dom)

    @staticmethod
    def constant(c, dom):
        return Poly((c,), dom)

    @staticmethod
    def over_q(coeffs):
        return Poly(tuple(Fraction(c) for c in coeffs), QDOM)

    @staticmethod
    def over(field, coeff_vectors):
        dom = field.domain()
        return Poly(tuple(field.element(v) if not isinstance(v, AlgElement) else v
                          for v in coeff_vectors), dom)

    # -- basics ------------------------------------------------------------

    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.dom.zero

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)) and self.dom.kind == "q":
            other = Poly((Fraction(other),), self.dom)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- ring operations ----------------------------------------------------

    def _pad(self, n):
        return list(self.coeffs) + [self.dom.zero] * (n - len(self.coeffs))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self._pad(n), other._pad(n)
        return Poly([x + y for x, y in zip(a, b)], self.dom)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a, b = self._pad(n), other._pad(n)
        return Poly([x - y for x, y in zip(a, b)], self.dom)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.dom)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            if self.dom.kind == "q":
                return Poly((Fraction(other),), self.dom)
            return Poly((self.dom.one * other,), self.dom)
        if isinstance(other, AlgElement) and self.dom.kind in ("alg", "gen"):
            return Poly((other,), self.dom)
        return NotImplemented

    def scale(self, c):
        """Multiply every coefficient by a scalar of the domain."""
        return Poly([a * c for a in self.coeffs], self.dom)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, AlgElement) and self.dom.kind in ("alg", "gen"):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly((), self.dom)
        kind = self.dom.kind
        if kind == "q":
            return Poly(_mul_frac_lists(list(self.coeffs), list(other.coeffs)), self.dom)
        if kind == "alg":
            return self._mul_alg(other)
        return self._mul_schoolbook(other)

    __rmul__ = __mul__

    def _mul_schoolbook(self, other):
        zero = self.dom.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.dom)

    def _mul_alg(self, other):
        """Coordinatewise Kronecker products recombined by structure constants."""
        field = self.dom.field
        d = field.dim
        n1, n2 = len(self.coeffs), len(other.coeffs)
        fcomps = [[c.coords[k] for c in self.coeffs] for k in range(d)]
        gcomps = [[c.coords[k] for c in other.coeffs] for k in range(d)]
        fz = [not any(comp) for comp in fcomps]
        gz = [not any(comp) for comp in gcomps]
        nout = n1 + n2 - 1
        out = [[Fraction(0)] * nout for _ in range(d)]
        table = field.table
        for i in range(d):
            if fz[i]:
                continue
            for j in range(d):
                if gz[j]:
                    continue
                prod = _mul_frac_lists(fcomps[i], gcomps[j])
                for k, s in enumerate(table[i][j]):
                    if s:
                        acc = out[k]
                        for t, v in enumerate(prod):
                            if v:
                                acc[t] += v * s
        coeffs = [AlgElement(field, tuple(out[k][t] for k in range(d)))
                  for t in range(nout)]
        return Poly(coeffs, self.dom)

    def __pow__(self, n):
        result = Poly.one(self.dom)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- division -----------------------------------------------------------

    def __divmod__(self, other):
        """Division with remainder; coefficient domain must be a field."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree() < other.degree():
            return Poly((), self.dom), self
        rem = list(self.coeffs)
        db = other.degree()
        inv_lc = self.dom.one / other.lc()
        q = [self.dom.zero] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = c * inv_lc
            q[k - db] = f
            for j, b in enumerate(other.coeffs):
                rem[k - db + j] = rem[k - db + j] - f * b
        return Poly(q, self.dom), Poly(rem[:db], self.dom)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Exact quotient; ValueError if the division leaves a remainder.

        Works even when the coefficient domain is only a ring (e.g. nested
        polynomials), provided every intermediate leading-coefficient
        division is itself exact.
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return self
        rem = list(self.coeffs)
        db = other.degree()
        if self.degree() < db:
            raise ValueError("inexact polynomial division")
        lcb = other.lc()
        q = [self.dom.zero] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if not c:
                continue
            f = _exact_div_scalar(c, lcb)
            q[k - db] = f
            for j, b in enumerate(other.coeffs):
                rem[k - db + j] = rem[k - db + j] - f * b
        if any(rem[:db]):
            raise ValueError("inexact polynomial division")
        return Poly(q, self.dom)

    def monic(self):
        if self.is_zero():
            return self
        lc = self.lc()
        if lc == self.dom.one:
            return self
        inv = self.dom.one / lc
        return Poly([c * inv for c in self.coeffs], self.dom)

    # -- calculus and substitution -------------------------------------------

    def derivative(self):
        if len(self.coeffs) <= 1:
            return Poly((), self.dom)
        return Poly([c * k for k, c in enumerate(self.coeffs)][1:], self.dom)

    def __call__(self, x):
        """Evaluate by Horner; x may be a scalar, AlgElement, Poly or RatFunc."""
        if self.is_zero():
            if isinstance(x, (Poly, RatFunc, AlgElement)):
                return x * 0
            return self.dom.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def compose_frac(self, p, q):
        """Numerator of self(p/q): sum a_k p^k q^(n-k), n = deg(self)."""
        n = self.degree()
        if n < 0:
            return Poly((), p.dom)
        qpows = [Poly.one(q.dom)]
        for _ in range(n):
            qpows.append(qpows[-1] * q)
        acc = Poly((), p.dom)
        ppow = Poly.one(p.dom)
        for k, c in enumerate(self.coeffs):
            if c:
                acc = acc + (ppow * qpows[n - k]).scale(c)
            if k < n:
                ppow = ppow * p
        return acc

    def scale_arg(self, c):
        """self(c*x): multiply coefficient k by c^k."""
        out = []
        p = self.dom.one
        for a in self.coeffs:
            out.append(a * p)
            p = p * c
        return Poly(out, self.dom)

    def map_coeffs(self, fn, dom=None):
        return Poly([fn(c) for c in self.coeffs], dom if dom is not None else self.dom)

    def to_str(self, var="x"):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            if k == 0:
                parts.append(f"{c}")
            elif k == 1:
                parts.append(f"({c})*{var}")
            else:
                parts.append(f"({c})*{var}^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly[{self.to_str()}]"


def _exact_div_scalar(a, b):
    if isinstance(a, Poly):
        return a.exact_div(b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            raise ValueError("inexact integer division")
        return q
    return a / b


# -- gcd -----------------------------------------------------------------

_GCD_TEST_PRIMES = (2305843009213693951, 4611686018427387847, 9223372036854775783)


def _int_lists_gcd_mod_p(f, g, p):
    """Degree of gcd of two integer coefficient lists modulo p, or None."""
    a = [c % p for c in f]
    b = [c % p for c in g]
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    if not a or not b:
        return None
    if len(a) != len(f) or len(b) != len(g):
        return None  # leading coefficient vanished; prime is unusable
    while b:
        inv = pow(b[-1], p - 2, p)
        db = len(b) - 1
        r = a[:]
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if not c:
                continue
            fmul = c * inv % p
            for j, bc in enumerate(b):
                r[k - db + j] = (r[k - db + j] - fmul * bc) % p
        r = r[:db]
        while r and not r[-1]:
            r.pop()
        a, b = b, r
    return len(a) - 1


def _content(ints):
    g = 0
    for c in ints:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


def _primitive(ints):
    c = _content(ints)
    if c in (0, 1):
        return list(ints)
    return [v // c for v in ints]


def _pseudo_rem_int(a, b):
    """prem of integer coefficient lists."""
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    e = da - db + 1
    while len(r) - 1 >= db and r:
        if not r[-1]:
            r.pop()
            continue
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for j, bc in enumerate(b):
            r[shift + j] -= lr * bc
        while r and not r[-1]:
            r.pop()
        e -= 1
    if e > 0:
        m = lb ** e
        r = [c * m for c in r]
    return r


def _gcd_q(p, q):
    f, _ = _clear_denominators(list(p.coeffs))
    g, _ = _clear_denominators(list(q.coeffs))
    for prime in _GCD_TEST_PRIMES:
        d = _int_lists_gcd_mod_p(f, g, prime)
        if d == 0:
            return Poly.one(QDOM)
        if d is not None:
            break
    a, b = _primitive(f), _primitive(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem_int(a, b)
        a, b = b, _primitive(r)
    lc = a[-1]
    return Poly([Fraction(c, lc) for c in a], QDOM)


def poly_gcd(p, q):
    """Monic gcd over a coefficient field."""
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    if p.dom.kind == "q":
        return _gcd_q(p, q)
    a, b = p, q
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


# -- resultant -------------------------------------------------------------

def _prem_generic(a, b):
    """Pseudo-remainder over any commutative coefficient ring."""
    da, db = a.degree(), b.degree()
    lb = b.lc()
    r = a
    e = da - db + 1
    while not r.is_zero() and r.degree() >= db:
        lr = r.lc()
        shift = r.degree() - db
        shifted = Poly([r.dom.zero] * shift + list(b.coeffs), b.dom)
        r = r.scale(lb) - shifted.scale(lr)
        e -= 1
    if e > 0:
        m = lb ** e
        r = r.scale(m)
    return r


def resultant(p, q):
    """Subresultant-PRS resultant; see the module docstring for the sign."""
    dom = p.dom
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant of a zero polynomial")
    if p.degree() == 0 and q.degree() == 0:
        return dom.one
    if p.degree() == 0:
        return p.coeffs[0] ** q.degree()
    if q.degree() == 0:
        return q.coeffs[0] ** p.degree()
    s = 1
    A, B = p, q
    if A.degree() < B.degree():
        if (A.degree() % 2) and (B.degree() % 2):
            s = -s
        A, B = B, A
    g = dom.one
    h = dom.one
    while B.degree() > 0:
        d = A.degree() - B.degree()
        if (A.degree() % 2) and (B.degree() % 2):
            s = -s
        R = _prem_generic(A, B)
        if R.is_zero():
            return dom.zero
        divisor = g * h ** d
        A, B = B, R.map_coeffs(lambda c: _exact_div_scalar(c, divisor))
        g = A.lc()
        if d >= 1:
            h = _exact_div_scalar(g ** d, h ** (d - 1)) if d > 1 else g
    lB = B.coeffs[0]
    dA = A.degree()
    res = _exact_div_scalar(lB ** dA, h ** (dA - 1)) if dA > 1 else lB ** dA
    if s < 0:
        res = -res
    return res


def ratfunc_compose(f, g):
    """Normalized f(g) for rational functions over the same domain."""
    return f.compose(g)


def poly_sqrt(p):
    """Return (c, g) with p = c * g^2, g monic, or None if no such square.

    The coefficient domain must be a field of characteristic 0.
    """
    if p.is_zero():
        return p.dom.zero, Poly((), p.dom)
    n = p.degree()
    if n % 2:
        return None
    m = n // 2
    c = p.lc()
    inv_c = p.dom.one / c
    ph = [a * inv_c for a in p.coeffs]
    g = [p.dom.zero] * (m + 1)
    g[m] = p.dom.one
    two = p.dom.one + p.dom.one
    for k in range(1, m + 1):
        # coefficient of x^(2m-k) in g^2 must equal ph[2m-k]
        acc = p.dom.zero
        for i in range(m - k + 1, m):
            j = 2 * m - k - i
            if m - k < j <= m:
                acc = acc + g[i] * g[j]
        g[m - k] = (ph[2 * m - k] - acc) / two
    gp = Poly(g, p.dom)
    if gp * gp == Poly(ph, p.dom):
        return c, gp
    return None


class RatFunc:
    """Quotient of two polynomials, normalized: coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        if den is None:
            den = Poly.one(num.dom)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not _normalized:
            if num.is_zero():
                den = Poly.one(num.dom)
            else:
                if den.degree() > 0:
                    g = poly_gcd(num, den)
                    if g.degree() > 0:
                        num = num.exact_div(g)
                        den = den.exact_div(g)
                lc = den.lc()
                if lc != den.dom.one:
                    inv = den.dom.one / lc
                    num = num.scale(inv)
                    den = den.scale(inv)
        self.num = num
        self.den = den

    @staticmethod
    def constants(varname="x"):
        """(zero, one) constants; varname is cosmetic only."""
        return (RatFunc(Poly((), QDOM), Poly.one(QDOM), _normalized=True),
                RatFunc(Poly.one(QDOM), Poly.one(QDOM), _normalized=True))

    @staticmethod
    def var(dom=QDOM):
        return RatFunc(Poly.x(dom), Poly.one(dom), _normalized=True)

    @staticmethod
    def from_scalar(c, dom=QDOM):
        if isinstance(c, (int, Fraction)):
            c = dom.one * c
        if not c:
            return RatFunc(Poly((), dom), Poly.one(dom), _normalized=True)
        return RatFunc(Poly((c,), dom), Poly.one(dom), _normalized=True)

    @property
    def dom(self):
        return self.num.dom

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other, Poly.one(other.dom), _normalized=True)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_scalar(other, self.dom)
        if isinstance(other, AlgElement):
            return RatFunc(Poly((other,), self.dom), Poly.one(self.dom), _normalized=True)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n):
        if n < 0:
            return (RatFunc(self.den, self.num)) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def compose(self, other):
        """self(other) by clearing other's denominator homogeneously."""
        p, q = other.num, other.den
        n = max(self.num.degree(), self.den.degree(), 0)
        qpows = [Poly.one(q.dom)]
        for _ in range(n):
            qpows.append(qpows[-1] * q)

        def clear(poly):
            acc = Poly((), p.dom)
            ppow = Poly.one(p.dom)
            for k in range(n + 1):
                c = poly.coeff(k)
                if c:
                    acc = acc + (ppow * qpows[n - k]).scale(c)
                if k < n:
                    ppow = ppow * p
            return acc

        den = clear(self.den)
        if den.is_zero():
            raise ZeroDivisionError("composition denominator vanishes")
        return RatFunc(clear(self.num), den)

    def __call__(self, x):
        if isinstance(x, Poly):
            x = RatFunc(x, Poly.one(x.dom), _normalized=True)
        if isinstance(x, RatFunc):
            return self.compose(x)
        nv = self.num(x)
        dv = self.den(x)
        if not dv:
            _raise_zero()
        if isinstance(dv, AlgElement):
            return nv * dv.inv()
        return nv / dv

    def derivative(self):
        n = self.num.derivative() * self.den - self.num * self.den.derivative()
        return RatFunc(n, self.den * self.den)

    def to_str(self, var="x"):
        if self.den == Poly.one(self.den.dom):
            return self.num.to_str(var)
        return f"({self.num.to_str(var)}) / ({self.den.to_str(var)})"

    def __repr__(self):
        return f"RatFunc[{self.to_str()}]"


def _raise_zero():
    raise ZeroDivisionError("denominator vanishes at the evaluation point")
