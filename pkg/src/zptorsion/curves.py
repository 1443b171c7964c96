"""Elliptic curve models over Q, point arithmetic over number fields,
division polynomials, and naive reduction counting.

Torsion logic works on the depressed model y^2 = x^3 + Ax + B obtained by
completing the square; the change of variables is unimodular so points map
back and forth without touching torsion structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numfield import QQ, NFElement, NumberField
from .polys import UniPoly, poly_gcd


@dataclass(frozen=True)
class GroupShape:
    """Isomorphism type Z/a x Z/b with a | b; (1, 1) is trivial."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or self.b % self.a != 0:
            raise ValueError("need a | b with positive entries")

    @property
    def order(self) -> int:
        return self.a * self.b

    def is_trivial(self) -> bool:
        return self.order == 1

    def __str__(self):
        if self.is_trivial():
            return "trivial"
        if self.a == 1:
            return f"Z/{self.b}"
        return f"Z/{self.a} x Z/{self.b}"


class EllipticCurveQ:
    """Long Weierstrass model over Q with nonzero discriminant."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6", "label")

    def __init__(self, ainvs, label: str | None = None):
        a1, a2, a3, a4, a6 = (Fraction(a) for a in ainvs)
        for name, val in zip(("a1", "a2", "a3", "a4", "a6"), (a1, a2, a3, a4, a6)):
            object.__setattr__(self, name, val)
        object.__setattr__(self, "label", label)
        if self.discriminant == 0:
            raise ValueError("singular model")

    def __setattr__(self, *a):
        raise AttributeError("EllipticCurveQ is immutable")

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other):
        return isinstance(other, EllipticCurveQ) and self.ainvs == other.ainvs

    def __hash__(self):
        return hash(self.ainvs)

    def __repr__(self):
        tag = self.label or ",".join(str(a) for a in self.ainvs)
        return f"EllipticCurveQ({tag})"

    # standard quantities
    @property
    def b2(self):
        return self.a1**2 + 4 * self.a2

    @property
    def b4(self):
        return 2 * self.a4 + self.a1 * self.a3

    @property
    def b6(self):
        return self.a3**2 + 4 * self.a6

    @property
    def b8(self):
        return (
            self.a1**2 * self.a6
            + 4 * self.a2 * self.a6
            - self.a1 * self.a3 * self.a4
            + self.a2 * self.a3**2
            - self.a4**2
        )

    @property
    def c4(self):
        return self.b2**2 - 24 * self.b4

    @property
    def c6(self):
        return -self.b2**3 + 36 * self.b2 * self.b4 - 216 * self.b6

    @property
    def discriminant(self):
        return (
            -self.b2**2 * self.b8
            - 8 * self.b4**3
            - 27 * self.b6**2
            + 9 * self.b2 * self.b4 * self.b6
        )


def j_invariant(E: EllipticCurveQ) -> Fraction:
    """The j-invariant c4^3 / disc."""
    d = E.discriminant
    if d == 0:
        raise ValueError("singular model")
    return E.c4**3 / d


def short_form(E: EllipticCurveQ) -> tuple[Fraction, Fraction]:
    """(A, B) of the depressed model y^2 = x^3 + Ax + B.

    Complete the square, then shift x; the map on points is
    x' = x + b2/12, y' = y + (a1*x + a3)/2.
    """
    return Fraction(-1, 48) * E.c4, Fraction(-1, 864) * E.c6


def short_curve(E: EllipticCurveQ) -> EllipticCurveQ:
    A, B = short_form(E)
    return EllipticCurveQ((0, 0, 0, A, B))


def to_short_xy(E: EllipticCurveQ, x, y):
    """Map a point on E to the depressed model (same field)."""
    return x + Fraction(E.b2, 12), y + (E.a1 * x + E.a3) * Fraction(1, 2)


def from_short_xy(E: EllipticCurveQ, x, y):
    """Inverse of to_short_xy."""
    x0 = x - Fraction(E.b2, 12)
    return x0, y - (E.a1 * x0 + E.a3) * Fraction(1, 2)


class CurvePoint:
    """Affine point or infinity on a curve over a number field."""

    __slots__ = ("curve", "field", "x", "y", "infinity")

    def __init__(self, curve: EllipticCurveQ, field: NumberField,
                 x: NFElement | None = None, y: NFElement | None = None,
                 infinity: bool = False):
        object.__setattr__(self, "curve", curve)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "infinity", infinity)
        if infinity:
            object.__setattr__(self, "x", None)
            object.__setattr__(self, "y", None)
            return
        if not isinstance(x, NFElement):
            x = field.rational(x)
        if not isinstance(y, NFElement):
            y = field.rational(y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        if not self._on_curve():
            raise ValueError("point not on curve")

    def __setattr__(self, *a):
        raise AttributeError("CurvePoint is immutable")

    def _on_curve(self) -> bool:
        E, x, y = self.curve, self.x, self.y
        lhs = y * y + E.a1 * x * y + E.a3 * y
        rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6
        return (lhs - rhs).is_zero()

    def is_infinity(self) -> bool:
        return self.infinity

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.infinity or other.infinity:
            return self.infinity == other.infinity and self.curve == other.curve
        return (
            self.curve == other.curve
            and self.x == other.x
            and self.y == other.y
        )

    def __hash__(self):
        return hash((self.curve, None if self.infinity else (self.x, self.y)))

    def __repr__(self):
        if self.infinity:
            return "Point(O)"
        return f"Point({self.x!r}, {self.y!r})"


def infinity(E: EllipticCurveQ, F: NumberField) -> CurvePoint:
    return CurvePoint(E, F, infinity=True)


def point_neg(P: CurvePoint) -> CurvePoint:
    if P.infinity:
        return P
    E = P.curve
    a1 = P.field.rational(E.a1)
    a3 = P.field.rational(E.a3)
    return CurvePoint(E, P.field, P.x, -P.y - a1 * P.x - a3)


def point_add(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    """Group law on the long Weierstrass model, exact."""
    if P.infinity:
        return Q
    if Q.infinity:
        return P
    if P.curve != Q.curve or P.field != Q.field:
        raise ValueError("points on different curves or fields")
    E, F = P.curve, P.field
    a1, a2, a3, a4 = (F.rational(v) for v in (E.a1, E.a2, E.a3, E.a4))
    x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
    if x1 == x2:
        if (y1 + y2 + a1 * x2 + a3).is_zero():
            return infinity(E, F)
        num = x1 * x1 * 3 + a2 * x1 * 2 + a4 - a1 * y1
        den = y1 * 2 + a1 * x1 + a3
        lam = num / den
    else:
        lam = (y2 - y1) / (x2 - x1)
    nu = y1 - lam * x1
    x3 = lam * lam + a1 * lam - a2 - x1 - x2
    y3 = -(lam + a1) * x3 - nu - a3
    return CurvePoint(E, F, x3, y3)


def point_mul(E: EllipticCurveQ, F: NumberField, P: CurvePoint, n: int) -> CurvePoint:
    """[n]P by double-and-add; [0]P is the point at infinity."""
    if P.curve != E or P.field != F:
        raise ValueError("P not on stated curve/field")
    if n < 0:
        return point_mul(E, F, point_neg(P), -n)
    R = infinity(E, F)
    while n:
        if n & 1:
            R = point_add(R, P)
        P = point_add(P, P)
        n >>= 1
    return R


def point_order(P: CurvePoint, bound: int = 200) -> int | None:
    """Order of P if at most bound, else None."""
    R = P
    for k in range(1, bound + 1):
        if R.infinity:
            return k
        R = point_add(R, P)
    return None


# -- division polynomials ---------------------------------------------------

@dataclass(frozen=True)
class DivisionPoly:
    """Univariate data for psi_n: for even n the stored poly is psi_n/(2y)."""

    poly: UniPoly
    halved: bool  # True for even n
    n: int


_DIVPOLY_CACHE: dict[tuple, dict[int, UniPoly]] = {}


def _divpoly_table(A: Fraction, B: Fraction) -> dict[int, UniPoly]:
    key = (A, B)
    if key not in _DIVPOLY_CACHE:
        _DIVPOLY_CACHE[key] = {
            0: UniPoly([]),
            1: UniPoly([1]),
            2: UniPoly([1]),
            3: UniPoly([-A * A, 12 * B, 6 * A, 0, 3]),
            4: UniPoly(
                [
                    -2 * A**3 - 16 * B * B,
                    -8 * A * B,
                    -10 * A * A,
                    40 * B,
                    10 * A,
                    0,
                    2,
                ]
            ),
        }
    return _DIVPOLY_CACHE[key]


def _divpoly(A: Fraction, B: Fraction, n: int) -> UniPoly:
    """P_n: equals psi_n for odd n and psi_n/(2y) for even n."""
    tab = _divpoly_table(A, B)
    if n in tab:
        return tab[n]
    f16 = UniPoly([B, A, 0, 1]) ** 2 * 16

    def get(m):
        if m in tab:
            return tab[m]
        if m % 2 == 1:
            k = (m - 1) // 2
            if k % 2 == 0:
                val = f16 * get(k + 2) * get(k) ** 3 - get(k - 1) * get(k + 1) ** 3
            else:
                val = get(k + 2) * get(k) ** 3 - f16 * get(k - 1) * get(k + 1) ** 3
        else:
            k = m // 2
            val = get(k) * (get(k + 2) * get(k - 1) ** 2 - get(k - 2) * get(k + 1) ** 2)
        tab[m] = val
        return val

    return get(n)


def division_polynomial(E: EllipticCurveQ, n: int) -> DivisionPoly:
    """The n-th division polynomial of the depressed model of E.

    Roots of the returned polynomial are x-coordinates of nonzero
    n-torsion on y^2 = x^3 + Ax + B (for even n, together with the roots
    of the cubic itself, which carry the 2-torsion).
    """
    if n < 1:
        raise ValueError("n must be positive")
    A, B = short_form(E)
    return DivisionPoly(_divpoly(A, B, n), halved=(n % 2 == 0), n=n)


def exact_order_poly(E: EllipticCurveQ, n: int) -> UniPoly:
    """Polynomial whose roots are x-coordinates of points of exact order n.

    Lower-order division polynomial factors are removed by exact gcd.
    n = 2 returns the depressed cubic itself.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    A, B = short_form(E)
    if n == 2:
        return UniPoly([B, A, 0, 1])
    num = _divpoly(A, B, n)
    for d in range(2, n):
        if n % d == 0:
            g = _divpoly(A, B, d)
            common = poly_gcd(num, g)
            while common.degree > 0:
                num = num // common
                common = poly_gcd(num, g)
    return num.monic()


def mult_by_n_x(E: EllipticCurveQ, n: int) -> tuple[UniPoly, UniPoly]:
    """(num, den) with x([n]P) = num(x)/den(x) on the depressed model."""
    if n < 1:
        raise ValueError("n must be positive")
    A, B = short_form(E)
    f4 = UniPoly([B, A, 0, 1]) * 4
    Pn = _divpoly(A, B, n)
    Pp = _divpoly(A, B, n + 1)
    Pm = _divpoly(A, B, n - 1)
    x = UniPoly([0, 1])
    if n % 2 == 1:
        num = x * Pn**2 - f4 * Pp * Pm
        den = Pn**2
    else:
        num = x * f4 * Pn**2 - Pp * Pm
        den = f4 * Pn**2
    return num, den


# -- reduction mod ell -------------------------------------------------------

def has_good_reduction(E: EllipticCurveQ, ell: int) -> bool:
    d = E.discriminant
    if any(a.denominator % ell == 0 for a in E.ainvs):
        return False
    return d.numerator % ell != 0


def reduce_and_count(E: EllipticCurveQ, ell: int) -> int:
    """#E(F_ell) by exhaustive x-loop with a quadratic residue test.

    Requires good reduction at an odd prime ell (naive counter).
    """
    if ell == 2 or not has_good_reduction(E, ell):
        raise ValueError("bad prime")
    # complete the square mod ell: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2b4 x + b6
    def red(q: Fraction) -> int:
        return q.numerator * pow(q.denominator, -1, ell) % ell

    b2, b4, b6 = red(E.b2), red(E.b4), red(E.b6)
    count = 1
    half = (ell - 1) // 2
    for x in range(ell):
        t = (4 * x**3 + b2 * x * x + 2 * b4 * x + b6) % ell
        if t == 0:
            count += 1
        elif pow(t, half, ell) == 1:
            count += 2
    return count


def trace_of_frobenius(E: EllipticCurveQ, ell: int) -> int:
    return ell + 1 - reduce_and_count(E, ell)


def count_over_extension(E: EllipticCurveQ, ell: int, f: int) -> int:
    """#E(F_{ell^f}) from #E(F_ell) via the Frobenius trace recurrence."""
    a = trace_of_frobenius(E, ell)
    t_prev, t_cur = 2, a
    for _ in range(f - 1):
        t_prev, t_cur = t_cur, a * t_cur - ell * t_prev
    return ell**f + 1 - t_cur


# -- points over F_ell (internal helpers for cross-checks) -------------------

def mod_curve_points(E: EllipticCurveQ, ell: int):
    """All affine points of the reduced curve, as (x, y) pairs plus None."""
    if ell == 2 or not has_good_reduction(E, ell):
        raise ValueError("bad prime")

    def red(q: Fraction) -> int:
        return q.numerator * pow(q.denominator, -1, ell) % ell

    a1, a2, a3, a4, a6 = (red(a) for a in E.ainvs)
    pts = [None]
    for x in range(ell):
        for y in range(ell):
            if (y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) % ell == 0:
                pts.append((x, y))
    return pts


def mod_point_add(E: EllipticCurveQ, ell: int, P, Q):
    def red(q: Fraction) -> int:
        return q.numerator * pow(q.denominator, -1, ell) % ell

    a1, a2, a3, a4, _ = (red(a) for a in E.ainvs)
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2 and (y1 + y2 + a1 * x2 + a3) % ell == 0:
        return None
    if P == Q:
        num = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) % ell
        den = (2 * y1 + a1 * x1 + a3) % ell
    else:
        num = (y2 - y1) % ell
        den = (x2 - x1) % ell
    lam = num * pow(den, -1, ell) % ell
    nu = (y1 - lam * x1) % ell
    x3 = (lam * lam + a1 * lam - a2 - x1 - x2) % ell
    y3 = (-(lam + a1) * x3 - nu - a3) % ell
    return (x3, y3)


def mod_point_mul(E: EllipticCurveQ, ell: int, P, n: int):
    R = None
    while n:
        if n & 1:
            R = mod_point_add(E, ell, R, P)
        P = mod_point_add(E, ell, P, P)
        n >>= 1
    return R
