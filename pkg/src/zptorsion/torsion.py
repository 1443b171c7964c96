"""Torsion subgroups of rational elliptic curves over number fields.

Strategy: a divisibility bound from reduction at several good primes, then
exact confirmation per prime q: x-coordinates of q-torsion from division
polynomials via root finding in the field, y-coordinates from the curve
quadratic, and q-power levels by solving [q]Q = P.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import tables
from .curves import (
    CurvePoint,
    EllipticCurveQ,
    GroupShape,
    exact_order_poly,
    count_over_extension,
    from_short_xy,
    has_good_reduction,
    infinity,
    mult_by_n_x,
    point_add,
    point_mul,
    point_neg,
    point_order,
    short_curve,
    short_form,
)
from .modp import fp_deriv, fp_gcd, fp_reduce
from .numfield import QQ, NFElement, NumberField, nf_roots, small_primes
from .polys import UniPoly, to_int_poly


class NoFiniteBound:
    """Sentinel: the tower contains infinitely many roots of unity."""

    def __repr__(self):
        return "NoFiniteBound"

    def __eq__(self, other):
        return isinstance(other, NoFiniteBound)

    def __hash__(self):
        return hash("NoFiniteBound")


NO_FINITE_BOUND = NoFiniteBound()


@dataclass(frozen=True)
class TorsionResult:
    shape: GroupShape
    generators: tuple[CurvePoint, ...]
    field: NumberField


def _residue_degrees(F: NumberField, ell: int) -> list[int] | None:
    """Degrees of primes above ell, or None if ell is unusable (ramified
    in the equation order or dividing denominators)."""
    fi, den = to_int_poly(F.defining_poly)
    if den % ell == 0 or fi[-1] % ell == 0:
        return None
    fbar = fp_reduce(fi, ell)
    if len(fbar) != len(fi):
        return None
    dbar = fp_deriv(fbar, ell)
    if not dbar or len(fp_gcd(fbar, dbar, ell)) != 1:
        return None
    from .modp import fp_factor

    _, facs = fp_factor(fbar, ell)
    return sorted(len(g) - 1 for g, _ in facs)


def torsion_bound_by_reduction(
    E: EllipticCurveQ, F: NumberField, num_primes: int = 8, cap: int = 1000
) -> int:
    """A multiple of |E(F)_tors| from point counts at good primes.

    For each good prime ell and each residue degree f of ell in F, the
    prime-to-ell torsion injects into E(F_{ell^f}); combine valuations
    across at least num_primes primes.
    """
    data = []
    for ell in small_primes(cap):
        if ell == 2 or not has_good_reduction(E, ell):
            continue
        fs = _residue_degrees(F, ell)
        if fs is None:
            continue
        m = 0
        for f in set(fs):
            m = math.gcd(m, count_over_extension(E, ell, f))
        data.append((ell, m))
        if len(data) >= num_primes:
            break
    if len(data) < num_primes:
        raise ValueError("insufficient primes")
    qs = set()
    for ell, m in data:
        qs |= set(_prime_factors(m))
    bound = 1
    for q in sorted(qs):
        v = min(_val(m, q) for ell, m in data if ell != q)
        bound *= q**v
    return bound


def _prime_factors(n: int) -> list[int]:
    out = []
    m = abs(n)
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out.append(m)
    return out


def _val(n: int, q: int) -> int:
    v = 0
    while n % q == 0 and n:
        n //= q
        v += 1
    return v


def _sqrt_in_field(F: NumberField, c: NFElement) -> list[NFElement]:
    """Solutions of t^2 = c in F."""
    return nf_roots(F, [-c, F.zero(), F.one()])


def _points_from_x(E: EllipticCurveQ, F: NumberField, x: NFElement):
    """Points on the depressed model of E over F with the given x."""
    A, B = short_form(E)
    Es = short_curve(E)
    c = x * x * x + A * x + B
    out = []
    if c.is_zero():
        out.append(CurvePoint(Es, F, x, F.zero()))
    else:
        for y in _sqrt_in_field(F, c):
            out.append(CurvePoint(Es, F, x, y))
    return out


def _points_of_exact_order(E: EllipticCurveQ, F: NumberField, n: int):
    """All points of exact order n on the depressed model over F."""
    poly = exact_order_poly(E, n)
    pts = []
    for x in nf_roots(F, poly):
        pts.extend(_points_from_x(E, F, x))
    return pts


def _halve(E: EllipticCurveQ, F: NumberField, P: CurvePoint, q: int):
    """A point Q over F with [q]Q = P, or None."""
    Es = P.curve
    num, den = mult_by_n_x(E, q)
    # roots of num(x) - x_P * den(x)
    coeffs = []
    for i in range(max(len(num.coeffs), len(den.coeffs))):
        c = F.rational(num[i]) - P.x * F.rational(den[i])
        coeffs.append(c)
    for x in nf_roots(F, coeffs):
        for Q in _points_from_x(E, F, x):
            R = point_mul(Es, F, Q, q)
            if R == P:
                return Q
            if R == point_neg(P):
                return point_neg(Q)
    return None


def q_primary_torsion(
    E: EllipticCurveQ, F: NumberField, q: int, max_exp: int | None = None
) -> tuple[GroupShape, list[CurvePoint]]:
    """The q-primary subgroup of E(F)_tors with witness points.

    Returns the shape (q^j, q^k) of the q-part and generator witnesses on
    the depressed model.  max_exp bounds j+k (from the reduction bound).
    """
    if max_exp is None:
        max_exp = _val(torsion_bound_by_reduction(E, F), q)
    if max_exp == 0:
        return GroupShape(1, 1), []
    level1 = _points_of_exact_order(E, F, q)
    if not level1:
        return GroupShape(1, 1), []
    n1 = len(level1)
    if n1 == q * q - 1:
        full = True
    elif n1 == q - 1:
        full = False
    else:
        raise AssertionError(f"impossible count of order-{q} points: {n1}")
    level1.sort(key=_point_key)

    # one representative per cyclic line
    reps = []
    seen = set()
    for P in level1:
        if P in seen:
            continue
        reps.append(P)
        R = P
        for _ in range(q - 1):
            seen.add(R)
            seen.add(point_neg(R))
            R = point_add(R, P)

    # climb each line while the budget allows
    chains = []
    for P in reps:
        depth = 1
        top = P
        while depth + 1 <= max_exp:
            Q = _halve(E, F, top, q)
            if Q is None:
                break
            top = Q
            depth += 1
        chains.append((depth, top))
    chains.sort(key=lambda c: (-c[0], _point_key(c[1])))
    k = chains[0][0]
    gen_b = chains[0][1]

    a_exp = 0
    if full:
        a_exp = 1
        if len(chains) >= 2 and chains[1][0] >= 2 and k >= 2:
            # two independent lines climbed: full q^2-torsion is rational
            a_exp = 2
    if a_exp + k > max_exp:
        raise AssertionError("torsion exceeds reduction bound")

    gens = [gen_b]
    if a_exp >= 1:
        # a second generator independent of gen_b of order q^a_exp
        target = None
        base_line = point_mul(gen_b.curve, F, gen_b, q ** (k - a_exp))
        line_pts = set()
        R = base_line
        for _ in range(q ** a_exp):
            line_pts.add(R)
            R = point_add(R, base_line)
        pool = (
            _points_of_exact_order(E, F, q**a_exp) if a_exp > 1 else level1
        )
        for P in sorted(pool, key=_point_key):
            if P not in line_pts:
                target = P
                break
        if target is not None:
            gens.append(target)
    shape = GroupShape(q**a_exp if a_exp else 1, q**k)
    return shape, gens


def _point_key(P: CurvePoint):
    if P.infinity:
        return ((),)
    return (tuple(P.x.coords), tuple(P.y.coords))


def torsion_over_field(
    E: EllipticCurveQ, F: NumberField, degree_cap: int = 14
) -> TorsionResult:
    """Full torsion subgroup of E over F, assembled prime by prime."""
    if F.degree > degree_cap:
        raise ValueError("field too large")
    bound = torsion_bound_by_reduction(E, F)
    a_total, b_total = 1, 1
    parts = []
    for q in sorted(_prime_factors(bound)):
        shape_q, gens_q = q_primary_torsion(E, F, q, _val(bound, q))
        if shape_q.order > 1:
            parts.append((q, shape_q, gens_q))
            a_total *= shape_q.a
            b_total *= shape_q.b
    shape = GroupShape(a_total, b_total)
    generators = _combine_generators(E, F, parts, shape)
    if F.degree == 1 and shape not in tables.MAZUR_SHAPES:
        raise AssertionError(f"shape {shape} violates the rational classification")
    if F.degree == 2 and shape not in tables.najman_shapes(None):
        raise AssertionError(f"shape {shape} violates the quadratic classification")
    return TorsionResult(shape=shape, generators=generators, field=F)


def _combine_generators(E, F, parts, shape) -> tuple[CurvePoint, ...]:
    if not parts:
        return ()
    Es = short_curve(E)
    big = infinity(Es, F)
    small = infinity(Es, F)
    has_small = False
    for q, shape_q, gens_q in parts:
        big = point_add(big, gens_q[0])
        if shape_q.a > 1 and len(gens_q) > 1:
            small = point_add(small, gens_q[1])
            has_small = True
    gens = [big]
    if has_small:
        gens.insert(0, small)
    for g, expected in zip(gens[::-1], [shape.b, shape.a][: len(gens)]):
        got = point_order(g, bound=max(shape.b, 1) + 1)
        if got != expected:
            raise AssertionError("generator order mismatch")
    return tuple(gens)


def global_torsion_bound(spec):
    """163 * n^2 with n the largest integer with mu_n in the tower.

    Returns NO_FINITE_BOUND in the one unbounded case (p = 3 cyclotomic
    over Q(sqrt(-3)), where the tower contains all 3-power roots of unity).
    """
    from .towers import contains_mu

    if spec.p == 3 and spec.d == -3 and spec.kind == "cyclotomic":
        return NO_FINITE_BOUND
    n = 2
    for m in (3, 4, 6):
        if contains_mu(spec, m):
            n = max(n, m)
    return 163 * n * n
