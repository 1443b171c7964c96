"""Rational cyclic isogenies: kernel polynomials, Velu's formulas, field
of definition of kernel points.

Kernel detection factors the relevant division polynomial and screens
degree-(n-1)/2 products by a multiplication-closure test modulo a few good
primes; Velu's construction then confirms candidates unconditionally via
point-count preservation.  Degrees with only finitely many rational
j-invariants are resolved against the fixture j-tables instead; 25- and
27-isogenies are found by walking prime-degree steps, never by factoring
the huge division polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import tables
from .curves import (
    EllipticCurveQ,
    division_polynomial,
    has_good_reduction,
    j_invariant,
    reduce_and_count,
    short_curve,
    short_form,
    mult_by_n_x,
)
from .modp import fp_mod, fp_mul, fp_reduce, fp_resultant, fp_scale, fp_sub
from .numfield import small_primes
from .polys import UniPoly, factors_within_degree, to_int_poly


@dataclass(frozen=True)
class KernelPolynomial:
    """Monic rational polynomial on the x-coordinates of a cyclic kernel."""

    poly: UniPoly
    n: int
    curve: EllipticCurveQ

    def __post_init__(self):
        if self.poly.lc != 1:
            raise ValueError("kernel polynomial must be monic")


DIRECT_PRIMES = (3, 5, 7, 11, 13)


def _power_sums(h: UniPoly, upto: int) -> list[Fraction]:
    """Power sums p_0..p_upto of the roots of monic h (Newton)."""
    d = h.degree
    e = [Fraction(0)] * (d + 1)  # elementary symmetric with signs folded
    for i in range(d + 1):
        # h = sum h[i] x^i, monic; e_k = (-1)^k h[d-k]
        e[i] = (-1) ** i * h[d - i]
    p = [Fraction(d)]
    for k in range(1, upto + 1):
        s = Fraction(0)
        for i in range(1, min(k - 1, d) + 1):
            s += (-1) ** (i - 1) * e[i] * p[k - i]
        if k <= d:
            s += (-1) ** (k - 1) * e[k] * k
        p.append(s)
    return p


def _velu_sums(E: EllipticCurveQ, h: UniPoly):
    """(T, W) sums of Velu's t_Q and w_Q over the kernel x-roots.

    For a 2-torsion root (f(x_i) = 0) the point is its own negative:
    t_i = 3x_i^2 + A, u_i = 0; otherwise the pair +-Q contributes
    t_i = 6x_i^2 + 2A, u_i = 4 f(x_i).
    """
    A, B = short_form(E)
    d = h.degree
    p = _power_sums(h, 3)
    # all roots treated as +-pairs first
    T = 6 * p[2] + 2 * A * d
    U = 4 * (p[3] + A * p[1] + B * d)
    W = U + 6 * p[3] + 2 * A * p[1]
    return T, W


def _velu_sums_two_torsion(E: EllipticCurveQ, x0: Fraction):
    A, _ = short_form(E)
    t = 3 * x0 * x0 + A
    w = t * x0
    return t, w


def velu_isogeny(E: EllipticCurveQ, h: KernelPolynomial) -> EllipticCurveQ:
    """Codomain of the isogeny with kernel polynomial h, by Velu.

    Raises ValueError("not a kernel polynomial") when the input fails the
    point-count confirmation at several good primes.
    """
    if h.curve != E:
        raise ValueError("kernel polynomial belongs to a different curve")
    A, B = short_form(E)
    n = h.n
    if n == 2:
        x0 = -h.poly[0]
        if (x0**3 + A * x0 + B) != 0:
            raise ValueError("not a kernel polynomial")
        t, w = _velu_sums_two_torsion(E, x0)
    else:
        t, w = _velu_sums(E, h.poly)
    out = EllipticCurveQ((0, 0, 0, A - 5 * t, B - 7 * w))
    checked = 0
    for ell in small_primes(200):
        if ell < 5 or not has_good_reduction(E, ell) or not has_good_reduction(out, ell):
            continue
        if reduce_and_count(E, ell) != reduce_and_count(out, ell):
            raise ValueError("not a kernel polynomial")
        checked += 1
        if checked >= 5:
            break
    return out


def velu_x_map(E: EllipticCurveQ, h: KernelPolynomial) -> tuple[UniPoly, UniPoly]:
    """(num, den) with X = num/den the x-map of the isogeny from h.

    X(x) = x + sum over kernel x-roots of t_i/(x-x_i) + u_i/(x-x_i)^2.
    """
    A, B = short_form(E)
    hp = h.poly
    d = hp.degree
    p = _power_sums(hp, d + 3)
    # N_k and running recurrence: sum x_i^k/(x-x_i) = N_k(x)/h(x)
    Nk = [hp.derivative()]
    x = UniPoly([0, 1])
    for k in range(0, 3):
        Nk.append(x * Nk[-1] - p[k] * hp)
    if h.n == 2:
        # single 2-torsion root
        tsum = 3 * Nk[2] + A * Nk[0]
        num = x * hp * hp + tsum * hp
        return num, hp * hp
    S_t = 6 * Nk[2] + 2 * A * Nk[0]
    U = 4 * (Nk[3] + A * Nk[1] + B * Nk[0])
    # sum u_i/(x-x_i)^2 = (U h' - U' h)/h^2
    num = x * hp * hp + S_t * hp + U * hp.derivative() - U.derivative() * hp
    return num, hp * hp


def _closure_mod_p_ok(E: EllipticCurveQ, cand: UniPoly, n: int, trials: int = 3) -> bool:
    """Check mod a few good primes that the root set of cand is closed
    under the multiplication-by-m x-maps (m generating (Z/n)^x / +-1)."""
    m = _unit_generator(n)
    num, den = mult_by_n_x(E, m)
    ci, cden = to_int_poly(cand)
    ni, nden = to_int_poly(num)
    di, dden = to_int_poly(den)
    used = 0
    for ell in small_primes(500):
        if ell < max(n, 5) or not has_good_reduction(E, ell):
            continue
        if cden % ell == 0 or nden % ell == 0 or dden % ell == 0:
            continue
        cbar = fp_reduce(ci, ell)
        if len(cbar) != len(ci):
            continue
        nbar = fp_reduce(ni, ell)
        dbar = fp_reduce(di, ell)
        deg = len(cbar) - 1
        # U(X) = Res_x(cand, X*den - num): roots are x([m]P) for kernel P
        pts, vals = [], []
        t = 0
        while len(pts) <= deg:
            rhs = fp_sub(fp_scale(dbar, t, ell), nbar, ell)
            if not rhs:
                vals.append(0)
            else:
                vals.append(fp_resultant(cbar, rhs, ell))
            pts.append(t)
            t += 1
        U = _fp_interpolate(pts, vals, ell)
        if len(U) - 1 != deg:
            continue  # degenerate reduction; try another prime
        U = fp_scale(U, pow(U[-1], ell - 2, ell), ell)
        cm = fp_scale(cbar, pow(cbar[-1], ell - 2, ell), ell)
        if U != cm:
            return False
        used += 1
        if used >= trials:
            return True
    return used > 0


def _fp_interpolate(pts, vals, ell):
    out = []
    for i, (xi, yi) in enumerate(zip(pts, vals)):
        li = [1]
        denom = 1
        for j, xj in enumerate(pts):
            if i == j:
                continue
            li = fp_mul(li, [(-xj) % ell, 1], ell)
            denom = denom * (xi - xj) % ell
        scale = yi * pow(denom, ell - 2, ell) % ell
        term = fp_scale(li, scale, ell)
        out = fp_sub(out, fp_scale(term, ell - 1, ell), ell)
    return out


def _unit_generator(n: int) -> int:
    """A generator of (Z/nZ)^x for prime n."""
    for g in range(2, n):
        seen = set()
        v = 1
        for _ in range(n - 1):
            v = v * g % n
            seen.add(v)
        if len(seen) == n - 1:
            return g
    raise ValueError("no generator")


def kernel_candidates(E: EllipticCurveQ, n: int) -> list[KernelPolynomial]:
    """All verified kernel polynomials of rational cyclic n-isogenies.

    Direct mode for odd primes up to 13: factor the n-division polynomial,
    assemble monic degree-(n-1)/2 divisors, screen by the closure test mod
    several primes, then confirm with Velu point counts.
    """
    if n not in DIRECT_PRIMES:
        raise ValueError("direct mode supports odd primes up to 13")
    d = (n - 1) // 2
    psi = division_polynomial(E, n).poly
    factors = factors_within_degree(psi, d)
    out = []
    for size in range(1, len(factors) + 1):
        for combo in itertools.combinations(range(len(factors)), size):
            deg = sum(factors[i][0].degree for i in combo)
            if deg != d:
                continue
            cand = UniPoly([1])
            for i in combo:
                cand = cand * factors[i][0]
            if not _closure_mod_p_ok(E, cand, n):
                continue
            kp = KernelPolynomial(poly=cand, n=n, curve=E)
            try:
                velu_isogeny(E, kp)
            except ValueError:
                continue
            out.append(kp)
    out.sort(key=lambda k: k.poly.coeffs)
    return out


def two_isogeny_kernels(E: EllipticCurveQ) -> list[KernelPolynomial]:
    """Kernel polynomials x - x0 for rational 2-torsion points."""
    A, B = short_form(E)
    from .polys import rational_roots

    out = []
    for r in rational_roots(UniPoly([B, A, 0, 1])):
        out.append(KernelPolynomial(poly=UniPoly([-r, 1]), n=2, curve=E))
    return out


def _prime_step_kernels(E: EllipticCurveQ, q: int) -> list[KernelPolynomial]:
    if q == 2:
        return two_isogeny_kernels(E)
    return kernel_candidates(E, q)


def _is_dual_kernel(E, h: KernelPolynomial, E2, h2: KernelPolynomial, q: int) -> bool:
    """Does h2 on E2 = E/ker(h) cut out the image of E[q] (the dual)?"""
    num, den = velu_x_map(E, h)
    # g: x-coordinates of E[q] outside ker h
    psi = division_polynomial(E, q).poly
    g = psi // h.poly if q > 2 else None
    if q == 2:
        A, B = short_form(E)
        g = UniPoly([B, A, 0, 1]) // h.poly
    # h2 is dual iff h2(num/den) vanishes on all roots of g
    comp = UniPoly([])
    dh = h2.poly.degree
    for j in range(dh + 1):
        comp = comp + h2.poly[j] * num**j * den ** (dh - j)
    return (comp % g).is_zero()


def _cyclic_prime_power(E: EllipticCurveQ, q: int, e: int) -> bool:
    """Is there a rational cyclic q^e-isogeny from E (walk prime steps)?"""
    level = [(E, None, None)]  # (curve, parent curve, arriving kernel)
    for step in range(e):
        nxt = []
        for cur, parent, arriving in level:
            for h in _prime_step_kernels(cur, q):
                if parent is not None and _is_dual_kernel(parent, arriving, cur, h, q):
                    continue
                nxt.append((velu_isogeny(cur, h), cur, h))
        if not nxt:
            return False
        level = nxt
    return True


def _factorize(n: int) -> dict[int, int]:
    out = {}
    m = n
    p = 2
    while p * p <= m:
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
        p += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


def has_rational_cyclic_isogeny(E: EllipticCurveQ, n: int) -> bool:
    """True iff E admits a rational cyclic n-isogeny.

    Degrees outside the admissible list raise; degrees with finitely many
    rational j-invariants are answered from the fixture j-tables, all
    others by walking prime-degree Velu steps.
    """
    if n not in tables.ISOGENY_DEGREES:
        raise ValueError("degree excluded by isogeny bound")
    if n == 1:
        return True
    if n in tables.TABLE_DEGREES:
        from .gateway import isogeny_j_table

        return j_invariant(E) in isogeny_j_table(n)
    for q, e in _factorize(n).items():
        if not _cyclic_prime_power(E, q, e):
            return False
    return True


def kernel_field_degrees(E: EllipticCurveQ, n: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of the kernel polynomial.

    The minimal entry bounds the degree of Q(x(P)) for a kernel point P.
    Table-handled degrees are answered from fixture data.
    """
    if not has_rational_cyclic_isogeny(E, n):
        raise ValueError("no rational cyclic isogeny of this degree")
    if n in tables.TABLE_DEGREES:
        from .gateway import kernel_degree_table

        return kernel_degree_table(n, j_invariant(E))
    if n == 2:
        return (1,)
    if n in DIRECT_PRIMES:
        kps = kernel_candidates(E, n)
        degs = sorted(
            tuple(sorted(h.degree for h, _ in factors_within_degree(kp.poly, kp.poly.degree)))
            for kp in kps
        )
        return tuple(degs[0])
    raise ValueError("kernel field degrees available for primes up to 13")
