"""Absolute number fields in power-basis representation.

A field is Q[a]/(m(a)) for a monic irreducible m; elements are coordinate
vectors in the power basis.  Root finding inside a field uses the norm
(resultant) method: eliminate the generator, factor the rational norm
polynomial, lift candidates back and verify by exact evaluation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from . import modp
from .polys import (
    ONE,
    UniPoly,
    X,
    _zx_resultant,
    _zx_trim,
    factors_within_degree,
    is_irreducible,
    poly_factor_rationals,
    poly_gcd,
    resultant,
    to_int_poly,
)


class NumberField:
    """Q adjoined a root of a monic irreducible polynomial."""

    __slots__ = ("defining_poly", "degree", "label")

    def __init__(self, defining_poly: UniPoly, label: str | None = None,
                 _trusted: bool = False):
        if defining_poly.degree < 1:
            raise ValueError("defining polynomial must be nonconstant")
        if defining_poly.lc != 1:
            raise ValueError("defining polynomial must be monic")
        if not _trusted and defining_poly.degree > 1:
            if not is_irreducible(defining_poly):
                raise ValueError("reducible defining polynomial")
        object.__setattr__(self, "defining_poly", defining_poly)
        object.__setattr__(self, "degree", defining_poly.degree)
        object.__setattr__(self, "label", label)

    def __setattr__(self, *a):
        raise AttributeError("NumberField is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, NumberField)
            and self.defining_poly == other.defining_poly
        )

    def __hash__(self):
        return hash(self.defining_poly)

    def __repr__(self):
        name = self.label or f"deg{self.degree}"
        return f"NumberField({name}: {self.defining_poly})"

    # -- element constructors -------------------------------------------
    def zero(self) -> "NFElement":
        return NFElement(self, [0] * self.degree)

    def one(self) -> "NFElement":
        return self.rational(1)

    def rational(self, q) -> "NFElement":
        v = [Fraction(0)] * self.degree
        v[0] = Fraction(q)
        return NFElement(self, v)

    def gen(self) -> "NFElement":
        if self.degree == 1:
            return self.rational(-self.defining_poly[0])
        v = [Fraction(0)] * self.degree
        v[1] = Fraction(1)
        return NFElement(self, v)

    def element(self, coords) -> "NFElement":
        return NFElement(self, list(coords))


QQ = NumberField(X, label="Q", _trusted=True)


def make_number_field(f: UniPoly, label: str | None = None) -> NumberField:
    """Validated field constructor: f monic irreducible of degree >= 1."""
    return NumberField(f, label=label)


class NFElement:
    """Element of a NumberField as a power-basis coordinate vector."""

    __slots__ = ("field", "coords")

    def __init__(self, field: NumberField, coords):
        cs = [Fraction(c) for c in coords]
        if len(cs) > field.degree:
            cs = _reduce_mod(cs, field.defining_poly)
        cs += [Fraction(0)] * (field.degree - len(cs))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coords", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("NFElement is immutable")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coords[0]

    def _check(self, other) -> "NFElement":
        if isinstance(other, NFElement):
            if other.field != self.field:
                raise ValueError("elements of different fields")
            return other
        return self.field.rational(other)

    def __add__(self, other):
        other = self._check(other)
        return NFElement(
            self.field, [a + b for a, b in zip(self.coords, other.coords)]
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return NFElement(
            self.field, [a - b for a, b in zip(self.coords, other.coords)]
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return NFElement(self.field, [-a for a in self.coords])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NFElement(self.field, [a * other for a in self.coords])
        other = self._check(other)
        prod = [Fraction(0)] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(other.coords):
                    if b:
                        prod[i + j] += a * b
        return NFElement(self.field, _reduce_mod(prod, self.field.defining_poly))

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        a = UniPoly(self.coords)
        m = self.field.defining_poly
        s = _poly_invert_mod(a, m)
        return NFElement(self.field, list(s.coeffs))

    def __truediv__(self, other):
        other = self._check(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        return (
            isinstance(other, NFElement)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field, self.coords))

    def __repr__(self):
        return f"NF({list(map(str, self.coords))})"

    def min_poly(self) -> UniPoly:
        """Minimal polynomial over Q, by linear algebra on powers."""
        n = self.field.degree
        rows = []
        p = self.field.one()
        for _ in range(n + 1):
            rows.append(list(p.coords))
            p = p * self
        # find least k with 1, b, ..., b^k dependent
        for k in range(1, n + 1):
            sol = _solve_dependency(rows[: k + 1], n)
            if sol is not None:
                return UniPoly(sol).monic()
        raise AssertionError("no dependency found")


def _reduce_mod(coeffs, m: UniPoly):
    """Reduce a coefficient list modulo the monic polynomial m."""
    cs = [Fraction(c) for c in coeffs]
    deg_m = m.degree
    for i in range(len(cs) - 1, deg_m - 1, -1):
        c = cs[i]
        if c:
            cs[i] = Fraction(0)
            for j in range(deg_m):
                cs[i - deg_m + j] -= c * m[j]
    return cs[:deg_m] if len(cs) > deg_m else cs


def _poly_invert_mod(a: UniPoly, m: UniPoly) -> UniPoly:
    """Inverse of a modulo m over Q (extended Euclid)."""
    r0, r1 = m, a % m
    s0, s1 = UniPoly([]), ONE
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("element not invertible (gcd nontrivial)")
    return (s0 * (1 / r0.lc)) % m


def _solve_dependency(rows, width):
    """Nontrivial kernel vector of the row span, or None if independent."""
    k = len(rows)
    mat = [list(r) + [Fraction(1 if i == j else 0) for j in range(k)]
           for i, r in enumerate(rows)]
    piv_cols = []
    r = 0
    for c in range(width):
        piv = next((i for i in range(r, k) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(k):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
        if r == k:
            return None
    # rows r..k-1 are zero in the data part: dependency coefficients
    return mat[r][width:]


# -- polynomials over a number field (coefficient lists) -------------------

def nf_poly(field: NumberField, coeffs) -> list[NFElement]:
    out = []
    for c in coeffs:
        if isinstance(c, NFElement):
            out.append(field.element(c.coords) if c.field == field else None)
            if out[-1] is None:
                raise ValueError("coefficient from wrong field")
        else:
            out.append(field.rational(c))
    while out and out[-1].is_zero():
        out.pop()
    return out


def nf_poly_from_rational(field: NumberField, f: UniPoly) -> list[NFElement]:
    return nf_poly(field, list(f.coeffs))


def nfp_eval(g: list[NFElement], x: NFElement) -> NFElement:
    v = x.field.zero()
    for c in reversed(g):
        v = v * x + c
    return v


def nfp_mul(a, b, field):
    if not a or not b:
        return []
    out = [field.zero() for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    while out and out[-1].is_zero():
        out.pop()
    return out


def nfp_divmod(a, b, field):
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q = [field.zero() for _ in range(max(0, len(a) - len(b) + 1))]
    inv = b[-1].inverse()
    while len(a) >= len(b) and a:
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = a[d + i] - c * y
        while a and a[-1].is_zero():
            a.pop()
    return q, a


def nfp_gcd(a, b, field):
    a, b = list(a), list(b)
    while b:
        a, b = b, nfp_divmod(a, b, field)[1]
    if a:
        inv = a[-1].inverse()
        a = [c * inv for c in a]
    return a


def nfp_deriv(g, field):
    return [g[i] * i for i in range(1, len(g))]


# -- Trager norm-based root finding ----------------------------------------

def _norm_resultant(m_int: list[int], biv: list[list[int]], dy: int) -> UniPoly:
    """Res_a(m(a), F(a, y)) in Z[y] by exact evaluation-interpolation.

    biv[i] is the integer y-polynomial coefficient of a^i.
    """
    n = len(m_int) - 1
    da = len(biv) - 1
    bound = n * dy
    pts = []
    vals = []
    t = 0
    lead = m_int[-1]
    while len(pts) <= bound:
        ft = _zx_trim([_eval_int(biv[i], t) for i in range(da + 1)])
        if not ft:
            val = 0
        else:
            drop = da - (len(ft) - 1)
            val = lead**drop * _zx_resultant(m_int, ft)
        pts.append(t)
        vals.append(val)
        t = -t if t > 0 else -t + 1
    return _interpolate(pts, vals)


def _eval_int(c, t):
    v = 0
    for x in reversed(c):
        v = v * t + x
    return v


def _interpolate(pts, vals) -> UniPoly:
    """Exact Newton interpolation through integer points."""
    n = len(pts)
    coef = [Fraction(v) for v in vals]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (pts[i] - pts[i - j])
    poly = UniPoly([])
    for j in range(n - 1, -1, -1):
        poly = poly * UniPoly([-pts[j], 1]) + UniPoly([coef[j]])
    return poly


def nf_roots(K: NumberField, g) -> list[NFElement]:
    """All roots in K of a polynomial with coefficients in K.

    Accepts a UniPoly (rational coefficients), a coefficient list of
    NFElements/rationals, and returns roots without multiplicity, each
    verified by exact evaluation, in a deterministic order.
    """
    if isinstance(g, UniPoly):
        g = nf_poly_from_rational(K, g)
    else:
        g = nf_poly(K, list(g))
    if not g:
        raise ValueError("zero input")
    if len(g) == 1:
        return []
    if K.degree == 1:
        roots = _rational_poly_roots(g)
        return sorted((K.rational(r) for r in roots), key=lambda e: e.coords)

    # squarefree part over K
    gp = nfp_deriv(g, K)
    h = nfp_gcd(g, gp, K)
    if len(h) > 1:
        g = nfp_divmod(g, h, K)[0]
    inv = g[-1].inverse()
    g = [c * inv for c in g]

    if all(c.is_rational() for c in g):
        roots = _roots_of_rational_poly_in_field(
            K, UniPoly([c.as_rational() for c in g])
        )
    else:
        roots = _trager_roots(K, g)
    verified = []
    for r in roots:
        if nfp_eval(g, r).is_zero():
            verified.append(r)
    verified.sort(key=lambda e: e.coords)
    return verified


def _rational_poly_roots(g) -> list[Fraction]:
    from .polys import rational_roots

    return rational_roots(UniPoly([c.as_rational() for c in g]))


def _roots_of_rational_poly_in_field(K: NumberField, f: UniPoly):
    """Roots in K of an f with rational coefficients: factor over Q first."""
    out = []
    for h, _ in factors_within_degree(f, K.degree):
        if h.degree == 1:
            out.append(K.rational(-h[0]))
        elif K.degree % h.degree == 0:
            out.extend(_roots_of_irreducible_in_field(K, h))
    return out


def _roots_of_irreducible_in_field(K: NumberField, h: UniPoly):
    """Roots in K of a rational irreducible h with deg h | deg K, > 1."""
    return _trager_roots(K, nf_poly_from_rational(K, h))


def _trager_roots(K: NumberField, g: list[NFElement]):
    """Norm method on a monic squarefree g over K."""
    m_int, _ = to_int_poly(K.defining_poly)
    dy = len(g) - 1
    for s in (0, 1, -1, 2, -2, 3, -3, 5, -5, 8):
        gs = _shift_by_generator(K, g, s)
        biv, _ = _bivariate_int(gs, K.degree)
        norm = _norm_resultant(m_int, biv, dy)
        if norm.degree != dy * K.degree:
            continue
        if poly_gcd(norm, norm.derivative()).degree == 0:
            return _extract_roots(K, g, gs, norm, s)
    raise ArithmeticError("no squarefree shift found in norm method")


def _shift_by_generator(K, g, s):
    """g(y + s*alpha) over K."""
    if s == 0:
        return list(g)
    a = K.gen() * s
    out = [K.zero() for _ in range(len(g))]
    # Horner in (y + a): process from top coefficient down
    for c in reversed(g):
        # out = out * (y + a) + c
        new = [K.zero() for _ in range(len(g))]
        for i in range(len(out) - 1, -1, -1):
            if not out[i].is_zero():
                if i + 1 < len(new):
                    new[i + 1] = new[i + 1] + out[i]
                new[i] = new[i] + out[i] * a
        new[0] = new[0] + c
        out = new
    return out


def _bivariate_int(gs, n):
    """Convert K-poly to integer bivariate: biv[i] = Z[y]-coeff of a^i."""
    den = 1
    for c in gs:
        for q in c.coords:
            den = den * q.denominator // math.gcd(den, q.denominator)
    biv = [[0] * len(gs) for _ in range(n)]
    for j, c in enumerate(gs):
        for i, q in enumerate(c.coords):
            biv[i][j] = int(q * den)
    biv = [_zx_trim(row) for row in biv]
    while biv and not biv[-1]:
        biv.pop()
    return biv, den


def _extract_roots(K, g, gs, norm, s):
    roots = []
    for h, _ in factors_within_degree(norm, K.degree):
        if K.degree % h.degree != 0:
            continue
        hk = nf_poly_from_rational(K, h)
        d = nfp_gcd(gs, hk, K)
        if len(d) == 2:
            # monic linear: root of shifted poly, shift back
            beta = -d[0]
            roots.append(beta + K.gen() * s)
    return roots


# -- cyclotomic machinery ---------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> UniPoly:
    """The n-th cyclotomic polynomial over Q."""
    if n < 1:
        raise ValueError("n must be positive")
    f = UniPoly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            f = f // cyclotomic_poly(d)
    return f


def euler_phi(n: int) -> int:
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


@lru_cache(maxsize=None)
def cyclotomic_real_minpoly(n: int) -> UniPoly:
    """Minimal polynomial of zeta_n + zeta_n^{-1}, degree phi(n)/2."""
    if n < 3:
        raise ValueError("n must be at least 3")
    phi = cyclotomic_poly(n)
    m = phi.degree // 2
    # phi(z)/z^m = c_m + sum_{k>=1} c_{m+k} (z^k + z^-k); fold via
    # V_0 = 2, V_1 = y, V_k = y V_{k-1} - V_{k-2}
    v_prev = UniPoly([2])
    v_cur = X
    out = UniPoly([phi[m]]) + phi[m + 1] * v_cur
    for k in range(2, m + 1):
        v_prev, v_cur = v_cur, X * v_cur - v_prev
        if phi[m + k] != 0:
            out = out + phi[m + k] * v_cur
    return out


def _primitive_root_prime_power(p: int, a: int) -> int:
    """Primitive root modulo p^a for odd prime p."""
    m = p**a
    for g in range(2, p * 4):
        if math.gcd(g, p) != 1:
            continue
        # order mod p is p-1?
        ok = all(
            pow(g, (p - 1) // q, p) != 1 for q in _prime_divisors(p - 1)
        )
        if not ok:
            continue
        if a == 1 or pow(g, p - 1, p * p) != 1:
            return g
        return g + p
    raise AssertionError("no primitive root found")


def _prime_divisors(n: int) -> list[int]:
    out = []
    m = n
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


@lru_cache(maxsize=None)
def cyclotomic_subfield_poly(p: int, a: int) -> UniPoly:
    """Defining polynomial of the degree-p^a subfield of Q(zeta_{p^{a+1}}).

    These are the finite levels of the cyclotomic Z_p-tower over Q; the
    generator is a Gauss period, computed exactly in the cyclotomic ring.
    """
    if a == 0:
        return X
    M = p ** (a + 1)
    phi = euler_phi(M)
    red = cyclotomic_poly(M)
    red_i, _ = to_int_poly(red)

    # x^e mod Phi_M for phi <= e <= max needed exponent
    top_e = max(M - 1, 2 * phi - 2)
    table = {}
    cur = [-c for c in red_i[:-1]]
    table[phi] = list(cur)
    for e in range(phi + 1, top_e + 1):
        cur = [0] + cur
        if len(cur) > phi:
            t = cur.pop()
            if t:
                for i in range(phi):
                    cur[i] -= t * red_i[i]
        table[e] = list(cur)

    def basis_vec(e):
        e %= M
        if e < phi:
            v = [0] * phi
            v[e] = 1
            return v
        return list(table[e])

    g = _primitive_root_prime_power(p, a + 1)
    d = p**a
    h = pow(g, d, M)
    subgroup = []
    t = 1
    for _ in range(p - 1):
        subgroup.append(t)
        t = t * h % M

    periods = []
    for j in range(d):
        gj = pow(g, j, M)
        v = [0] * phi
        for t in subgroup:
            w = basis_vec(gj * t % M)
            for i in range(phi):
                v[i] += w[i]
        periods.append(v)

    # product of (y - eta_j) with coefficients in the cyclotomic ring
    def ring_mul(u, v):
        prod = [0] * (2 * phi - 1)
        for i, x in enumerate(u):
            if x:
                for j, y in enumerate(v):
                    if y:
                        prod[i + j] += x * y
        for e in range(len(prod) - 1, phi - 1, -1):
            c = prod[e]
            if c:
                prod[e] = 0
                w = table[e]
                for i in range(phi):
                    prod[i] += c * w[i]
        return prod[:phi]

    start = [0] * phi
    start[0] = 1
    poly = [start]  # constant 1 polynomial in y, ring coefficients
    for eta in periods:
        neg = [-x for x in eta]
        new = [[0] * phi for _ in range(len(poly) + 1)]
        for k, coef in enumerate(poly):
            prod = ring_mul(coef, neg)
            for i in range(phi):
                new[k][i] += prod[i]
                new[k + 1][i] += coef[i]
        poly = new
    out = []
    for coef in poly:
        if any(coef[1:]):
            raise AssertionError("period polynomial coefficient not rational")
        out.append(coef[0])
    return UniPoly(out)


def compose_fields(f: UniPoly, g: UniPoly) -> UniPoly:
    """Defining polynomial of Q(alpha, beta) for linearly disjoint fields.

    Tries generators alpha + lam*beta until the resultant construction
    yields an irreducible polynomial of degree deg f * deg g.
    """
    target = f.degree * g.degree
    fi, _ = to_int_poly(f)
    for lam in (1, -1, 2, -2, 3, -3, 4, 5, 7):
        # h(x) = Res_y(f(y), g(x - lam*y)): roots alpha_i*lam?? roots are
        # lam*alpha_i + beta_j when expanding g(x - lam y) at y = alpha_i
        biv = _biv_from_shift(g, lam)
        h = _norm_resultant(fi, biv, g.degree)
        h = h.monic()
        if h.degree != target:
            continue
        if poly_gcd(h, h.derivative()).degree != 0:
            continue
        if is_irreducible(h):
            return h
    raise ArithmeticError("no primitive element found for compositum")


def _biv_from_shift(g: UniPoly, lam: int):
    """g(x - lam*y) as integer bivariate rows biv[i] = Z[x]-coeff of y^i."""
    gi, _ = to_int_poly(g)
    dy = len(gi) - 1
    rows = [[0] * (dy + 1) for _ in range(dy + 1)]
    # expand each gi[k] * (x - lam y)^k
    binom = [[0] * (dy + 1) for _ in range(dy + 1)]
    for k in range(dy + 1):
        binom[k][0] = 1
        for j in range(1, k + 1):
            binom[k][j] = binom[k - 1][j - 1] + (binom[k - 1][j] if j <= k - 1 else 0)
    for k in range(dy + 1):
        c = gi[k]
        if not c:
            continue
        for j in range(k + 1):
            # term: C(k, j) x^{k-j} (-lam y)^j
            rows[j][k - j] += c * binom[k][j] * (-lam) ** j
    return [_zx_trim(r) for r in rows]


def field_disc_integer(f: UniPoly) -> int:
    """Discriminant of the (primitive integer image of the) polynomial."""
    fi, _ = to_int_poly(f)
    n = len(fi) - 1
    d = _zx_resultant(fi, _zx_trim([i * fi[i] for i in range(1, len(fi))]))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * d // fi[-1]


def small_primes(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(2, bound + 1) if sieve[i]]


def _dedekind_maximal(fi: list[int], ell: int) -> bool:
    """Dedekind's criterion: is Z[alpha] maximal at ell (fi monic integer)."""
    fbar = modp.fp_reduce(fi, ell)
    _, facs = modp.fp_factor(fbar, ell)
    gbar = [1]
    for g, _ in facs:
        gbar = modp.fp_mul(gbar, g, ell)
    hbar = modp.fp_divmod(fbar, gbar, ell)[0]
    gl = [c % ell for c in gbar]
    hl = [c % ell for c in hbar]
    prod = [0] * (len(gl) + len(hl) - 1)
    for i, x in enumerate(gl):
        for j, y in enumerate(hl):
            prod[i + j] += x * y
    diff = list(prod)
    for i, c in enumerate(fi):
        if i < len(diff):
            diff[i] -= c
        else:
            diff.append(-c)
    F = [c // ell for c in diff]
    if any(c * ell != d for c, d in zip(F, diff)):
        raise AssertionError("Dedekind witness not divisible by ell")
    Fbar = modp.fp_reduce(F, ell)
    d = modp.fp_gcd(modp.fp_gcd(Fbar, gbar, ell), hbar, ell)
    return len(d) <= 1


def ramification_status(K: NumberField, ell: int, tries: int = 6) -> str:
    """'ramified' / 'unramified' / 'unknown' at ell, via generators.

    A generator whose minimal polynomial is squarefree mod ell certifies
    unramified; one that is ell-maximal (Dedekind) but not squarefree
    certifies ramified.
    """
    gen = K.gen()
    candidates = [gen]
    for k in range(1, tries):
        candidates.append(gen + k)
        candidates.append(gen - k)
    candidates.append(gen * gen)
    candidates.append(gen * gen + gen)
    if ell <= 40:
        # scaled generators can enlarge the order at ell (index cleanup)
        for k in range(ell):
            candidates.append((gen + k) * Fraction(1, ell))
            candidates.append((gen * gen + k * gen) * Fraction(1, ell))
    for b in candidates:
        mp = b.min_poly()
        if mp.degree != K.degree:
            continue
        mi, den = to_int_poly(mp)
        if den % ell == 0 or mi[-1] % ell == 0:
            continue
        fbar = modp.fp_reduce(mi, ell)
        dbar = modp.fp_deriv(fbar, ell)
        if dbar and len(modp.fp_gcd(fbar, dbar, ell)) == 1:
            return "unramified"
        if _dedekind_maximal(mi, ell):
            return "ramified"
    return "unknown"


def ramified_prime_candidates(
    K: NumberField, hint: frozenset[int] | set[int] = frozenset()
) -> set[int]:
    """Primes that may ramify in K: divisors of disc(f), filtered.

    Trial division over small primes plus hints; candidates certified
    unramified (squarefree reduction of some generator's minimal
    polynomial, or Dedekind maximality) are removed.  A leftover
    discriminant cofactor that is not a perfect square is reported as the
    marker -1 (possible large ramified prime).
    """
    d = abs(field_disc_integer(K.defining_poly))
    out = set()
    for ell in sorted(set(small_primes(1000)) | set(hint)):
        if d % ell == 0:
            while d % ell == 0:
                d //= ell
            if ramification_status(K, ell) != "unramified":
                out.add(ell)
    if d > 1:
        r = math.isqrt(d)
        if r * r != d:
            out.add(-1)
    return out
