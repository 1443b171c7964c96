"""Exact univariate polynomials over Q.

Dense representation, lowest degree first, Fraction coefficients.  The
factorizer is classic Zassenhaus: squarefree decomposition, factorization
mod a well-chosen small prime, quadratic Hensel lifting, and subset
recombination.  Degrees in this project stay modest (a few hundred at the
very worst for norm polynomials), so no lattice reduction stage is needed.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import reduce

from . import modp


class UniPoly:
    """Immutable dense polynomial with Fraction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("UniPoly is immutable")

    # -- basics ---------------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append("x" if c == 1 else f"{c}*x")
            else:
                parts.append(f"x^{i}" if c == 1 else f"{c}*x^{i}")
        return " + ".join(parts).replace("+ -", "- ")

    # -- ring operations -------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(
            [self[i] + other[i] for i in range(n)]
        )

    def __sub__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[i] - other[i] for i in range(n)])

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__
    __radd__ = __add__

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        q = [Fraction(0)] * max(0, len(rem) - len(other.coeffs) + 1)
        dv = other.coeffs
        while len(rem) >= len(dv) and rem:
            c = rem[-1] / dv[-1]
            d = len(rem) - len(dv)
            q[d] = c
            for i, x in enumerate(dv):
                rem[d + i] -= c * x
            while rem and rem[-1] == 0:
                rem.pop()
        return UniPoly(q), UniPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        return self * (1 / self.lc)

    def derivative(self) -> "UniPoly":
        return UniPoly([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def evaluate(self, x):
        """Horner evaluation; works for Fraction, int, or any ring element."""
        if self.is_zero():
            return 0 * x if not isinstance(x, (int, Fraction)) else Fraction(0)
        v = None
        for c in reversed(self.coeffs):
            v = c if v is None else v * x + c
        return v

    def shift(self, a) -> "UniPoly":
        """Return f(x + a)."""
        a = Fraction(a)
        out = UniPoly([])
        for c in reversed(self.coeffs):
            out = out * UniPoly([a, 1]) + UniPoly([c])
        return out

    def rescale(self, u) -> "UniPoly":
        """Return f(u * x)."""
        u = Fraction(u)
        return UniPoly([c * u**i for i, c in enumerate(self.coeffs)])

    def compose(self, g: "UniPoly") -> "UniPoly":
        out = UniPoly([])
        for c in reversed(self.coeffs):
            out = out * g + UniPoly([c])
        return out

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power")
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out


X = UniPoly([0, 1])
ONE = UniPoly([1])


def _coerce(v) -> UniPoly:
    if isinstance(v, UniPoly):
        return v
    return UniPoly([v])


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd over Q via primitive PRS on integer polynomials."""
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a, _ = to_int_poly(f)
    b, _ = to_int_poly(g)
    while b:
        r = _zx_prem(a, b)
        a, b = b, _zx_primitive(r)
    return UniPoly(a).monic()


# -- integer polynomial helpers (lowest degree first int lists) ----------

def to_int_poly(f: UniPoly) -> tuple[list[int], int]:
    """Clear denominators: returns (c, den) with UniPoly(c)/den == f."""
    den = reduce(math.lcm, (c.denominator for c in f.coeffs), 1)
    return [int(c * den) for c in f.coeffs], den


def from_int_poly(c) -> UniPoly:
    return UniPoly(list(c))


def _zx_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _zx_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zx_content(a) -> int:
    return reduce(math.gcd, (abs(x) for x in a), 0)


def _zx_primitive(a):
    c = _zx_content(a)
    if c <= 1:
        return list(a)
    return [x // c for x in a]


def _zx_prem(a, b):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, over Z."""
    a = list(a)
    d = len(a) - len(b)
    if d < 0:
        return a
    lb = b[-1]
    e = d + 1
    while a and len(a) >= len(b):
        c = a[-1]
        a = [x * lb for x in a]
        e -= 1
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        _zx_trim(a)
    if e > 0:
        scale = lb**e
        a = [x * scale for x in a]
    return a


def _zx_eval(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


# -- resultant ------------------------------------------------------------

def resultant(f: UniPoly, g: UniPoly) -> Fraction:
    """Resultant of two nonzero polynomials over Q.

    Subresultant PRS on integer polynomials with denominator bookkeeping.
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("zero input")
    if f.degree == 0:
        return f.lc ** g.degree
    if g.degree == 0:
        return g.lc ** f.degree
    fi, fd = to_int_poly(f)
    gi, gd = to_int_poly(g)
    r = Fraction(_zx_resultant(fi, gi))
    return r / (Fraction(fd) ** g.degree * Fraction(gd) ** f.degree)


def _zx_resultant(a, b) -> int:
    """Resultant of nonzero integer polynomials (subresultant algorithm)."""
    a, b = _zx_trim(list(a)), _zx_trim(list(b))
    if not a or not b:
        raise ValueError("zero input")
    sign = 1
    if len(a) < len(b):
        if (len(a) - 1) % 2 == 1 and (len(b) - 1) % 2 == 1:
            sign = -sign
        a, b = b, a
    if len(b) == 1:
        return sign * b[0] ** (len(a) - 1)
    ca, cb = _zx_content(a), _zx_content(b)
    scale = ca ** (len(b) - 1) * cb ** (len(a) - 1)
    a = [x // ca for x in a]
    b = [x // cb for x in b]
    g = h = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        delta = da - db
        if da % 2 == 1 and db % 2 == 1:
            sign = -sign
        r = _zx_prem(a, b)
        if not r:
            return 0
        a = b
        denom = g * h**delta
        b = [x // denom for x in r]
        g = a[-1]
        if delta > 0:
            h = g**delta // h ** (delta - 1)
        if len(b) == 1:
            da = len(a) - 1
            val = b[0] ** da // h ** (da - 1) if da > 1 else b[0] ** da
            return sign * scale * val


# -- squarefree decomposition over Q --------------------------------------

def squarefree_decomposition(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm: f = lc * prod g_i^i with g_i monic squarefree."""
    if f.is_zero():
        raise ValueError("zero input")
    f = f.monic()
    if f.degree == 0:
        return []
    out = []
    df = f.derivative()
    a0 = poly_gcd(f, df)
    b = f // a0
    c = df // a0
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        if a.degree > 0:
            out.append((a.monic(), i))
        b = b // a
        c = d // a
        d = c - b.derivative()
        i += 1
    return out


# -- Zassenhaus factorization ----------------------------------------------

_RECOMBINATION_CAP = 4_000_000


def _zm_reduce(a, m):
    return _zx_trim([x % m for x in a])


def _zm_mul(a, b, m):
    return _zx_trim([x % m for x in _zx_mul(a, b)])


def _zm_divmod_monic(a, b, m):
    """Division by monic b with coefficients mod m."""
    a = [x % m for x in a]
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = a[-1] % m
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = (a[d + i] - c * y) % m
        _zx_trim(a)
    return _zx_trim(q), a


def _zm_addsub(a, b, m, sign):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + sign * x) % m
    return _zx_trim(out)


def _fp_xgcd(a, b, ell):
    """s, t with s*a + t*b = 1 mod ell for coprime a, b."""
    r0, r1 = [x % ell for x in a], [x % ell for x in b]
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while modp.trim(list(r1)):
        q, r = modp.fp_divmod(r0, r1, ell)
        r0, r1 = r1, r
        s0, s1 = s1, modp.fp_sub(s0, modp.fp_mul(q, s1, ell), ell)
        t0, t1 = t1, modp.fp_sub(t0, modp.fp_mul(q, t1, ell), ell)
    if len(r0) != 1:
        raise ArithmeticError("inputs not coprime mod ell")
    inv = pow(r0[0], ell - 2, ell)
    return modp.fp_scale(s0, inv, ell), modp.fp_scale(t0, inv, ell)


def _hensel_step(m, f, g, h, s, t):
    """One quadratic Hensel step: factorization mod m -> mod m*m.

    Requires f = g*h (mod m), s*g + t*h = 1 (mod m), h monic, lc(f) = lc(g)
    mod m.  All polys are int lists with coefficients in [0, modulus).
    """
    M = m * m
    fm = _zm_reduce(f, M)
    e = _zm_addsub(fm, _zm_mul(g, h, M), M, -1)
    q, r = _zm_divmod_monic(_zm_mul(s, e, M), h, M)
    g1 = _zm_addsub(_zm_addsub(g, _zm_mul(t, e, M), M, 1), _zm_mul(q, g, M), M, 1)
    h1 = _zm_addsub(h, r, M, 1)
    b = _zm_addsub(
        _zm_addsub(_zm_mul(s, g1, M), _zm_mul(t, h1, M), M, 1), [1], M, -1
    )
    c, d = _zm_divmod_monic(_zm_mul(s, b, M), h1, M)
    s1 = _zm_addsub(s, d, M, -1)
    t1 = _zm_addsub(_zm_addsub(t, _zm_mul(t, b, M), M, -1), _zm_mul(c, g1, M), M, -1)
    return g1, h1, s1, t1


def _hensel_lift_tree(f, facs, p, target):
    """Lift monic factors of monic f from mod p to mod target = p^k."""
    if len(facs) == 1:
        out = _zm_reduce(f, target)
        # normalize monic (lc is 1 mod p, a unit mod target)
        inv = pow(out[-1], -1, target)
        return [_zm_reduce([x * inv for x in out], target)]
    mid = len(facs) // 2
    left, right = facs[:mid], facs[mid:]
    g = reduce(lambda a, b: modp.fp_mul(a, b, p), left)
    h = reduce(lambda a, b: modp.fp_mul(a, b, p), right)
    s, t = _fp_xgcd(g, h, p)
    m = p
    while m < target:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift_tree(g, left, p, target) + _hensel_lift_tree(
        h, right, p, target
    )


def _symm(x, m):
    x %= m
    return x - m if x > m // 2 else x


def _l2_norm(f) -> int:
    return math.isqrt(sum(c * c for c in f)) + 1


def _factor_bound(f, dmax) -> int:
    """Mignotte bound on coefficients of monic factors of monic f."""
    d = max(1, min(dmax, len(f) - 2))
    return math.comb(d, d // 2) * _l2_norm(f) + 1


def _usable_primes(f, want):
    """Small odd primes where monic f stays squarefree, with factor data."""
    out = []
    p = 3
    while len(out) < want and p < 3000:
        if modp.is_prime(p):
            fp = modp.fp_reduce(f, p)
            if len(fp) == len(f):
                d = modp.fp_deriv(fp, p)
                if d and len(modp.fp_gcd(fp, d, p)) == 1:
                    _, facs = modp.fp_factor(fp, p)
                    out.append((p, [g for g, _ in facs]))
                    if len(facs) == 1:
                        break
        p += 2
    if not out:
        raise ArithmeticError("no usable prime found")
    return out


def _exact_div(f, g):
    """f // g over Z if exact, else None (g monic)."""
    rem = list(f)
    q = [0] * (len(f) - len(g) + 1)
    while len(rem) >= len(g) and rem:
        c = rem[-1]
        d = len(rem) - len(g)
        q[d] = c
        for i, y in enumerate(g):
            rem[d + i] -= c * y
        _zx_trim(rem)
    return q if not rem else None


def _budgeted_combos(idx, degs, size, budget):
    """Size-subsets of idx with degree sum <= budget, DFS with pruning."""
    order = sorted(idx, key=lambda i: degs[i])
    n = len(order)

    def rec(start, chosen, dsum):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        need = size - len(chosen)
        for pos in range(start, n - need + 1):
            i = order[pos]
            d = dsum + degs[i]
            # remaining picks are at least as large as degs[i]
            if d + (need - 1) * degs[i] > budget:
                break
            chosen.append(i)
            yield from rec(pos + 1, chosen, d)
            chosen.pop()

    yield from rec(0, [], 0)


def _recombine(f, leaves, big, bound, targets):
    """Find monic integer factors of monic squarefree f from lifted leaves.

    targets=None means full factorization (classic Zassenhaus); otherwise a
    set of allowed factor degrees and only irreducible factors with degree
    in range(1, max+1) are extracted.
    """
    full = targets is None
    found = []
    idx = list(range(len(leaves)))
    degs = {i: len(leaves[i]) - 1 for i in idx}
    max_size = None if full else max(targets, default=0)
    tests = 0
    size = 1
    while idx:
        if full:
            if 2 * size > len(idx):
                break
        elif size > min(len(idx), max_size or 0):
            break
        hit = False
        if full:
            combos = itertools.combinations(idx, size)
        else:
            combos = _budgeted_combos(idx, degs, size, max_size)
        for combo in combos:
            dsum = sum(degs[i] for i in combo)
            if not full and dsum not in targets:
                continue
            tests += 1
            if tests > _RECOMBINATION_CAP:
                raise ArithmeticError("factor recombination explosion")
            tc = 1
            for i in combo:
                tc = tc * leaves[i][0] % big
            tc = _symm(tc, big)
            if tc == 0 or (f[0] and f[0] % tc != 0):
                continue
            prod = [1]
            for i in combo:
                prod = _zm_mul(prod, leaves[i], big)
            cand = [_symm(c, big) for c in prod]
            if any(abs(c) > bound for c in cand):
                continue
            q = _exact_div(f, cand)
            if q is None:
                continue
            found.append(cand)
            f = q
            live = set(idx) - set(combo)
            idx = [i for i in idx if i in live]
            hit = True
            break
        if hit:
            continue
        size += 1
    return found, f


def _factor_sf_monic_int(f, targets=None):
    """Irreducible monic integer factors of a monic squarefree f in Z[x].

    With targets (a set of degrees) only factors of degree <= max(targets)
    are searched; the unfactored remainder is dropped.
    """
    n = len(f) - 1
    if n <= 1:
        return [list(f)]
    want = 5 if n <= 80 else 3
    data = _usable_primes(f, want)
    p, facs = min(data, key=lambda t: len(t[1]))
    if len(facs) == 1:
        return [list(f)]
    if targets is not None:
        targets = {d for d in targets if 1 <= d <= n}
        if not targets:
            return []
    dmax = n - 1 if targets is None else max(targets)
    bound = _factor_bound(f, dmax)
    k = 1
    big = p
    while big <= 2 * bound:
        big *= p
        k += 1
    leaves = _hensel_lift_tree(_zm_reduce(f, big), facs, p, big)
    found, rem = _recombine(f, leaves, big, bound, targets)
    if targets is None and len(rem) > 1:
        found.append(rem)
    return found


def _monicize(c):
    """Monic integer image of integer poly c: L^(d-1) * c(x/L), L = lc."""
    L = c[-1]
    d = len(c) - 1
    return [c[i] * L ** (d - 1 - i) for i in range(d)] + [1], L


def _demonicize_factor(h, L) -> UniPoly:
    """Map a monic factor of the monicized poly back: h(L*x) made monic."""
    return UniPoly([Fraction(h[i], L ** (len(h) - 1 - i)) for i in range(len(h))])


def _factor_squarefree(g: UniPoly, targets=None) -> list[UniPoly]:
    """Monic irreducible factors of a monic squarefree g over Q."""
    out = []
    if g[0] == 0:
        out.append(X)
        g = g // X
    if g.degree == 0:
        return out
    ci, _ = to_int_poly(g)
    if ci[-1] == 1:
        for h in _factor_sf_monic_int(ci, targets):
            out.append(UniPoly(h))
    else:
        mono, L = _monicize(ci)
        for h in _factor_sf_monic_int(mono, targets):
            out.append(_demonicize_factor(h, L))
    if targets is not None:
        out = [h for h in out if h.degree in targets]
    return out


def poly_factor_rationals(f: UniPoly) -> list[tuple[UniPoly, int]]:
    """Factor f over Q into monic irreducibles with multiplicities.

    The product of the factors (with multiplicity) times lc(f) re-expands
    to f exactly.  Deterministic ordering: (degree, coefficient tuple).
    """
    if f.is_zero():
        raise ValueError("zero input")
    if f.degree == 0:
        return []
    out = []
    for part, mult in squarefree_decomposition(f):
        for h in _factor_squarefree(part):
            out.append((h, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def factors_within_degree(f: UniPoly, dmax: int) -> list[tuple[UniPoly, int]]:
    """All monic irreducible factors of f with degree <= dmax (complete)."""
    if f.is_zero():
        raise ValueError("zero input")
    targets = set(range(1, dmax + 1))
    out = []
    for part, mult in squarefree_decomposition(f):
        for h in _factor_squarefree(part, targets):
            out.append((h, mult))
    out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
    return out


def is_irreducible(f: UniPoly) -> bool:
    if f.degree < 1:
        return False
    facs = poly_factor_rationals(f)
    return len(facs) == 1 and facs[0][1] == 1


def rational_roots(f: UniPoly) -> list[Fraction]:
    """All rational roots, without multiplicity, sorted."""
    roots = [
        -h[0] for h, _ in factors_within_degree(f, 1)
    ]
    return sorted(roots)
