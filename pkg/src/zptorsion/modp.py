"""Dense polynomial arithmetic over prime fields F_ell.

Polynomials are lists of ints in [0, ell), lowest degree first, with no
trailing zeros.  These routines back the Zassenhaus factorizer, residue
degree computations for number fields, and curve reduction mod ell.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond anything used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def fp_reduce(c, ell: int) -> list[int]:
    return trim([x % ell for x in c])


def fp_add(a, b, ell):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % ell
    return trim(out)


def fp_sub(a, b, ell):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] = x
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % ell
    return trim(out)


def fp_mul(a, b, ell):
    if not a or not b:
        return []
    if min(len(a), len(b)) >= 24:
        return _fp_mul_kronecker(a, b, ell)
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([v % ell for v in out])


def _fp_mul_kronecker(a, b, ell):
    """Multiply via packing into one big integer (Kronecker substitution)."""
    n = min(len(a), len(b))
    nbytes = (((ell - 1) ** 2 * n).bit_length() + 7) // 8
    pa = b"".join(c.to_bytes(nbytes, "little") for c in a)
    pb = b"".join(c.to_bytes(nbytes, "little") for c in b)
    prod = int.from_bytes(pa, "little") * int.from_bytes(pb, "little")
    m = len(a) + len(b) - 1
    raw = prod.to_bytes(m * nbytes + nbytes, "little")
    out = [
        int.from_bytes(raw[i * nbytes : (i + 1) * nbytes], "little") % ell
        for i in range(m)
    ]
    return trim(out)


def fp_scale(a, k, ell):
    k %= ell
    return trim([x * k % ell for x in a])


def fp_divmod(a, b, ell):
    """Quotient and remainder; b need not be monic."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv = pow(b[-1], ell - 2, ell)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % ell
        d = len(a) - len(b)
        q[d] = c
        for i, x in enumerate(b):
            a[d + i] = (a[d + i] - c * x) % ell
        trim(a)
    return trim(q), a


def fp_mod(a, b, ell):
    return fp_divmod(a, b, ell)[1]


def fp_monic(a, ell):
    if not a:
        return []
    return fp_scale(a, pow(a[-1], ell - 2, ell), ell)


def fp_gcd(a, b, ell):
    a, b = list(a), list(b)
    while b:
        a, b = b, fp_mod(a, b, ell)
    return fp_monic(a, ell)


def fp_deriv(a, ell):
    return trim([i * a[i] % ell for i in range(1, len(a))])


def fp_eval(a, x, ell):
    v = 0
    for c in reversed(a):
        v = (v * x + c) % ell
    return v


def fp_pow_mod(base, e, mod, ell):
    result = [1]
    base = fp_mod(base, mod, ell)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, base, ell), mod, ell)
        base = fp_mod(fp_mul(base, base, ell), mod, ell)
        e >>= 1
    return result


def fp_squarefree_parts(f, ell):
    """Yun-style squarefree decomposition, char-p aware.

    Returns [(g_i, m_i)] with f = lc * prod g_i^m_i, each g_i monic
    squarefree, pairwise coprime.
    """
    out = []
    f = fp_monic(f, ell)

    def rec(f, mult):
        if len(f) <= 1:
            return
        d = fp_deriv(f, ell)
        if not d:
            # f = g(x^ell) = g(x)^ell over F_ell
            g = trim([f[i] for i in range(0, len(f), ell)])
            rec(g, mult * ell)
            return
        c = fp_gcd(f, d, ell)
        w = fp_divmod(f, c, ell)[0]
        m = mult
        while len(w) > 1:
            y = fp_gcd(w, c, ell)
            z = fp_divmod(w, y, ell)[0]
            if len(z) > 1:
                out.append((fp_monic(z, ell), m))
            c = fp_divmod(c, y, ell)[0]
            w = y
            m += mult
        if len(c) > 1:
            rec(c, mult)

    rec(f, 1)
    return out


def _distinct_degree(f, ell):
    """Split squarefree monic f into products of same-degree irreducibles."""
    out = []
    x = [0, 1]
    h = list(x)
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = fp_pow_mod(h, ell, f, ell)
        g = fp_gcd(fp_sub(h, x, ell), f, ell)
        if len(g) > 1:
            out.append((g, d))
            f = fp_divmod(f, g, ell)[0]
            h = fp_mod(h, f, ell)
        if len(f) == 1:
            break
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree_split(f, d, ell, rng):
    """Cantor-Zassenhaus splitting of monic squarefree f, all factors deg d."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        h = [rng.randrange(ell) for _ in range(n)]
        h = trim(h)
        if len(h) <= 1:
            continue
        if ell == 2:
            # trace map over F_2
            t = list(h)
            acc = list(h)
            for _ in range(d - 1):
                t = fp_mod(fp_mul(t, t, ell), f, ell)
                acc = fp_add(acc, t, ell)
            g = fp_gcd(acc, f, ell)
        else:
            e = (ell**d - 1) // 2
            t = fp_pow_mod(h, e, f, ell)
            g = fp_gcd(fp_sub(t, [1], ell), f, ell)
        if 0 < len(g) - 1 < n:
            left = _equal_degree_split(g, d, ell, rng)
            right = _equal_degree_split(fp_divmod(f, g, ell)[0], d, ell, rng)
            return left + right


def fp_factor(f, ell):
    """Monic irreducible factorization over F_ell.

    Returns (lc, [(factor, multiplicity)]) sorted by (degree, coefficients).
    Randomized splitting is seeded from the input so results are stable.
    """
    if not is_prime(ell):
        raise ValueError("composite modulus")
    f = fp_reduce(f, ell)
    if not f:
        raise ValueError("zero input")
    lc = f[-1]
    rng = random.Random((tuple(f), ell).__hash__() & 0x7FFFFFFF)
    factors = []
    for g, mult in fp_squarefree_parts(f, ell):
        for h, d in _distinct_degree(g, ell):
            for irr in _equal_degree_split(h, d, ell, rng):
                factors.append((irr, mult))
    factors.sort(key=lambda t: (len(t[0]), tuple(reversed(t[0])), t[1]))
    return lc, factors


def fp_resultant(a, b, ell):
    """Resultant of two nonzero polynomials over F_ell (Euclidean PRS)."""
    a = fp_reduce(a, ell)
    b = fp_reduce(b, ell)
    if not a or not b:
        raise ValueError("zero input")
    res = 1
    while True:
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            return res * pow(b[0], da, ell) % ell
        r = fp_mod(a, b, ell)
        if not r:
            return 0
        dr = len(r) - 1
        res = res * pow(b[-1], da - dr, ell) % ell
        if (da % 2 == 1) and (db % 2 == 1):
            res = ell - res if res else 0
        a, b = b, r


@dataclass(frozen=True)
class FFPoly:
    """Polynomial over F_ell: reduced coefficients, lowest degree first."""

    modulus: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.modulus):
            raise ValueError("composite modulus")
        c = fp_reduce(list(self.coefficients), self.modulus)
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coefficients):
            if c:
                terms.append(f"{c}*x^{i}" if i else str(c))
        return " + ".join(reversed(terms)) + f" (mod {self.modulus})"


def ff_factor(f: FFPoly) -> list[tuple[FFPoly, int]]:
    """Monic irreducible factorization of a nonzero FFPoly.

    The product of the factors times the leading coefficient re-expands to
    the input.  Ordering is deterministic: (degree, coefficient tuple).
    """
    if f.is_zero():
        raise ValueError("zero input")
    _, factors = fp_factor(list(f.coefficients), f.modulus)
    return [(FFPoly(f.modulus, tuple(g)), m) for g, m in factors]
