"""Finite levels of Z_p-extensions of quadratic fields and the arithmetic
predicates the classifier consumes: roots of unity, subfield embeddability.

Cyclotomic levels are built as the compositum of the quadratic base with
the degree-p^n subfield of Q(zeta_{p^{n+1}}).  Anti-cyclotomic level-one
fields are fixture data (ring class field derivations); deeper levels must
be user-supplied.  The subfield oracle is deliberately three-valued: a Yes
requires an exact verified embedding.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .numfield import (
    NumberField,
    compose_fields,
    cyclotomic_subfield_poly,
    make_number_field,
    nf_roots,
    small_primes,
)
from .modp import is_prime
from .polys import UniPoly

YES = "yes"
NO = "no"
UNKNOWN = "unknown"

# level-1 anti-cyclotomic defining cubics (splitting field = level field):
# for Q(i) and Q(sqrt-3) these are the classical ring-class cubics; the
# d = -6 entry was derived as the conductor-3 ring class cubic (the unique
# dihedral cubic of discriminant -216 with resolvent Q(sqrt-6)).
ANTI_LEVEL1_CUBICS = {
    -1: UniPoly([-4, -3, 0, 1]),  # x^3 - 3x - 4
    -3: UniPoly([-3, 0, 0, 1]),  # x^3 - 3
    -6: UniPoly([-2, 3, 0, 1]),  # x^3 + 3x - 2
}


def _squarefree_int(d: int) -> bool:
    if d in (0, 1):
        return False
    m = abs(d)
    p = 2
    while p * p <= m:
        if m % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class TowerSpec:
    """A quadratic base Q(sqrt d), an odd prime p, a tower kind, a level."""

    d: int
    p: int
    kind: str  # "cyclotomic" | "anticyclotomic" | "custom"
    level: int = 0
    custom_polys: tuple[UniPoly, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.p < 3 or not is_prime(self.p):
            raise ValueError("p must be an odd prime")
        if not _squarefree_int(self.d):
            raise ValueError("d must be squarefree and not 0 or 1")
        if self.kind not in ("cyclotomic", "anticyclotomic", "custom"):
            raise ValueError("unknown tower kind")
        if self.kind == "anticyclotomic" and self.d > 0:
            raise ValueError("anti-cyclotomic towers require an imaginary base")
        if self.level < 0:
            raise ValueError("level must be nonnegative")


@dataclass(frozen=True)
class FieldFingerprint:
    """Degree and ramified primes of a field, with optional exact data."""

    degree: int
    ramified_primes: frozenset
    is_galois: bool | None = None
    defining_poly: UniPoly | None = None

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        object.__setattr__(self, "ramified_primes", frozenset(self.ramified_primes))


def quadratic_ramified_primes(d: int) -> frozenset:
    """Primes ramifying in Q(sqrt d): divisors of the field discriminant."""
    disc = d if d % 4 == 1 else 4 * d
    return frozenset(_prime_divisors(abs(disc)))


def _prime_divisors(n: int):
    out = []
    m = n
    q = 2
    while q * q <= m:
        if m % q == 0:
            out.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.append(m)
    return out


def quadratic_base(spec: TowerSpec) -> NumberField:
    return make_number_field(UniPoly([-spec.d, 0, 1]), label=f"Q(sqrt({spec.d}))")


_LEVEL_CACHE: dict = {}


def tower_level(spec: TowerSpec, n: int, degree_cap: int = 64) -> NumberField:
    """The degree-2p^n level field of the tower as an absolute field."""
    if n < 0:
        raise ValueError("level must be nonnegative")
    if n == 0:
        return quadratic_base(spec)
    if 2 * spec.p**n > degree_cap:
        raise ValueError("level degree exceeds cap")
    key = (spec.d, spec.p, spec.kind, spec.custom_polys, n)
    if key in _LEVEL_CACHE:
        return _LEVEL_CACHE[key]
    if spec.kind == "cyclotomic":
        sub = cyclotomic_subfield_poly(spec.p, n)
        poly = compose_fields(UniPoly([-spec.d, 0, 1]), sub)
        out = make_number_field(
            poly, label=f"Q(sqrt({spec.d}))*cyc{spec.p}^{n}", _trusted=True
        )
    elif spec.kind == "anticyclotomic":
        if n != 1 or spec.d not in ANTI_LEVEL1_CUBICS:
            raise ValueError("tower level unavailable")
        cubic = ANTI_LEVEL1_CUBICS[spec.d]
        poly = compose_fields(UniPoly([-spec.d, 0, 1]), cubic)
        out = make_number_field(
            poly, label=f"anti({spec.d},{spec.p}) level {n}", _trusted=True
        )
    else:
        if n > len(spec.custom_polys):
            raise ValueError("tower level unavailable")
        poly = spec.custom_polys[n - 1]
        if poly.degree != 2 * spec.p**n:
            raise ValueError("custom level polynomial has wrong degree")
        out = make_number_field(poly, label=f"custom level {n}")
    _LEVEL_CACHE[key] = out
    return out


def contains_mu(spec: TowerSpec, n: int) -> bool:
    """Does the full tower contain the n-th roots of unity?

    Only finitely many roots of unity fit in a Z_p-tower over a quadratic
    field, except for the cyclotomic Z_3-tower over Q(sqrt(-3)) which
    contains all 3-power roots of unity.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n in (1, 2):
        return True
    if spec.p == 3 and spec.d == -3 and spec.kind == "cyclotomic":
        m = n if n % 2 == 1 else n // 2
        while m % 3 == 0:
            m //= 3
        return m == 1
    if n == 4:
        return spec.d == -1
    if n in (3, 6):
        return spec.d == -3
    return False


def largest_mu(spec: TowerSpec):
    """Largest n with mu_n contained, or None when unbounded."""
    if spec.p == 3 and spec.d == -3 and spec.kind == "cyclotomic":
        return None
    for n in (6, 4, 3):
        if contains_mu(spec, n):
            return n
    return 2


def _two_p_shape(m: int, p: int):
    """Write m = 2^eps * p^a with eps <= 1, or None."""
    eps = 0
    if m % 2 == 0:
        m //= 2
        eps = 1
    a = 0
    while m % p == 0:
        m //= p
        a += 1
    if m != 1:
        return None
    return eps, a


def _poly_has_root_in(field: NumberField, poly: UniPoly) -> bool:
    return bool(nf_roots(field, poly))


def admits_subfield(spec: TowerSpec, f: FieldFingerprint) -> str:
    """Can a field with this fingerprint embed into the tower?

    Returns YES only with an exact verified embedding (a root of the
    fingerprint's defining polynomial in a constructed level field); NO on
    degree or ramification obstructions; UNKNOWN otherwise.
    """
    m = f.degree
    if m == 1:
        return YES
    shape = _two_p_shape(m, spec.p)
    if shape is None:
        return NO
    eps, a = shape
    ram_k = quadratic_ramified_primes(spec.d)
    allowed = ram_k | {spec.p}
    if any(ell not in allowed for ell in f.ramified_primes):
        return NO

    if eps == 1 and a == 0:
        # the only quadratic subfield is the base
        if f.ramified_primes != ram_k:
            return NO
        if f.defining_poly is not None:
            K = quadratic_base(spec)
            return YES if _poly_has_root_in(K, f.defining_poly) else NO
        return UNKNOWN

    if eps == 0:
        # odd degree p^a subfields
        if spec.kind == "cyclotomic":
            # the unique such subfield is the rational tower level Q_a
            if f.ramified_primes != frozenset({spec.p}):
                return NO
            if f.defining_poly is not None:
                Qa = make_number_field(
                    cyclotomic_subfield_poly(spec.p, a), _trusted=True
                )
                return YES if _poly_has_root_in(Qa, f.defining_poly) else NO
            return UNKNOWN
        if spec.kind == "anticyclotomic":
            if f.is_galois:
                # Galois subfields of a pro-dihedral tower have even degree
                return NO
            if f.defining_poly is not None:
                try:
                    L = tower_level(spec, a)
                except ValueError:
                    return UNKNOWN
                return YES if _poly_has_root_in(L, f.defining_poly) else NO
            return UNKNOWN
        if f.defining_poly is not None:
            try:
                L = tower_level(spec, a)
            except ValueError:
                return UNKNOWN
            if _poly_has_root_in(L, f.defining_poly):
                return YES
        return UNKNOWN

    # even degree 2 p^a, a >= 1: the unique candidate is the level field
    if spec.kind == "cyclotomic" and f.ramified_primes != (ram_k | {spec.p}):
        return NO
    if f.defining_poly is not None:
        try:
            L = tower_level(spec, a)
        except ValueError:
            return UNKNOWN
        return YES if _poly_has_root_in(L, f.defining_poly) else NO
    return UNKNOWN
