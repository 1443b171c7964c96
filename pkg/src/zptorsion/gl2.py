"""Finite matrix groups GL_2(Z/NZ) for small N: order formula, exhaustive
subgroup enumeration, abelianness, and stabilized cyclic subgroups of
(Z/NZ)^2.

Groups are stored as explicit element sets (at most 96 elements for the
moduli used here), with a precomputed multiplication table so closure and
predicate checks are plain loops.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


def gl2_order(N: int) -> int:
    """|GL_2(Z/NZ)| by the multiplicative formula."""
    if N < 2:
        raise ValueError("N must be at least 2")
    out = N**4
    for p in _prime_divisors(N):
        out = out // p**3 * (p - 1) * (p * p - 1) // p
    return out


def _prime_divisors(n: int):
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


def gl2_elements(N: int) -> list[tuple[int, int, int, int]]:
    """All invertible 2x2 matrices mod N, in lexicographic order."""
    out = []
    for a in range(N):
        for b in range(N):
            for c in range(N):
                for d in range(N):
                    if math.gcd(a * d - b * c, N) == 1:
                        out.append((a, b, c, d))
    return out


def _mat_mul(x, y, N):
    a, b, c, d = x
    e, f, g, h = y
    return (
        (a * e + b * g) % N,
        (a * f + b * h) % N,
        (c * e + d * g) % N,
        (c * f + d * h) % N,
    )


@dataclass(frozen=True)
class GL2Subgroup:
    """A subgroup of GL_2(Z/NZ) as an explicit frozenset of matrices."""

    N: int
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    def canonical(self) -> tuple:
        return tuple(sorted(self.elements))


class _Group:
    """Multiplication-table wrapper around GL_2(Z/NZ)."""

    def __init__(self, N: int):
        self.N = N
        self.elements = gl2_elements(N)
        self.index = {m: i for i, m in enumerate(self.elements)}
        n = len(self.elements)
        self.table = [[0] * n for _ in range(n)]
        for i, x in enumerate(self.elements):
            for j, y in enumerate(self.elements):
                self.table[i][j] = self.index[_mat_mul(x, y, N)]
        self.identity = self.index[(1, 0, 0, 1)]

    def closure(self, seed) -> frozenset:
        have = set(seed)
        have.add(self.identity)
        frontier = list(have)
        table = self.table
        while frontier:
            g = frontier.pop()
            row = table[g]
            for h in list(have):
                for prod in (row[h], table[h][g]):
                    if prod not in have:
                        have.add(prod)
                        frontier.append(prod)
        return frozenset(have)


@lru_cache(maxsize=None)
def _group(N: int) -> _Group:
    return _Group(N)


@lru_cache(maxsize=None)
def _all_subgroups_idx(N: int) -> tuple:
    """Every subgroup of GL_2(Z/NZ) as frozensets of element indices."""
    G = _group(N)
    n = len(G.elements)
    # cyclic subgroups first
    found = {frozenset([G.identity])}
    frontier = set()
    for g in range(n):
        c = G.closure([g])
        if c not in found:
            found.add(c)
            frontier.add(c)
    # extend by single generators until no new subgroups appear
    while frontier:
        H = frontier.pop()
        if len(H) == n:
            continue
        for g in range(n):
            if g in H:
                continue
            c = G.closure(list(H) + [g])
            if c not in found:
                found.add(c)
                frontier.add(c)
    return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))


def enumerate_subgroups(N: int, up_to_conjugacy: bool = True) -> list[GL2Subgroup]:
    """Complete list of subgroups of GL_2(Z/NZ) for N in {2, 3, 4}.

    By default one representative per conjugacy class (the one with the
    lexicographically smallest element tuple); pass up_to_conjugacy=False
    for the full list.  Deterministic ordering by (order, elements).
    """
    if N not in (2, 3, 4):
        raise ValueError("enumeration cap")
    G = _group(N)
    subs = _all_subgroups_idx(N)
    groups = [
        GL2Subgroup(N, frozenset(G.elements[i] for i in s)) for s in subs
    ]
    if not up_to_conjugacy:
        return sorted(groups, key=lambda H: (H.order, H.canonical()))
    seen = set()
    reps = []
    elements = G.elements
    for s in subs:
        H = frozenset(s)
        if H in seen:
            continue
        orbit = set()
        for gi, g in enumerate(elements):
            ginv = _mat_inv(g, N)
            img = frozenset(
                G.index[_mat_mul(_mat_mul(g, elements[h], N), ginv, N)] for h in H
            )
            orbit.add(img)
        seen |= orbit
        rep = min(orbit, key=lambda S: sorted(S))
        reps.append(GL2Subgroup(N, frozenset(elements[i] for i in rep)))
    return sorted(reps, key=lambda H: (H.order, H.canonical()))


def _mat_inv(m, N):
    a, b, c, d = m
    det = (a * d - b * c) % N
    dv = pow(det, -1, N)
    return (d * dv % N, -b * dv % N, -c * dv % N, a * dv % N)


def subgroups_of_order(N: int, k: int) -> list[GL2Subgroup]:
    """All subgroups of GL_2(Z/NZ) of the given order (full list)."""
    return [H for H in enumerate_subgroups(N, up_to_conjugacy=False) if H.order == k]


def is_abelian(H: GL2Subgroup) -> bool:
    els = sorted(H.elements)
    N = H.N
    for i, x in enumerate(els):
        for y in els[i + 1 :]:
            if _mat_mul(x, y, N) != _mat_mul(y, x, N):
                return False
    return True


def cyclic_subgroups_of_order(N: int, m: int) -> list[frozenset]:
    """All cyclic order-m subgroups of (Z/NZ)^2."""
    if N % m != 0:
        raise ValueError("m must divide N")
    out = set()
    for a in range(N):
        for b in range(N):
            if (a, b) == (0, 0):
                continue
            if _vector_order(a, b, N) != m:
                continue
            sub = frozenset(((k * a) % N, (k * b) % N) for k in range(m))
            out.add(sub)
    return sorted(out, key=sorted)


def _vector_order(a, b, N):
    o = 1
    x, y = a % N, b % N
    while (x, y) != (0, 0):
        x, y = (x + a) % N, (y + b) % N
        o += 1
    return o


def fixed_cyclic_subgroups(H: GL2Subgroup, m: int) -> list[frozenset]:
    """Cyclic order-m subgroups of (Z/NZ)^2 stabilized setwise by H."""
    N = H.N
    out = []
    for sub in cyclic_subgroups_of_order(N, m):
        ok = True
        for mat in H.elements:
            a, b, c, d = mat
            img = frozenset(((a * x + b * y) % N, (c * x + d * y) % N) for x, y in sub)
            if img != sub:
                ok = False
                break
        if ok:
            out.append(sub)
    return out
