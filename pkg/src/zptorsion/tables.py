"""Classification tables for torsion over Q, quadratic fields, and abelian
extensions, plus the admissible cyclic isogeny degrees.

These are literature constants consumed by the torsion engine and the
rule-based classifier.
"""

from __future__ import annotations

from .curves import GroupShape

# torsion of rational elliptic curves over Q (15 groups)
MAZUR_SHAPES = frozenset(
    [GroupShape(1, n) for n in list(range(1, 11)) + [12]]
    + [GroupShape(2, 2 * n) for n in range(1, 5)]
)

# torsion of rational elliptic curves over quadratic fields; the 3x3N line
# occurs only over Q(sqrt(-3)) and 4x4 only over Q(sqrt(-1))
NAJMAN_CYCLIC = frozenset([GroupShape(1, n) for n in list(range(1, 11)) + [12, 15, 16]])
NAJMAN_2X = frozenset([GroupShape(2, 2 * n) for n in range(1, 7)])
NAJMAN_3X = frozenset([GroupShape(3, 3), GroupShape(3, 6)])
NAJMAN_4X = frozenset([GroupShape(4, 4)])


def najman_shapes(d: int | None) -> frozenset[GroupShape]:
    """Possible E(K)_tors for K = Q(sqrt d); d=None means any quadratic."""
    out = set(NAJMAN_CYCLIC) | set(NAJMAN_2X)
    if d is None or d == -3:
        out |= set(NAJMAN_3X)
    if d is None or d == -1:
        out |= set(NAJMAN_4X)
    return frozenset(out)


# torsion over arbitrary abelian Galois extensions of Q (45 shapes)
ABELIAN_CYCLIC_ORDERS = tuple(list(range(1, 20)) + [21, 25, 27, 37, 43, 67, 163])


def abelian_galois_shapes() -> frozenset[GroupShape]:
    out = [GroupShape(1, n) for n in ABELIAN_CYCLIC_ORDERS]
    out += [GroupShape(2, 2 * n) for n in range(1, 10)]
    out += [GroupShape(3, 3 * n) for n in range(1, 4)]
    out += [GroupShape(4, 4 * n) for n in range(1, 5)]
    out += [GroupShape(5, 5), GroupShape(6, 6), GroupShape(8, 8)]
    return frozenset(out)


# degrees n for which a rational elliptic curve can have a cyclic n-isogeny
ISOGENY_DEGREES = frozenset(list(range(1, 20)) + [21, 25, 27, 37, 43, 67, 163])

# degrees with only finitely many rational j-invariants (X_0(n) has finitely
# many noncuspidal rational points); these are resolved by j-lookup tables
FINITE_J_DEGREES = frozenset([11, 14, 15, 17, 19, 21, 27, 37, 43, 67, 163])

# of those, the ones the isogeny detector must resolve by table rather than
# by walking prime-degree steps
TABLE_DEGREES = frozenset([17, 19, 21, 27, 37, 43, 67, 163])
