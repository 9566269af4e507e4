"""Named fixtures: the worked examples every surface (CLI, service, tests)
shares, so acceptance checks exercise the same entry points users do.
"""

from __future__ import annotations

from zetalab.arith_equiv import (
    GassmannReport,
    NumberFieldPoly,
    PermGroup,
    Subgroup,
    gassmann_check,
    group_closure,
    subgroup_from_elements,
)
from zetalab.ff_curves import HyperellipticCurve

# Degree-7 pair with equal splitting fingerprints (the smallest degree where
# non-isomorphic fields can share a Dedekind zeta).
PERLIS_PAIR = (
    NumberFieldPoly.from_high_to_low([1, 0, 0, 0, 0, 0, -7, 3]),
    NumberFieldPoly.from_high_to_low([1, 0, 0, 14, 0, -42, -21, 9]),
)

# Degree-8 pair Q(18^{1/8}), Q(288^{1/8}): isomorphic adele rings, equal zeta.
KOMATSU_PAIR = (
    NumberFieldPoly.from_high_to_low([1, 0, 0, 0, 0, 0, 0, 0, -18]),
    NumberFieldPoly.from_high_to_low([1, 0, 0, 0, 0, 0, 0, 0, -288]),
)

# Negative control against the first Perlis polynomial.
CONTROL_POLY = NumberFieldPoly.from_high_to_low([1, 0, 0, 0, 0, 0, 0, -2])

# Twin genus-2 curves over F_3 with identical zeta functions:
# y^2 = x^5 + x^3 + x^2 - x - 1 and y^2 = x^5 - x^3 + x^2 - x - 1.
HOWE_PLUS = HyperellipticCurve(3, (-1, -1, 1, 1, 0, 1))
HOWE_MINUS = HyperellipticCurve(3, (-1, -1, 1, -1, 0, 1))


def _gl32_matrices() -> list[tuple[tuple[int, int, int], ...]]:
    # Two generators of GL(3, 2): a transvection and a cyclic coordinate shift.
    return [
        ((1, 1, 0), (0, 1, 0), (0, 0, 1)),
        ((0, 0, 1), (1, 0, 0), (0, 1, 0)),
    ]


def _matrix_to_perm(m) -> tuple[int, ...]:
    # Nonzero vectors of F_2^3 indexed 0..6 by bitmask-1 (bit i = coord i).
    images = []
    for mask in range(1, 8):
        v = ((mask >> 0) & 1, (mask >> 1) & 1, (mask >> 2) & 1)
        w = tuple(sum(row[j] * v[j] for j in range(3)) % 2 for row in m)
        images.append((w[0] | (w[1] << 1) | (w[2] << 2)) - 1)
    return tuple(images)


def gl32_group() -> PermGroup:
    """GL(3,2) acting on the 7 nonzero vectors of F_2^3; order 168."""
    return group_closure(7, [_matrix_to_perm(m) for m in _gl32_matrices()])


def gl32_point_and_plane_stabilizers(G: PermGroup) -> tuple[Subgroup, Subgroup]:
    """Stabilizer of the vector e_1 and setwise stabilizer of the hyperplane
    x_1 = 0; both have index 7, and they form a genuine Gassmann pair."""
    point = 0  # mask 1 -> index 0
    plane = {1, 3, 5}  # masks 2, 4, 6 -> vectors with first coordinate 0
    h1 = [g for g in G.elements if g[point] == point]
    h2 = [g for g in G.elements if {g[i] for i in plane} == plane]
    return subgroup_from_elements(G, h1), subgroup_from_elements(G, h2)


def gl32_gassmann_demo() -> GassmannReport:
    G = gl32_group()
    h1, h2 = gl32_point_and_plane_stabilizers(G)
    return gassmann_check(G, h1, h2)
