"""Dirichlet characters mod M and their L-series for real s > 1.

The unit group (Z/M)* is presented as a direct product of cyclic blocks
via CRT: one block per odd prime power (smallest primitive root), and the
{-1, 5} presentation for powers of two. Characters are exponent vectors
against those generators; evaluation goes through per-block discrete-log
tables, with character values assembled from an exact rational angle so
multiplicativity survives to the last bit.

L(s, chi) = M^{-s} sum_{a=1}^{M} chi(a) zeta_H(s, a/M), which is exact up
to the Hurwitz evaluator's tolerance; no truncation of the Dirichlet
series is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from zetalab.errors import DomainError, SizeError
from zetalab.numeric_core import DEFAULT_POLICY, PrecisionPolicy, hurwitz_zeta

MODULUS_CAP = 10**6


def _factorize(m: int) -> list[tuple[int, int]]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            k = 0
            while m % d == 0:
                m //= d
                k += 1
            out.append((d, k))
        d += 1
    if m > 1:
        out.append((m, 1))
    return out


def _smallest_primitive_root(q: int, phi: int) -> int:
    prime_divs = [p for p, _ in _factorize(phi)]
    for g in range(2, q):
        if math.gcd(g, q) != 1:
            continue
        if all(pow(g, phi // p, q) != 1 for p in prime_divs):
            return g
    raise DomainError(f"no primitive root mod {q}")


def _crt_lift(residue: int, q: int, M: int) -> int:
    # x = residue mod q, x = 1 mod M/q.
    other = M // q
    if other == 1:
        return residue % M
    inv = pow(other, -1, q)
    return (1 + other * ((residue - 1) * inv % q)) % M


@dataclass(frozen=True)
class UnitGroupStructure:
    """(Z/M)* = prod <g_i> with the stated orders; generators are global
    residues mod M that restrict to the block generator and to 1 elsewhere."""

    M: int
    components: tuple[tuple[int, int], ...]  # (generator mod M, order)
    _dlog: dict  # residue mod M -> exponent tuple

    @property
    def phi(self) -> int:
        out = 1
        for _, order in self.components:
            out *= order
        return out


def unit_group_structure(M: int) -> UnitGroupStructure:
    """CRT decomposition of (Z/M)*; deterministic generator choice."""
    if M < 1:
        raise DomainError("modulus must be >= 1")
    if M > MODULUS_CAP:
        raise SizeError(f"modulus exceeds cap {MODULUS_CAP}")
    components: list[tuple[int, int]] = []
    block_tables: list[dict[int, tuple[int, ...]]] = []
    blocks: list[int] = []
    for p, k in _factorize(M):
        q = p**k
        if p == 2:
            if k == 1:
                continue
            if k == 2:
                gens = [(q - 1, 2)]
            else:
                gens = [(q - 1, 2), (5, 2 ** (k - 2))]
        else:
            phi = q // p * (p - 1)
            gens = [(_smallest_primitive_root(q, phi), phi)]
        table: dict[int, tuple[int, ...]] = {}
        if len(gens) == 1:
            g, order = gens[0]
            x = 1
            for j in range(order):
                table[x] = (j,)
                x = x * g % q
        else:
            (g1, o1), (g2, o2) = gens
            for a in range(o1):
                for b in range(o2):
                    table[pow(g1, a, q) * pow(g2, b, q) % q] = (a, b)
        blocks.append(q)
        block_tables.append(table)
        for g, order in gens:
            components.append((_crt_lift(g, q, M), order))
    dlog: dict[int, tuple[int, ...]] = {}
    units = [a for a in range(M) if math.gcd(a, M) == 1] if M > 1 else [0]
    for a in units:
        exps: tuple[int, ...] = ()
        for q, table in zip(blocks, block_tables):
            exps += table[a % q]
        dlog[a] = exps
    return UnitGroupStructure(M, tuple(components), dlog)


@dataclass(frozen=True)
class DirichletCharacter:
    """chi(g_i) = exp(2 pi i e_i / order_i); zero off the units."""

    group: UnitGroupStructure
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        orders = [order for _, order in self.group.components]
        if len(self.exponents) != len(orders):
            raise DomainError("exponent vector length must match the component count")
        for e, order in zip(self.exponents, orders):
            if not (0 <= e < order):
                raise DomainError("exponents must satisfy 0 <= e_i < order_i")

    @property
    def modulus(self) -> int:
        return self.group.M

    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)


def evaluate(chi: DirichletCharacter, n: int) -> complex:
    """chi(n): zero when gcd(n, M) > 1, otherwise a root of unity computed
    from an exact rational angle."""
    M = chi.modulus
    if M == 1:
        return 1 + 0j
    r = n % M
    exps = chi.group._dlog.get(r)
    if exps is None:
        return 0j
    angle = Fraction(0)
    for e, d, (_, order) in zip(chi.exponents, exps, chi.group.components):
        angle += Fraction(e * d % order, order)
    angle %= 1
    # quarter turns are exact so real characters stay exactly real
    if angle == 0:
        return 1 + 0j
    if angle == Fraction(1, 2):
        return -1 + 0j
    if angle == Fraction(1, 4):
        return 1j
    if angle == Fraction(3, 4):
        return -1j
    theta = 2.0 * math.pi * float(angle)
    return complex(math.cos(theta), math.sin(theta))


def characters(group: UnitGroupStructure) -> list[DirichletCharacter]:
    """All phi(M) characters, ordered lexicographically by exponent vector."""
    orders = [order for _, order in group.components]
    chars = []

    def rec(prefix: tuple[int, ...], rest: list[int]):
        if not rest:
            chars.append(DirichletCharacter(group, prefix))
            return
        for e in range(rest[0]):
            rec(prefix + (e,), rest[1:])

    rec((), orders)
    return chars


def l_series(
    chi: DirichletCharacter, s: float, policy: PrecisionPolicy = DEFAULT_POLICY
) -> complex:
    """L(s, chi) for real s > 1 via the Hurwitz-zeta decomposition."""
    if not (s > 1):
        raise DomainError("l_series requires s > 1")
    M = chi.modulus
    if M == 1:
        return complex(hurwitz_zeta(s, 1.0, policy), 0.0)
    scale = float(M) ** (-s)
    re_parts: list[float] = []
    im_parts: list[float] = []
    for a in range(1, M + 1):
        c = evaluate(chi, a)
        if c == 0:
            continue
        h = hurwitz_zeta(s, a / M, policy)
        re_parts.append(c.real * h)
        im_parts.append(c.imag * h)
    return scale * complex(math.fsum(re_parts), math.fsum(im_parts))


def l_fingerprint(
    M: int, s_values: list[int], policy: PrecisionPolicy = DEFAULT_POLICY
) -> dict[tuple[int, ...], dict[int, complex]]:
    """L(s, chi) for every character mod M and every listed integer s >= 2.

    Keyed by exponent vector in lexicographic order; two moduli's tables
    can be matched up under any isomorphism of the unit groups that maps
    generator tuples onto each other.
    """
    for s in s_values:
        if s < 2:
            raise DomainError("fingerprint s values must be integers >= 2")
    group = unit_group_structure(M)
    table: dict[tuple[int, ...], dict[int, complex]] = {}
    for chi in characters(group):
        table[chi.exponents] = {int(s): l_series(chi, float(s), policy) for s in s_values}
    return table
