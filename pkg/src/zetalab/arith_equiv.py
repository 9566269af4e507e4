"""Arithmetic equivalence of number fields, from two angles.

Analytic fingerprint: factorization degrees of the defining polynomial at
unramified primes, compared prime-by-prime, plus the truncated Dedekind
Euler product they determine. Group-theoretic certificate: conjugacy-class
intersection counts of two subgroups of an explicit permutation group.

Any prime where gcd(f, f') mod p is non-constant is skipped as
"ramified_or_singular"; that over-skips primes dividing the index of Z[x]
in the maximal order, which is safe because those primes carry no reliable
degree data from f alone. Agreement up to a bound B is reported as a
heuristic fingerprint, not a proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from zetalab.errors import DomainError, SizeError
from zetalab.ff_curves import (
    _poly_gcd,
    _poly_mod,
    _poly_mul,
    _poly_pow_mod,
    _poly_trim,
    is_prime,
)

PRIME_BOUND_CAP = 10**9  # single-prime queries
SCAN_BOUND_CAP = 10**6  # sieved prime scans (splitting compare, Euler products)
GROUP_ORDER_CAP = 10**5
MAX_DOMAIN = 16


def primes_up_to(n: int) -> list[int]:
    """Sieve of Eratosthenes, inclusive."""
    if n < 2:
        return []
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(n) + 1):
        if sieve[p]:
            start = p * p
            sieve[start :: p] = b"\x00" * ((n - start) // p + 1)
    return [i for i, v in enumerate(sieve) if v]


# ---------------------------------------------------------------------------
# Splitting types


@dataclass(frozen=True)
class NumberFieldPoly:
    """Monic integer polynomial, high degree first on the wire but stored
    low-to-high; irreducibility is the caller's responsibility."""

    coeffs: tuple[int, ...]  # low-to-high

    def __post_init__(self) -> None:
        c = self.coeffs
        if len(c) < 2:
            raise DomainError("degree must be >= 1")
        if c[-1] != 1:
            raise DomainError("polynomial must be monic")

    @classmethod
    def from_high_to_low(cls, coeffs) -> "NumberFieldPoly":
        return cls(tuple(int(v) for v in reversed(list(coeffs))))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class SplittingType:
    p: int
    status: str  # "clean" | "ramified_or_singular"
    degrees: tuple[int, ...]  # sorted multiset, empty unless clean


def factor_degrees_mod_p(f: NumberFieldPoly, p: int) -> SplittingType:
    """Degrees of the irreducible factors of f mod p, by distinct-degree
    splitting; primes where gcd(f, f') mod p is non-constant are flagged."""
    if p > PRIME_BOUND_CAP:
        raise SizeError(f"prime exceeds cap {PRIME_BOUND_CAP}")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    fp = _poly_trim([c % p for c in f.coeffs])
    dfp = _poly_trim([(i * c) % p for i, c in enumerate(fp)][1:])
    if len(_poly_gcd(fp[:], dfp, p)) != 1:
        return SplittingType(p, "ramified_or_singular", ())
    degrees: list[int] = []
    g = fp[:]
    frob = [0, 1]  # x^{p^d} mod g, advanced one Frobenius power per round
    d = 0
    while len(g) - 1 > 0:
        d += 1
        if 2 * d > len(g) - 1:
            degrees.append(len(g) - 1)  # remainder is irreducible
            break
        frob = _poly_pow_mod(frob, p, g, p)
        diff = _poly_trim([(a - b) % p for a, b in zip_pad(frob, [0, 1])])
        c = _poly_gcd(g[:], diff, p)
        if len(c) > 1:
            degrees.extend([d] * ((len(c) - 1) // d))
            g = _poly_divide_exact(g, c, p)
            frob = _poly_mod(frob, g, p)
    return SplittingType(p, "clean", tuple(sorted(degrees)))


def zip_pad(a, b):
    n = max(len(a), len(b))
    return zip(a + [0] * (n - len(a)), b + [0] * (n - len(b)))


def _poly_divide_exact(f: list[int], g: list[int], p: int) -> list[int]:
    # Long division; callers guarantee g | f.
    r = f[:]
    dq = len(f) - len(g)
    q = [0] * (dq + 1)
    inv = pow(g[-1], -1, p)
    for i in range(dq, -1, -1):
        if len(r) == i + len(g):
            coef = r[-1] * inv % p
            q[i] = coef
            for j, gj in enumerate(g):
                r[i + j] = (r[i + j] - coef * gj) % p
            _poly_trim(r)
    return _poly_trim(q)


@dataclass(frozen=True)
class SplittingComparison:
    agree: bool
    first_mismatch: int | None
    skipped: tuple[int, ...]


def splitting_types_equal(
    f: NumberFieldPoly, g: NumberFieldPoly, bound: int
) -> SplittingComparison:
    """Compare splitting-type multisets at every prime p <= bound where both
    polynomials are clean; ramified/singular primes are skipped and listed."""
    if bound > SCAN_BOUND_CAP:
        raise SizeError(f"bound exceeds cap {SCAN_BOUND_CAP}")
    if f.degree != g.degree:
        return SplittingComparison(False, None, ())
    skipped: list[int] = []
    for p in primes_up_to(bound):
        sf = factor_degrees_mod_p(f, p)
        sg = factor_degrees_mod_p(g, p)
        if sf.status != "clean" or sg.status != "clean":
            skipped.append(p)
            continue
        if sf.degrees != sg.degrees:
            return SplittingComparison(False, p, tuple(skipped))
    return SplittingComparison(True, None, tuple(skipped))


def partial_dedekind_zeta(f: NumberFieldPoly, s: float, bound: int) -> float:
    """Euler product over clean primes p <= bound:
    prod_p prod_{d in degrees(p)} (1 - p^{-ds})^{-1}.

    A truncation in two senses: primes beyond the bound and all
    ramified/singular factors are omitted. Factors are multiplied in
    ascending prime order (degrees sorted), so equal fingerprints give
    bit-identical values.
    """
    if not (s > 1):
        raise DomainError("partial_dedekind_zeta requires s > 1")
    if bound > SCAN_BOUND_CAP:
        raise SizeError(f"bound exceeds cap {SCAN_BOUND_CAP}")
    value = 1.0
    for p in primes_up_to(bound):
        st = factor_degrees_mod_p(f, p)
        if st.status != "clean":
            continue
        for d in st.degrees:
            value /= 1.0 - float(p) ** (-d * s)
    return value


# ---------------------------------------------------------------------------
# Permutation groups

Perm = tuple[int, ...]


def _compose(p: Perm, q: Perm) -> Perm:
    # (p . q)(i) = p(q(i))
    return tuple(p[qi] for qi in q)


def _inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[pi] = i
    return tuple(out)


@dataclass(frozen=True)
class PermGroup:
    domain_size: int
    generators: tuple[Perm, ...]
    elements: tuple[Perm, ...]  # sorted lexicographically

    @property
    def order(self) -> int:
        return len(self.elements)

    def identity(self) -> Perm:
        return tuple(range(self.domain_size))


def _validate_perm(perm, n: int) -> Perm:
    t = tuple(int(v) for v in perm)
    if sorted(t) != list(range(n)):
        raise DomainError(f"{perm} is not a permutation of 0..{n - 1}")
    return t


def group_closure(domain_size: int, generators) -> PermGroup:
    """Breadth-first closure of the generators; capped at 10^5 elements."""
    if domain_size < 1 or domain_size > MAX_DOMAIN:
        raise DomainError(f"domain size must be in 1..{MAX_DOMAIN}")
    gens = tuple(_validate_perm(g, domain_size) for g in generators)
    identity = tuple(range(domain_size))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                e = _compose(g, h)
                if e not in seen:
                    seen.add(e)
                    if len(seen) > GROUP_ORDER_CAP:
                        raise SizeError(f"closure exceeds cap {GROUP_ORDER_CAP}")
                    nxt.append(e)
        frontier = nxt
    return PermGroup(domain_size, gens, tuple(sorted(seen)))


@dataclass(frozen=True)
class Subgroup:
    parent: PermGroup
    elements: frozenset[Perm]

    def __post_init__(self) -> None:
        parent_set = set(self.parent.elements)
        if not self.elements or not self.elements <= parent_set:
            raise DomainError("subgroup elements must form a nonempty subset of the parent")
        if self.parent.identity() not in self.elements:
            raise DomainError("subgroup must contain the identity")
        for a in self.elements:
            for b in self.elements:
                if _compose(a, b) not in self.elements:
                    raise DomainError("subset is not closed under composition")

    @property
    def order(self) -> int:
        return len(self.elements)


def subgroup_from_generators(parent: PermGroup, generators) -> Subgroup:
    sub = group_closure(parent.domain_size, generators)
    return Subgroup(parent, frozenset(sub.elements))


def subgroup_from_elements(parent: PermGroup, elements) -> Subgroup:
    elts = frozenset(_validate_perm(e, parent.domain_size) for e in elements)
    return Subgroup(parent, elts)


def conjugacy_classes(G: PermGroup) -> list[tuple[Perm, ...]]:
    """Orbits of conjugation, each sorted, classes ordered by smallest member."""
    gens = G.generators if G.generators else ()
    gen_invs = [(_inverse(g), g) for g in gens]
    unseen = set(G.elements)
    classes = []
    for h in G.elements:  # already sorted, so class reps come out ordered
        if h not in unseen:
            continue
        orbit = {h}
        frontier = [h]
        while frontier:
            nxt = []
            for x in frontier:
                for ginv, g in gen_invs:
                    y = _compose(g, _compose(x, ginv))
                    if y not in orbit:
                        orbit.add(y)
                        nxt.append(y)
            frontier = nxt
        unseen -= orbit
        classes.append(tuple(sorted(orbit)))
    return classes


@dataclass(frozen=True)
class GassmannReport:
    equivalent: bool
    conjugate: bool
    table: tuple[tuple[int, int, int], ...]  # (class size, |C ^ H1|, |C ^ H2|)


def gassmann_check(G: PermGroup, H1: Subgroup, H2: Subgroup) -> GassmannReport:
    """Gassmann's criterion: H1, H2 meet every conjugacy class of G in the
    same number of elements. Conjugacy of the subgroups themselves is
    decided by exhaustive search, to tell honest Gassmann triples apart
    from the trivial conjugate case."""
    if H1.parent != G or H2.parent != G:
        raise DomainError("subgroups must live in the given group")
    table = []
    equivalent = True
    for cls in conjugacy_classes(G):
        c1 = sum(1 for x in cls if x in H1.elements)
        c2 = sum(1 for x in cls if x in H2.elements)
        table.append((len(cls), c1, c2))
        if c1 != c2:
            equivalent = False
    conjugate = False
    h2 = H2.elements
    if len(H1.elements) == len(h2):
        for g in G.elements:
            ginv = _inverse(g)
            if all(_compose(g, _compose(h, ginv)) in h2 for h in H1.elements):
                conjugate = True
                break
    return GassmannReport(equivalent, conjugate, tuple(table))
