"""The multiplicative dynamical system over Q at finite level M.

The level-M space is Z/M: a class [(gamma, rho)] collapses to the single
residue gamma*rho mod M once the unit ambiguity is quotiented out, and the
positive integers act by multiplication. The time evolution contributes
the phase n^{it}, the partition function is the Riemann zeta function, and
the low-temperature Gibbs states evaluate observables to Dirichlet-series
data: grouping the defining sum by residue classes turns it into M Hurwitz
zeta values, so the production path has no truncation error at all.

A checker for candidate isomorphisms (point bijection + multiplicative
semigroup map) verifies the intertwining and norm conditions exhaustively
at the chosen level; at level M over Q the norm of n is n itself.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from zetalab.errors import DomainError
from zetalab.numeric_core import DEFAULT_POLICY, PrecisionPolicy, hurwitz_zeta, riemann_zeta


@dataclass(frozen=True)
class FiniteLevelSystem:
    """Residues {0..M-1} with the multiplicative semigroup action."""

    level: int

    def __post_init__(self) -> None:
        if self.level < 1:
            raise DomainError("level must be >= 1")

    def residues(self) -> range:
        return range(self.level)


@dataclass(frozen=True)
class Observable:
    """A complex-valued function on the level-M residues."""

    system: FiniteLevelSystem
    values: tuple[complex, ...]

    def __post_init__(self) -> None:
        if len(self.values) != self.system.level:
            raise DomainError("observable length must equal the level")
        for v in self.values:
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise DomainError("observable entries must be finite")

    def __call__(self, x: int) -> complex:
        return self.values[x % self.system.level]


def act(sys: FiniteLevelSystem, n: int, x: int) -> int:
    """n * x mod M; the semigroup is the positive integers, so n = 0 is out."""
    if n < 1:
        raise DomainError("the acting semigroup consists of positive integers")
    return (n * x) % sys.level


def time_evolution_phase(n: int, t: float) -> complex:
    """The phase n^{it} the time evolution puts in front of the n-th isometry."""
    if n < 1:
        raise DomainError("n must be a positive integer")
    return cmath.exp(1j * t * math.log(n))


def partition_function(beta: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """zeta(beta); diverges at beta <= 1."""
    if not (beta > 1):
        raise DomainError("partition function diverges for beta <= 1")
    return riemann_zeta(beta, policy)


def gibbs_state(
    sys: FiniteLevelSystem,
    beta: float,
    x0: int,
    f: Observable,
    cutoff: int | None = None,
    policy: PrecisionPolicy = DEFAULT_POLICY,
) -> complex:
    """omega_{beta,x0}(f) = zeta(beta)^{-1} sum_{n>=1} n^{-beta} f(n*x0 mod M).

    The production path groups the sum by residues: the class n = r mod M
    contributes M^{-beta} zeta_H(beta, r/M) (with r = 0 read as a = 1 after
    shifting the index), so the only error is the Hurwitz tolerance.
    `cutoff` switches to plain truncated summation; it exists as an oracle
    path for tests and has the stated truncation error on top.
    """
    if not (beta > 1):
        raise DomainError("gibbs_state requires beta > 1")
    M = sys.level
    if math.gcd(x0, M) != 1:
        raise DomainError("base point x0 must be a unit mod M")
    if f.system.level != M:
        raise DomainError("observable level mismatch")
    z = riemann_zeta(beta, policy)
    if cutoff is not None:
        if cutoff < 1:
            raise DomainError("cutoff must be >= 1")
        re = math.fsum(n ** (-beta) * f(n * x0).real for n in range(1, cutoff + 1))
        im = math.fsum(n ** (-beta) * f(n * x0).imag for n in range(1, cutoff + 1))
        return complex(re, im) / z
    scale = float(M) ** (-beta)
    re_parts = []
    im_parts = []
    for r in range(M):
        v = f(r * x0)
        if v == 0:
            continue
        h = hurwitz_zeta(beta, 1.0 if r == 0 else r / M, policy)
        re_parts.append(v.real * h)
        im_parts.append(v.imag * h)
    return scale * complex(math.fsum(re_parts), math.fsum(im_parts)) / z


@dataclass(frozen=True)
class IsoCandidate:
    """A candidate isomorphism between two level-M systems: a bijection of
    residues and a map on primes extended multiplicatively; the norm of n
    is n on both sides."""

    point_map: tuple[int, ...]
    prime_map: dict[int, int]

    def __post_init__(self) -> None:
        if sorted(self.point_map) != list(range(len(self.point_map))):
            raise DomainError("point_map must be a bijection of the residues")
        for p, q in self.prime_map.items():
            if p < 2 or q < 1:
                raise DomainError("prime_map must send primes to positive integers")

    def semigroup_image(self, n: int) -> int:
        """phi(n) = prod phi(p)^{v_p(n)}; unmapped primes go to themselves."""
        out = 1
        m = n
        p = 2
        while p * p <= m:
            while m % p == 0:
                out *= self.prime_map.get(p, p)
                m //= p
            p += 1
        if m > 1:
            out *= self.prime_map.get(m, m)
        return out


@dataclass(frozen=True)
class IsoReport:
    equivariant: bool
    norm_preserving: bool
    equivariance_witness: tuple[int, int] | None  # smallest failing (n, x)
    norm_witness: int | None  # smallest n with N(phi(n)) != N(n)


def check_iso_candidate(
    sys_k: FiniteLevelSystem,
    sys_l: FiniteLevelSystem,
    cand: IsoCandidate,
    prime_bound: int,
) -> IsoReport:
    """Exhaustively verify Phi(n * x) = phi(n) * Phi(x) and N(phi(n)) = N(n)
    for all residues x and all n <= prime_bound, reporting the first
    counterexample in lexicographic (n, x) order."""
    if sys_k.level != sys_l.level:
        raise DomainError("the finite-level check is only meaningful level-to-level")
    M = sys_k.level
    if len(cand.point_map) != M:
        raise DomainError("point_map length must equal the level")
    phi = cand.point_map
    equi_witness = None
    norm_witness = None
    for n in range(1, prime_bound + 1):
        image_n = cand.semigroup_image(n)
        if norm_witness is None and image_n != n:
            norm_witness = n
        if equi_witness is None:
            for x in range(M):
                if phi[act(sys_k, n, x)] != act(sys_l, image_n, phi[x]):
                    equi_witness = (n, x)
                    break
        if equi_witness is not None and norm_witness is not None:
            break
    return IsoReport(
        equivariant=equi_witness is None,
        norm_preserving=norm_witness is None,
        equivariance_witness=equi_witness,
        norm_witness=norm_witness,
    )
