"""Shared numeric kernels: exact rationals, Bernoulli numbers, Hurwitz and
Riemann zeta via Euler-Maclaurin, the dilogarithm and the Bloch-Wigner
function.

Exact objects are `fractions.Fraction`; floating work is plain float64 /
complex128. Every public function is pure, so values are safe to share
across threads.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from zetalab.errors import DomainError, SizeError

# Exact rational type used throughout the exact modules.
BigRational = Fraction

PI = math.pi
PI2_OVER_6 = math.pi * math.pi / 6.0

BERNOULLI_CAP = 200


@dataclass(frozen=True)
class PrecisionPolicy:
    """Tuning knobs for the Euler-Maclaurin evaluator.

    The defaults (shift 50, 12 correction terms) keep the remainder below
    1e-13 for real s in [1.1, 60], which is the whole range the rest of the
    package asks for.
    """

    target_abs_tol: float = 1e-13
    euler_maclaurin_shift: int = 50
    euler_maclaurin_terms: int = 12

    def __post_init__(self) -> None:
        if not (self.target_abs_tol > 0):
            raise DomainError("target_abs_tol must be positive")
        if self.euler_maclaurin_shift < 1 or self.euler_maclaurin_terms < 1:
            raise DomainError("Euler-Maclaurin shift and term count must be positive")


DEFAULT_POLICY = PrecisionPolicy()


def bernoulli_numbers(count: int) -> list[Fraction]:
    """First `count` Bernoulli numbers B_0 .. B_{count-1}, convention B_1 = -1/2.

    Exact recurrence sum_{j<=m} C(m+1,j) B_j = 0; everything stays rational.
    """
    if count < 1:
        raise DomainError("count must be a positive integer")
    if count > BERNOULLI_CAP:
        raise SizeError(f"bernoulli_numbers capped at {BERNOULLI_CAP} (got {count})")
    bs = [Fraction(1)]
    for m in range(1, count):
        acc = Fraction(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * bs[j]
        bs.append(-acc / (m + 1))
    return bs


@lru_cache(maxsize=None)
def _even_bernoulli_over_factorial(j_max: int) -> tuple[float, ...]:
    # B_{2j}/(2j)! for j = 1..j_max, as floats; feeds the EM tail.
    bs = bernoulli_numbers(2 * j_max + 1)
    out = []
    for j in range(1, j_max + 1):
        out.append(float(bs[2 * j] / math.factorial(2 * j)))
    return tuple(out)


def hurwitz_zeta(s: float, a: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """Hurwitz zeta sum_{k>=0} (k+a)^{-s} for s > 1, a in (0, 1].

    Head sum of `shift` terms, then integral + trapezoid + Bernoulli
    corrections at the cut; absolute error stays below
    policy.target_abs_tol for the default policy on s in [1.1, 60].
    """
    if not (s > 1):
        raise DomainError("hurwitz_zeta requires s > 1")
    if not (0.0 < a <= 1.0):
        raise DomainError("hurwitz_zeta requires a in (0, 1]")
    n = policy.euler_maclaurin_shift
    j_terms = policy.euler_maclaurin_terms
    head = math.fsum((k + a) ** (-s) for k in range(n))
    x = n + a
    x_pow = x ** (-s)
    pieces = [x * x_pow / (s - 1.0), 0.5 * x_pow]
    coeffs = _even_bernoulli_over_factorial(j_terms)
    rising = s  # s(s+1)...(s+2j-2), here at j = 1
    xp = x_pow / x
    inv_x2 = 1.0 / (x * x)
    for j in range(1, j_terms + 1):
        pieces.append(coeffs[j - 1] * rising * xp)
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        xp *= inv_x2
    return head + math.fsum(pieces)


def riemann_zeta(s: float, policy: PrecisionPolicy = DEFAULT_POLICY) -> float:
    """zeta(s) for s > 1, as the a = 1 Hurwitz value."""
    if not (s > 1):
        raise DomainError("riemann_zeta requires s > 1")
    return hurwitz_zeta(s, 1.0, policy)


def _require_finite(z: complex) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError("non-finite complex input")


def _dilog_series(z: complex) -> complex:
    # Power series sum z^k / k^2, only called with |z| <= 1/2.
    total = 0j
    power = z
    for k in range(1, 80):
        term = power / (k * k)
        total += term
        if abs(term) < 1e-18:
            break
        power *= z
    return total


# B_k / (k+1)! for the log-argument series; odd k >= 3 vanish but are kept
# so indexing stays direct.
_LOG_SERIES_TERMS = 48
_LOG_SERIES_COEFFS = tuple(
    float(b / math.factorial(k + 1))
    for k, b in enumerate(bernoulli_numbers(_LOG_SERIES_TERMS))
)


def _dilog_log_series(z: complex) -> complex:
    # Li2(z) = sum_k B_k (-log(1-z))^{k+1} / (k+1)!; fast whenever
    # |log(1-z)| is well under 2*pi, which reduction guarantees.
    w = -cmath.log(1.0 - z)
    total = 0j
    wp = w
    for k in range(_LOG_SERIES_TERMS):
        c = _LOG_SERIES_COEFFS[k]
        if c != 0.0:
            term = c * wp
            total += term
            if abs(term) < 1e-18 and k > 2:
                break
        wp *= w
    return total


def dilog(z: complex) -> complex:
    """Principal-branch Li_2(z) to about 1e-13 absolute error.

    |z| <= 1/2 is summed directly; everything else is folded into that
    region with the inversion and reflection identities, falling back to
    the Bernoulli series in -log(1-z) on the annulus the Moebius maps
    cannot shrink (the unit-circle points near exp(i*pi/3) are fixed in
    modulus by all of them).
    """
    z = complex(z)
    _require_finite(z)
    if z == 0:
        return 0j
    if z == 1:
        return complex(PI2_OVER_6, 0.0)
    if abs(z) > 1.0:
        inv = 1.0 / z
        lg = cmath.log(-z)
        return -dilog(inv) - PI2_OVER_6 - 0.5 * lg * lg
    if z.real > 0.5:
        return PI2_OVER_6 - cmath.log(z) * cmath.log(1.0 - z) - dilog(1.0 - z)
    if abs(z) <= 0.5:
        return _dilog_series(z)
    return _dilog_log_series(z)


def bloch_wigner(z: complex) -> float:
    """Bloch-Wigner function D(z) = Im Li_2(z) + arg(1-z) log|z|.

    Vanishes identically on the real line (returned exactly), is
    antisymmetric under conjugation, and satisfies the five-term relation.
    """
    z = complex(z)
    _require_finite(z)
    if z.imag == 0.0:
        return 0.0
    li = dilog(z)
    return li.imag + cmath.phase(1.0 - z) * math.log(abs(z))
