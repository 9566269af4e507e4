"""Point counting on odd-degree hyperelliptic curves over F_q and exact
recovery of the zeta-function numerator from the counts.

Field elements are coefficient tuples against a deterministic modulus, so
every run (and every platform) builds the same extension tower. The zeta
numerator is extracted with exact rational power-series arithmetic; its
integrality and functional equation double as free correctness checks on
the counting loop.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from zetalab.errors import ConsistencyError, DomainError, SizeError

ENUMERATION_CAP = 10**7


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3e14."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17):
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
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


# ---------------------------------------------------------------------------
# F_p[x] helpers (coefficient lists low-to-high degree, trimmed)


def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(f: list[int], g: list[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if fi:
            for j, gj in enumerate(g):
                out[i + j] = (out[i + j] + fi * gj) % p
    return _poly_trim(out)


def _poly_mod(f: list[int], m: list[int], p: int) -> list[int]:
    f = f[:]
    dm = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    while len(f) - 1 >= dm and f:
        coef = f[-1] * inv_lead % p
        shift = len(f) - 1 - dm
        for i, mi in enumerate(m):
            f[shift + i] = (f[shift + i] - coef * mi) % p
        _poly_trim(f)
    return f


def _poly_gcd(f: list[int], g: list[int], p: int) -> list[int]:
    a, b = f[:], g[:]
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _poly_pow_mod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    b = _poly_mod(base, m, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, b, p), m, p)
        b = _poly_mod(_poly_mul(b, b, p), m, p)
        e >>= 1
    return result


def _is_irreducible(coeffs: list[int], p: int) -> bool:
    # Rabin: x^{p^n} = x mod f, and gcd(x^{p^{n/l}} - x, f) = 1 for prime l | n.
    n = len(coeffs) - 1
    if n == 1:
        return True
    x = [0, 1]
    xq = _poly_pow_mod(x, p**n, coeffs, p)
    if _poly_trim([(a - b) % p for a, b in itertools.zip_longest(xq, x, fillvalue=0)]):
        return False
    for ell in {q for q in range(2, n + 1) if n % q == 0 and is_prime(q)}:
        xe = _poly_pow_mod(x, p ** (n // ell), coeffs, p)
        diff = _poly_trim([(a - b) % p for a, b in itertools.zip_longest(xe, x, fillvalue=0)])
        if len(_poly_gcd(coeffs, diff, p)) != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Extension fields


@dataclass(frozen=True)
class FiniteField:
    """F_{p^n} presented as F_p[x] modulo a deterministic irreducible."""

    p: int
    n: int
    modulus: tuple[int, ...]  # monic, low-to-high, length n+1

    @property
    def order(self) -> int:
        return self.p**self.n

    def element(self, coeffs) -> "FieldElement":
        c = [int(v) % self.p for v in coeffs]
        c += [0] * (self.n - len(c))
        if len(c) != self.n:
            raise DomainError("coefficient vector longer than extension degree")
        return FieldElement(self, tuple(c))

    def zero(self) -> "FieldElement":
        return self.element([])

    def one(self) -> "FieldElement":
        return self.element([1])

    def from_int(self, k: int) -> "FieldElement":
        return self.element([k])

    def elements(self):
        for tup in itertools.product(range(self.p), repeat=self.n):
            yield FieldElement(self, tup)


@dataclass(frozen=True)
class FieldElement:
    owner: FiniteField
    coeffs: tuple[int, ...]

    def __add__(self, other: "FieldElement") -> "FieldElement":
        p = self.owner.p
        return FieldElement(self.owner, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        p = self.owner.p
        return FieldElement(self.owner, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        p = self.owner.p
        n = self.owner.n
        prod = [0] * (2 * n - 1) if n > 1 else [0]
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    prod[i + j] = (prod[i + j] + a * b) % p
        red = _reduction_rows(self.owner)
        out = prod[:n]
        for k in range(n, len(prod)):
            c = prod[k]
            if c:
                row = red[k - n]
                for i in range(n):
                    out[i] = (out[i] + c * row[i]) % p
        return FieldElement(self.owner, tuple(out))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def pow(self, e: int) -> "FieldElement":
        result = self.owner.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result


@lru_cache(maxsize=None)
def _reduction_rows(field: FiniteField) -> tuple[tuple[int, ...], ...]:
    # Row k holds x^{n+k} reduced mod the field modulus, for k = 0..n-2.
    p, n, m = field.p, field.n, list(field.modulus)
    rows = []
    cur = [(-m[i]) % p for i in range(n)]  # x^n
    rows.append(tuple(cur))
    for _ in range(n - 2):
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            for i in range(n):
                nxt[i] = (nxt[i] - top * m[i]) % p
        else:
            nxt = [v % p for v in nxt]
        cur = nxt
        rows.append(tuple(cur))
    return tuple(rows)


@lru_cache(maxsize=None)
def make_extension_field(p: int, n: int) -> FiniteField:
    """F_{p^n} with the smallest monic irreducible modulus.

    Candidates are ordered by their integer encoding sum c_i p^i, i.e.
    highest-degree coefficients compared first; that is the order under
    which the scan lands on x^2+1 over F_3 and x^3+x+1 over F_2.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if n < 1:
        raise DomainError("extension degree must be >= 1")
    if p**n > ENUMERATION_CAP:
        raise SizeError(f"field order {p}^{n} exceeds cap {ENUMERATION_CAP}")
    if n == 1:
        return FiniteField(p, 1, (0, 1))
    for code in range(p**n):
        coeffs = []
        k = code
        for _ in range(n):
            coeffs.append(k % p)
            k //= p
        coeffs.append(1)
        if coeffs[0] == 0:
            continue  # divisible by x
        if _is_irreducible(coeffs, p):
            return FiniteField(p, n, tuple(coeffs))
    raise ConsistencyError("no irreducible polynomial found")  # unreachable


def quadratic_character(a: FieldElement) -> int:
    """chi_2(a) in {-1, 0, 1} by Euler's criterion a^{(q-1)/2}."""
    if a.is_zero():
        return 0
    q = a.owner.order
    v = a.pow((q - 1) // 2)
    if v == a.owner.one():
        return 1
    return -1


# ---------------------------------------------------------------------------
# Curves


@dataclass(frozen=True)
class HyperellipticCurve:
    """y^2 = f(x) with f monic of odd degree, squarefree mod p, p odd."""

    base_p: int
    f_coeffs: tuple[int, ...]  # low-to-high degree, integer, monic

    def __post_init__(self) -> None:
        p = self.base_p
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if p == 2:
            raise DomainError("characteristic 2 is unsupported")
        c = list(self.f_coeffs)
        d = len(c) - 1
        if d < 3 or d % 2 == 0:
            raise DomainError("f must have odd degree >= 3")
        if c[-1] != 1:
            raise DomainError("f must be monic")
        fp = [v % p for v in c]
        dfp = _poly_trim([(i * v) % p for i, v in enumerate(fp)][1:])
        g = _poly_gcd(_poly_trim(fp[:]), dfp, p)
        if len(g) != 1:
            raise DomainError("f is not squarefree mod p")

    @property
    def degree(self) -> int:
        return len(self.f_coeffs) - 1

    @property
    def genus(self) -> int:
        return (self.degree - 1) // 2


@dataclass(frozen=True)
class ZetaNumerator:
    """P(T) with integer coefficients a_0..a_{2g}; T = q^{-s}."""

    coeffs: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        a = self.coeffs
        if a[0] != 1:
            raise ConsistencyError("zeta numerator must have constant term 1")
        deg = len(a) - 1
        if deg % 2 != 0:
            raise ConsistencyError("zeta numerator must have even degree 2g")
        g = deg // 2
        for i in range(g + 1):
            if a[deg - i] != self.q ** (g - i) * a[i]:
                raise ConsistencyError("functional equation a_{2g-i} = q^{g-i} a_i violated")

    @property
    def genus(self) -> int:
        return (len(self.coeffs) - 1) // 2


def count_points(curve: HyperellipticCurve, n: int) -> int:
    """|X(F_{q^n})| for the smooth odd-degree model: one point at infinity
    plus, for each x, 1 + chi_2(f(x)) solutions y of y^2 = f(x)."""
    if n < 1:
        raise DomainError("extension degree must be >= 1")
    field = make_extension_field(curve.base_p, n)
    coeffs = [field.from_int(c) for c in curve.f_coeffs]
    total = 1
    for x in field.elements():
        acc = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = acc * x + c
        total += 1 + quadratic_character(acc)
    return total


def zeta_numerator(curve: HyperellipticCurve) -> ZetaNumerator:
    """P(T) from the counts N_1..N_{2g}, by exact series exponentiation.

    exp(sum N_n T^n / n) * (1-T)(1-qT), truncated at degree 2g, must come
    out integral and self-dual; anything else means miscounted points.
    """
    g = curve.genus
    q = curve.base_p
    if q ** (2 * g) > ENUMERATION_CAP:
        raise SizeError("counting N_1..N_2g would exceed the enumeration cap")
    counts = [count_points(curve, n) for n in range(1, 2 * g + 1)]
    # exp via E' = A'E with A = sum N_n T^n / n: e_k = (1/k) sum N_j e_{k-j}.
    e = [Fraction(1)] + [Fraction(0)] * (2 * g)
    for k in range(1, 2 * g + 1):
        e[k] = sum((counts[j - 1] * e[k - j] for j in range(1, k + 1)), Fraction(0)) / k
    # multiply by (1-T)(1-qT) = 1 - (q+1)T + qT^2
    out = []
    for k in range(2 * g + 1):
        v = e[k]
        if k >= 1:
            v -= (q + 1) * e[k - 1]
        if k >= 2:
            v += q * e[k - 2]
        out.append(v)
    ints = []
    for v in out:
        if v.denominator != 1:
            raise ConsistencyError(f"non-integer zeta coefficient {v}; counting bug")
        ints.append(int(v))
    return ZetaNumerator(tuple(ints), q)


def predict_counts(zn: ZetaNumerator, genus: int, range_end: int) -> list[int]:
    """N_n = q^n + 1 - p_n for n <= range_end, with p_n the power sums of
    the reciprocal roots of P, via Newton's identities (exact, no roots)."""
    if genus != zn.genus:
        raise DomainError("genus does not match the numerator degree")
    a = zn.coeffs
    deg = len(a) - 1
    # P(T) = prod(1 - alpha_i T) => elementary symmetric e_i = (-1)^i a_i.
    e = [(-1) ** i * a[i] for i in range(deg + 1)]
    p: list[int] = [0] * (range_end + 1)
    for k in range(1, range_end + 1):
        acc = 0
        for i in range(1, min(k, deg) + 1):
            acc += (-1) ** (i - 1) * e[i] * (p[k - i] if k > i else 0)
        if k <= deg:
            acc += (-1) ** (k - 1) * k * e[k]
        p[k] = acc
    return [zn.q**n + 1 - p[n] for n in range(1, range_end + 1)]
