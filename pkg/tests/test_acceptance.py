"""Acceptance suite: the package's exit criteria, one test per criterion,
each at its stated tolerance and runtime budget. Run with

    pytest tests/test_acceptance.py -v -s

to see one PASS line per criterion.
"""

import math
import random
import time

import numpy as np

from oracles import catalan_constant
from zetalab.arith_equiv import gassmann_check, splitting_types_equal
from zetalab.bc_system import FiniteLevelSystem, Observable, gibbs_state
from zetalab.demos import (
    CONTROL_POLY,
    HOWE_MINUS,
    HOWE_PLUS,
    KOMATSU_PAIR,
    PERLIS_PAIR,
    gl32_group,
    gl32_point_and_plane_stabilizers,
)
from zetalab.dirichlet import characters, evaluate, l_series, unit_group_structure
from zetalab.errors import DomainError
from zetalab.ff_curves import HyperellipticCurve, count_points, predict_counts, zeta_numerator
from zetalab.numeric_core import bloch_wigner, riemann_zeta
from zetalab.spectral_torus import (
    BinaryQuadraticForm,
    Lattice2D,
    UpperHalfPoint,
    eisenstein,
    epstein_accelerated,
    epstein_direct,
    paper_constant_check,
    torus_length_bound,
)

HOWE_COUNTS = [3, 11, 21, 107, 288, 719, 2271]
HOWE_NUMERATOR = (1, -1, 1, -3, 9)


def _report(k: int, name: str, detail: str = ""):
    print(f"ACCEPTANCE {k} ({name}): PASS {detail}".rstrip())


def test_criterion_01_howe_point_counts():
    start = time.monotonic()
    plus = [count_points(HOWE_PLUS, n) for n in range(1, 8)]
    minus = [count_points(HOWE_MINUS, n) for n in range(1, 8)]
    elapsed = time.monotonic() - start
    assert plus == HOWE_COUNTS
    assert minus == HOWE_COUNTS
    assert elapsed < 10.0
    _report(1, "Howe point counts", f"N_1..N_7 both signs in {elapsed:.2f}s")


def test_criterion_02_howe_zeta_numerator():
    zp = zeta_numerator(HOWE_PLUS)
    zm = zeta_numerator(HOWE_MINUS)
    assert zp.coeffs == HOWE_NUMERATOR
    assert zm.coeffs == HOWE_NUMERATOR
    assert predict_counts(zp, 2, 7) == HOWE_COUNTS
    _report(2, "Howe zeta numerator", "1 - T + T^2 - 3T^3 + 9T^4, counts regenerated")


def test_criterion_03_perlis_pair():
    start = time.monotonic()
    f, g = PERLIS_PAIR
    rep = splitting_types_equal(f, g, 10_000)
    assert rep.agree and rep.first_mismatch is None
    control = splitting_types_equal(f, CONTROL_POLY, 100)
    assert not control.agree and control.first_mismatch is not None
    elapsed = time.monotonic() - start
    assert elapsed < 30.0
    _report(3, "Perlis pair", f"agree to 10^4, control mismatch at {control.first_mismatch}, {elapsed:.2f}s")


def test_criterion_04_komatsu_pair():
    f, g = KOMATSU_PAIR
    rep = splitting_types_equal(f, g, 10_000)
    assert rep.agree and rep.first_mismatch is None
    _report(4, "Komatsu pair", f"agree to 10^4, skipped primes {list(rep.skipped)}")


def test_criterion_05_gassmann_demo():
    start = time.monotonic()
    G = gl32_group()
    assert G.order == 168
    from zetalab.arith_equiv import conjugacy_classes

    assert sorted(len(c) for c in conjugacy_classes(G)) == [1, 21, 24, 24, 42, 56]
    h1, h2 = gl32_point_and_plane_stabilizers(G)
    rep = gassmann_check(G, h1, h2)
    assert rep.equivalent and not rep.conjugate
    control = gassmann_check(G, h1, h1)
    assert control.equivalent and control.conjugate
    elapsed = time.monotonic() - start
    assert elapsed < 5.0
    _report(5, "Gassmann demo", f"GL(3,2) equivalent/not conjugate in {elapsed:.2f}s")


def test_criterion_06_gibbs_states():
    # normalization
    for m in (1, 4, 12):
        sys_m = FiniteLevelSystem(m)
        one = Observable(sys_m, (1 + 0j,) * m)
        for beta in (1.5, 2.0, 3.0, 6.0):
            assert abs(gibbs_state(sys_m, beta, 1, one) - 1.0) < 1e-12
    # grouped evaluation vs 10^6-term direct summation, 50 random cases
    rng = random.Random(60)
    terms = 1_000_000
    n = np.arange(1, terms + 1, dtype=np.float64)
    for _ in range(50):
        m = rng.randrange(2, 25)
        sys_m = FiniteLevelSystem(m)
        units = [u for u in range(m) if math.gcd(u, m) == 1]
        x0 = rng.choice(units)
        beta = rng.uniform(1.5, 6.0)
        values = tuple(complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(m))
        f = Observable(sys_m, values)
        grouped = gibbs_state(sys_m, beta, x0, f)
        idx = ((n * x0) % m).astype(int)
        series = np.array(values)[idx] * n ** (-beta)
        z = riemann_zeta(beta)
        direct = complex(float(np.sum(series.real)), float(np.sum(series.imag))) / z
        sup = max(abs(v) for v in values)
        tail = sup * terms ** (1.0 - beta) / (beta - 1.0) / z
        assert abs(grouped - direct) <= tail + 1e-11
    # the mod-4 character observable gives Catalan / zeta(2)
    sys4 = FiniteLevelSystem(4)
    chi_obs = Observable(sys4, (0j, 1 + 0j, 0j, -1 + 0j))
    cat, cat_tail = catalan_constant()
    target = cat / riemann_zeta(2.0)
    got = gibbs_state(sys4, 2.0, 1, chi_obs)
    assert abs(got - target) < 1e-10 + cat_tail
    _report(6, "Gibbs states", "normalized, 50 direct-sum cross-checks, Catalan/zeta(2)")


def test_criterion_07_l_series():
    cat, cat_tail = catalan_constant()
    chi4 = characters(unit_group_structure(4))[1]
    assert abs(l_series(chi4, 2.0).real - cat) < 1e-10 + cat_tail
    from oracles import sieve

    for m in (4, 6, 12):
        chi0 = characters(unit_group_structure(m))[0]
        for s in (2.0, 3.0):
            expected = riemann_zeta(s)
            for p in sieve(m):
                if m % p == 0:
                    expected *= 1.0 - float(p) ** (-s)
            assert abs(l_series(chi0, s).real - expected) < 1e-10
    for m in range(2, 101):
        chars = characters(unit_group_structure(m))
        for a in range(2, m):
            if math.gcd(a, m) != 1:
                continue
            assert abs(sum(evaluate(chi, a) for chi in chars)) < 1e-11
        assert abs(sum(evaluate(chi, 1) for chi in chars) - len(chars)) < 1e-11
    _report(7, "L-series", "Catalan, principal Euler factors, orthogonality to M = 100")


def test_criterion_08_epstein_closed_forms():
    chi4 = characters(unit_group_structure(4))[1]
    chi3 = characters(unit_group_structure(3))[1]
    square = BinaryQuadraticForm(1.0, 0.0, 1.0)
    hexagonal = BinaryQuadraticForm(1.0, 1.0, 1.0)
    for s in (2.0, 3.0, 4.0):
        target4 = 4.0 * riemann_zeta(s) * l_series(chi4, s).real
        target3 = 6.0 * riemann_zeta(s) * l_series(chi3, s).real
        assert abs(epstein_accelerated(square, s) - target4) < 1e-10
        assert abs(epstein_accelerated(hexagonal, s) - target3) < 1e-10
        value, bound = epstein_direct(square, s, 400.0)
        assert abs(value - target4) <= bound
    _report(8, "Epstein closed forms", "4 zeta L(chi_-4) and 6 zeta L(chi_-3), s = 2,3,4")


def test_criterion_09_paper_constant():
    rep = paper_constant_check()
    assert abs(rep.dilog_ratio - 1.17235730884473) < 5e-12
    assert abs(rep.epstein_hex_minus_s2 - rep.epstein_hex_plus_s2) < 1e-12
    _report(
        9,
        "paper constant",
        f"dilog {rep.dilog_ratio:.14f}, epstein ratio {rep.epstein_ratio_s2:.12f} "
        f"and eisenstein ratio {rep.eisenstein_ratio_s2:.12f} logged (normalization open)",
    )


def _random_curve(rng):
    while True:
        genus = rng.choice([1, 1, 2])
        p = rng.choice([3, 5] if genus == 2 else [3, 5, 7, 11, 13, 17])
        coeffs = [rng.randrange(-p, p) for _ in range(2 * genus + 1)] + [1]
        try:
            return HyperellipticCurve(p, tuple(coeffs))
        except DomainError:
            continue


def _random_lattice(rng):
    length1 = rng.uniform(0.8, 1.4)
    length2 = rng.uniform(0.8, 1.4)
    angle = rng.uniform(math.radians(55), math.radians(125))
    return Lattice2D(
        (length1, 0.0), (length2 * math.cos(angle), length2 * math.sin(angle))
    )


def test_criterion_10_property_suites():
    rng = random.Random(101)
    # functional equation on 20 random curves under the cap
    for _ in range(20):
        curve = _random_curve(rng)
        zn = zeta_numerator(curve)
        g, q, a = zn.genus, curve.base_p, zn.coeffs
        for i in range(g + 1):
            assert a[2 * g - i] == q ** (g - i) * a[i]
    # five-term dilogarithm relation, 100 samples
    checked = 0
    while checked < 100:
        x = complex(rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95))
        y = complex(rng.uniform(-0.95, 0.95), rng.uniform(-0.95, 0.95))
        if abs(x) > 0.95 or abs(y) > 0.95:
            continue
        denom = 1.0 - x * y
        if abs(denom) < 0.2 or abs(1 - x) < 0.1 or abs(1 - y) < 0.1:
            continue
        total = (
            bloch_wigner(x)
            + bloch_wigner(y)
            + bloch_wigner((1.0 - x) / denom)
            + bloch_wigner(1.0 - x * y)
            + bloch_wigner((1.0 - y) / denom)
        )
        assert abs(total) < 1e-11
        checked += 1
    # Eisenstein modular invariance on 20 random points
    for _ in range(20):
        x = rng.uniform(-0.5, 0.5)
        y = rng.uniform(0.6, 1.8)
        s = rng.uniform(1.2, 6.0)
        e0 = eisenstein(UpperHalfPoint(x, y), s)
        assert abs(eisenstein(UpperHalfPoint(x + 1.0, y), s) - e0) < 1e-10
        den = x * x + y * y
        assert abs(eisenstein(UpperHalfPoint(-x / den, y / den), s) - e0) < 1e-10
    # triangle-style inequality for the torus bound on 20 random triples
    # (grid approximation of the sup adds a tiny one-sided slop)
    for _ in range(20):
        l1, l2, l3 = (_random_lattice(rng) for _ in range(3))
        d13 = torus_length_bound(l1, l3, grid=100)
        d12 = torus_length_bound(l1, l2, grid=100)
        d23 = torus_length_bound(l2, l3, grid=100)
        assert d13 <= d12 + d23 + 1e-8
    _report(10, "property suites", "functional eq x20, five-term x100, invariance x20, triangle x20")
