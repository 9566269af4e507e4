import random

import pytest

from oracles import brute_force_curve_count
from zetalab.demos import HOWE_MINUS, HOWE_PLUS
from zetalab.errors import DomainError, SizeError
from zetalab.ff_curves import (
    HyperellipticCurve,
    ZetaNumerator,
    count_points,
    make_extension_field,
    predict_counts,
    quadratic_character,
    zeta_numerator,
)

HOWE_COUNTS = [3, 11, 21, 107, 288, 719, 2271]


class TestExtensionFields:
    def test_prime_field_modulus_is_x(self):
        assert make_extension_field(3, 1).modulus == (0, 1)

    def test_f9_modulus(self):
        # -1 is a non-residue mod 3, so x^2 + 1 is the first irreducible
        assert make_extension_field(3, 2).modulus == (1, 0, 1)

    def test_f8_modulus(self):
        assert make_extension_field(2, 3).modulus == (1, 1, 0, 1)

    def test_moduli_have_no_small_factors(self):
        # brute trial division over all lower-degree monic polynomials
        for p, n in ((3, 2), (2, 3), (5, 3), (7, 2)):
            field = make_extension_field(p, n)
            m = list(field.modulus)
            for d in range(1, n):
                for code in range(p ** d):
                    g = []
                    k = code
                    for _ in range(d):
                        g.append(k % p)
                        k //= p
                    g.append(1)
                    r = list(m)
                    while len(r) >= len(g):
                        c = r[-1]
                        if c:
                            shift = len(r) - len(g)
                            for i, gi in enumerate(g):
                                r[shift + i] = (r[shift + i] - c * gi) % p
                        r.pop()
                    while r and r[-1] == 0:
                        r.pop()
                    assert r, f"x^{n}-modulus over F_{p} has degree-{d} factor {g}"

    def test_cap(self):
        with pytest.raises(SizeError):
            make_extension_field(3, 20)
        with pytest.raises(DomainError):
            make_extension_field(4, 2)

    def test_field_arithmetic_roundtrip(self):
        field = make_extension_field(5, 2)
        rng = random.Random(4)
        for _ in range(30):
            a = field.element([rng.randrange(5), rng.randrange(5)])
            if a.is_zero():
                continue
            inv = a.pow(field.order - 2)
            assert a * inv == field.one()


class TestQuadraticCharacter:
    def test_multiplicative_and_squares(self):
        for p, n in ((3, 2), (7, 1), (5, 2)):
            field = make_extension_field(p, n)
            rng = random.Random(p * 100 + n)
            elements = list(field.elements())
            for _ in range(40):
                a = rng.choice(elements)
                b = rng.choice(elements)
                assert quadratic_character(a) * quadratic_character(b) == quadratic_character(a * b)
                if not a.is_zero():
                    assert quadratic_character(a * a) == 1


class TestCountPoints:
    def test_howe_plus_table(self):
        assert [count_points(HOWE_PLUS, n) for n in range(1, 8)] == HOWE_COUNTS

    def test_howe_minus_table(self):
        assert [count_points(HOWE_MINUS, n) for n in range(1, 8)] == HOWE_COUNTS

    def test_cubic_with_vanishing_f(self):
        # x^3 - x is 0 at every x in F_3: three affine points plus infinity
        curve = HyperellipticCurve(3, (0, -1, 0, 1))
        assert count_points(curve, 1) == 4

    def test_against_brute_force(self):
        rng = random.Random(12)
        cases = 0
        while cases < 8:
            p = rng.choice([3, 5, 7])
            degree = rng.choice([3, 5])
            coeffs = [rng.randrange(-3, 4) for _ in range(degree)] + [1]
            try:
                curve = HyperellipticCurve(p, tuple(coeffs))
            except DomainError:
                continue
            n = rng.choice([1, 2] if p > 3 else [1, 2, 3])
            assert count_points(curve, n) == brute_force_curve_count(p, n, tuple(coeffs))
            cases += 1

    def test_rejections(self):
        with pytest.raises(DomainError):
            HyperellipticCurve(2, (1, 1, 0, 1))  # characteristic 2
        with pytest.raises(DomainError):
            HyperellipticCurve(3, (0, 0, 1, 1))  # not squarefree mod 3 (x^2(x+1))
        with pytest.raises(DomainError):
            HyperellipticCurve(3, (1, 0, 1, 0, 1))  # even degree
        with pytest.raises(DomainError):
            HyperellipticCurve(3, (1, 1, 2))  # degree < 3 after monic check


class TestZetaNumerator:
    def test_howe_numerator(self):
        assert zeta_numerator(HOWE_PLUS).coeffs == (1, -1, 1, -3, 9)
        assert zeta_numerator(HOWE_MINUS).coeffs == (1, -1, 1, -3, 9)

    def test_twin_curves_share_zeta_but_differ(self):
        assert HOWE_PLUS.f_coeffs != HOWE_MINUS.f_coeffs
        assert zeta_numerator(HOWE_PLUS) == zeta_numerator(HOWE_MINUS)

    def test_genus_one_vanishing_trace(self):
        # y^2 = x^3 + x over F_3 has N_1 = 4, so a_1 = N_1 - q - 1 = 0
        curve = HyperellipticCurve(3, (0, 1, 0, 1))
        assert count_points(curve, 1) == 4
        assert zeta_numerator(curve).coeffs == (1, 0, 3)

    def test_functional_equation_enforced(self):
        with pytest.raises(Exception):
            ZetaNumerator((1, 1, 5), 3)  # a_2 != q^1 * a_0


class TestPredictCounts:
    def test_regenerates_howe_table(self):
        zn = ZetaNumerator((1, -1, 1, -3, 9), 3)
        assert predict_counts(zn, 2, 7) == HOWE_COUNTS

    def test_projective_line(self):
        zn = ZetaNumerator((1,), 3)
        assert predict_counts(zn, 0, 5) == [3**n + 1 for n in range(1, 6)]

    def test_genus_one_example(self):
        zn = ZetaNumerator((1, 0, 3), 3)
        assert predict_counts(zn, 1, 2) == [4, 16]
        curve = HyperellipticCurve(3, (0, 1, 0, 1))
        assert count_points(curve, 2) == 16

    def test_genus_mismatch(self):
        with pytest.raises(DomainError):
            predict_counts(ZetaNumerator((1, 0, 3), 3), 2, 3)


class TestCurveProperties:
    def _random_curve(self, rng):
        # keep p^(2g+1) small: these tests enumerate the extension fields
        while True:
            genus = rng.choice([1, 1, 2])
            p = rng.choice([3, 5] if genus == 2 else [3, 5, 7, 11, 13, 17, 23, 31])
            degree = 2 * genus + 1
            coeffs = [rng.randrange(-p, p) for _ in range(degree)] + [1]
            try:
                return HyperellipticCurve(p, tuple(coeffs))
            except DomainError:
                continue

    def test_count_consistency_and_hasse_weil(self):
        rng = random.Random(2024)
        for _ in range(10):
            curve = self._random_curve(rng)
            g, q = curve.genus, curve.base_p
            zn = zeta_numerator(curve)
            m = 2 * g + 1
            predicted = predict_counts(zn, g, m)
            for n in range(1, m + 1):
                actual = count_points(curve, n)
                assert predicted[n - 1] == actual
                assert abs(actual - q**n - 1) <= 2 * g * q ** (n / 2.0)

    def test_functional_equation_random(self):
        rng = random.Random(777)
        for _ in range(10):
            curve = self._random_curve(rng)
            zn = zeta_numerator(curve)  # invariant enforced at construction
            g, q = zn.genus, curve.base_p
            a = zn.coeffs
            for i in range(g + 1):
                assert a[2 * g - i] == q ** (g - i) * a[i]
