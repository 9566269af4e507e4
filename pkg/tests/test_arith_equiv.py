import random

import pytest

from oracles import brute_factor_degrees, sieve
from zetalab.arith_equiv import (
    NumberFieldPoly,
    conjugacy_classes,
    factor_degrees_mod_p,
    gassmann_check,
    group_closure,
    partial_dedekind_zeta,
    splitting_types_equal,
    subgroup_from_elements,
    subgroup_from_generators,
)
from zetalab.demos import (
    CONTROL_POLY,
    KOMATSU_PAIR,
    PERLIS_PAIR,
    gl32_group,
    gl32_point_and_plane_stabilizers,
)
from zetalab.dirichlet import characters, l_series, unit_group_structure
from zetalab.errors import DomainError, SizeError
from zetalab.numeric_core import riemann_zeta


class TestFactorDegrees:
    def test_gaussian_poly_split_prime(self):
        st = factor_degrees_mod_p(NumberFieldPoly((1, 0, 1)), 5)
        assert st.status == "clean"
        assert st.degrees == (1, 1)
        # brute root scan: -1 must be a square mod 5
        assert any(x * x % 5 == 4 for x in range(5))

    def test_gaussian_poly_ramified_at_two(self):
        st = factor_degrees_mod_p(NumberFieldPoly((1, 0, 1)), 2)
        assert st.status == "ramified_or_singular"
        assert st.degrees == ()

    def test_inert_prime(self):
        st = factor_degrees_mod_p(NumberFieldPoly((1, 0, 1)), 3)
        assert st.degrees == (2,)

    def test_perlis_pair_at_five(self):
        f, g = PERLIS_PAIR
        assert factor_degrees_mod_p(f, 5).degrees == factor_degrees_mod_p(g, 5).degrees
        assert sum(factor_degrees_mod_p(f, 5).degrees) == 7

    def test_against_brute_factorization(self):
        rng = random.Random(31)
        for _ in range(25):
            p = rng.choice([2, 3, 5])
            degree = rng.randrange(2, 6)
            coeffs = tuple(rng.randrange(-4, 5) for _ in range(degree)) + (1,)
            f = NumberFieldPoly(coeffs)
            st = factor_degrees_mod_p(f, p)
            if st.status != "clean":
                continue
            assert list(st.degrees) == brute_factor_degrees(list(coeffs), p)

    def test_degrees_sum_invariant(self):
        f, _ = PERLIS_PAIR
        for p in sieve(100):
            st = factor_degrees_mod_p(f, p)
            if st.status == "clean":
                assert sum(st.degrees) == f.degree

    def test_quadratic_frobenius_matches_euler_criterion(self):
        rng = random.Random(55)
        for _ in range(30):
            d = rng.choice([2, 3, 5, 6, 7, 10, 11])
            p = rng.choice([q for q in sieve(200) if q > 2 and d % q != 0])
            st = factor_degrees_mod_p(NumberFieldPoly((d, 0, 1)), p)
            if st.status != "clean":
                continue
            is_split = st.degrees == (1, 1)
            euler = pow(-d % p, (p - 1) // 2, p) == 1
            assert is_split == euler

    def test_not_prime(self):
        with pytest.raises(DomainError):
            factor_degrees_mod_p(NumberFieldPoly((1, 0, 1)), 6)


class TestSplittingCompare:
    def test_perlis_agree_small_bound(self):
        f, g = PERLIS_PAIR
        rep = splitting_types_equal(f, g, 500)
        assert rep.agree and rep.first_mismatch is None

    def test_komatsu_agree_small_bound(self):
        f, g = KOMATSU_PAIR
        rep = splitting_types_equal(f, g, 500)
        assert rep.agree
        assert set(rep.skipped) == {2, 3}

    def test_control_pair_disagrees(self):
        rep = splitting_types_equal(PERLIS_PAIR[0], CONTROL_POLY, 100)
        assert not rep.agree
        assert rep.first_mismatch is not None and rep.first_mismatch <= 100

    def test_symmetric_and_reflexive(self):
        f, g = PERLIS_PAIR
        ab = splitting_types_equal(f, g, 300)
        ba = splitting_types_equal(g, f, 300)
        assert ab.agree == ba.agree and ab.skipped == ba.skipped
        self_rep = splitting_types_equal(f, f, 300)
        assert self_rep.agree and self_rep.first_mismatch is None

    def test_degree_mismatch_trivially_disagrees(self):
        rep = splitting_types_equal(NumberFieldPoly((1, 1)), NumberFieldPoly((1, 0, 1)), 100)
        assert not rep.agree

    def test_determinism(self):
        f, g = PERLIS_PAIR
        assert splitting_types_equal(f, g, 400) == splitting_types_equal(f, g, 400)

    def test_scan_bound_cap(self):
        f, g = PERLIS_PAIR
        with pytest.raises(SizeError):
            splitting_types_equal(f, g, 10**6 + 1)


class TestPartialDedekind:
    def test_rational_field_euler_product(self):
        bound = 1_000_000
        v = partial_dedekind_zeta(NumberFieldPoly((0, 1)), 2.0, bound)
        assert abs(v - riemann_zeta(2.0)) < 2.0 / bound

    def test_perlis_pair_bit_identical(self):
        # equal fingerprints, identical factor order: the two float products
        # agree to the last bit
        f, g = PERLIS_PAIR
        assert partial_dedekind_zeta(f, 2.0, 10_000) == partial_dedekind_zeta(g, 2.0, 10_000)

    def test_gaussian_field_against_dirichlet(self):
        # omitting the ramified 2-factor multiplies zeta_{Q(i)} by (1 - 2^{-s})
        chi = characters(unit_group_structure(4))[1]
        target = riemann_zeta(2.0) * l_series(chi, 2.0).real * (1.0 - 0.25)
        v = partial_dedekind_zeta(NumberFieldPoly((1, 0, 1)), 2.0, 10_000)
        assert abs(v - target) < 1e-4

    def test_domain(self):
        with pytest.raises(DomainError):
            partial_dedekind_zeta(NumberFieldPoly((0, 1)), 1.0, 100)


class TestPermGroups:
    def test_trivial_group(self):
        G = group_closure(3, [])
        assert G.order == 1
        assert len(conjugacy_classes(G)) == 1

    def test_s3(self):
        G = group_closure(3, [(1, 0, 2), (1, 2, 0)])
        assert G.order == 6
        assert sorted(len(c) for c in conjugacy_classes(G)) == [1, 2, 3]

    def test_gl32_order_and_classes(self):
        G = gl32_group()
        assert G.order == 168
        classes = conjugacy_classes(G)
        assert sorted(len(c) for c in classes) == [1, 21, 24, 24, 42, 56]

    def test_gl32_classes_against_full_conjugation(self):
        # oracle: conjugate by every group element, not just generators
        G = gl32_group()
        elements = G.elements
        index = {g: i for i, g in enumerate(elements)}

        def conj_orbit(h):
            orbit = set()
            for g in elements:
                ginv = tuple(sorted(range(7), key=lambda i: g[i]))
                orbit.add(tuple(g[h[ginv[i]]] for i in range(7)))
            return orbit

        lib = {frozenset(c) for c in conjugacy_classes(G)}
        seen = set()
        brute = set()
        for h in elements:
            if h in seen:
                continue
            orb = conj_orbit(h)
            seen |= orb
            brute.add(frozenset(orb))
        assert lib == brute
        assert index  # silence linters

    def test_closure_cap(self):
        with pytest.raises(SizeError):
            group_closure(9, [tuple([1, 0] + list(range(2, 9))), tuple(list(range(1, 9)) + [0])])

    def test_bad_perm(self):
        with pytest.raises(DomainError):
            group_closure(3, [(0, 0, 1)])


class TestGassmann:
    def test_identical_subgroups(self):
        G = gl32_group()
        h1, _ = gl32_point_and_plane_stabilizers(G)
        rep = gassmann_check(G, h1, h1)
        assert rep.equivalent and rep.conjugate

    def test_gl32_pair_equivalent_not_conjugate(self):
        G = gl32_group()
        h1, h2 = gl32_point_and_plane_stabilizers(G)
        assert h1.order == 24 and h2.order == 24
        rep = gassmann_check(G, h1, h2)
        assert rep.equivalent
        assert not rep.conjugate

    def test_s3_subgroups_differ(self):
        G = group_closure(3, [(1, 0, 2), (1, 2, 0)])
        h1 = subgroup_from_generators(G, [(1, 0, 2)])
        h2 = subgroup_from_generators(G, [(1, 2, 0)])
        rep = gassmann_check(G, h1, h2)
        assert not rep.equivalent

    def test_equivalence_forces_equal_orders(self):
        G = gl32_group()
        h1, h2 = gl32_point_and_plane_stabilizers(G)
        rep = gassmann_check(G, h1, h2)
        assert sum(c1 for _, c1, _ in rep.table) == h1.order
        assert sum(c2 for _, _, c2 in rep.table) == h2.order

    def test_conjugate_implies_equivalent(self):
        rng = random.Random(6)
        G = group_closure(4, [(1, 0, 2, 3), (1, 2, 3, 0)])  # S4
        for _ in range(6):
            gens = [rng.choice(G.elements) for _ in range(2)]
            h = subgroup_from_generators(G, gens)
            g = rng.choice(G.elements)
            ginv = tuple(sorted(range(4), key=lambda i: g[i]))
            conj = [tuple(g[x[ginv[i]]] for i in range(4)) for x in h.elements]
            hc = subgroup_from_elements(G, conj)
            rep = gassmann_check(G, h, hc)
            assert rep.equivalent and rep.conjugate

    def test_subgroup_validation(self):
        G = group_closure(3, [(1, 0, 2), (1, 2, 0)])
        with pytest.raises(DomainError):
            subgroup_from_elements(G, [(1, 0, 2)])  # no identity
        with pytest.raises(DomainError):
            subgroup_from_elements(G, [(0, 1, 2), (1, 0, 2), (1, 2, 0)])  # not closed
