from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce as bf
from gemkit import (
    CyclicPermutation,
    ball_gem,
    enumerate_cyclic_permutations,
    euler_characteristic,
    f_vector,
    gurau_degree,
    invariant_report,
    order_two_gem,
    random_boundary_gem,
    random_gem,
    regular_genus,
    rho_boundary,
    rho_closed,
    rho_table,
    validate,
)
from gemkit.errors import NoBoundaryError, NotRegularError
from gemkit.moves import insert_1_dipole, regularize


def disc_gem_d2():
    """Order-two 3-colored graph missing its final color: the 2-disk."""
    return validate(2, 2, [(0, 1, 0), (0, 1, 1)])


class TestCyclicPermutations:
    @pytest.mark.parametrize("d,count", [(2, 1), (3, 3), (4, 12), (5, 60)])
    def test_class_count(self, d, count):
        assert len(enumerate_cyclic_permutations(d)) == count

    def test_d2_is_identity(self):
        assert enumerate_cyclic_permutations(2) == [CyclicPermutation((0, 1, 2))]

    def test_canonicalization_collapses_rotations_and_reflections(self):
        base = (0, 3, 1, 2, 4)
        eps = CyclicPermutation(base)
        for k in range(5):
            rotated = base[k:] + base[:k]
            assert CyclicPermutation.canonical(rotated) == eps
            assert CyclicPermutation.canonical(rotated[::-1]) == eps

    def test_bad_forms_rejected(self):
        with pytest.raises(ValueError):
            CyclicPermutation((3, 1, 2, 0, 4))  # reflection is canonical
        with pytest.raises(ValueError):
            CyclicPermutation((0, 1, 4, 2, 3))  # final color not last
        with pytest.raises(ValueError):
            CyclicPermutation((0, 0, 1, 2, 4))

    def test_consecutive_pairs_wrap(self):
        eps = CyclicPermutation((0, 1, 2, 3, 4))
        assert eps.consecutive_pairs() == [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]


class TestFVector:
    def test_oracle_gems(self, s4, b4, k33):
        assert f_vector(s4) == (5, 10, 10, 5, 2)
        assert euler_characteristic(s4) == 2
        assert f_vector(b4) == (5, 10, 10, 6, 2)
        assert euler_characteristic(b4) == 1
        assert f_vector(k33) == (3, 9, 6)
        assert euler_characteristic(k33) == 0

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2 ** 20))
    def test_matches_bruteforce(self, p, seed):
        g = random_boundary_gem(4, p, max(0, p - 2), seed=seed)
        assert f_vector(g) == bf.f_vector(4, g.num_vertices, list(g.edges()))


class TestRho:
    def test_s4_all_zero(self, s4):
        assert set(rho_table(s4).values()) == {Fraction(0)}

    def test_k33_torus(self, k33):
        eps = CyclicPermutation((0, 1, 2))
        assert rho_closed(k33, eps) == 1

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_order_two_zero(self, d):
        g = order_two_gem(d)
        assert all(v == 0 for v in rho_table(g).values())

    def test_closed_needs_regular(self, b4):
        with pytest.raises(NotRegularError):
            rho_closed(b4, CyclicPermutation((0, 1, 2, 3, 4)))

    def test_b4_boundary_zero(self, b4):
        assert set(rho_table(b4).values()) == {Fraction(0)}

    def test_b4_with_dipole_still_zero(self, b4):
        bigger, _, _ = insert_1_dipole(b4, (0, 1), 1)
        assert set(rho_table(bigger).values()) == {Fraction(0)}

    def test_disc_gem(self):
        assert rho_boundary(disc_gem_d2(), CyclicPermutation((0, 1, 2))) == 0

    def test_boundary_needs_boundary(self, s4):
        with pytest.raises(NoBoundaryError):
            rho_boundary(s4, CyclicPermutation((0, 1, 2, 3, 4)))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 7), st.integers(0, 2 ** 20))
    def test_closed_matches_bruteforce(self, p, seed):
        g = random_gem(4, p, seed=seed)
        edges = list(g.edges())
        for eps in enumerate_cyclic_permutations(4):
            assert rho_closed(g, eps) == bf.rho_closed(
                4, g.num_vertices, edges, eps.order)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(2, 7), st.integers(0, 2 ** 20))
    def test_boundary_matches_bruteforce(self, p, seed):
        g = random_boundary_gem(4, p, max(0, p - 2), seed=seed)
        edges = list(g.edges())
        for eps in enumerate_cyclic_permutations(4):
            assert rho_boundary(g, eps) == bf.rho_boundary(
                4, g.num_vertices, edges, eps.order)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(1, 8), st.integers(0, 2 ** 20))
    def test_bipartite_integrality_never_trips(self, p, seed):
        g = random_gem(4, p, seed=seed)
        for value in rho_table(g).values():
            if g.is_bipartite:
                assert value.denominator == 1
            else:
                assert value.denominator in (1, 2)


class TestGenusAndDegree:
    def test_s4(self, s4):
        best, argmin = regular_genus(s4)
        assert best == 0 and len(argmin) == 12
        assert gurau_degree(s4) == 0

    def test_k33(self, k33):
        assert regular_genus(k33)[0] == 1
        assert gurau_degree(k33) == 1

    def test_b4(self, b4):
        assert regular_genus(b4)[0] == 0

    def test_regularized_b4(self, regularized_b4):
        assert gurau_degree(regularized_b4) == 0

    def test_degree_needs_regular(self, b4):
        with pytest.raises(NotRegularError):
            gurau_degree(b4)

    def test_surface_genus_equals_genus(self, k33):
        # dimension-2 sanity: the torus gem has genus one, spheres zero
        assert regular_genus(k33)[0] == 1
        assert regular_genus(order_two_gem(2))[0] == 0


class TestInvariantReport:
    def test_consistency(self, s4, b4):
        for g in (s4, b4):
            rep = invariant_report(g)
            assert rep.rho_min == min(rep.rho_by_perm.values())
            if g.is_regular:
                assert rep.omega_g == sum(rep.rho_by_perm.values(), Fraction(0))
            else:
                assert rep.omega_g is None
            assert rep.chi == euler_characteristic(g)
            assert rep.p == rep.p_bar + rep.p_dot

    def test_jsonable_deterministic(self, b4):
        import json
        a = json.dumps(invariant_report(b4).to_jsonable(), sort_keys=True)
        b = json.dumps(invariant_report(b4).to_jsonable(), sort_keys=True)
        assert a == b
