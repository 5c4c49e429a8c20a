import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gemkit import (
    CyclicPermutation,
    ball_gem,
    check_bound_on_gem,
    check_dehn_sommerville,
    check_omega_pairing,
    check_regularization_identities,
    check_semisimple,
    gem_complexity_relation,
    lower_bound_thm,
    order_two_gem,
    partner_permutation,
    random_boundary_gem,
    random_gem,
    validate,
)
from gemkit.errors import (
    DimensionError,
    NotRegularError,
    PreconditionError,
    ResidueShapeError,
)
from gemkit.moves import full_contraction, insert_1_dipole

from corpus import grow_by_insertions, k33_graph


def torus_block_graph():
    """Contracted regular 5-colored graph whose {0,1,2}-residue is the
    torus gem: a pseudomanifold violating the sphere-link hypothesis."""
    edges = [(j, 3 + (j + i) % 3, i) for i in range(3) for j in range(3)]
    edges += [(0, 3, 3), (1, 4, 3), (2, 5, 3)]
    edges += [(0, 4, 4), (1, 5, 4), (2, 3, 4)]
    return validate(4, 6, edges)


class TestRegularizationIdentities:
    def test_b4_all_colors(self, b4):
        for c in range(4):
            report = check_regularization_identities(b4, c)
            assert report.ok and report.lemma_ok and report.transfer_ok
            assert report.h == 1 and report.chi_law_ok

    def test_b4_lemma_values(self, b4):
        report = check_regularization_identities(b4, 0)
        assert report.lemma_mixed[1] == (1, 1)  # 0 regular cycles + 1 boundary cycle
        assert report.lemma_singular == (1, 1, 1)

    def test_b4_nonadjacent_example(self, b4):
        # c = 2 with order (0,2,1,3,4): nonadjacent case with both boundary
        # counts equal to one, so the capped genus stays zero
        report = check_regularization_identities(b4, 2)
        case = {t.eps: t for t in report.transfer}[CyclicPermutation((0, 2, 1, 3, 4))]
        assert not case.adjacent and case.paper_applicable
        assert case.rho_input == 0 and case.paper_rhs == 0 and case.rho_capped == 0

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 9), st.integers(0, 2 ** 20), st.integers(0, 3))
    def test_lemma_universal(self, p, seed, c):
        g = random_boundary_gem(4, p, max(0, p - 3), seed=seed)
        assert check_regularization_identities(g, c).lemma_ok

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2 ** 20), st.integers(0, 3))
    def test_transfer_universal_parts(self, p, seed, c):
        g = random_boundary_gem(4, p, max(0, p - 3), seed=seed)
        report = check_regularization_identities(g, c)
        for case in report.transfer:
            assert case.universal_ok
            if case.adjacent:
                assert case.rho_capped == case.rho_input
            elif case.paper_applicable:
                assert case.paper_ok


class TestOmegaPairing:
    def test_s4(self, s4):
        report = check_omega_pairing(s4)
        assert report.ok and report.omega == 0

    def test_partner_is_involution(self):
        for eps in [CyclicPermutation((0, 1, 2, 3, 4)),
                    CyclicPermutation((0, 3, 1, 2, 4))]:
            mate = partner_permutation(eps)
            assert mate != eps
            assert partner_permutation(mate) == eps

    def test_wrong_dimension(self, k33):
        with pytest.raises(DimensionError):
            check_omega_pairing(k33)

    def test_boundary_rejected(self, b4):
        with pytest.raises(NotRegularError):
            check_omega_pairing(b4)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 10), st.integers(0, 2 ** 20))
    def test_random_regular(self, p, seed):
        report = check_omega_pairing(random_gem(4, p, seed=seed))
        assert report.sum_constant and report.factor_ok


class TestLowerBounds:
    def test_values(self):
        assert lower_bound_thm(1, 0, 1, 0) == (0, 0)
        assert lower_bound_thm(0, 1, 1, 1) == (3, 36)

    def test_h_zero_rejected(self):
        with pytest.raises(PreconditionError):
            lower_bound_thm(2, 0, 0, 0)

    def test_negative_rank_rejected(self):
        with pytest.raises(PreconditionError):
            lower_bound_thm(1, -1, 1, 0)

    def test_equality_case(self, regularized_b4):
        report = check_bound_on_gem(regularized_b4, 1, 0, 1, 0)
        assert report.ok
        assert report.genus_equality and report.gdegree_equality
        assert report.slack_consistent
        assert set(report.slack.values()) == {Fraction(0)}

    def test_invariant_under_dipoles(self, regularized_b4):
        g = grow_by_insertions(regularized_b4, 4, random.Random(17))
        g = full_contraction(g)
        report = check_bound_on_gem(g, 1, 0, 1, 0)
        assert report.genus_equality and report.gdegree_equality

    def test_wrong_rank_reported_not_raised(self, regularized_b4):
        report = check_bound_on_gem(regularized_b4, 1, 0, 1, 5)
        assert not report.ok and not report.genus_ok
        # the excess-count decomposition is insensitive to the claimed
        # ranks (they cancel); it cross-checks chi and h instead
        assert report.slack_consistent

    def test_wrong_chi_breaks_slack_decomposition(self, regularized_b4):
        report = check_bound_on_gem(regularized_b4, 3, 0, 1, 0)
        assert not report.slack_consistent

    def test_boundary_rejected(self, b4):
        with pytest.raises(NotRegularError):
            check_bound_on_gem(b4, 1, 0, 1, 0)


class TestSemisimple:
    def test_equality_case(self, regularized_b4):
        report = check_semisimple(regularized_b4, m=0, m_hat=0, h=1)
        assert report.semi_simple
        assert len(report.weak_semi_simple) == 12

    def test_wrong_m_not_semisimple(self, regularized_b4):
        report = check_semisimple(regularized_b4, m=1, m_hat=0, h=1)
        assert not report.semi_simple
        assert not report.weak_semi_simple

    def test_semisimple_implies_weak_everywhere(self, s4):
        report = check_semisimple(s4, m=0, m_hat=0, h=1)
        if report.semi_simple:
            assert len(report.weak_semi_simple) == 12

    def test_residue_shape_precondition(self):
        edges = [(0, 1, c) for c in range(4)] + [(2, 3, c) for c in range(4)]
        edges += [(0, 2, 4), (1, 3, 4)]
        g = validate(4, 4, edges)  # graph minus color 4 has two components
        with pytest.raises(ResidueShapeError):
            check_semisimple(g, m=0, m_hat=0, h=1)


class TestDehnSommerville:
    def test_s4(self, s4):
        report = check_dehn_sommerville(s4)
        assert report.ok and report.lhs == 2 and report.rhs == 12 + 20 - 30

    def test_restored_after_contraction(self, s4):
        g = grow_by_insertions(s4, 5, random.Random(8))
        report = check_dehn_sommerville(full_contraction(g))
        assert report.ok

    def test_regularized_pipeline(self, regularized_b4):
        assert check_dehn_sommerville(regularized_b4).ok

    def test_torus_block_violates(self):
        # contracted but not a singular manifold: an edge link is a torus,
        # so the relation must fail rather than be forced
        report = check_dehn_sommerville(torus_block_graph())
        assert not report.ok

    def test_precondition(self):
        # joined along color 0, so removing color 0 disconnects the graph
        edges = [(0, 1, c) for c in range(1, 5)] + [(2, 3, c) for c in range(1, 5)]
        edges += [(0, 2, 0), (1, 3, 0)]
        g = validate(4, 4, edges)
        with pytest.raises(PreconditionError):
            check_dehn_sommerville(g)


class TestComplexityRelation:
    def test_equality(self, regularized_b4):
        report = gem_complexity_relation(regularized_b4, 1, claimed_minimal=True)
        assert report.matches and report.ok
        assert report.relation_value == 0 and report.omega == 0

    def test_non_minimal_witness(self, regularized_b4):
        g = grow_by_insertions(regularized_b4, 1, random.Random(4))
        report = gem_complexity_relation(g, 1)
        assert not report.matches and report.relation_value == 6
        assert report.omega == 0
        assert "non-minimal" in report.note

    def test_closed_manifold_mismatch_noted(self, s4):
        report = gem_complexity_relation(s4, 2)
        assert not report.matches and report.relation_value == 6
