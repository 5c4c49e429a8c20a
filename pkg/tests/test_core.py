import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce as bf
from gemkit import (
    ball_gem,
    classify_vertices,
    count_g,
    is_contracted,
    is_crystallization,
    order_two_gem,
    random_boundary_gem,
    random_gem,
    residues,
    validate,
)
from gemkit.errors import (
    DisconnectedError,
    DuplicateColorError,
    InvalidColorError,
    LoopEdgeError,
    MissingColorError,
    PreconditionError,
)
from gemkit.moves import insert_1_dipole


def swap_join_graph():
    """Two order-two sphere gems with their final-color edges swapped."""
    edges = [(0, 1, c) for c in range(4)] + [(2, 3, c) for c in range(4)]
    edges += [(0, 2, 4), (1, 3, 4)]
    return validate(4, 4, edges)


class TestValidate:
    def test_s4_2(self, s4):
        assert s4.is_regular and s4.is_bipartite
        assert s4.num_vertices == 2

    def test_b4_2(self, b4):
        assert not b4.is_regular
        assert b4.boundary_vertices() == (0, 1)

    def test_duplicate_color(self):
        edges = [(0, 1, c) for c in range(5)] + [(0, 1, 0)]
        with pytest.raises(DuplicateColorError):
            validate(4, 2, edges)

    def test_loop(self):
        with pytest.raises(LoopEdgeError):
            validate(4, 2, [(0, 0, 0)])

    def test_missing_color(self):
        with pytest.raises(MissingColorError):
            validate(4, 2, [(0, 1, c) for c in range(3)])

    def test_out_of_range_vertex(self):
        with pytest.raises(LoopEdgeError):
            validate(4, 2, [(0, 5, 0)])

    def test_bad_color(self):
        with pytest.raises(InvalidColorError):
            validate(4, 2, [(0, 1, 7)])

    def test_disconnected(self):
        edges = [(0, 1, c) for c in range(5)] + [(2, 3, c) for c in range(5)]
        with pytest.raises(DisconnectedError):
            validate(4, 4, edges)

    def test_edge_order_irrelevant(self, s4):
        edges = list(s4.edges())
        assert validate(4, 2, edges[::-1]) == s4


class TestResidues:
    def test_s4_pair(self, s4):
        dec = residues(s4, {0, 1})
        assert dec.count == 1 and dec.regular == (True,)

    def test_b4_mixed_pair(self, b4):
        dec = residues(b4, {0, 4})
        assert dec.count == 1 and dec.regular == (False,)
        assert count_g(b4, {0, 4}) == (1, 0)

    def test_s4_four_colors(self, s4):
        assert residues(s4, {0, 1, 3, 4}).count == 1

    def test_invalid_color(self, s4):
        with pytest.raises(InvalidColorError):
            residues(s4, {0, 9})

    def test_empty_set_isolates(self, s4):
        assert residues(s4, set()).count == 2

    @pytest.mark.parametrize("colors,expected", [
        ({0, 1}, (1, 1)),
        ({3, 4}, (1, 0)),
        ({2, 3}, (1, 1)),
    ])
    def test_count_g_b4(self, b4, colors, expected):
        assert count_g(b4, colors) == expected

    def test_count_g_s4_all_pairs(self, s4):
        for i in range(5):
            for j in range(i + 1, 5):
                assert count_g(s4, {i, j}) == (1, 1)


class TestClassify:
    def test_s4(self, s4):
        cls = classify_vertices(s4)
        assert (cls.p_bar, cls.p_dot) == (0, 1)

    def test_b4(self, b4):
        cls = classify_vertices(b4)
        assert (cls.p_bar, cls.p_dot) == (1, 0)
        assert cls.boundary_vertices == (0, 1)

    def test_after_dipole_insert(self, s4):
        bigger, _, _ = insert_1_dipole(s4, (0, 1), 0)
        cls = classify_vertices(bigger)
        assert (cls.p_bar, cls.p_dot) == (0, 2)


class TestContractedCrystallization:
    def test_s4_contracted(self, s4):
        assert all(is_contracted(s4).values())

    def test_swap_join_not_contracted_at_final(self):
        flags = is_contracted(swap_join_graph())
        assert flags == {0: True, 1: True, 2: True, 3: True, 4: False}

    def test_b4_contracted(self, b4):
        assert all(is_contracted(b4).values())

    def test_crystallization(self, s4, b4):
        assert is_crystallization(b4, h=1)
        assert is_crystallization(s4, h=0)
        assert not is_crystallization(swap_join_graph(), h=0)

    def test_negative_h(self, s4):
        with pytest.raises(PreconditionError):
            is_crystallization(s4, h=-1)


class TestRandomGems:
    def test_order_two_forced(self):
        assert random_gem(4, 1, seed=0) == order_two_gem(4)

    def test_deterministic(self):
        assert random_gem(2, 3, seed=42) == random_gem(2, 3, seed=42)

    def test_p_zero_rejected(self):
        with pytest.raises(PreconditionError):
            random_gem(4, 0, seed=1)

    def test_boundary_gem_shape(self):
        g = random_boundary_gem(4, 5, 2, seed=7)
        assert not g.is_regular
        assert len(g.boundary_vertices()) == 6

    def test_boundary_gem_bad_split(self):
        with pytest.raises(PreconditionError):
            random_boundary_gem(4, 3, 3, seed=7)

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 4), st.integers(2, 6), st.integers(0, 2 ** 20))
    def test_random_gem_validates(self, d, p, seed):
        g = random_gem(d, p, seed=seed)
        assert g.is_regular and g.num_vertices == 2 * p

    @settings(max_examples=40, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2 ** 20))
    def test_random_boundary_gem_validates(self, p, seed):
        g = random_boundary_gem(4, p, p - 1, seed=seed)
        assert not g.is_regular


class TestStructuralProperties:
    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2 ** 20))
    def test_pair_counts_dominate_regular(self, p, seed):
        g = random_boundary_gem(4, p, max(0, p - 2), seed=seed)
        boundary = set(g.boundary_vertices())
        for i in range(5):
            for j in range(i + 1, 5):
                dec = residues(g, {i, j})
                assert dec.count >= dec.regular_count >= 0
                for comp, reg in zip(dec.components, dec.regular):
                    if not reg:
                        assert any(v in boundary for v in comp)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2 ** 20))
    def test_edge_counts_per_color(self, p, seed):
        g = random_boundary_gem(4, p, max(0, p - 2), seed=seed)
        cls = classify_vertices(g)
        per_color = {c: 0 for c in g.colors}
        for _, _, c in g.edges():
            per_color[c] += 1
        assert all(per_color[c] == cls.p for c in range(4))
        assert per_color[4] == cls.p_dot

    @settings(max_examples=25, deadline=None)
    @given(st.integers(1, 8), st.integers(0, 2 ** 20))
    def test_components_match_bruteforce(self, p, seed):
        g = random_gem(4, p, seed=seed)
        edges = list(g.edges())
        for colors in [{0, 1}, {2, 4}, {0, 1, 2}, {1, 2, 3, 4}]:
            assert residues(g, colors).count == bf.count_components(
                g.num_vertices, edges, colors)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(2, 8), st.integers(0, 2 ** 20))
    def test_bipartite_even_cycles(self, p, seed):
        g = random_boundary_gem(4, p, max(0, p - 1), seed=seed)
        if not g.is_bipartite:
            return
        for i in range(5):
            for j in range(i + 1, 5):
                dec = residues(g, {i, j})
                for comp, reg in zip(dec.components, dec.regular):
                    if reg:
                        assert len(comp) % 2 == 0
