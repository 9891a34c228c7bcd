import math
from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wellcover.graph import (
    Graph,
    Graph6Error,
    brute_force_canonical,
    canonical_form,
    complement,
    complete,
    complete_bipartite,
    closed_neighborhood,
    components,
    cycle,
    delete_vertex,
    delete_vertices,
    disjoint_union,
    empty_graph,
    g_ab,
    girth,
    induced,
    is_bipartite,
    is_connected,
    mask_of,
    max_degree,
    neighborhood,
    parse_graph6,
    path,
    vertices_of,
    write_graph6,
)

from conftest import graphs


def to_networkx(g):
    G = nx.empty_graph(g.n)
    G.add_edges_from(g.edges())
    return G


class TestGraph6:
    def test_k1_k2(self):
        assert write_graph6(complete(1)) == "@"
        assert write_graph6(complete(2)) == "A_"
        assert parse_graph6("A_").edges() == [(0, 1)]
        assert parse_graph6("@").n == 1

    def test_round_trip_example(self):
        assert write_graph6(parse_graph6("D?{")) == "D?{"

    def test_header_tolerated(self):
        assert parse_graph6(">>graph6<<A_") == parse_graph6("A_")

    def test_empty_graph(self):
        assert write_graph6(empty_graph(0)) == "?"
        assert parse_graph6("?").n == 0

    @pytest.mark.parametrize(
        "line, fragment",
        [
            ("", "byte 0"),
            (">>sparse6<<A_", "byte 0"),
            ("B", "truncated"),
            ("A_?", "trailing"),
            ("A\x05", "byte 1"),
            ("Aw", "padding"),
            ("~~~~~~", "long-form"),
        ],
    )
    def test_errors_name_offsets(self, line, fragment):
        with pytest.raises(Graph6Error, match=fragment):
            parse_graph6(line)

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_graph6(write_graph6(g)) == g

    @given(graphs(max_n=12))
    def test_matches_networkx(self, g):
        ours = write_graph6(g)
        theirs = nx.to_graph6_bytes(to_networkx(g), header=False).decode().strip()
        assert ours == theirs

    def test_large_order_header(self):
        g = empty_graph(100)
        assert parse_graph6(write_graph6(g)).n == 100


class TestGenerators:
    def test_cycle(self):
        c5 = cycle(5)
        assert c5.n == 5 and c5.edge_count() == 5
        assert all(c5.degree(v) == 2 for v in range(5))

    def test_disjoint_union(self):
        g = disjoint_union([complete(2), complete(2)])
        assert g.n == 4 and g.edge_count() == 2

    def test_complete_bipartite(self):
        g = complete_bipartite(2, 3)
        assert g.edge_count() == 6
        assert is_bipartite(g) is not None

    @pytest.mark.parametrize(
        "factory",
        [lambda: cycle(2), lambda: path(0), lambda: complete(0),
         lambda: complete_bipartite(0, 3)],
    )
    def test_parameter_minimums(self, factory):
        with pytest.raises(ValueError):
            factory()

    def test_construction_validation(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 5)])
        with pytest.raises(ValueError):
            Graph.from_adj((1, 0))  # asymmetric


class TestNeighborhoods:
    def test_open_neighborhood_on_cycle(self):
        assert neighborhood(cycle(5), mask_of([0])) == mask_of([1, 4])

    def test_empty_set(self):
        assert neighborhood(cycle(5), 0) == 0

    def test_isolated_vertex(self):
        g = disjoint_union([complete(3), complete(1)])
        assert neighborhood(g, mask_of([3])) == 0

    def test_closed_neighborhood(self):
        g = cycle(5)
        assert closed_neighborhood(g, mask_of([0])) == mask_of([0, 1, 4])

    def test_open_neighborhood_may_intersect(self):
        g = complete(3)
        assert neighborhood(g, mask_of([0, 1])) == g.full_mask


class TestSubgraphs:
    def test_cycle_minus_vertex_is_path(self):
        g, labels = delete_vertex(cycle(4), 0)
        assert labels == (1, 2, 3)
        assert sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_induced_identity(self):
        g = cycle(5)
        h, labels = induced(g, g.full_mask)
        assert h == g and labels == (0, 1, 2, 3, 4)

    def test_path_minus_middle(self):
        g, _ = delete_vertex(path(3), 1)
        assert g.n == 2 and g.edge_count() == 0

    def test_delete_degree_relation(self):
        g = cycle(6)
        h, labels = delete_vertex(g, 2)
        for new, old in enumerate(labels):
            expected = g.degree(old) - (1 if g.has_edge(old, 2) else 0)
            assert h.degree(new) == expected

    def test_g_ab_on_c5(self):
        h, labels = g_ab(cycle(5), 0, 1)
        assert h.n == 1 and labels == (3,)

    def test_g_ab_on_k2(self):
        h, _ = g_ab(complete(2), 0, 1)
        assert h.n == 0

    def test_g_ab_on_c7(self):
        h, labels = g_ab(cycle(7), 0, 1)
        assert labels == (3, 4, 5)
        assert sorted(h.edges()) == [(0, 1), (1, 2)]

    def test_g_ab_requires_edge(self):
        with pytest.raises(ValueError):
            g_ab(cycle(5), 0, 2)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            delete_vertex(cycle(4), 7)
        with pytest.raises(ValueError):
            delete_vertices(cycle(4), mask_of([5]))


class TestStructure:
    def test_girth_values(self):
        assert girth(path(5)) == math.inf
        assert girth(cycle(7)) == 7
        assert girth(complete(4)) == 3
        assert girth(complete_bipartite(2, 3)) == 4

    @given(graphs())
    @settings(max_examples=150)
    def test_girth_infinite_iff_forest(self, g):
        forest = g.edge_count() == g.n - len(components(g))
        assert (girth(g) == math.inf) == forest

    def test_bipartite(self):
        assert is_bipartite(cycle(5)) is None
        left, right = is_bipartite(cycle(6))
        assert left | right == cycle(6).full_mask and left & right == 0

    @given(graphs())
    @settings(max_examples=100)
    def test_bipartite_matches_networkx(self, g):
        ours = is_bipartite(g) is not None
        assert ours == nx.is_bipartite(to_networkx(g))

    def test_components_and_connectivity(self):
        g = disjoint_union([complete(3), path(2)])
        assert components(g) == [mask_of([0, 1, 2]), mask_of([3, 4])]
        assert not is_connected(g)
        assert is_connected(empty_graph(0))

    def test_max_degree(self):
        assert max_degree(complete_bipartite(2, 3)) == 3
        assert max_degree(empty_graph(0)) == 0

    def test_complement_degrees(self):
        g = cycle(5)
        h = complement(g)
        assert all(h.degree(v) == 2 for v in range(5))


class TestCanonicalForm:
    def test_relabelings_agree(self):
        p3a = Graph(3, [(0, 1), (1, 2)])
        p3b = Graph(3, [(1, 0), (0, 2)])
        assert canonical_form(p3a) == canonical_form(p3b)
        assert canonical_form(p3a) != canonical_form(complete(3))

    def test_all_six_labelings_of_p3(self):
        keys = set()
        for perm in permutations(range(3)):
            g = Graph(3, [(perm[0], perm[1]), (perm[1], perm[2])])
            keys.add(canonical_form(g))
        assert len(keys) == 1

    def test_matches_brute_force_exhaustively(self):
        for n in range(5):
            for bits in range(1 << (n * (n - 1) // 2)):
                pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
                edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
                g = Graph(n, edges)
                assert canonical_form(g) == brute_force_canonical(g)

    @given(graphs(max_n=6))
    @settings(max_examples=150, deadline=None)
    def test_matches_brute_force_random(self, g):
        assert canonical_form(g) == brute_force_canonical(g)

    @given(graphs(max_n=10), st.randoms())
    @settings(max_examples=120, deadline=None)
    def test_invariant_under_relabeling(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert canonical_form(g) == canonical_form(h)

    def test_cap(self):
        with pytest.raises(ValueError, match="n <= 10"):
            canonical_form(empty_graph(11))
