import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wellcover import catalog as cat
from wellcover.graph import Graph, canonical_form, girth, is_connected

from conftest import graphs


class TestCertificate:
    @given(graphs(max_n=8), st.randoms())
    @settings(max_examples=150, deadline=None)
    def test_invariant_under_relabeling(self, g, rng):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert cat.certificate(g.adj) == cat.certificate(h.adj)

    def test_agreement_with_networkx_isomorphism(self):
        rng = random.Random(20240917)
        for _ in range(250):
            n = rng.randint(2, 7)
            e1 = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
            e2 = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
            g, h = Graph(n, e1), Graph(n, e2)
            G = nx.empty_graph(n)
            G.add_edges_from(e1)
            H = nx.empty_graph(n)
            H.add_edges_from(e2)
            same = cat.certificate(g.adj) == cat.certificate(h.adj)
            assert same == nx.is_isomorphic(G, H)

    def test_agreement_with_canonical_form(self, catalog_by_n):
        for g in catalog_by_n[6]:
            for h in catalog_by_n[6][:20]:
                assert (cat.certificate(g.adj) == cat.certificate(h.adj)) == (
                    canonical_form(g) == canonical_form(h)
                )


class TestGeneration:
    def test_known_counts(self, catalog_by_n):
        for n in range(8):
            assert len(catalog_by_n[n]) == cat.KNOWN_GRAPH_COUNTS[n]

    def test_known_connected_counts(self, connected_by_n):
        for n in range(8):
            assert len(connected_by_n[n]) == cat.KNOWN_CONNECTED_COUNTS[n]

    def test_counts_vs_labeled_enumeration(self):
        # independent oracle: canonicalize every labeled graph on n <= 5
        for n in range(6):
            pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
            keys = set()
            for bits in range(1 << len(pairs)):
                edges = [p for i, p in enumerate(pairs) if bits >> i & 1]
                keys.add(canonical_form(Graph(n, edges)))
            assert len(keys) == cat.KNOWN_GRAPH_COUNTS[n]

    def test_catalog_has_no_duplicates(self, catalog_by_n):
        for n in range(8):
            certs = [cat.certificate(g.adj) for g in catalog_by_n[n]]
            assert len(set(certs)) == len(certs)

    def test_graphs_up_to(self):
        out = list(cat.graphs_up_to(4, connected=True))
        assert len(out) == 1 + 1 + 2 + 6

    def test_girth_catalogs_match_filtering(self):
        for gmin in (5, 6):
            for n in range(8):
                generated = list(cat.graphs_with_girth_at_least(n, gmin))
                filtered = [g for g in cat.all_graphs(n) if girth(g) >= gmin]
                assert len(generated) == len(filtered), (gmin, n)
                assert {cat.certificate(g.adj) for g in generated} == {
                    cat.certificate(g.adj) for g in filtered
                }

    def test_girth_catalog_members_are_valid(self):
        for g in cat.graphs_with_girth_at_least(9, 6, connected=True):
            assert girth(g) >= 6 and is_connected(g)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            list(cat.all_graphs(-1))


class TestDiskCache:
    def test_round_trip(self, tmp_path, monkeypatch):
        monkeypatch.setenv("WELLCOVER_CACHE_DIR", str(tmp_path))
        key = ("all", 4)
        level = cat._all_graphs_adj(4)
        cat._disk_store(key, level)
        loaded = cat._disk_load(key)
        assert loaded == level

    def test_cache_off(self, monkeypatch):
        monkeypatch.setenv("WELLCOVER_CACHE_DIR", "off")
        assert cat._cache_dir() is None


class TestAtlasAgreement:
    def test_catalog_matches_networkx_atlas_exactly(self, catalog_by_n):
        # the atlas lists every graph on up to 7 vertices; certificates must
        # match class-for-class, not merely in count
        from networkx.generators.atlas import graph_atlas_g

        atlas = graph_atlas_g()[1:]  # entry 0 is the placeholder
        by_n = {}
        for G in atlas:
            n = G.number_of_nodes()
            relabeled = {u: i for i, u in enumerate(G.nodes())}
            g = Graph(n, [(relabeled[u], relabeled[v]) for u, v in G.edges()])
            by_n.setdefault(n, set()).add(cat.certificate(g.adj))
        for n in range(1, 8):
            ours = {cat.certificate(g.adj) for g in catalog_by_n[n]}
            assert ours == by_n[n], n
