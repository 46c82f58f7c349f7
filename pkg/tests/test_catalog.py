import networkx as nx
import numpy as np
import pytest

from hubstate.catalog import (
    CORPUS_DIR,
    canonical_code,
    connected_graphs,
    corpus_graphs,
    random_connected_graph,
    random_cover,
)
from hubstate.errors import CapacityError
from hubstate.graph import parse_edge_list
from hubstate.hubs import validate_cover


def _to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(tuple(e) for e in g.edges)
    return h


# connected graphs on n unlabeled vertices
KNOWN_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


@pytest.mark.parametrize("n", range(1, 8))
def test_catalog_counts(n):
    assert len(connected_graphs(n)) == KNOWN_COUNTS[n]


@pytest.mark.parametrize("n", range(2, 8))
def test_catalog_matches_networkx_atlas(n):
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == n and nx.is_connected(h)]
    ours = [_to_nx(g) for g in connected_graphs(n)]
    assert len(atlas) == len(ours)
    for g in ours:
        assert nx.is_connected(g)
    # every atlas graph is isomorphic to exactly one catalog graph
    buckets = {}
    for g in ours:
        buckets.setdefault(nx.weisfeiler_lehman_graph_hash(g), []).append(g)
    for h in atlas:
        matches = [g for g in buckets.get(nx.weisfeiler_lehman_graph_hash(h), []) if nx.is_isomorphic(g, h)]
        assert len(matches) == 1


def test_canonical_code_is_invariant():
    rng = np.random.default_rng(3)
    for g in connected_graphs(6)[::7]:
        adj = nx.to_numpy_array(_to_nx(g), nodelist=range(1, 7), dtype=np.uint8)
        perm = rng.permutation(6)
        assert canonical_code(6, adj) == canonical_code(6, adj[np.ix_(perm, perm)])


def test_catalog_capacity():
    with pytest.raises(CapacityError):
        connected_graphs(8)


def test_random_connected_graph_is_connected_and_seeded():
    for seed in range(20):
        g = random_connected_graph(8, 0.2, seed)
        assert g.is_connected()
        assert g == random_connected_graph(8, 0.2, seed)


def test_random_cover_valid():
    rng = np.random.default_rng(0)
    for g in connected_graphs(5):
        for _ in range(5):
            assert validate_cover(g, random_cover(g, rng).hubs)


def test_bundled_corpus_matches_generator():
    graphs = corpus_graphs()
    assert {"star3", "star7", "ring3", "ring4", "ring5", "ring6"} <= set(graphs)
    assert sum(name.startswith("random") for name in graphs) == 5
    for name, g in graphs.items():
        assert parse_edge_list((CORPUS_DIR / f"{name}.edges").read_text()) == g
        assert g.is_connected() and g.n <= 8
