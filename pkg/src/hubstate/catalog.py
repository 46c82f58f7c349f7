"""
Graph catalogs for exhaustive checks.

:func:`connected_graphs` enumerates connected simple graphs up to isomorphism
by vertex augmentation: every connected graph on ``n`` vertices arises from a
connected graph on ``n - 1`` vertices plus one new vertex (delete a leaf of a
spanning tree), and duplicates are removed through a canonical code, the
largest upper-triangle adjacency bitstring over all vertex relabelings.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from pathlib import Path

import numpy as np

from .errors import CapacityError, DomainError
from .graph import Graph, ring_graph, star_graph
from .hubs import HubSet, validate_cover

MAX_CATALOG_N = 7


@lru_cache(maxsize=None)
def _perm_tables(n: int):
    perms = np.array(list(permutations(range(n))), dtype=np.intp)
    iu, ju = np.triu_indices(n, k=1)
    weights = (1 << np.arange(len(iu) - 1, -1, -1)).astype(np.int64)
    return perms[:, iu], perms[:, ju], weights


def canonical_code(n: int, adj: np.ndarray) -> int:
    """Isomorphism-invariant code of a 0/1 adjacency matrix (0-indexed)."""
    pi, pj, weights = _perm_tables(n)
    bits = adj[pi, pj].astype(np.int64)
    return int((bits @ weights).max())


def _from_code(n: int, code: int) -> Graph:
    iu, ju = np.triu_indices(n, k=1)
    m = len(iu)
    pairs = [
        (int(iu[k]) + 1, int(ju[k]) + 1) for k in range(m) if code >> (m - 1 - k) & 1
    ]
    return Graph.from_edges(n, pairs)


@lru_cache(maxsize=None)
def _connected_codes(n: int) -> tuple[int, ...]:
    if n == 1:
        return (0,)
    codes = set()
    for parent in _connected_codes(n - 1):
        g = _from_code(n - 1, parent)
        base = np.zeros((n, n), dtype=np.uint8)
        for e in g.edges:
            base[e.a - 1, e.b - 1] = base[e.b - 1, e.a - 1] = 1
        for nbrs in range(1, 1 << (n - 1)):
            adj = base.copy()
            for v in range(n - 1):
                if nbrs >> v & 1:
                    adj[v, n - 1] = adj[n - 1, v] = 1
            codes.add(canonical_code(n, adj))
    return tuple(sorted(codes))


def connected_graphs(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on ``n`` vertices.

    Representatives are canonical relabelings, ordered by canonical code.
    """
    if not 1 <= n <= MAX_CATALOG_N:
        raise CapacityError(f"catalog supports 1 <= n <= {MAX_CATALOG_N}, got {n}")
    return [_from_code(n, c) for c in _connected_codes(n)]


def random_connected_graph(n: int, extra_edge_prob: float, seed: int) -> Graph:
    """Random spanning tree on ``1..n`` plus each remaining pair with probability ``extra_edge_prob``."""
    if n < 1:
        raise DomainError("n must be positive")
    rng = np.random.default_rng(seed)
    order = [int(v) + 1 for v in rng.permutation(n)]
    pairs = set()
    for k in range(1, n):
        parent = order[int(rng.integers(k))]
        pairs.add((min(parent, order[k]), max(parent, order[k])))
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            if (a, b) not in pairs and rng.random() < extra_edge_prob:
                pairs.add((a, b))
    return Graph.from_edges(n, pairs)


def random_cover(g: Graph, rng: np.random.Generator, keep_prob: float = 0.5) -> HubSet:
    """A random valid hub set, not necessarily minimal.

    Each vertex joins with probability ``keep_prob``; every edge still
    uncovered afterwards gets a uniformly chosen endpoint.
    """
    hubs = {v for v in g.vertices if rng.random() < keep_prob}
    for e in g.sorted_edges:
        if e.a not in hubs and e.b not in hubs:
            hubs.add(e.a if rng.random() < 0.5 else e.b)
    assert validate_cover(g, hubs)
    return HubSet(tuple(sorted(hubs)), g.n, "user-supplied")


# -- bundled example corpus ---------------------------------------------------

CORPUS_DIR = Path(__file__).parent / "corpus"

_RANDOM_CORPUS = [
    # (name, n, extra edge probability, seed)
    ("random5_s11", 5, 0.3, 11),
    ("random6_s23", 6, 0.3, 23),
    ("random7_s37", 7, 0.25, 37),
    ("random8_s41", 8, 0.2, 41),
    ("random8_s53", 8, 0.35, 53),
]


def corpus_graphs() -> dict[str, Graph]:
    graphs = {f"star{n}": star_graph(n) for n in (3, 7)}
    graphs.update({f"ring{n}": ring_graph(n) for n in (3, 4, 5, 6)})
    for name, n, p, seed in _RANDOM_CORPUS:
        graphs[name] = random_connected_graph(n, p, seed)
    return graphs


def write_corpus(directory: Path = CORPUS_DIR) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, g in corpus_graphs().items():
        path = directory / f"{name}.edges"
        path.write_text(f"# {name}\n" + g.to_edge_list())
        written.append(path)
    return written
