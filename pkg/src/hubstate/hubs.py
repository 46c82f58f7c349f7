"""
Hub selection: vertex sets whose incident edges cover every edge.

A hub set is exactly a vertex cover. Two solvers are provided:
:func:`min_cover_exact` (branch and bound, minimum cardinality, ties broken
toward the lexicographically smallest sorted vertex list) and
:func:`greedy_cover` (max-degree heuristic for anything larger).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .errors import CapacityError, CoverError
from .graph import Edge, Graph, quotient_edges

EXACT_VERTEX_LIMIT = 32

Method = Literal["exact", "greedy", "user-supplied"]


@dataclass(frozen=True)
class HubSet:
    """Covering vertex set for a specific graph.

    Construct through :meth:`for_graph` (or the solvers) so that the cover
    property is checked; the raw constructor trusts its arguments.
    """

    hubs: tuple[int, ...]
    graph_n: int
    method: Method = "user-supplied"

    @classmethod
    def for_graph(cls, g: Graph, hubs: Iterable[int], method: Method = "user-supplied") -> "HubSet":
        hubs = tuple(sorted(set(hubs)))
        missing = uncovered_edges(g, hubs)
        if missing:
            raise CoverError(tuple(missing[0]))
        return cls(hubs, g.n, method)

    def __len__(self):
        return len(self.hubs)

    def __iter__(self):
        return iter(self.hubs)

    def __contains__(self, v):
        return v in self.hubs


def uncovered_edges(g: Graph, hubs: Iterable[int]) -> list[Edge]:
    """Edges of ``g`` with no endpoint in ``hubs``, sorted."""
    covered = set(quotient_edges(g, hubs))
    return [e for e in g.sorted_edges if e not in covered]


def validate_cover(g: Graph, hubs: Iterable[int]) -> bool:
    return set(quotient_edges(g, hubs)) == g.edges


def as_hubset(g: Graph, hubs) -> HubSet:
    """Accept a :class:`HubSet` or any iterable of vertex ids; verify it covers ``g``."""
    if isinstance(hubs, HubSet):
        return HubSet.for_graph(g, hubs.hubs, hubs.method)
    return HubSet.for_graph(g, hubs)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def min_cover_exact(g: Graph) -> HubSet:
    """Minimum vertex cover by branch and bound.

    Branches on the uncovered edge ``(a, b)`` with the smallest ``a``: either
    ``a`` is a hub, or it is not and then every neighbor of ``a`` must be. The
    include branch runs first, so among covers of equal size the search meets
    the lexicographically smallest one first and keeps it. A greedy maximal
    matching on the uncovered edges bounds the remaining cost from below.
    """
    if g.n > EXACT_VERTEX_LIMIT:
        raise CapacityError(
            f"exact cover is limited to {EXACT_VERTEX_LIMIT} vertices (got {g.n}); use greedy_cover"
        )
    n = g.n
    bit = [0] + [1 << (n - k) for k in range(1, n + 1)]
    adj = g.adjacency_masks
    edges = [(e.a, e.b) for e in g.sorted_edges]

    best_mask = sum(bit[1:])
    best_size = n + 1

    def uncovered(chosen: int):
        return [(a, b) for a, b in edges if not (chosen & (bit[a] | bit[b]))]

    def matching_bound(rest) -> int:
        used = 0
        size = 0
        for a, b in rest:
            m = bit[a] | bit[b]
            if not used & m:
                used |= m
                size += 1
        return size

    def search(chosen: int, excluded: int, size: int):
        nonlocal best_mask, best_size
        rest = uncovered(chosen)
        if not rest:
            if size < best_size:
                best_mask, best_size = chosen, size
            return
        if size + matching_bound(rest) >= best_size:
            return
        a, _ = rest[0]
        search(chosen | bit[a], excluded, size + 1)
        forced = adj[a] & ~chosen
        if not forced & excluded:
            search(chosen | forced, excluded | bit[a], size + _popcount(forced))

    search(0, 0, 0)
    hubs = tuple(k for k in g.vertices if best_mask & bit[k])
    return HubSet(hubs, n, "exact")


def greedy_cover(g: Graph) -> HubSet:
    """Repeatedly take the vertex touching the most uncovered edges (ties: smallest id)."""
    remaining = set(g.edges)
    hubs: list[int] = []
    while remaining:
        deg = [0] * (g.n + 1)
        for e in remaining:
            deg[e.a] += 1
            deg[e.b] += 1
        v = max(g.vertices, key=lambda k: (deg[k], -k))
        hubs.append(v)
        remaining = {e for e in remaining if v not in (e.a, e.b)}
    return HubSet(tuple(sorted(hubs)), g.n, "greedy")


def select_hubs(g: Graph, greedy: bool = False) -> HubSet:
    """Exact cover when it fits under the vertex limit, otherwise greedy."""
    if greedy or g.n > EXACT_VERTEX_LIMIT:
        return greedy_cover(g)
    return min_cover_exact(g)
