"""
Simple undirected graphs on vertices ``1..n``.

Edges are stored only in canonical ``(min, max)`` form, so the pair ``(b, a)``
and ``(a, b)`` are the same object once constructed. A union of incident-edge
sets is therefore automatically free of reversed duplicates.

Vertices are 1-indexed throughout the public API. Wherever a vertex set is
packed into an integer, vertex ``k`` of an ``n``-vertex graph occupies bit
``n - k`` (vertex 1 is the most significant bit); see :func:`vertex_bit`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import DomainError, GraphParseError


def vertex_bit(n: int, k: int) -> int:
    """Single-bit mask of vertex/qubit ``k`` in an ``n``-wide register."""
    return 1 << (n - k)


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected edge; ``Edge(3, 1) == Edge(1, 3)``."""

    a: int
    b: int

    def __post_init__(self):
        if self.a == self.b:
            raise DomainError(f"loop edge ({self.a},{self.b}) is not allowed in a simple graph")
        if self.a > self.b:
            lo, hi = self.b, self.a
            object.__setattr__(self, "a", lo)
            object.__setattr__(self, "b", hi)

    def __iter__(self) -> Iterator[int]:
        yield self.a
        yield self.b

    def other(self, v: int) -> int:
        if v == self.a:
            return self.b
        if v == self.b:
            return self.a
        raise DomainError(f"vertex {v} is not an endpoint of {self}")

    def __str__(self):
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class NeighborSet:
    vertex: int
    neighbors: tuple[int, ...]

    def __contains__(self, v):
        return v in self.neighbors

    def __iter__(self):
        return iter(self.neighbors)

    def __len__(self):
        return len(self.neighbors)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with vertex set ``1..n``."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"vertex count must be a positive integer, got {self.n!r}")
        edges = frozenset(e if isinstance(e, Edge) else Edge(*e) for e in self.edges)
        for e in edges:
            if e.a < 1 or e.b > self.n:
                raise DomainError(f"edge {e} has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, frozenset(Edge(a, b) for a, b in pairs))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def _adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for e in self.edges:
            adj[e.a].append(e.b)
            adj[e.b].append(e.a)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """``adjacency_masks[v]`` packs the neighbors of ``v`` (index 0 unused)."""
        return tuple(
            sum(vertex_bit(self.n, u) for u in nbrs) for nbrs in self._adjacency
        )

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise DomainError(f"vertex {v!r} outside 1..{self.n}")

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return len(self._adjacency[v])

    def is_connected(self) -> bool:
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for u in self._adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def to_edge_list(self) -> str:
        lines = [str(self.n)] + [f"{e.a} {e.b}" for e in self.sorted_edges]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [[e.a, e.b] for e in self.sorted_edges]}

    def __str__(self):
        body = ", ".join(str(e) for e in self.sorted_edges)
        return f"Graph(n={self.n}, edges=[{body}])"


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    The first non-comment line holds the vertex count; every following
    non-empty line holds two vertex ids separated by whitespace. Lines whose
    first non-blank character is ``#`` are ignored. Repeated and reversed
    edges collapse to one canonical edge.
    """
    n = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise GraphParseError(f"expected vertex count, got {line!r}", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise GraphParseError(f"vertex count is not an integer: {fields[0]!r}", lineno) from None
            if n < 1:
                raise GraphParseError(f"vertex count must be positive, got {n}", lineno)
            continue
        if len(fields) != 2:
            raise GraphParseError(f"expected 'a b', got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphParseError(f"vertex ids must be integers: {line!r}", lineno) from None
        if a == b:
            raise GraphParseError(f"loop edge ({a},{b}) rejected", lineno)
        for v in (a, b):
            if not 1 <= v <= n:
                raise GraphParseError(f"vertex {v} outside 1..{n}", lineno)
        pairs.append((a, b, lineno))
    if n is None:
        raise GraphParseError("empty edge list: missing vertex count")
    return Graph.from_edges(n, ((a, b) for a, b, _ in pairs))


def neighborhood(g: Graph, a: int) -> NeighborSet:
    """Vertices sharing an edge with ``a``."""
    g.check_vertex(a)
    return NeighborSet(a, g._adjacency[a])


def incident_edges(g: Graph, a: int) -> frozenset[Edge]:
    """Edge-valued neighborhood: all canonical edges with ``a`` as an endpoint."""
    g.check_vertex(a)
    return frozenset(Edge(a, b) for b in g._adjacency[a])


def quotient_edges(g: Graph, hubs: Iterable[int]) -> list[Edge]:
    """Union of the hubs' incident edges, reversed duplicates removed, sorted."""
    union: set[Edge] = set()
    for a in hubs:
        union |= incident_edges(g, a)
    return sorted(union)


# -- standard families ------------------------------------------------------

def star_graph(n: int) -> Graph:
    """Vertex 1 joined to each of ``2..n``."""
    return Graph.from_edges(n, ((1, k) for k in range(2, n + 1)))


def ring_graph(n: int) -> Graph:
    """Cycle ``1-2-...-n-1``; requires ``n >= 3``."""
    if n < 3:
        raise DomainError(f"a ring needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(k, k + 1) for k in range(1, n)] + [(1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((k, k + 1) for k in range(1, n)))


def edgeless_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)))
