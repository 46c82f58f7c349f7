"""
Graph states from the cluster operators of a hub set.

For a covering hub set ``B`` of size ``b`` the graph state equals::

    2**(-b/2) * sum over subsets T of B of (prod_{i in T} K_i) |seed>

where the seed is ``|0>`` on every hub and ``|+>`` elsewhere. Every vertex
outside ``B`` has all its neighbors inside ``B``, so the seed is already a +1
eigenvector of the non-hub cluster operators; the sum projects onto the rest.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import CapacityError, DomainError
from .graph import Graph, neighborhood, vertex_bit
from .hubs import HubSet, as_hubset, min_cover_exact
from .pauli import PauliString, cluster_operator, multiply
from .statevector import (
    DEFAULT_TOL,
    StateVector,
    _check_n,
    apply_pauli,
    build_graph_state,
    states_equal,
)

MAX_HUBS = 16


@dataclass(frozen=True)
class ExpansionTerm:
    subset: tuple[int, ...]
    op: PauliString


@dataclass(frozen=True)
class HubExpansion:
    graph: Graph
    hubs: HubSet
    terms: tuple[ExpansionTerm, ...]
    norm: float

    def __len__(self):
        return len(self.terms)

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "hubs": list(self.hubs.hubs),
            "method": self.hubs.method,
            "norm": self.norm,
            "term_count": len(self.terms),
            "terms": [
                {"subset": list(t.subset), "op": t.op.to_json(), "text": t.op.to_text()}
                for t in self.terms
            ],
        }


def seed_state(g: Graph, hubs) -> StateVector:
    """``|0>`` on hub qubits, ``|+>`` on the rest (no normalization prefactor)."""
    hubs = as_hubset(g, hubs)
    _check_n(g.n)
    idx = np.arange(1 << g.n)
    hub_mask = sum(vertex_bit(g.n, k) for k in hubs)
    amps = np.where((idx & hub_mask) == 0, 2.0 ** (-(g.n - len(hubs)) / 2), 0.0)
    return StateVector(g.n, amps.astype(np.complex128))


def expand_terms(g: Graph, hubs) -> HubExpansion:
    """All ``2**b`` subset products of hub cluster operators.

    Terms are ordered by subset size, then lexicographically; each product is
    taken in ascending vertex order.
    """
    hubs = as_hubset(g, hubs)
    b = len(hubs)
    if b > MAX_HUBS:
        raise CapacityError(f"expansion is capped at {MAX_HUBS} hubs (2**{MAX_HUBS} terms), got {b}")
    ks = {i: cluster_operator(g, i) for i in hubs}
    terms = []
    for r in range(b + 1):
        for subset in combinations(hubs.hubs, r):
            op = PauliString.identity(g.n)
            for i in subset:
                op = multiply(op, ks[i])
            terms.append(ExpansionTerm(subset, op))
    return HubExpansion(g, hubs, tuple(terms), 2.0 ** (-b / 2))


def build_state_via_hubs(g: Graph, hubs) -> StateVector:
    expansion = expand_terms(g, hubs)
    seed = seed_state(g, expansion.hubs)
    total = np.zeros(1 << g.n, dtype=np.complex128)
    for term in expansion.terms:
        total += apply_pauli(seed, term.op).amps
    return StateVector(g.n, expansion.norm * total)


def term_support_mask(g: Graph, hubs) -> int:
    """Qubits any expansion term may act on: the hubs and their neighbors."""
    mask = 0
    for i in hubs:
        mask |= vertex_bit(g.n, i)
        for j in neighborhood(g, i):
            mask |= vertex_bit(g.n, j)
    return mask


@dataclass(frozen=True)
class VerificationReport:
    graph: Graph
    hubs: HubSet
    term_count: int
    max_dev: float
    passed: bool
    tol: float

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "hubs": list(self.hubs.hubs),
            "method": self.hubs.method,
            "term_count": self.term_count,
            "max_dev": self.max_dev,
            "pass": self.passed,
            "tol": self.tol,
            "naive_stabilizers": self.graph.n,
            "hub_stabilizers": len(self.hubs),
        }


def verify_theorem(g: Graph, hubs, tol: float = DEFAULT_TOL) -> VerificationReport:
    """Compare the hub construction with the CZ-product construction, exactly (no phase freedom)."""
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    hubs = as_hubset(g, hubs)
    via_hubs = build_state_via_hubs(g, hubs)
    via_cz = build_graph_state(g)
    cmp = states_equal(via_hubs, via_cz, tol)
    return VerificationReport(g, hubs, 1 << len(hubs), cmp.max_dev, cmp.equal, tol)


@dataclass(frozen=True)
class ReductionReport:
    n: int
    hub_count: int
    naive_stabilizers: int
    hub_stabilizers: int
    hubs: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "hub_count": self.hub_count,
            "naive_stabilizers": self.naive_stabilizers,
            "hub_stabilizers": self.hub_stabilizers,
            "hubs": list(self.hubs),
        }


def reduction_report(g: Graph) -> ReductionReport:
    cover = min_cover_exact(g)
    return ReductionReport(g.n, len(cover), g.n, len(cover), cover.hubs)
