from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hubstate.errors import CapacityError, DomainError
from hubstate.graph import edgeless_graph
from hubstate.pauli import (
    GeneratorSet,
    PauliString,
    cluster_operator,
    commutes,
    cz_conjugate,
    ghz_generators,
    graph_generators,
    group_elements,
    h_conjugate,
    multiply,
    parse_pauli,
)

from oracle import H, cz_matrix, letters_matrix, pauli_matrix, single_qubit_gate
from test_graph import graphs


def P(text, n):
    return parse_pauli(text, n)


@st.composite
def paulis(draw, n=None, max_n=10):
    n = n or draw(st.integers(1, max_n))
    full = (1 << n) - 1
    return PauliString(
        n,
        draw(st.integers(0, 3)),
        draw(st.integers(0, full)),
        draw(st.integers(0, full)),
    )


# -- text form ------------------------------------------------------------------

def test_text_round_trip_examples():
    assert P("+X1Z2Z3", 3).to_text() == "+X1Z2Z3"
    assert P("-Y1Y2", 2).to_text() == "-Y1Y2"
    assert P("+I", 4).to_text() == "+I"
    assert P("-iZ3", 3).to_text() == "-iZ3"
    assert P("X1", 1) == PauliString(1, 0, 1, 0)


def test_y_carries_phase():
    y = P("+Y1", 1)
    assert (y.phase_exp, y.x_mask, y.z_mask) == (1, 1, 1)
    assert np.allclose(pauli_matrix(y), letters_matrix("Y"))


@pytest.mark.parametrize("bad", ["", "Q1", "X", "X1X1", "+X1 junk", "X4"])
def test_parse_rejects(bad):
    with pytest.raises(DomainError):
        parse_pauli(bad, 3)


@given(paulis())
def test_text_round_trip(p):
    assert parse_pauli(p.to_text(), p.n) == p


@given(paulis())
def test_json_round_trip(p):
    assert PauliString.from_json(p.to_json()) == p


# -- multiplication -------------------------------------------------------------

def test_multiply_xx_zz():
    assert multiply(P("X1X2", 2), P("Z1Z2", 2)) == P("-Y1Y2", 2)


def test_multiply_x_z_single():
    assert multiply(P("X1", 1), P("Z1", 1)) == P("-iY1", 1)


@given(paulis())
def test_hermitian_squares_to_identity(p):
    if p.is_hermitian():
        assert multiply(p, p) == PauliString.identity(p.n)


def test_multiply_size_mismatch():
    with pytest.raises(DomainError):
        multiply(P("X1", 1), P("X1", 2))
    with pytest.raises(DomainError):
        commutes(P("X1", 1), P("X1", 2))


def _all_paulis(n):
    full = 1 << n
    return [PauliString(n, e, x, z) for e in range(4) for x in range(full) for z in range(full)]


@pytest.mark.parametrize("n", [1, 2])
def test_multiply_matches_matrices_exhaustive_small(n):
    ps = _all_paulis(n)
    mats = {p: pauli_matrix(p) for p in ps}
    for p, q in product(ps, repeat=2):
        assert np.array_equal(pauli_matrix(multiply(p, q)), mats[p] @ mats[q])
        comm = mats[p] @ mats[q] - mats[q] @ mats[p]
        assert commutes(p, q) == (not np.any(comm))


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_multiply_associative(data):
    n = data.draw(st.integers(1, 10))
    a, b, c = (data.draw(paulis(n=n)) for _ in range(3))
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


# -- conjugation ----------------------------------------------------------------

def test_cz_rules():
    assert cz_conjugate(P("X1", 2), 1, 2) == P("X1Z2", 2)
    assert cz_conjugate(P("X2", 2), 1, 2) == P("Z1X2", 2)
    assert cz_conjugate(P("Z1", 2), 1, 2) == P("Z1", 2)
    # CZ (Y x I) CZ evaluated with 4x4 matrices is Y x Z
    cz = cz_matrix(2, 1, 2)
    assert np.allclose(cz @ letters_matrix("YI") @ cz, letters_matrix("YZ"))
    assert cz_conjugate(P("Y1", 2), 1, 2) == P("Y1Z2", 2)


def test_h_rules():
    assert h_conjugate(P("X1", 1), 1) == P("Z1", 1)
    assert h_conjugate(P("Z1", 1), 1) == P("X1", 1)
    assert np.allclose(H @ letters_matrix("Y") @ H, -letters_matrix("Y"))
    assert h_conjugate(P("Y1", 1), 1) == P("-Y1", 1)


def test_conjugation_domain_errors():
    with pytest.raises(DomainError):
        cz_conjugate(P("X1", 2), 1, 1)
    with pytest.raises(DomainError):
        cz_conjugate(P("X1", 2), 1, 3)
    with pytest.raises(DomainError):
        h_conjugate(P("X1", 2), 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_conjugation_matches_matrices_exhaustive(n):
    hs = {k: single_qubit_gate(n, k, H) for k in range(1, n + 1)}
    czs = {(i, j): cz_matrix(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j}
    for p in _all_paulis(n):
        m = pauli_matrix(p)
        for k, h in hs.items():
            assert np.allclose(pauli_matrix(h_conjugate(p, k)), h @ m @ h)
        for (i, j), cz in czs.items():
            assert np.allclose(pauli_matrix(cz_conjugate(p, i, j)), cz @ m @ cz)


@given(st.data())
def test_conjugations_are_involutions(data):
    p = data.draw(paulis(max_n=10))
    k = data.draw(st.integers(1, p.n))
    assert h_conjugate(h_conjugate(p, k), k) == p
    if p.n >= 2:
        i, j = data.draw(st.lists(st.integers(1, p.n), min_size=2, max_size=2, unique=True))
        assert cz_conjugate(cz_conjugate(p, i, j), i, j) == p


# -- cluster operators and generator sets ---------------------------------------

def test_cluster_operator_examples(star7, ring3, isolated):
    assert cluster_operator(star7, 1).to_text() == "+X1Z2Z3Z4Z5Z6Z7"
    assert cluster_operator(ring3, 2) == P("Z1X2Z3", 3)
    assert cluster_operator(isolated, 3) == P("X3", 3)
    with pytest.raises(DomainError):
        cluster_operator(ring3, 4)


def test_graph_generators_examples(star7, ring3):
    assert graph_generators(star7).to_text() == [
        "+X1Z2Z3Z4Z5Z6Z7", "+Z1X2", "+Z1X3", "+Z1X4", "+Z1X5", "+Z1X6", "+Z1X7",
    ]
    assert graph_generators(ring3).to_text() == ["+X1Z2Z3", "+Z1X2Z3", "+Z1Z2X3"]
    assert graph_generators(edgeless_graph(3)).to_text() == ["+X1", "+X2", "+X3"]


def test_cluster_operator_is_cz_image_of_x(ring3):
    # conjugating X_i by every CZ on the edges reproduces K_i
    for i in ring3.vertices:
        p = P(f"X{i}", 3)
        for e in ring3.sorted_edges:
            p = cz_conjugate(p, e.a, e.b)
        assert p == cluster_operator(ring3, i)


@settings(deadline=None)
@given(graphs(max_n=10))
def test_graph_generators_commute_and_are_hermitian(g):
    gens = graph_generators(g)
    for k in gens:
        assert k.is_hermitian()
        assert multiply(k, k) == PauliString.identity(g.n)
    for a, b in combinations(gens, 2):
        assert commutes(a, b)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=8))
def test_graph_generators_commute_as_matrices(g):
    mats = [pauli_matrix(k, sparse=True) for k in graph_generators(g)]
    for a, b in combinations(mats, 2):
        assert not np.any((a @ b - b @ a).toarray())


def test_generator_set_validation():
    with pytest.raises(DomainError):
        GeneratorSet(1, (P("X1", 1), P("Z1", 1)))
    with pytest.raises(DomainError):
        GeneratorSet(1, (P("+iX1", 1),))


@given(graphs(max_n=8))
def test_generator_set_json_round_trip(g):
    gens = graph_generators(g)
    assert GeneratorSet.from_json(gens.to_json()) == gens


def test_ghz_generators():
    assert ghz_generators(3).to_text() == ["+Z1Z2", "+Z2Z3", "+X1X2X3"]
    assert ghz_generators(2).to_text() == ["+Z1Z2", "+X1X2"]
    g4 = ghz_generators(4)
    assert len(g4) == 4
    assert all(commutes(a, b) for a, b in combinations(g4, 2))
    with pytest.raises(DomainError):
        ghz_generators(1)


def test_group_elements_s2():
    gens = GeneratorSet(2, (P("X1X2", 2), P("Z1Z2", 2)))
    elems = group_elements(gens)
    assert {e.to_text() for e in elems} == {"+I", "+X1X2", "-Y1Y2", "+Z1Z2"}
    assert len(elems) == 4


def test_group_elements_empty():
    assert group_elements(GeneratorSet(3, ())) == [PauliString.identity(3)]


def test_group_elements_ghz3():
    elems = group_elements(ghz_generators(3))
    assert len(set(elems)) == 8
    assert all(e.is_hermitian() for e in elems)
    assert all(commutes(a, b) for a, b in combinations(elems, 2))
    # enumeration oracle: multiply each subset's matrices directly
    gens = list(ghz_generators(3))
    expected = set()
    for mask in range(8):
        m = np.eye(8, dtype=complex)
        for k in range(3):
            if mask >> k & 1:
                m = m @ pauli_matrix(gens[k])
        expected.add(tuple(np.round(m, 12).ravel()))
    got = {tuple(np.round(pauli_matrix(e), 12).ravel()) for e in elems}
    assert got == expected


def test_group_elements_capacity():
    gens = [PauliString(17, 0, 0, 1 << k) for k in range(17)]
    with pytest.raises(CapacityError):
        group_elements(gens)


@pytest.mark.parametrize("n", [2, 3, 5, 8])
def test_independent_generators_give_full_group(n):
    assert len(set(group_elements(ghz_generators(n)))) == 2 ** n
