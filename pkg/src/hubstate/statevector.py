"""
Dense state vectors of up to 20 qubits.

Basis convention ("q1-msb"): qubit ``k`` of an ``n``-qubit register is bit
``n - k`` of the amplitude index, so the ket ``|q1 q2 ... qn>`` read left to
right is the binary index. Gate functions return new vectors; inputs are
never modified.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .errors import CapacityError, DomainError
from .graph import Graph, vertex_bit
from .pauli import PauliString

MAX_QUBITS = 20
DEFAULT_TOL = 1e-12
CONVENTION = "q1-msb"

_I_POWERS = np.array([1, 1j, -1, -1j])


def _check_n(n: int, lo: int = 1) -> None:
    if not lo <= n <= MAX_QUBITS:
        raise CapacityError(f"state vectors support {lo} <= n <= {MAX_QUBITS} qubits, got {n}")


@dataclass(frozen=True, eq=False)
class StateVector:
    n: int
    amps: np.ndarray

    def __post_init__(self):
        _check_n(self.n)
        amps = np.array(self.amps, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise DomainError(f"expected {1 << self.n} amplitudes, got shape {amps.shape}")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @classmethod
    def basis(cls, bits: str) -> "StateVector":
        """Computational basis state from a bitstring, qubit 1 first."""
        amps = np.zeros(1 << len(bits), dtype=np.complex128)
        amps[int(bits, 2)] = 1.0
        return cls(len(bits), amps)

    @classmethod
    def product(cls, kets: str) -> "StateVector":
        """Product state from single-qubit labels in ``01+-``, qubit 1 first."""
        s = 1 / np.sqrt(2)
        table = {"0": (1, 0), "1": (0, 1), "+": (s, s), "-": (s, -s)}
        amps = np.ones(1, dtype=np.complex128)
        for c in kets:
            amps = np.kron(amps, np.array(table[c], dtype=np.complex128))
        return cls(len(kets), amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amps))

    def __add__(self, other):
        _same_size(self, other)
        return StateVector(self.n, self.amps + other.amps)

    def __sub__(self, other):
        _same_size(self, other)
        return StateVector(self.n, self.amps - other.amps)

    def __mul__(self, scalar):
        return StateVector(self.n, self.amps * scalar)

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "convention": CONVENTION,
            "amps": [[float(a.real), float(a.imag)] for a in self.amps],
        }

    @classmethod
    def from_json(cls, data: dict) -> "StateVector":
        if data.get("convention", CONVENTION) != CONVENTION:
            raise DomainError(f"unsupported basis convention {data['convention']!r}")
        amps = np.array([complex(re, im) for re, im in data["amps"]])
        return cls(int(data["n"]), amps)

    def to_text(self, cutoff: float = 1e-14) -> str:
        """One line per amplitude above ``cutoff``: bitstring, real part, imaginary part."""
        lines = []
        for idx in np.flatnonzero(np.abs(self.amps) > cutoff):
            a = self.amps[idx]
            lines.append(f"{idx:0{self.n}b}  {a.real:+.15f}  {a.imag:+.15f}")
        return "\n".join(lines)


def _same_size(a: StateVector, b: StateVector) -> None:
    if a.n != b.n:
        raise DomainError(f"size mismatch: {a.n} vs {b.n} qubits")


def _check_qubit(s: StateVector, k: int) -> None:
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= s.n:
        raise DomainError(f"qubit {k!r} outside 1..{s.n}")


def plus_state(n: int) -> StateVector:
    _check_n(n)
    return StateVector(n, np.full(1 << n, 2.0 ** (-n / 2), dtype=np.complex128))


def zero_state(n: int) -> StateVector:
    _check_n(n)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    return StateVector(n, amps)


def apply_cz(s: StateVector, i: int, j: int) -> StateVector:
    _check_qubit(s, i)
    _check_qubit(s, j)
    if i == j:
        raise DomainError("CZ needs two distinct qubits")
    both = vertex_bit(s.n, i) | vertex_bit(s.n, j)
    idx = np.arange(1 << s.n)
    amps = s.amps.copy()
    amps[(idx & both) == both] *= -1
    return StateVector(s.n, amps)


def apply_h(s: StateVector, i: int) -> StateVector:
    _check_qubit(s, i)
    view = s.amps.reshape(1 << (i - 1), 2, 1 << (s.n - i))
    a0, a1 = view[:, 0, :], view[:, 1, :]
    out = np.empty_like(view)
    out[:, 0, :] = a0 + a1
    out[:, 1, :] = a0 - a1
    return StateVector(s.n, out.reshape(-1) / np.sqrt(2))


def _parity(values: np.ndarray) -> np.ndarray:
    if hasattr(np, "bitwise_count"):
        return (np.bitwise_count(values) & 1).astype(np.int64)
    parity = np.zeros(values.shape, dtype=np.int64)
    while values.any():
        parity ^= values & 1
        values = values >> 1
    return parity


def apply_pauli(s: StateVector, p: PauliString) -> StateVector:
    """Apply ``i**phase * X^x Z^z``: amplitude at ``k`` moves to ``k ^ x`` with sign ``(-1)^|k & z|``."""
    if p.n != s.n:
        raise DomainError(f"size mismatch: state has {s.n} qubits, operator {p.n}")
    idx = np.arange(1 << s.n)
    parity = _parity(idx & p.z_mask)
    signed = s.amps * (1 - 2 * parity) * _I_POWERS[p.phase_exp]
    out = np.empty_like(signed)
    out[idx ^ p.x_mask] = signed
    return StateVector(s.n, out)


def build_graph_state(g: Graph, edge_order: Iterable | None = None) -> StateVector:
    """CZ on every edge of ``g`` applied to ``|+>^n``.

    ``edge_order`` only exists so callers can check that the order is
    irrelevant; it must list every edge exactly once.
    """
    _check_n(g.n)
    edges = list(g.sorted_edges if edge_order is None else edge_order)
    s = plus_state(g.n)
    for e in edges:
        a, b = e
        s = apply_cz(s, a, b)
    return s


def ghz_state(n: int) -> StateVector:
    _check_n(n, lo=2)
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = amps[-1] = 1 / np.sqrt(2)
    return StateVector(n, amps)


def is_stabilized(s: StateVector, p: PauliString, tol: float = DEFAULT_TOL) -> bool:
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    return float(np.max(np.abs(apply_pauli(s, p).amps - s.amps))) <= tol


@dataclass(frozen=True)
class Comparison:
    equal: bool
    max_dev: float
    equal_up_to_phase: bool

    def to_json(self) -> dict:
        return {"equal": self.equal, "max_dev": self.max_dev, "equal_up_to_phase": self.equal_up_to_phase}


def states_equal(a: StateVector, b: StateVector, tol: float = DEFAULT_TOL) -> Comparison:
    """Elementwise comparison with no global-phase allowance.

    ``equal_up_to_phase`` is a diagnostic only: it aligns ``b`` to ``a`` by the
    phase of their overlap before comparing.
    """
    _same_size(a, b)
    max_dev = float(np.max(np.abs(a.amps - b.amps)))
    overlap = np.vdot(b.amps, a.amps)
    if abs(overlap) > 0:
        aligned = b.amps * (overlap / abs(overlap))
        phase_dev = float(np.max(np.abs(a.amps - aligned)))
    else:
        phase_dev = max_dev
    return Comparison(max_dev <= tol, max_dev, phase_dev <= tol)
