"""
Phase-exact n-qubit Pauli strings in symplectic (bitmask) form.

A :class:`PauliString` with fields ``(phase_exp, x_mask, z_mask)`` denotes the
operator::

    i**phase_exp * prod_k X_k**x_k * Z_k**z_k

with, on each qubit, the X factor written to the left of the Z factor. A qubit
carrying both bits is therefore ``X Z = -i Y``, so a Hermitian ``Y`` costs one
extra unit of ``phase_exp`` (``Y = i X Z``). Qubit ``k`` (1-indexed) sits at
bit ``n - k`` of both masks, the same convention the state vectors use.

Text form is a sign (``+``, ``-``, ``+i``, ``-i``) followed by letters with
1-based subscripts, e.g. ``+X1Z2Z3`` or ``-Y1Y2``; the identity is ``+I``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import CapacityError, DomainError
from .graph import Graph, neighborhood, vertex_bit

MAX_GROUP_GENERATORS = 16

_SIGNS = {0: "+", 1: "+i", 2: "-", 3: "-i"}
_SIGN_EXP = {v: k for k, v in _SIGNS.items()}
_TEXT_RE = re.compile(r"^\s*([+-]i?)?\s*((?:[IXYZ]\d*)+)\s*$")
_FACTOR_RE = re.compile(r"([IXYZ])(\d*)")


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class PauliString:
    n: int
    phase_exp: int = 0
    x_mask: int = 0
    z_mask: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"qubit count must be positive, got {self.n}")
        full = (1 << self.n) - 1
        if (self.x_mask | self.z_mask) & ~full:
            raise DomainError(f"mask wider than {self.n} qubits")
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    # -- constructors -------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(n)

    @classmethod
    def single(cls, n: int, letter: str, k: int) -> "PauliString":
        """One Hermitian Pauli ``letter`` on qubit ``k``, identity elsewhere."""
        return cls.from_letters(n, {k: letter})

    @classmethod
    def from_letters(cls, n: int, letters: dict[int, str], sign: int = 1) -> "PauliString":
        """Build ``sign * prod_k letters[k]`` from Hermitian letters I/X/Y/Z."""
        x = z = 0
        phase = {1: 0, -1: 2}[sign]
        for k, letter in letters.items():
            if not 1 <= k <= n:
                raise DomainError(f"qubit {k} outside 1..{n}")
            b = vertex_bit(n, k)
            if letter in "XY":
                x |= b
            if letter in "ZY":
                z |= b
            if letter == "Y":
                phase += 1
            elif letter not in "IXZ":
                raise DomainError(f"unknown Pauli letter {letter!r}")
        return cls(n, phase, x, z)

    # -- structure ----------------------------------------------------------

    @property
    def y_count(self) -> int:
        return _popcount(self.x_mask & self.z_mask)

    @property
    def sign_exp(self) -> int:
        """Exponent ``s`` such that the operator is ``i**s`` times a product of Hermitian letters."""
        return (self.phase_exp - self.y_count) % 4

    def is_hermitian(self) -> bool:
        return self.sign_exp % 2 == 0

    def is_identity(self) -> bool:
        return self.x_mask == 0 and self.z_mask == 0 and self.phase_exp == 0

    @property
    def support(self) -> int:
        return self.x_mask | self.z_mask

    def letter(self, k: int) -> str:
        b = vertex_bit(self.n, k)
        return "IXZY"[bool(self.x_mask & b) + 2 * bool(self.z_mask & b)]

    def letters(self) -> str:
        return "".join(self.letter(k) for k in range(1, self.n + 1))

    def __mul__(self, other):
        if isinstance(other, PauliString):
            return multiply(self, other)
        return NotImplemented

    def __neg__(self):
        return PauliString(self.n, self.phase_exp + 2, self.x_mask, self.z_mask)

    # -- rendering ----------------------------------------------------------

    def to_text(self) -> str:
        body = "".join(
            f"{self.letter(k)}{k}" for k in range(1, self.n + 1) if self.letter(k) != "I"
        )
        return _SIGNS[self.sign_exp] + (body or "I")

    def __str__(self):
        return self.to_text()

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "phase_exp": self.phase_exp,
            "x_mask": hex(self.x_mask),
            "z_mask": hex(self.z_mask),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PauliString":
        return cls(
            int(data["n"]),
            int(data["phase_exp"]),
            int(data["x_mask"], 16),
            int(data["z_mask"], 16),
        )


def parse_pauli(text: str, n: int) -> PauliString:
    """Inverse of :meth:`PauliString.to_text` for an ``n``-qubit register.

    A letter without a subscript is accepted only for the identity (``+I``).
    """
    m = _TEXT_RE.match(text)
    if not m:
        raise DomainError(f"cannot parse Pauli string {text!r}")
    sign = _SIGN_EXP[m.group(1) or "+"]
    letters: dict[int, str] = {}
    for letter, idx in _FACTOR_RE.findall(m.group(2)):
        if not idx:
            if letter != "I":
                raise DomainError(f"missing qubit index after {letter!r} in {text!r}")
            continue
        k = int(idx)
        if k in letters:
            raise DomainError(f"qubit {k} appears twice in {text!r}")
        letters[k] = letter
    p = PauliString.from_letters(n, letters)
    return PauliString(n, p.phase_exp + sign, p.x_mask, p.z_mask)


def _check_sizes(p: PauliString, q: PauliString) -> None:
    if p.n != q.n:
        raise DomainError(f"size mismatch: {p.n} vs {q.n} qubits")


def multiply(p: PauliString, q: PauliString) -> PauliString:
    """Exact product ``p * q``.

    Moving each Z of ``p`` past an X of ``q`` on the same qubit costs a sign,
    hence the ``2 * |z_p & x_q|`` correction.
    """
    _check_sizes(p, q)
    phase = p.phase_exp + q.phase_exp + 2 * _popcount(p.z_mask & q.x_mask)
    return PauliString(p.n, phase, p.x_mask ^ q.x_mask, p.z_mask ^ q.z_mask)


def commutes(p: PauliString, q: PauliString) -> bool:
    _check_sizes(p, q)
    return (_popcount(p.x_mask & q.z_mask) + _popcount(p.z_mask & q.x_mask)) % 2 == 0


def product(paulis: Iterable[PauliString], n: int) -> PauliString:
    """Left-to-right product; identity when ``paulis`` is empty."""
    out = PauliString.identity(n)
    for p in paulis:
        out = multiply(out, p)
    return out


def _check_qubit(n: int, k: int) -> None:
    if not isinstance(k, int) or not 1 <= k <= n:
        raise DomainError(f"qubit {k!r} outside 1..{n}")


def cz_conjugate(p: PauliString, i: int, j: int) -> PauliString:
    """``CZ_ij · p · CZ_ij``.

    Z factors are unchanged; ``X_i -> X_i Z_j`` and ``X_j -> Z_i X_j``. The
    X part of ``p`` is a commuting product, so its image is the product of the
    images of its factors, followed by the untouched Z part.
    """
    n = p.n
    _check_qubit(n, i)
    _check_qubit(n, j)
    if i == j:
        raise DomainError("CZ needs two distinct qubits")
    bi, bj = vertex_bit(n, i), vertex_bit(n, j)
    img = PauliString(n, 0, p.x_mask & ~(bi | bj), 0)
    if p.x_mask & bi:
        img = multiply(img, PauliString(n, 0, bi, bj))
    if p.x_mask & bj:
        img = multiply(img, PauliString(n, 0, bj, bi))
    img = multiply(img, PauliString(n, 0, 0, p.z_mask))
    return PauliString(n, img.phase_exp + p.phase_exp, img.x_mask, img.z_mask)


def h_conjugate(p: PauliString, i: int) -> PauliString:
    """``H_i · p · H_i``: swaps X and Z on qubit ``i``.

    ``X^a Z^b -> Z^a X^b = (-1)^(ab) X^b Z^a``, so a Y site flips sign.
    """
    _check_qubit(p.n, i)
    b = vertex_bit(p.n, i)
    xa, zb = bool(p.x_mask & b), bool(p.z_mask & b)
    x = (p.x_mask & ~b) | (b if zb else 0)
    z = (p.z_mask & ~b) | (b if xa else 0)
    return PauliString(p.n, p.phase_exp + (2 if xa and zb else 0), x, z)


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered list of pairwise-commuting Hermitian Pauli strings."""

    n: int
    generators: tuple[PauliString, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if g.n != self.n:
                raise DomainError(f"generator {g} has {g.n} qubits, expected {self.n}")
            if not g.is_hermitian():
                raise DomainError(f"generator {g} is not Hermitian")
        for a, b in combinations(gens, 2):
            if not commutes(a, b):
                raise DomainError(f"generators {a} and {b} anticommute")

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __getitem__(self, k):
        return self.generators[k]

    def to_text(self) -> list[str]:
        return [g.to_text() for g in self.generators]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "generators": [g.to_json() for g in self.generators],
            "text": self.to_text(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "GeneratorSet":
        return cls(int(data["n"]), tuple(PauliString.from_json(g) for g in data["generators"]))


def cluster_operator(g: Graph, i: int) -> PauliString:
    """``K_i = X_i`` times ``Z_j`` on every neighbor ``j`` of ``i``."""
    nbrs = neighborhood(g, i)
    z = 0
    for j in nbrs:
        z |= vertex_bit(g.n, j)
    return PauliString(g.n, 0, vertex_bit(g.n, i), z)


def graph_generators(g: Graph) -> GeneratorSet:
    return GeneratorSet(g.n, tuple(cluster_operator(g, i) for i in g.vertices))


def ghz_generators(n: int) -> GeneratorSet:
    """``Z1Z2, Z2Z3, ..., Z_{n-1}Z_n`` followed by ``X1...Xn``."""
    if n < 2:
        raise DomainError(f"GHZ generators need n >= 2, got {n}")
    gens = [
        PauliString(n, 0, 0, vertex_bit(n, k) | vertex_bit(n, k + 1)) for k in range(1, n)
    ]
    gens.append(PauliString(n, 0, (1 << n) - 1, 0))
    return GeneratorSet(n, tuple(gens))


def group_elements(gens: GeneratorSet | Sequence[PauliString], n: int | None = None) -> list[PauliString]:
    """All subset products of the generators, ordered by subset bitmask.

    Entry ``s`` is the product of the generators whose index bits are set in
    ``s``, multiplied in index order.
    """
    if isinstance(gens, GeneratorSet):
        n, items = gens.n, list(gens.generators)
    else:
        items = list(gens)
        if n is None:
            if not items:
                raise DomainError("qubit count required for an empty generator list")
            n = items[0].n
    m = len(items)
    if m > MAX_GROUP_GENERATORS:
        raise CapacityError(f"group enumeration is capped at {MAX_GROUP_GENERATORS} generators, got {m}")
    out = [PauliString.identity(n)]
    for g in items:
        out += [multiply(e, g) for e in out]
    return out
