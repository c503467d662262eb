"""Bit-packed linear algebra over F_2 for vectors of length 2n.

A vector (a|b) is packed into one Python int: coordinate ``j`` of the printed
string ``a_1..a_n|b_1..b_n`` (0-based, ``a`` first) lives at bit ``2n-1-j``.
Numeric order of the packed ints is therefore the lexicographic order of the
printed strings, and the leading bit of a row is its lowest coordinate index.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, TooLarge

# Widest ambient space the vectorized (uint64) helpers handle.
MAX_PACKED_BITS = 64


@dataclass(frozen=True, order=True)
class SympVector:
    """An element (a|b) of F_2^{2n}; the image of a Pauli error X(a)Z(b)."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.bits < 0 or self.bits >> (2 * self.n):
            raise ValueError(f"bits out of range for n={self.n}")

    @classmethod
    def zero(cls, n: int) -> "SympVector":
        return cls(n, 0)

    @classmethod
    def from_parts(cls, a: Sequence[int], b: Sequence[int]) -> "SympVector":
        if len(a) != len(b):
            raise DimensionMismatch(f"a has length {len(a)} but b has length {len(b)}")
        n = len(a)
        bits = 0
        for bit in list(a) + list(b):
            if bit not in (0, 1):
                raise ValueError(f"bits must be 0 or 1, got {bit!r}")
            bits = (bits << 1) | bit
        return cls(n, bits)

    @classmethod
    def parse(cls, text: str) -> "SympVector":
        """Build a vector from the printed notation ``"10001011|00101101"``."""
        cleaned = "".join(text.split())
        left, sep, right = cleaned.partition("|")
        if not sep or "|" in right:
            raise ValueError(f"expected exactly one '|' in {text!r}")
        if set(left + right) - {"0", "1"}:
            raise ValueError(f"only 0/1 allowed in {text!r}")
        return cls.from_parts([int(c) for c in left], [int(c) for c in right])

    @classmethod
    def unit(cls, n: int, index: int) -> "SympVector":
        if not 0 <= index < 2 * n:
            raise ValueError(f"coordinate {index} out of range for n={n}")
        return cls(n, 1 << (2 * n - 1 - index))

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n

    @property
    def a(self) -> int:
        return self.bits >> self.n

    @property
    def b(self) -> int:
        return self.bits & ((1 << self.n) - 1)

    def a_bits(self) -> Tuple[int, ...]:
        return tuple((self.a >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def b_bits(self) -> Tuple[int, ...]:
        return tuple((self.b >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: "SympVector") -> "SympVector":
        _check_same_n(self.n, other.n)
        return SympVector(self.n, self.bits ^ other.bits)

    __sub__ = __add__

    def __str__(self) -> str:
        a = "".join(map(str, self.a_bits()))
        b = "".join(map(str, self.b_bits()))
        return f"{a}|{b}"


def _check_same_n(n1: int, n2: int) -> None:
    if n1 != n2:
        raise DimensionMismatch(f"qubit counts differ: {n1} vs {n2}", left=n1, right=n2)


def symplectic_inner(u: SympVector, v: SympVector) -> int:
    """(u, v)_s = a·b' + a'·b mod 2."""
    _check_same_n(u.n, v.n)
    return ((u.a & v.b).bit_count() + (u.b & v.a).bit_count()) & 1


def swap_halves(bits: int, n: int) -> int:
    """(a|b) -> (b|a); turns the symplectic form into the ordinary dot product."""
    mask = (1 << n) - 1
    return ((bits & mask) << n) | (bits >> n)


def rref_bits(values: Iterable[int]) -> List[int]:
    """Canonical RREF of packed rows, highest pivot bit first.

    The pivot of every returned row is its leading bit and each pivot column
    carries a single 1, so equal spans give identical lists.
    """
    rows: List[int] = []
    for value in values:
        x = reduce_bits(value, rows)
        if not x:
            continue
        pivot = x.bit_length() - 1
        rows = [r ^ x if (r >> pivot) & 1 else r for r in rows]
        rows.append(x)
    rows.sort(reverse=True)
    return rows


def reduce_bits(value: int, rows: Sequence[int]) -> int:
    """Clear every pivot coordinate of ``value`` using RREF ``rows``."""
    for row in rows:
        if (value >> (row.bit_length() - 1)) & 1:
            value ^= row
    return value


@dataclass(frozen=True)
class Gf2Subspace:
    """A subspace of F_2^{2n} held as its canonical RREF basis."""

    n: int
    rows: Tuple[int, ...]

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> Tuple[int, ...]:
        """Pivot coordinate indices, ascending."""
        top = 2 * self.n - 1
        return tuple(top - (row.bit_length() - 1) for row in self.rows)

    @property
    def basis(self) -> Tuple[SympVector, ...]:
        return tuple(SympVector(self.n, row) for row in self.rows)

    def reduce(self, v: SympVector) -> SympVector:
        _check_same_n(self.n, v.n)
        return SympVector(self.n, reduce_bits(v.bits, self.rows))

    def contains(self, v: SympVector) -> bool:
        return contains(self, v)

    def is_subspace_of(self, other: "Gf2Subspace") -> bool:
        _check_same_n(self.n, other.n)
        return all(reduce_bits(row, other.rows) == 0 for row in self.rows)

    def elements(self, limit: int = 22) -> np.ndarray:
        """All 2^dim elements as packed ``uint64`` values."""
        return span_elements(self.rows, self.n, limit=limit)


def rref(vectors: Sequence[SympVector], n: int | None = None) -> Gf2Subspace:
    """Canonical RREF basis of the span; an empty input gives the zero subspace."""
    if not vectors:
        if n is None:
            raise DimensionMismatch("the zero subspace needs an explicit n")
        return Gf2Subspace(n, ())
    width = vectors[0].n if n is None else n
    for v in vectors:
        _check_same_n(width, v.n)
    return Gf2Subspace(width, tuple(rref_bits(v.bits for v in vectors)))


def contains(S: Gf2Subspace, v: SympVector) -> bool:
    _check_same_n(S.n, v.n)
    return reduce_bits(v.bits, S.rows) == 0


def _null_space_bits(rows: Sequence[int], width: int) -> List[int]:
    """Kernel of the dot-product map given by RREF ``rows`` over ``width`` bits."""
    pivot_bits = {row.bit_length() - 1 for row in rows}
    kernel: List[int] = []
    for free in range(width):
        if free in pivot_bits:
            continue
        v = 1 << free
        for row in rows:
            if (row >> free) & 1:
                v |= 1 << (row.bit_length() - 1)
        kernel.append(v)
    return kernel


def symplectic_dual(S: Gf2Subspace) -> Gf2Subspace:
    """{w : (w, s)_s = 0 for every s in S}."""
    swapped = rref_bits(swap_halves(row, S.n) for row in S.rows)
    kernel = _null_space_bits(swapped, 2 * S.n)
    return Gf2Subspace(S.n, tuple(rref_bits(kernel)))


def subspace_sum(*spaces: Gf2Subspace) -> Gf2Subspace:
    n = spaces[0].n
    for space in spaces:
        _check_same_n(n, space.n)
    return Gf2Subspace(n, tuple(rref_bits(row for space in spaces for row in space.rows)))


def intersection(S: Gf2Subspace, T: Gf2Subspace) -> Gf2Subspace:
    """S ∩ T = (S^⊥s + T^⊥s)^⊥s; the symplectic form is nondegenerate."""
    return symplectic_dual(subspace_sum(symplectic_dual(S), symplectic_dual(T)))


# -- vectorized helpers -------------------------------------------------------


def _require_packed(n: int) -> None:
    if 2 * n > MAX_PACKED_BITS:
        raise TooLarge("packed ambient space", 2 * n, MAX_PACKED_BITS)


def span_elements(rows: Sequence[int], n: int, limit: int = 22) -> np.ndarray:
    """Every element of span(rows) as ``uint64``, built by doubling."""
    _require_packed(n)
    if len(rows) > limit:
        raise TooLarge("subspace enumeration", len(rows), limit)
    elements = np.zeros(1, dtype=np.uint64)
    for row in rows:
        elements = np.concatenate([elements, elements ^ np.uint64(row)])
    return elements


def reduce_array(values: np.ndarray, S: Gf2Subspace) -> np.ndarray:
    """Vectorized :func:`reduce_bits`; zero entries are exactly the members of S."""
    out = values.astype(np.uint64, copy=True)
    for row in S.rows:
        pivot = np.uint64(row.bit_length() - 1)
        hit = ((out >> pivot) & np.uint64(1)).astype(bool)
        out[hit] ^= np.uint64(row)
    return out
