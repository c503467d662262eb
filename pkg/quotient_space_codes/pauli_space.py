"""Weights, error enumeration and the F_2^{2n} -> F_4^n correspondence."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, List

import galois
import numpy as np

from .gf2_linalg import SympVector

GF4 = galois.GF(4)

# GF(4) integers follow galois: 0, 1, 2 = ω, 3 = ω² = ω̄.
OMEGA = 2
OMEGA_BAR = 3

# Single-qubit Pauli letters as (a_i, b_i).
_PAULI_BITS = {"X": (1, 0), "Z": (0, 1), "Y": (1, 1)}


@dataclass(frozen=True)
class Gf4Vector:
    """A length-n vector over GF(4), stored as galois field elements."""

    entries: galois.FieldArray

    @property
    def n(self) -> int:
        return len(self.entries)

    def weight(self) -> int:
        return int(np.count_nonzero(self.entries))

    def __add__(self, other: "Gf4Vector") -> "Gf4Vector":
        return Gf4Vector(self.entries + other.entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Gf4Vector):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))

    def __hash__(self) -> int:
        return hash(tuple(int(x) for x in self.entries))


def quantum_weight(v: SympVector) -> int:
    return (v.a | v.b).bit_count()


def hamming_weight(v: SympVector) -> int:
    return v.bits.bit_count()


def quantum_weights(values: np.ndarray, n: int) -> np.ndarray:
    """Vectorized quantum weight of packed ``uint64`` vectors."""
    mask = np.uint64((1 << n) - 1)
    support = ((values >> np.uint64(n)) | values) & mask
    return np.bitwise_count(support)


def hamming_weights(values: np.ndarray) -> np.ndarray:
    return np.bitwise_count(values)


def count_errors(n: int, t: int) -> int:
    """|E(t)| = Σ_{i=0..t} 3^i C(n, i)."""
    return sum(3**i * math.comb(n, i) for i in range(min(t, n) + 1))


def _errors_of_weight(n: int, w: int) -> List[int]:
    packed: List[int] = []
    for positions in combinations(range(n), w):
        for letters in product("XZY", repeat=w):
            a = b = 0
            for pos, letter in zip(positions, letters):
                bit = 1 << (n - 1 - pos)
                pa, pb = _PAULI_BITS[letter]
                if pa:
                    a |= bit
                if pb:
                    b |= bit
            packed.append((a << n) | b)
    packed.sort()
    return packed


def enumerate_errors(n: int, t: int) -> Iterator[SympVector]:
    """All vectors of quantum weight <= t, by weight then lexicographically."""
    if not 0 <= t <= n:
        raise ValueError(f"need 0 <= t <= n, got t={t}, n={n}")
    for w in range(t + 1):
        for bits in _errors_of_weight(n, w):
            yield SympVector(n, bits)


def vectors_by_hamming_weight(n: int, max_weight: int | None = None) -> Iterator[SympVector]:
    """All vectors of F_2^{2n} by Hamming weight, lexicographic within a weight."""
    top = 2 * n if max_weight is None else min(max_weight, 2 * n)
    for w in range(top + 1):
        layer = sorted(sum(1 << p for p in positions) for positions in combinations(range(2 * n), w))
        for bits in layer:
            yield SympVector(n, bits)


def psi_map(v: SympVector) -> Gf4Vector:
    """(a_i, b_i) -> a_i·ω + b_i·ω̄, coordinatewise."""
    symbols = [
        (OMEGA if a else 0) ^ (OMEGA_BAR if b else 0)
        for a, b in zip(v.a_bits(), v.b_bits())
    ]
    return Gf4Vector(GF4(symbols))


def trace_inner(x: Gf4Vector, y: Gf4Vector) -> int:
    """Σ tr(x_i · ȳ_i) with conjugation y -> y² and tr(z) = z + z²."""
    products = x.entries * (y.entries**2)
    total = GF4(0)
    for z in products + products**2:
        total = total + z
    return int(total)
