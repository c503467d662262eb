"""The normed quotient space W = V/H.

Canonical representatives come from reducing by the RREF of H, which zeroes
every pivot coordinate. That reduction is a linear projection onto the span of
the non-pivot unit vectors, so it serves as both the unique representative of
a coset and the projection used by the quotient projection norm.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Literal

import numpy as np

from .config import load_settings
from .errors import DimensionMismatch, PreconditionError
from .gf2_linalg import (
    MAX_PACKED_BITS,
    Gf2Subspace,
    SympVector,
    reduce_bits,
    rref_bits,
    span_elements,
    symplectic_inner,
)
from .pauli_space import (
    enumerate_errors,
    hamming_weight,
    hamming_weights,
    quantum_weight,
    quantum_weights,
    vectors_by_hamming_weight,
)

logger = logging.getLogger(__name__)

NormMode = Literal["quantum", "hamming"]
NORM_MODES = ("quantum", "hamming")


@dataclass(frozen=True)
class QuotientSpace:
    """F_2^{2n} / H with a norm mode chosen for the whole space."""

    modulus: Gf2Subspace
    norm_mode: NormMode = "quantum"

    def __post_init__(self) -> None:
        if self.norm_mode not in NORM_MODES:
            raise ValueError(f"norm_mode must be one of {NORM_MODES}, got {self.norm_mode!r}")

    @property
    def n(self) -> int:
        return self.modulus.n

    @property
    def ambient_dim(self) -> int:
        return 2 * self.n

    @property
    def dim(self) -> int:
        return self.ambient_dim - self.modulus.dim

    @property
    def coset_count(self) -> int:
        return 2**self.dim

    def canonicalize(self, v: SympVector) -> "Coset":
        return canonicalize(self, v)

    def zero(self) -> "Coset":
        return Coset(self, SympVector.zero(self.n))

    def with_norm(self, norm_mode: NormMode) -> "QuotientSpace":
        return QuotientSpace(self.modulus, norm_mode)

    def weight(self, v: SympVector) -> int:
        return quantum_weight(v) if self.norm_mode == "quantum" else hamming_weight(v)

    def weights(self, values: np.ndarray) -> np.ndarray:
        if self.norm_mode == "quantum":
            return quantum_weights(values, self.n)
        return hamming_weights(values)

    @cached_property
    def modulus_elements(self) -> np.ndarray:
        return self.modulus.elements(limit=load_settings().enum_dim_limit)


@dataclass(frozen=True)
class Coset:
    """A coset of the modulus, identified by its canonical representative."""

    space: QuotientSpace
    rep: SympVector

    def __add__(self, other: "Coset") -> "Coset":
        _check_same_space(self, other)
        return Coset(self.space, self.rep + other.rep)

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __str__(self) -> str:
        return str(self.rep)


def _check_same_space(x: Coset, y: Coset) -> None:
    if x.space != y.space:
        raise DimensionMismatch("cosets belong to different quotient spaces")


def canonicalize(space: QuotientSpace, v: SympVector) -> Coset:
    if v.n != space.n:
        raise DimensionMismatch(f"vector has n={v.n}, space has n={space.n}", left=v.n, right=space.n)
    return Coset(space, SympVector(space.n, reduce_bits(v.bits, space.modulus.rows)))


@lru_cache(maxsize=1 << 16)
def _min_norm(space: QuotientSpace, rep_bits: int) -> int:
    if rep_bits == 0:
        return 0
    limit = load_settings().enum_dim_limit
    if space.modulus.dim <= limit and space.ambient_dim <= MAX_PACKED_BITS:
        coset = space.modulus_elements ^ np.uint64(rep_bits)
        return int(space.weights(coset).min())
    logger.debug("modulus dim %d above %d; searching by increasing weight", space.modulus.dim, limit)
    vectors = enumerate_errors(space.n, space.n) if space.norm_mode == "quantum" else vectors_by_hamming_weight(space.n)
    for v in vectors:
        if reduce_bits(v.bits ^ rep_bits, space.modulus.rows) == 0:
            return space.weight(v)
    raise AssertionError("every coset has an element of weight <= 2n")


def quotient_min_norm(x: Coset) -> int:
    """‖x̄‖ = min weight over the coset (quantum or Hamming, per the space)."""
    return _min_norm(x.space, x.rep.bits)


def min_norm_element(x: Coset) -> SympVector:
    """An element of the coset that attains :func:`quotient_min_norm`."""
    space = x.space
    if x.is_zero():
        return x.rep
    if space.modulus.dim <= load_settings().enum_dim_limit and space.ambient_dim <= MAX_PACKED_BITS:
        coset = space.modulus_elements ^ np.uint64(x.rep.bits)
        weights = space.weights(coset)
        best = coset[weights == weights.min()].min()
        return SympVector(space.n, int(best))
    target = quotient_min_norm(x)
    vectors = enumerate_errors(space.n, space.n) if space.norm_mode == "quantum" else vectors_by_hamming_weight(space.n)
    for v in vectors:
        if space.weight(v) == target and reduce_bits(v.bits ^ x.rep.bits, space.modulus.rows) == 0:
            return v
    raise AssertionError("minimum-norm element not found")


def quotient_proj_norm(x: Coset) -> int:
    """‖x̄‖_p = Hamming weight of the canonical (projection) representative."""
    return hamming_weight(x.rep)


def coset_distance(x: Coset, y: Coset) -> int:
    _check_same_space(x, y)
    return quotient_min_norm(x + y)


def character_eval(i: Coset, c: SympVector) -> int:
    """λ_ī(c) = (-1)^{(i, c)_s}."""
    return -1 if symplectic_inner(i.rep, c) else 1


def coset_reps_within(space: QuotientSpace, restriction: Gf2Subspace) -> np.ndarray:
    """Canonical reps of every coset of the modulus that lies inside ``restriction``.

    Reduction is linear, so these reps form the span of the reduced rows of
    ``restriction``; the result is sorted ascending.
    """
    if not space.modulus.is_subspace_of(restriction):
        raise PreconditionError("the modulus must be contained in the restriction")
    reduced = rref_bits(reduce_bits(row, space.modulus.rows) for row in restriction.rows)
    reps = span_elements(reduced, space.n, limit=load_settings().enum_dim_limit)
    return np.sort(reps)


def me_count(space: QuotientSpace, restriction: Gf2Subspace, t: int) -> int:
    """|ME(t)|: distinct cosets with a weight-<=t representative inside ``restriction``."""
    if not space.modulus.is_subspace_of(restriction):
        raise PreconditionError("the modulus must be contained in the restriction")
    seen: set[int] = set()
    for v in enumerate_errors(space.n, t):
        if restriction.contains(v):
            seen.add(reduce_bits(v.bits, space.modulus.rows))
    logger.debug("|ME(%d)| = %d", t, len(seen))
    return len(seen)
