"""Symplectic self-orthogonal codes C: d_m, the low-weight subcode C(d-1), its
dual, and the additive code [[n, n-s, d_s]] that contains Q(Ω)."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from .config import load_settings
from .errors import NotFound, NotSelfOrthogonal, PreconditionError
from .gf2_linalg import (
    MAX_PACKED_BITS,
    Gf2Subspace,
    SympVector,
    reduce_array,
    rref,
    rref_bits,
    symplectic_dual,
    symplectic_inner,
)
from .pauli_space import count_errors, enumerate_errors, quantum_weight, quantum_weights

logger = logging.getLogger(__name__)

INFINITE = math.inf


@dataclass(frozen=True)
class StabilizerCode:
    """C ⊆ C^⊥s with dim C = n - k; ``dual`` caches C^⊥s."""

    n: int
    subspace: Gf2Subspace
    dual: Gf2Subspace

    @property
    def k(self) -> int:
        return self.n - self.subspace.dim

    @property
    def generators(self) -> Tuple[SympVector, ...]:
        return self.subspace.basis

    @property
    def is_self_dual(self) -> bool:
        return self.subspace == self.dual


@dataclass(frozen=True)
class WeightBound:
    """Minimum weight found by a search; ``exact`` is False for a lower bound only."""

    value: int | float
    exact: bool = True


@dataclass(frozen=True)
class DegeneracyProfile:
    d: int
    lowweight_set: Tuple[SympVector, ...]
    span: Gf2Subspace
    span_dual: Gf2Subspace
    d_s: int | float
    d_s_exact: bool = True

    @property
    def s(self) -> int:
        return self.span.dim

    @property
    def nondegenerate(self) -> bool:
        return self.s == 0


def analyze(rows: Sequence[SympVector], n: int | None = None) -> StabilizerCode:
    """Validate self-orthogonality and build the code with its cached dual."""
    for i, u in enumerate(rows):
        for j in range(i + 1, len(rows)):
            if symplectic_inner(u, rows[j]):
                raise NotSelfOrthogonal(i, j)
    C = rref(list(rows), n)
    code = StabilizerCode(C.n, C, symplectic_dual(C))
    logger.debug("analyzed code n=%d dim C=%d k=%d", code.n, C.dim, code.k)
    return code


def _brute_force_ok(space: Gf2Subspace, brute_force_dim: int) -> bool:
    return space.dim <= brute_force_dim and space.ambient_dim <= MAX_PACKED_BITS


def min_weight_outside(
    outer: Gf2Subspace,
    inner: Gf2Subspace | None = None,
    *,
    brute_force_dim: int | None = None,
    max_weight: int | None = None,
) -> WeightBound:
    """Minimum quantum weight over ``outer`` minus ``inner`` (minus 0 when no inner)."""
    limit = load_settings().brute_force_dim if brute_force_dim is None else brute_force_dim
    n = outer.n
    if _brute_force_ok(outer, limit):
        elements = outer.elements(limit=limit)
        if inner is None:
            keep = elements != 0
        else:
            keep = reduce_array(elements, inner) != 0
        if not keep.any():
            return WeightBound(INFINITE)
        return WeightBound(int(quantum_weights(elements[keep], n).min()))

    top = n if max_weight is None else min(max_weight, n)
    logger.debug("weight-ordered search up to weight %d (dim %d)", top, outer.dim)
    for v in enumerate_errors(n, top):
        if v.is_zero() or not outer.contains(v):
            continue
        if inner is not None and inner.contains(v):
            continue
        return WeightBound(quantum_weight(v))
    if top < n:
        logger.warning("weight search stopped at %d; reporting a lower bound only", top)
        return WeightBound(top + 1, exact=False)
    return WeightBound(INFINITE)


def min_quantum_weight(S: Gf2Subspace, *, brute_force_dim: int | None = None) -> int | float:
    """Minimum quantum weight over the nonzero elements of S; infinite for {0}."""
    return min_weight_outside(S, brute_force_dim=brute_force_dim).value


def dm(code: StabilizerCode) -> int | float:
    """min{w_Q(c) : c ∈ C^⊥s minus C}; infinite when C is self-dual."""
    if code.is_self_dual:
        return INFINITE
    return min_weight_outside(code.dual, code.subspace).value


def _lowweight_elements(code: StabilizerCode, t: int) -> Tuple[SympVector, ...]:
    if t <= 0:
        return ()
    settings = load_settings()
    C = code.subspace
    t = min(t, code.n)
    if _brute_force_ok(C, settings.brute_force_dim) and 2**C.dim <= max(count_errors(code.n, t), 1 << 16):
        elements = C.elements(limit=settings.brute_force_dim)
        weights = quantum_weights(elements, code.n)
        picked = np.sort(elements[(weights > 0) & (weights <= t)])
        return tuple(SympVector(code.n, int(x)) for x in picked)
    found = [v for v in enumerate_errors(code.n, t) if not v.is_zero() and C.contains(v)]
    return tuple(sorted(found))


def degeneracy_profile(code: StabilizerCode, d: int) -> DegeneracyProfile:
    """Collect C(d-1) minus 0, span it, and compute its dual and d_s."""
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    lowweight = _lowweight_elements(code, d - 1)
    span = rref(list(lowweight), code.n)
    span_dual = symplectic_dual(span)
    bound = min_weight_outside(span_dual, span)
    logger.debug("degeneracy at d=%d: |C(d-1)|=%d s=%d d_s=%s", d, len(lowweight), span.dim, bound.value)
    return DegeneracyProfile(d, lowweight, span, span_dual, bound.value, bound.exact)


def random_self_orthogonal(
    n: int, dim: int, rng: np.random.Generator, max_attempts: int = 10_000
) -> StabilizerCode:
    """Grow a random self-orthogonal code one symplectic-orthogonal row at a time."""
    if not 0 <= dim <= n:
        raise PreconditionError(f"need 0 <= dim <= n, got dim={dim}, n={n}")
    rows: list[SympVector] = []
    basis: list[int] = []
    for _ in range(max_attempts):
        if len(rows) == dim:
            break
        v = SympVector(n, int(rng.integers(1, 1 << (2 * n))))
        if any(symplectic_inner(v, r) for r in rows):
            continue
        grown = rref_bits(basis + [v.bits])
        if len(grown) == len(basis):
            continue
        rows.append(v)
        basis = grown
    if len(rows) != dim:
        raise NotFound(f"no self-orthogonal code of dim {dim} found in {max_attempts} draws")
    return analyze(rows, n)
