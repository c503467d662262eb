"""Quotient space codes Ω and their certification as quantum codes ((n, 2^k·L, d))."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Any, Dict, FrozenSet, List, Literal, Optional, Sequence, Tuple

from .config import load_settings
from .errors import DuplicateCoset, PreconditionError, TooLarge
from .gf2_linalg import SympVector, rref, subspace_sum, symplectic_dual, symplectic_inner
from .quotient import (
    Coset,
    NormMode,
    QuotientSpace,
    canonicalize,
    coset_distance,
    min_norm_element,
    quotient_proj_norm,
)
from .stabilizer import INFINITE, DegeneracyProfile, StabilizerCode, degeneracy_profile, dm, min_weight_outside

logger = logging.getLogger(__name__)

Status = Literal["certified", "rejected"]


def format_distance(value: int | float) -> Optional[int]:
    """JSON form of a distance: infinite becomes None."""
    return None if value == INFINITE else int(value)


@dataclass(frozen=True)
class QscCode:
    """A finite set Ω of distinct cosets of C^⊥s."""

    space: QuotientSpace
    cosets: Tuple[Coset, ...]

    @property
    def L(self) -> int:
        return len(self.cosets)

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def reps(self) -> Tuple[SympVector, ...]:
        return tuple(c.rep for c in self.cosets)

    @cached_property
    def _closest(self) -> Tuple[int | float, Optional[Tuple[int, int]]]:
        best: int | float = INFINITE
        pair: Optional[Tuple[int, int]] = None
        for i, j in combinations(range(self.L), 2):
            dist = coset_distance(self.cosets[i], self.cosets[j])
            if dist < best:
                best, pair = dist, (i, j)
        return best, pair

    @property
    def distance(self) -> int | float:
        """Minimum pairwise coset distance; infinite when L = 1."""
        return self._closest[0]

    @property
    def closest_pair(self) -> Optional[Tuple[int, int]]:
        return self._closest[1]

    def projection_distance(self) -> int | float:
        """Minimum quotient projection norm over pairwise differences."""
        if self.L < 2:
            return INFINITE
        return min(quotient_proj_norm(x + y) for x, y in combinations(self.cosets, 2))

    def normalized(self) -> Tuple["QscCode", SympVector]:
        """Translate by the first representative so that 0̄ ∈ Ω."""
        shift = self.cosets[0].rep
        moved = tuple(Coset(self.space, c.rep + shift) for c in self.cosets)
        return QscCode(self.space, moved), shift

    def without(self, index: int) -> "QscCode":
        if self.L < 2:
            raise PreconditionError("cannot remove the only coset")
        kept = tuple(c for i, c in enumerate(self.cosets) if i != index)
        return QscCode(self.space, kept)

    def with_norm(self, norm_mode: NormMode) -> "QscCode":
        space = self.space.with_norm(norm_mode)
        return QscCode(space, tuple(Coset(space, c.rep) for c in self.cosets))


def build_qsc(code: StabilizerCode, reps: Sequence[SympVector], norm_mode: NormMode = "quantum") -> QscCode:
    """Canonicalize representatives over C^⊥s and reject duplicate cosets."""
    if not reps:
        raise PreconditionError("Ω needs at least one representative")
    space = QuotientSpace(code.dual, norm_mode)
    cosets: List[Coset] = []
    seen: Dict[SympVector, int] = {}
    for index, rep in enumerate(reps):
        coset = canonicalize(space, rep)
        if coset.rep in seen:
            raise DuplicateCoset(seen[coset.rep], index)
        seen[coset.rep] = index
        cosets.append(coset)
    return QscCode(space, tuple(cosets))


@dataclass(frozen=True)
class Conditions:
    self_orthogonal: bool
    d_le_dm: bool
    qsc_distance_ok: bool
    measurement_ok: bool

    def all(self) -> bool:
        return self.self_orthogonal and self.d_le_dm and self.qsc_distance_ok and self.measurement_ok


@dataclass(frozen=True)
class Flags:
    additive: bool
    cws: bool
    degenerate: bool


@dataclass(frozen=True)
class QsqcCertificate:
    n: int
    k: int
    L: int
    claimed_d: int
    norm_mode: NormMode
    conditions: Conditions
    flags: Flags
    containing_code: Tuple[int, int, int | float]
    dm: int | float
    qsc_distance: int | float
    required_distance: int
    translation: SympVector
    status: Status
    reason: Optional[str] = None
    witness: Optional[Dict[str, Any]] = None

    @property
    def certified(self) -> bool:
        return self.status == "certified"

    @property
    def dimension(self) -> int:
        return 2**self.k * self.L

    @property
    def s(self) -> int:
        return self.n - self.containing_code[1]

    def parameters(self) -> str:
        return f"(({self.n}, 2^{self.k}·{self.L}, {self.claimed_d}))"

    def to_dict(self) -> Dict[str, Any]:
        n, k_s, d_s = self.containing_code
        return {
            "n": self.n,
            "k": self.k,
            "L": self.L,
            "dimension": self.dimension,
            "claimed_d": self.claimed_d,
            "parameters": self.parameters(),
            "norm_mode": self.norm_mode,
            "status": self.status,
            "reason": self.reason,
            "witness": self.witness,
            "conditions": {
                "self_orthogonal": self.conditions.self_orthogonal,
                "d_le_dm": self.conditions.d_le_dm,
                "qsc_distance_ok": self.conditions.qsc_distance_ok,
                "measurement_ok": self.conditions.measurement_ok,
            },
            "flags": {
                "additive": self.flags.additive,
                "cws": self.flags.cws,
                "degenerate": self.flags.degenerate,
            },
            "containing_code": {"n": n, "k": k_s, "d_s": format_distance(d_s)},
            "dm": format_distance(self.dm),
            "qsc_distance": format_distance(self.qsc_distance),
            "required_distance": self.required_distance,
            "translation": str(self.translation),
        }


def _self_orthogonal_witness(code: StabilizerCode) -> Optional[Tuple[int, int]]:
    rows = code.subspace.basis
    for i, j in combinations(range(len(rows)), 2):
        if symplectic_inner(rows[i], rows[j]):
            return i, j
    return None


def _measurement_witness(
    qsc: QscCode, profile: DegeneracyProfile
) -> Optional[Tuple[int, int, SympVector]]:
    """First pair (0, i) whose difference leaves C(d-1)^⊥s, with the stabilizer element it fails on."""
    base = qsc.reps[0]
    for i in range(1, qsc.L):
        diff = qsc.reps[i] + base
        if profile.span_dual.contains(diff):
            continue
        culprit = next(c for c in profile.lowweight_set if symplectic_inner(diff, c))
        return 0, i, culprit
    return None


def verify(code: StabilizerCode, qsc: QscCode, d: int) -> QsqcCertificate:
    """Check the four QSQC conditions for (C, Ω, d) and emit a certificate.

    The QSC-distance check is the necessary condition ī ≠ ē̄ + j̄ for every
    error of weight < d, by translation invariance of the coset distance.
    Failures are returned as a rejected certificate, never raised.
    """
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    if qsc.space.modulus != code.dual:
        raise PreconditionError("Ω is not a set of cosets of this code's C^⊥s")

    profile = degeneracy_profile(code, d)
    normalized, shift = qsc.normalized()
    d_m = dm(code)
    required = d if qsc.space.norm_mode == "quantum" else 2 * d - 1
    distance = qsc.distance

    failures: List[Tuple[str, Dict[str, Any]]] = []

    so_pair = _self_orthogonal_witness(code)
    self_orthogonal = so_pair is None
    if not self_orthogonal:
        failures.append(("self_orthogonal", {"pair": list(so_pair)}))

    d_le_dm = d <= d_m
    if not d_le_dm:
        failures.append(("d_le_dm", {"dm": format_distance(d_m), "d": d}))

    qsc_distance_ok = qsc.L == 1 or distance >= required
    if not qsc_distance_ok:
        i, j = qsc.closest_pair
        error = min_norm_element(qsc.cosets[i] + qsc.cosets[j])
        failures.append(
            ("qsc_distance", {"pair": [i, j], "distance": int(distance), "error": str(error)})
        )

    measurement = _measurement_witness(normalized, profile)
    measurement_ok = measurement is None
    if not measurement_ok:
        i, j, culprit = measurement
        failures.append(("measurement", {"pair": [i, j], "stabilizer_element": str(culprit)}))

    conditions = Conditions(self_orthogonal, d_le_dm, qsc_distance_ok, measurement_ok)
    status: Status = "certified" if conditions.all() else "rejected"
    reason, witness = (failures[0][0], failures[0][1]) if failures else (None, None)
    cert = QsqcCertificate(
        n=code.n,
        k=code.k,
        L=qsc.L,
        claimed_d=d,
        norm_mode=qsc.space.norm_mode,
        conditions=conditions,
        flags=Flags(additive=qsc.L == 1, cws=code.k == 0, degenerate=profile.s > 0),
        containing_code=(code.n, code.n - profile.s, profile.d_s),
        dm=d_m,
        qsc_distance=distance,
        required_distance=required,
        translation=shift,
        status=status,
        reason=reason,
        witness=witness,
    )
    logger.info("verify d=%d: %s %s", d, cert.parameters(), status if reason is None else f"{status} ({reason})")
    return cert


def max_certifiable_distance(code: StabilizerCode, qsc: QscCode) -> int | float:
    """Largest d for which :func:`verify` certifies; 0 if even d = 1 fails.

    Every finite distance and d_m is at most 2n, so passing at d = 2n + 1
    means no d is rejected and the answer is infinite (self-dual C with L = 1).
    """
    cap = 2 * code.n + 1
    best = 0
    for d in range(1, cap + 1):
        if not verify(code, qsc, d).certified:
            return best
        best = d
    return INFINITE


def _pairwise_norms(qsc: QscCode) -> int | float:
    return qsc.distance if qsc.L > 1 else INFINITE


def _check_union_size(code: StabilizerCode, qsc: QscCode) -> None:
    limit = load_settings().enum_dim_limit
    size = code.dual.dim + math.ceil(math.log2(qsc.L))
    if size > limit:
        raise TooLarge("union code Ω_*", size, limit)


def classical_union_distance(code: StabilizerCode, qsc: QscCode) -> int | float:
    """Minimum distance δ of the union code Ω_* = ⋃ (rep + C^⊥s).

    Differences inside one coset sweep C^⊥s itself; differences across two
    cosets sweep the coset of rep_i + rep_j, whose minimum is the coset norm.
    """
    _check_union_size(code, qsc)
    qsc = qsc.with_norm("quantum")
    within = min_weight_outside(code.dual).value
    return min(within, _pairwise_norms(qsc))


@dataclass(frozen=True)
class UstReport:
    ust_distance: int | float
    classical_union_distance: int | float
    strict: bool
    exclusion_dim: int
    exclusion_reading: str = "C ∩ (Ω_*)^⊥s"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ust_distance": format_distance(self.ust_distance),
            "classical_union_distance": format_distance(self.classical_union_distance),
            "strict": self.strict,
            "exclusion_dim": self.exclusion_dim,
            "exclusion_reading": self.exclusion_reading,
        }


def ust_distance(code: StabilizerCode, qsc: QscCode) -> UstReport:
    """Distance of the union stabilizer construction on Ω_*.

    D = nonzero differences of Ω_*, X = {c ∈ C : (c, w)_s = 0 for all w ∈ Ω_*};
    the result is min w_Q over D minus X. Elements of C are already orthogonal
    to C^⊥s, so X = C ∩ span(reps)^⊥s, and X can only meet the within-coset
    differences because cross-coset differences avoid C^⊥s.
    """
    _check_union_size(code, qsc)
    normalized, _ = qsc.with_norm("quantum").normalized()
    reps_span = rref(list(normalized.reps), code.n)
    exclusion = symplectic_dual(subspace_sum(code.dual, reps_span))
    within = min_weight_outside(code.dual, exclusion).value
    distance = min(within, _pairwise_norms(normalized))
    delta = classical_union_distance(code, normalized)
    return UstReport(distance, delta, distance > delta, exclusion.dim)


def classify(cert: QsqcCertificate) -> Tuple[FrozenSet[str], Tuple[int, int, int | float]]:
    """Special-case labels of a certified code plus its containing additive code."""
    if not cert.certified:
        raise PreconditionError("classify needs a certified certificate")
    labels = set()
    if cert.flags.additive:
        labels.add("additive")
    if cert.flags.cws:
        labels.add("cws")
    labels.add("degenerate" if cert.flags.degenerate else "nondegenerate")
    return frozenset(labels), cert.containing_code
