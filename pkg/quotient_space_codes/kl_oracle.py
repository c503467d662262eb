"""Exact state-space oracle for quotient space quantum codes.

States are dense 2^n amplitude vectors of Gaussian integers held as paired
``int64`` arrays, so every inner product is exact. Basis index ``x`` carries
qubit ``i`` at bit ``n-1-i``, matching the a and b halves of a SympVector, and
a Pauli operator i^q X(a) Z(b) acts as

    |x> -> i^q (-1)^{b·x} |x ⊕ a>.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .config import load_settings
from .errors import DimensionMismatch, OracleRefused, RankDeficient
from .gf2_linalg import SympVector, reduce_bits, rref_bits
from .pauli_space import enumerate_errors
from .qsqc_core import QscCode
from .quotient import Coset, canonicalize, character_eval
from .stabilizer import StabilizerCode

logger = logging.getLogger(__name__)

FULL_ERROR_SET_MAX_QUBITS = 12
PROJECTOR_MAX_QUBITS = 10
_CHUNK = 512


@dataclass(frozen=True)
class PauliOperator:
    """i^phase · X(a) Z(b) with v = (a|b)."""

    phase: int
    v: SympVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase", self.phase % 4)

    @property
    def n(self) -> int:
        return self.v.n

    def compose(self, other: "PauliOperator") -> "PauliOperator":
        """self · other, using Z(b) X(a') = (-1)^{b·a'} X(a') Z(b)."""
        swap = (self.v.b & other.v.a).bit_count() & 1
        return PauliOperator(self.phase + other.phase + 2 * swap, self.v + other.v)

    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(0, SympVector.zero(n))


def lift_generator(c: SympVector) -> PauliOperator:
    """i^{a·b} X(a) Z(b): the lift that squares to the identity.

    The lift is not multiplicative. For a sum c = c_1 + c_2 in C, lift(c) can
    be minus lift(c_1)·lift(c_2), so g|v> = λ_ī(c)|v> on Q(ī) holds for the
    generators of C and, for other elements, only up to that sign.
    """
    return PauliOperator((c.a & c.b).bit_count(), c)


@dataclass(frozen=True, eq=False)
class ExactState:
    """Amplitudes (re + i·im) / 2^scale over the 2^n computational basis."""

    n: int
    re: np.ndarray
    im: np.ndarray
    scale: int = 0

    @classmethod
    def basis(cls, n: int, x: int) -> "ExactState":
        re = np.zeros(1 << n, dtype=np.int64)
        re[x] = 1
        return cls(n, re, np.zeros(1 << n, dtype=np.int64))

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def inner(self, other: "ExactState") -> Tuple[int, int]:
        """<self|other> on the integer numerators."""
        _check_n(self.n, other.n)
        re = int(self.re @ other.re) + int(self.im @ other.im)
        im = int(self.re @ other.im) - int(self.im @ other.re)
        return re, im

    def norm_squared(self) -> int:
        return self.inner(self)[0]

    def __add__(self, other: "ExactState") -> "ExactState":
        _check_n(self.n, other.n)
        return ExactState(self.n, self.re + other.re, self.im + other.im, self.scale)

    def equals(self, other: "ExactState") -> bool:
        return bool(np.array_equal(self.re, other.re) and np.array_equal(self.im, other.im))

    def negated(self) -> "ExactState":
        return ExactState(self.n, -self.re, -self.im, self.scale)


def _check_n(left: int, right: int) -> None:
    if left != right:
        raise DimensionMismatch(f"n={left} vs n={right}", left=left, right=right)


@lru_cache(maxsize=16)
def _indices(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def _rotate(re: np.ndarray, im: np.ndarray, phase: int) -> Tuple[np.ndarray, np.ndarray]:
    """Multiply by i^phase."""
    if phase == 0:
        return re, im
    if phase == 1:
        return -im, re
    if phase == 2:
        return -re, -im
    return im, -re


def _apply_rows(e: PauliOperator, re: np.ndarray, im: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Apply e to every state stored along the last axis."""
    idx = _indices(e.n)
    signs = 1 - 2 * (np.bitwise_count(idx & e.v.b) & 1).astype(np.int64)
    target = idx ^ e.v.a
    out_re = np.empty_like(re)
    out_im = np.empty_like(im)
    out_re[..., target] = re * signs
    out_im[..., target] = im * signs
    return _rotate(out_re, out_im, e.phase)


def apply_error(e: PauliOperator, psi: ExactState) -> ExactState:
    """Exact signed permutation of the amplitudes with the i^q phase."""
    _check_n(e.n, psi.n)
    re, im = _apply_rows(e, psi.re, psi.im)
    return ExactState(psi.n, re, im, psi.scale)


def _check_oracle_size(n: int, limit: Optional[int] = None, detail: str = "") -> None:
    limit = load_settings().oracle_max_qubits if limit is None else limit
    if n > limit:
        raise OracleRefused(n, limit, detail)


@lru_cache(maxsize=8)
def _zero_sector(code: StabilizerCode) -> Tuple[ExactState, ...]:
    """Orthogonal, equal-norm basis of Q(0̄) from Π_j (1 + g_j) applied to |x>.

    Π_j (1 + g_j)|x> only reaches x ⊕ A, with A the span of the X parts of C,
    and it is the same state up to phase for every x in one such coset. One x
    per coset of A therefore yields pairwise orthogonal states, 2^k of them
    nonzero, all with squared norm |G|·|{g ∈ G : g diagonal}|.
    """
    n = code.n
    generators = [lift_generator(c) for c in code.generators]
    x_part = rref_bits(c.a for c in code.generators)
    wanted = 1 << code.k
    states: List[ExactState] = []
    for x in range(1 << n):
        if reduce_bits(x, x_part) != x:
            continue
        state = ExactState.basis(n, x)
        for g in generators:
            state = state + apply_error(g, state)
        if state.is_zero():
            continue
        states.append(ExactState(n, state.re, state.im, len(generators)))
        if len(states) == wanted:
            break
    if len(states) != wanted:
        raise RankDeficient(f"found {len(states)} of {wanted} states for Q(0̄)")
    norms = {s.norm_squared() for s in states}
    if len(norms) != 1:
        raise RankDeficient(f"Q(0̄) basis has unequal norms {sorted(norms)}")
    logger.debug("Q(0̄) basis: %d states, n=%d", wanted, n)
    return tuple(states)


def codespace_basis(code: StabilizerCode, coset: Coset) -> List[ExactState]:
    """Basis of Q(ī): the lifted canonical representative applied to Q(0̄)."""
    _check_oracle_size(code.n)
    if coset.space.modulus != code.dual:
        raise DimensionMismatch("coset is not a coset of this code's C^⊥s")
    zero = _zero_sector(code)
    if coset.is_zero():
        return list(zero)
    shift = lift_generator(coset.rep)
    return [apply_error(shift, state) for state in zero]


def encoded_basis(code: StabilizerCode, qsc: QscCode) -> List[Tuple[Coset, List[ExactState]]]:
    """All 2^k·L basis states of Q(Ω), grouped by coset in Ω order."""
    return [(coset, codespace_basis(code, coset)) for coset in qsc.cosets]


GaussianRational = Tuple[Fraction, Fraction]


@dataclass
class KlReport:
    ok: bool
    f_table: Dict[SympVector, GaussianRational] = field(default_factory=dict)
    witness: Optional[Dict[str, Any]] = None
    partial: bool = False
    errors_checked: int = 0
    errors_total: int = 0

    def degenerate_errors(self) -> List[SympVector]:
        """Non-identity errors with f(e) != 0."""
        return [e for e, f in self.f_table.items() if not e.is_zero() and f != (0, 0)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "ok": self.ok,
            "partial": self.partial,
            "errors_checked": self.errors_checked,
            "errors_total": self.errors_total,
            "witness": self.witness,
            "degenerate_errors": [str(e) for e in self.degenerate_errors()],
        }


def _select_errors(
    n: int, t: int, sample: Optional[int], seed: int
) -> Tuple[List[PauliOperator], int, bool]:
    errors = [lift_generator(v) for v in enumerate_errors(n, t)]
    total = len(errors)
    if sample is None or sample >= total:
        return errors, total, False
    rng = np.random.default_rng(seed)
    picked = np.sort(rng.choice(np.arange(1, total), size=max(sample - 1, 0), replace=False))
    chosen = [errors[0]] + [errors[i] for i in picked]
    logger.warning("kl_check sampling %d of %d errors; report is partial", len(chosen), total)
    return chosen, total, True


def _check_chunk(
    errors: Sequence[PauliOperator], re: np.ndarray, im: np.ndarray, norm: int, owners: Sequence[int]
) -> Tuple[Dict[SympVector, GaussianRational], Optional[Dict[str, Any]]]:
    table: Dict[SympVector, GaussianRational] = {}
    for e in errors:
        ere, eim = _apply_rows(e, re, im)
        gram_re = re @ ere.T + im @ eim.T
        gram_im = re @ eim.T - im @ ere.T
        off = ~np.eye(len(re), dtype=bool)
        bad = np.argwhere(off & ((gram_re != 0) | (gram_im != 0)))
        if len(bad):
            i, j = (int(x) for x in bad[0])
            return table, {
                "kind": "off_diagonal",
                "error": str(e.v),
                "basis_pair": [i, j],
                "coset_pair": [owners[i], owners[j]],
                "value": [int(gram_re[i, j]), int(gram_im[i, j])],
            }
        diag_re, diag_im = np.diagonal(gram_re), np.diagonal(gram_im)
        if (diag_re != diag_re[0]).any() or (diag_im != diag_im[0]).any():
            j = int(np.flatnonzero((diag_re != diag_re[0]) | (diag_im != diag_im[0]))[0])
            return table, {
                "kind": "diagonal",
                "error": str(e.v),
                "basis_pair": [0, j],
                "coset_pair": [owners[0], owners[j]],
                "value": [int(diag_re[j]), int(diag_im[j])],
            }
        table[e.v] = (Fraction(int(diag_re[0]), norm), Fraction(int(diag_im[0]), norm))
    return table, None


def kl_check(
    bases: Sequence[Tuple[Coset, Sequence[ExactState]]],
    d: int,
    *,
    sample: Optional[int] = None,
    seed: int = 0,
    workers: int = 1,
    force_full: bool = False,
) -> KlReport:
    """Knill-Laflamme conditions <v_i|e|v_j> = f(e) δ_ij over E(d-1).

    Without ``sample`` the full error set is used; above 12 qubits that needs
    ``force_full``. A sampled run always keeps the identity and is marked partial.
    """
    states = [s for _, basis in bases for s in basis]
    owners = [index for index, (_, basis) in enumerate(bases) for _ in basis]
    if not states:
        raise RankDeficient("no basis states to check")
    n = states[0].n
    _check_oracle_size(n)
    if n > FULL_ERROR_SET_MAX_QUBITS and sample is None and not force_full:
        raise OracleRefused(n, FULL_ERROR_SET_MAX_QUBITS, "full E(d-1) needs force_full or a sample")

    re = np.stack([s.re for s in states])
    im = np.stack([s.im for s in states])
    norms = np.einsum("ij,ij->i", re, re) + np.einsum("ij,ij->i", im, im)
    if (norms != norms[0]).any():
        raise RankDeficient("basis states must share one squared norm")
    norm = int(norms[0])

    t = min(max(d - 1, 0), n)
    errors, total, partial = _select_errors(n, t, sample, seed)
    chunks = [errors[i : i + _CHUNK] for i in range(0, len(errors), _CHUNK)]
    logger.debug("kl_check: %d basis states, %d errors in %d chunks", len(states), len(errors), len(chunks))

    if workers > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda chunk: _check_chunk(chunk, re, im, norm, owners), chunks))
    else:
        results = []
        for chunk in chunks:
            results.append(_check_chunk(chunk, re, im, norm, owners))
            if results[-1][1] is not None:
                break

    f_table: Dict[SympVector, GaussianRational] = {}
    for table, witness in results:
        for e, f in table.items():
            f_table.setdefault(e, f)
        if witness is not None:
            return KlReport(False, f_table, witness, partial, len(f_table), total)
    return KlReport(True, f_table, None, partial, len(f_table), total)


def _span_contains(basis: Sequence[ExactState], psi: ExactState) -> bool:
    """Exact membership for an orthogonal, equal-norm basis: Σ|<u|psi>|² = N·<psi|psi>."""
    norm = basis[0].norm_squared()
    captured = 0
    for u in basis:
        re, im = u.inner(psi)
        captured += re * re + im * im
    return captured == norm * psi.norm_squared()


def error_translates_codespace(code: StabilizerCode, e: PauliOperator, coset: Coset) -> bool:
    """e maps Q(ī) into Q(ī + ē̄); with e.v ∈ C^⊥s this says e fixes Q(ī)."""
    _check_oracle_size(code.n, PROJECTOR_MAX_QUBITS)
    source = codespace_basis(code, coset)
    target_coset = coset + canonicalize(coset.space, e.v)
    target = codespace_basis(code, target_coset)
    return all(_span_contains(target, apply_error(e, v)) for v in source)


def projector_matrix(code: StabilizerCode, coset: Coset) -> Tuple[np.ndarray, np.ndarray, int]:
    """Dense Π_j (1 + λ_ī(c_j) g_j) as (re, im, r); the projector is this over 2^r."""
    _check_oracle_size(code.n, PROJECTOR_MAX_QUBITS)
    dim = 1 << code.n
    rows_re = np.eye(dim, dtype=np.int64)
    rows_im = np.zeros((dim, dim), dtype=np.int64)
    generators = code.generators
    for c in generators:
        g = lift_generator(c)
        gre, gim = _apply_rows(g, rows_re, rows_im)
        if character_eval(coset, c) < 0:
            gre, gim = -gre, -gim
        rows_re, rows_im = rows_re + gre, rows_im + gim
    # row x holds M|x>, i.e. column x of M
    return rows_re.T.copy(), rows_im.T.copy(), len(generators)