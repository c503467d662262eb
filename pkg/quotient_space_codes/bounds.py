"""Measurement Hamming / Gilbert-Varshamov type bounds, the Singleton bound for
QSQCs, and the exploratory comparison against the general quantum Hamming bound."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .errors import PreconditionError
from .pauli_space import count_errors
from .qsqc_core import QsqcCertificate
from .quotient import QuotientSpace, me_count
from .stabilizer import StabilizerCode, degeneracy_profile

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundReport:
    """One evaluated inequality. ``holds`` is None when the bound does not apply."""

    bound_name: str
    lhs: int
    rhs: int
    holds: Optional[bool]
    applicable: bool = True
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "bound_name": self.bound_name,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "applicable": self.applicable,
            "detail": dict(self.detail),
        }


def _me(code: StabilizerCode, d: int, t: int) -> tuple[int, int]:
    """(s, |ME(t)|) for cosets of C^⊥s inside C(d-1)^⊥s."""
    profile = degeneracy_profile(code, d)
    count = me_count(QuotientSpace(code.dual), profile.span_dual, min(t, code.n))
    return profile.s, count


def hamming_type(code: StabilizerCode, cert: QsqcCertificate) -> BoundReport:
    """2^k · L · |ME(⌊(d-1)/2⌋)| <= 2^(n-s) for a certified ((n, 2^k·L, d))."""
    if not cert.certified:
        raise PreconditionError("hamming_type needs a certified certificate")
    d = cert.claimed_d
    t = (d - 1) // 2
    s, me = _me(code, d, t)
    lhs = 2**code.k * cert.L * me
    rhs = 2 ** (code.n - s)
    report = BoundReport(
        "hamming_type",
        lhs,
        rhs,
        lhs <= rhs,
        detail={"n": code.n, "k": code.k, "L": cert.L, "d": d, "s": s, "t": t, "me": me},
    )
    logger.debug("hamming_type: %d <= %d is %s", lhs, rhs, report.holds)
    return report


def gv_type(code: StabilizerCode, d: int, L: int) -> BoundReport:
    """If 2^k · L · |ME(d-1)| < 2^(n-s), an (L+1)-coset code at distance >= d exists.

    The report also echoes the equivalent form L · |ME(d-1)| < 2^(n-k-s),
    whose right side is the number of cosets of C^⊥s inside C(d-1)^⊥s.
    """
    if L < 1:
        raise PreconditionError(f"L must be >= 1, got {L}")
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    t = d - 1
    s, me = _me(code, d, t)
    lhs = 2**code.k * L * me
    rhs = 2 ** (code.n - s)
    return BoundReport(
        "gv_type",
        lhs,
        rhs,
        lhs < rhs,
        detail={
            "n": code.n,
            "k": code.k,
            "L": L,
            "d": d,
            "s": s,
            "t": t,
            "me": me,
            "reduced_lhs": L * me,
            "reduced_rhs": 2 ** (code.n - code.k - s),
            "promised_L": L + 1,
        },
    )


def singleton(n: int, k: int, l: Optional[int], d: int) -> BoundReport:
    """n >= k + l + 2d - 2, applicable when l is an integer, n ≡ k (mod 2) and l is even."""
    rhs = k + (l or 0) + 2 * d - 2
    detail: Dict[str, Any] = {"n": n, "k": k, "l": l, "d": d}
    if l is None or (n - k) % 2 or l % 2:
        return BoundReport("singleton", n, rhs, None, applicable=False, detail=detail)
    return BoundReport("singleton", n, rhs, n >= rhs, detail=detail)


def singleton_for(cert: QsqcCertificate) -> BoundReport:
    """Singleton bound on a certificate; a non power-of-two L is reported as not applicable."""
    L = cert.L
    l = L.bit_length() - 1 if L & (L - 1) == 0 else None
    report = singleton(cert.n, cert.k, l, cert.claimed_d)
    report.detail["L"] = L
    return report


def general_hamming_compare(code: StabilizerCode, d: int, t: Optional[int] = None) -> BoundReport:
    """Both sides of Σ_{i<=t} 3^i C(n, i) <= 2^s · |ME(t)|.

    Purely exploratory: ``holds`` records which way the inequality falls on
    this instance. ``t`` defaults to ⌊(d-1)/2⌋.
    """
    if d < 1:
        raise PreconditionError(f"d must be >= 1, got {d}")
    t = (d - 1) // 2 if t is None else t
    if t < 0:
        raise PreconditionError(f"t must be >= 0, got {t}")
    s, me = _me(code, d, t)
    lhs = count_errors(code.n, t)
    rhs = 2**s * me
    direction = "<=" if lhs <= rhs else ">"
    logger.info("general Hamming comparison at d=%d t=%d: %d %s %d", d, t, lhs, direction, rhs)
    return BoundReport(
        "general_hamming_compare",
        lhs,
        rhs,
        lhs <= rhs,
        detail={"n": code.n, "d": d, "s": s, "t": t, "me": me, "direction": direction},
    )
