from __future__ import annotations

import logging
from typing import Any, Dict, List, Optional, Tuple

import pandas as pd

from .bounds import hamming_type, singleton_for
from .corpus import CorpusEntry, bundled_examples
from .kl_oracle import KlReport, encoded_basis, kl_check
from .qsqc_core import QsqcCertificate, build_qsc, classify, ust_distance, verify
from .schemas import validate_schema
from .stabilizer import analyze

logger = logging.getLogger(__name__)

POINTS_PER_CASE = 4


def _score(
    entry: CorpusEntry,
    cert: QsqcCertificate,
    holds: List[Optional[bool]],
    union_ok: bool,
    oracle: Optional[KlReport],
) -> int:
    score = 0
    if cert.certified == entry.expect_certified:
        score += 2
    if all(h is not False for h in holds):
        score += 1
    if union_ok and (oracle is None or oracle.ok == cert.certified):
        score += 1
    return score


def _run_entry(entry: CorpusEntry, oracle_max_n: int) -> Tuple[Dict[str, Any], int]:
    rows, reps = entry.load()
    code = analyze(rows)
    qsc = build_qsc(code, reps)
    cert = verify(code, qsc, entry.d)

    bounds = [hamming_type(code, cert), singleton_for(cert)] if cert.certified else []
    labels = sorted(classify(cert)[0]) if cert.certified else []
    ust = ust_distance(code, qsc)
    oracle = None
    if entry.oracle and code.n <= oracle_max_n:
        oracle = kl_check(encoded_basis(code, qsc), entry.d)

    result = {
        "name": entry.name,
        "expected_certified": entry.expect_certified,
        "certificate": cert.to_dict(),
        "labels": labels,
        "bounds": [b.to_dict() for b in bounds],
        "ust": ust.to_dict(),
        "oracle": oracle.to_dict() if oracle is not None else None,
    }
    union_ok = ust.classical_union_distance <= qsc.distance
    return result, _score(entry, cert, [b.holds for b in bounds], union_ok, oracle)


def run_sweep(names: Optional[List[str]] = None, oracle_max_n: int = 9) -> Dict[str, Any]:
    """Verify, bound and (for small n) oracle-check every selected bundled example."""
    registry = bundled_examples()
    if names:
        registry = registry.create_filtered_registry(names)

    results: List[Dict[str, Any]] = []
    score = 0
    for entry in registry.get_all().values():
        result, points = _run_entry(entry, oracle_max_n)
        score += points
        logger.info("example %s: %s", entry.name, result["certificate"]["status"])
        results.append(result)

    payload = {
        "command": "examples",
        "score": score,
        "max_score": len(results) * POINTS_PER_CASE,
        "results": results,
    }
    ok, message = validate_schema("examples", payload)
    if not ok:
        logger.error("sweep payload failed schema validation: %s", message)
    return payload


def sweep_table(payload: Dict[str, Any]) -> pd.DataFrame:
    rows = []
    for result in payload["results"]:
        cert = result["certificate"]
        hamming = next((b for b in result["bounds"] if b["bound_name"] == "hamming_type"), None)
        rows.append(
            {
                "example": result["name"],
                "parameters": cert["parameters"],
                "status": cert["status"] if cert["reason"] is None else f"{cert['status']} ({cert['reason']})",
                "labels": ",".join(result["labels"]),
                "qsc_d": cert["qsc_distance"],
                "union_d": result["ust"]["classical_union_distance"],
                "ust_d": result["ust"]["ust_distance"],
                "hamming": None if hamming is None else f"{hamming['lhs']}<={hamming['rhs']}",
                "oracle": None if result["oracle"] is None else result["oracle"]["ok"],
            }
        )
    return pd.DataFrame(rows)
