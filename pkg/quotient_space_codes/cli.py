import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from .bounds import general_hamming_compare, hamming_type, singleton_for
from .config import load_settings
from .corpus import load_data_file
from .errors import (
    ConfigError,
    DimensionMismatch,
    InconsistentLength,
    MatrixSyntaxError,
    QsqcError,
)
from .formats import parse_check_matrix, parse_omega, read_text
from .kl_oracle import KlReport, encoded_basis, kl_check
from .qsqc_core import QscCode, QsqcCertificate, build_qsc, format_distance, ust_distance, verify
from .schemas import validate_schema
from .search import MAXIMIZE, SearchProblem, find_qsc
from .stabilizer import INFINITE, StabilizerCode, analyze, degeneracy_profile, dm
from .sweep import run_sweep, sweep_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

_USAGE_ERRORS = (MatrixSyntaxError, InconsistentLength, DimensionMismatch, ConfigError)


class UsageError(QsqcError):
    code = "USAGE"


def _read_input(path: str) -> str:
    """Read a matrix/Ω file, falling back to the bundled corpus by file name."""
    candidate = Path(path)
    if candidate.exists():
        try:
            return read_text(candidate)
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror or exc}", path=path) from None
    try:
        return load_data_file(candidate.name)
    except (FileNotFoundError, OSError):
        raise UsageError(f"no such file: {path}", path=path) from None


def _load_code(path: str) -> StabilizerCode:
    rows = parse_check_matrix(_read_input(path))
    if not rows:
        raise UsageError(f"{path} holds no check-matrix rows", path=path)
    return analyze(rows)


def _load_qsc(code: StabilizerCode, path: str, norm_mode: str = "quantum") -> QscCode:
    return build_qsc(code, parse_omega(_read_input(path), code.n), norm_mode)


def _qsc_payload(qsc: QscCode) -> Dict[str, Any]:
    return {
        "L": qsc.L,
        "distance": format_distance(qsc.distance),
        "projection_distance": format_distance(qsc.projection_distance()),
        "reps": [str(r) for r in qsc.reps],
    }


def _text_distance(value: int | float) -> str:
    return "inf" if value == INFINITE else str(int(value))


def _certificate_lines(cert: QsqcCertificate) -> List[str]:
    c = cert.conditions
    flags = [name for name, on in vars(cert.flags).items() if on] or ["none"]
    n, k_s, d_s = cert.containing_code
    lines = [
        f"{cert.parameters()} {cert.status}" + (f" ({cert.reason})" if cert.reason else ""),
        f"  conditions: self_orthogonal={c.self_orthogonal} d_le_dm={c.d_le_dm} "
        f"qsc_distance_ok={c.qsc_distance_ok} measurement_ok={c.measurement_ok}",
        f"  flags: {', '.join(flags)}",
        f"  containing code: [[{n}, {k_s}, {_text_distance(d_s)}]]  d_m={_text_distance(cert.dm)}",
        f"  QSC distance {_text_distance(cert.qsc_distance)} (needs {cert.required_distance})",
    ]
    if cert.witness:
        lines.append(f"  witness: {json.dumps(cert.witness, ensure_ascii=True)}")
    return lines


def _oracle_lines(report: KlReport) -> List[str]:
    scope = "sampled" if report.partial else "full"
    line = f"  oracle: {'ok' if report.ok else 'FAILED'} over {report.errors_checked} errors ({scope})"
    lines = [line]
    if report.witness:
        lines.append(f"  oracle witness: {json.dumps(report.witness, ensure_ascii=True)}")
    return lines


def _cmd_analyze(args: argparse.Namespace) -> tuple[Dict[str, Any], int, List[str]]:
    code = _load_code(args.check_matrix)
    degeneracy = None
    if args.d is not None:
        profile = degeneracy_profile(code, args.d)
        degeneracy = {
            "d": args.d,
            "s": profile.s,
            "lowweight_span": [str(v) for v in profile.span.basis],
            "d_s": format_distance(profile.d_s),
            "d_s_exact": profile.d_s_exact,
        }
    payload = {
        "command": "analyze",
        "n": code.n,
        "k": code.k,
        "dim": code.subspace.dim,
        "self_dual": code.is_self_dual,
        "dm": format_distance(dm(code)),
        "generators": [str(v) for v in code.generators],
        "degeneracy": degeneracy,
    }
    lines = [
        f"n={code.n} dim C={code.subspace.dim} k={code.k} self_dual={code.is_self_dual} "
        f"d_m={_text_distance(dm(code))}"
    ]
    if degeneracy is not None:
        lines.append(f"  d={args.d}: s={degeneracy['s']} d_s={_text_distance(profile.d_s)}")
        lines.extend(f"  C({args.d - 1}) span: {v}" for v in degeneracy["lowweight_span"])
    return payload, EXIT_OK, lines


def _run_oracle(code: StabilizerCode, qsc: QscCode, d: int, args: argparse.Namespace) -> KlReport:
    return kl_check(encoded_basis(code, qsc), d, sample=args.sample, seed=args.seed, workers=args.workers)


def _cmd_verify(args: argparse.Namespace) -> tuple[Dict[str, Any], int, List[str]]:
    code = _load_code(args.check_matrix)
    qsc = _load_qsc(code, args.omega, args.norm)
    cert = verify(code, qsc, args.d)
    oracle = _run_oracle(code, qsc, args.d, args) if args.oracle else None
    ok = cert.certified and (oracle is None or oracle.ok)
    payload = {
        "command": "verify",
        "certificate": cert.to_dict(),
        "qsc": _qsc_payload(qsc),
        "oracle": oracle.to_dict() if oracle is not None else None,
    }
    lines = _certificate_lines(cert) + (_oracle_lines(oracle) if oracle is not None else [])
    return payload, EXIT_OK if ok else EXIT_FAILED, lines


def _cmd_search(args: argparse.Namespace) -> tuple[Dict[str, Any], int, List[str]]:
    code = _load_code(args.check_matrix)
    problem = SearchProblem(
        code=code,
        d=args.d,
        L_target=MAXIMIZE if args.maximize or args.L is None else args.L,
        strategy=args.strategy,
        seed=args.seed,
        budget=args.budget,
        norm_mode=args.norm,
    )
    qsc = find_qsc(problem)
    cert = verify(code, qsc, args.d)
    payload = {
        "command": "search",
        "d": args.d,
        "strategy": args.strategy,
        "seed": args.seed,
        "qsc": _qsc_payload(qsc),
        "certificate": cert.to_dict(),
    }
    lines = [f"found L={qsc.L} at d={args.d} ({args.strategy})"]
    lines.extend(f"  {r}" for r in qsc.reps)
    lines.extend(_certificate_lines(cert))
    return payload, EXIT_OK, lines


def _cmd_bounds(args: argparse.Namespace) -> tuple[Dict[str, Any], int, List[str]]:
    code = _load_code(args.check_matrix)
    qsc = _load_qsc(code, args.omega)
    cert = verify(code, qsc, args.d)
    if not cert.certified:
        raise QsqcError(f"bounds need a certified code; verify rejected ({cert.reason})", status="rejected")
    reports = [hamming_type(code, cert), singleton_for(cert), general_hamming_compare(code, args.d, args.t)]
    holds = all(r.holds is not False for r in reports if r.bound_name != "general_hamming_compare")
    payload = {
        "command": "bounds",
        "certificate": cert.to_dict(),
        "reports": [r.to_dict() for r in reports],
    }
    lines = [cert.parameters()]
    for r in reports:
        verdict = "n/a" if not r.applicable else ("holds" if r.holds else "fails")
        lines.append(f"  {r.bound_name}: lhs={r.lhs} rhs={r.rhs} {verdict}")
    return payload, EXIT_OK if holds else EXIT_FAILED, lines


def _cmd_ust(args: argparse.Namespace) -> tuple[Dict[str, Any], int, List[str]]:
    code = _load_code(args.check_matrix)
    qsc = _load_qsc(code, args.omega)
    report = ust_distance(code, qsc)
    payload = {"command": "ust", **report.to_dict(), "qsc_distance": format_distance(qsc.distance)}
    lines = [
        f"USt distance {_text_distance(report.ust_distance)} vs union-code distance "
        f"{_text_distance(report.classical_union_distance)} (strict={report.strict})",
        f"  QSC distance {_text_distance(qsc.distance)}; exclusion set read as {report.exclusion_reading}",
    ]
    return payload, EXIT_OK, lines


def _cmd_examples(args: argparse.Namespace) -> tuple[Dict[str, Any], int, List[str]]:
    try:
        payload = run_sweep(args.names or None, oracle_max_n=args.oracle_max_n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    lines = [sweep_table(payload).to_string(index=False), f"score {payload['score']}/{payload['max_score']}"]
    code = EXIT_OK if payload["score"] == payload["max_score"] else EXIT_FAILED
    return payload, code, lines


_COMMANDS: Dict[str, Callable[[argparse.Namespace], tuple[Dict[str, Any], int, List[str]]]] = {
    "analyze": _cmd_analyze,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "bounds": _cmd_bounds,
    "ust": _cmd_ust,
    "examples": _cmd_examples,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="Emit one JSON document on stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level on stderr")

    parser = argparse.ArgumentParser(prog="qsqc", description="Quotient space quantum codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="Validate C and report k, d_m and degeneracy")
    p.add_argument("check_matrix")
    p.add_argument("--d", type=int, default=None)

    p = sub.add_parser("verify", parents=[common], help="Certify ((n, 2^k·L, d)) for (C, Ω, d)")
    p.add_argument("check_matrix")
    p.add_argument("omega")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--norm", choices=["quantum", "hamming"], default="quantum")
    p.add_argument("--oracle", action="store_true", help="Also run the exact Knill-Laflamme oracle")
    p.add_argument("--sample", type=int, default=None, help="Check only this many errors (partial)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("search", parents=[common], help="Search for Ω at distance d")
    p.add_argument("check_matrix")
    p.add_argument("--d", type=int, required=True)
    size = p.add_mutually_exclusive_group()
    size.add_argument("--L", type=int, default=None)
    size.add_argument("--maximize", action="store_true")
    p.add_argument("--strategy", choices=["exhaustive", "greedy"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=None, help="Branch-and-bound node budget")
    p.add_argument("--norm", choices=["quantum", "hamming"], default="quantum")

    p = sub.add_parser("bounds", parents=[common], help="Hamming, Singleton and general Hamming comparisons")
    p.add_argument("check_matrix")
    p.add_argument("omega")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--t", type=int, default=None, help="t for the general Hamming comparison")

    p = sub.add_parser("ust", parents=[common], help="Union stabilizer distance against the union-code distance")
    p.add_argument("check_matrix")
    p.add_argument("omega")

    p = sub.add_parser("examples", parents=[common], help="Run the bundled example sweep")
    p.add_argument("names", nargs="*", help="Example or group names (default: all)")
    p.add_argument("--oracle-max-n", type=int, default=9)
    return parser


def _configure_logging(verbose: bool) -> None:
    level = "DEBUG" if verbose else load_settings().log_level
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def _emit(args: argparse.Namespace, schema: str, payload: Dict[str, Any], lines: List[str]) -> None:
    if args.json:
        ok, message = validate_schema(schema, payload)
        if not ok:
            logger.error("%s output failed schema validation: %s", schema, message)
        print(json.dumps(payload, ensure_ascii=True))
    else:
        print("\n".join(lines))


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        _configure_logging(args.verbose)
        payload, code, lines = _COMMANDS[args.command](args)
    except QsqcError as exc:
        status = EXIT_USAGE if isinstance(exc, _USAGE_ERRORS + (UsageError,)) else EXIT_FAILED
        logger.info("%s failed: %s", args.command, exc)
        error = exc.to_dict()
        if args.json:
            print(json.dumps(error, ensure_ascii=True))
        else:
            print(f"error: {error['error']}: {error['reason']}")
        return status

    _emit(args, args.command, payload, lines)
    return code
