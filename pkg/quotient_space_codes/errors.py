"""Exception hierarchy shared by the library and the CLI.

Every error carries a stable machine ``code`` so the CLI can turn it into a
JSON error object without string matching.
"""

from __future__ import annotations

from typing import Any, Dict


class QsqcError(Exception):
    """Base class for all library errors."""

    code = "QSQC_ERROR"

    def __init__(self, message: str, **fields: Any) -> None:
        super().__init__(message)
        self.fields: Dict[str, Any] = fields

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"error": self.code, "reason": str(self)}
        payload.update(self.fields)
        return payload


class DimensionMismatch(QsqcError, ValueError):
    code = "DIMENSION_MISMATCH"


class PreconditionError(QsqcError, ValueError):
    code = "PRECONDITION"


class NotSelfOrthogonal(QsqcError, ValueError):
    code = "NOT_SELF_ORTHOGONAL"

    def __init__(self, i: int, j: int) -> None:
        super().__init__(f"rows {i} and {j} have symplectic inner product 1", pair=[i, j])
        self.pair = (i, j)


class DuplicateCoset(QsqcError, ValueError):
    code = "DUPLICATE_COSET"

    def __init__(self, i: int, j: int) -> None:
        super().__init__(f"representatives {i} and {j} lie in the same coset", pair=[i, j])
        self.pair = (i, j)


class TooLarge(QsqcError):
    code = "TOO_LARGE"

    def __init__(self, what: str, size: int, limit: int) -> None:
        super().__init__(
            f"{what} needs 2^{size} elements, above the enumeration limit 2^{limit}",
            what=what,
            size=size,
            limit=limit,
        )


class TargetExceedsDm(QsqcError, ValueError):
    code = "TARGET_EXCEEDS_DM"

    def __init__(self, d: int, dm: int) -> None:
        super().__init__(f"target distance {d} exceeds d_m = {dm}", d=d, dm=dm)


class NotFound(QsqcError):
    code = "NOT_FOUND"


class BudgetExhausted(QsqcError):
    code = "BUDGET_EXHAUSTED"

    def __init__(self, nodes: int, best: int) -> None:
        super().__init__(
            f"search stopped after {nodes} nodes; best size so far {best}",
            nodes=nodes,
            best=best,
        )
        self.nodes = nodes
        self.best = best


class RankDeficient(QsqcError):
    code = "RANK_DEFICIENT"


class OracleRefused(QsqcError):
    code = "ORACLE_REFUSED"

    def __init__(self, n: int, limit: int, detail: str = "") -> None:
        message = f"state-space oracle refused for n={n} (limit {limit})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message, n=n, limit=limit)


class MatrixSyntaxError(QsqcError, ValueError):
    code = "SYNTAX_ERROR"

    def __init__(self, line: int, col: int, detail: str) -> None:
        super().__init__(f"line {line}, column {col}: {detail}", line=line, col=col)
        self.line = line
        self.col = col


class InconsistentLength(QsqcError, ValueError):
    code = "INCONSISTENT_LENGTH"

    def __init__(self, line: int, detail: str) -> None:
        super().__init__(f"line {line}: {detail}", line=line)
        self.line = line


class ConfigError(QsqcError, ValueError):
    code = "CONFIG_ERROR"
