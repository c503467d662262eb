"""Text format for check matrices and Ω files.

One vector per line in the printed ``a_1..a_n|b_1..b_n`` notation. ``#``
starts a comment, blank lines are skipped and whitespace inside a vector is
ignored, so matrices can be pasted with their digit grouping intact.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, List, Optional

from .errors import DimensionMismatch, InconsistentLength, MatrixSyntaxError, PreconditionError
from .gf2_linalg import SympVector


def _parse_line(line: str, lineno: int) -> Optional[SympVector]:
    content = line.split("#", 1)[0]
    if not content.strip():
        return None
    halves: List[List[int]] = [[]]
    for col, ch in enumerate(content, start=1):
        if ch in "01":
            halves[-1].append(int(ch))
        elif ch == "|":
            if len(halves) == 2:
                raise MatrixSyntaxError(lineno, col, "more than one '|'")
            halves.append([])
        elif not ch.isspace():
            raise MatrixSyntaxError(lineno, col, f"unexpected character {ch!r}")
    if len(halves) != 2:
        raise MatrixSyntaxError(lineno, len(content.rstrip()) + 1, "missing '|'")
    a, b = halves
    if len(a) != len(b):
        raise InconsistentLength(lineno, f"a half has {len(a)} bits, b half has {len(b)}")
    if not a:
        raise MatrixSyntaxError(lineno, 1, "empty vector")
    return SympVector.from_parts(a, b)


def parse_check_matrix(text: str) -> List[SympVector]:
    """Vectors in file order; every data line must share one n."""
    vectors: List[SympVector] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        v = _parse_line(line, lineno)
        if v is None:
            continue
        if vectors and v.n != vectors[0].n:
            raise InconsistentLength(lineno, f"n={v.n} but earlier lines have n={vectors[0].n}")
        vectors.append(v)
    return vectors


def parse_omega(text: str, n: Optional[int] = None) -> List[SympVector]:
    """Coset representatives; ``n`` is the companion matrix's qubit count."""
    reps = parse_check_matrix(text)
    if not reps:
        raise PreconditionError("Ω file holds no representatives")
    if n is not None and reps[0].n != n:
        raise DimensionMismatch(f"Ω has n={reps[0].n}, the check matrix has n={n}", left=reps[0].n, right=n)
    return reps


def serialize_vectors(vectors: Iterable[SympVector], comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.extend(str(v) for v in vectors)
    return "\n".join(lines) + "\n"


def read_text(path: str | Path) -> str:
    """UTF-8 file contents; undecodable bytes are a syntax error at their position."""
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        line = data.count(b"\n", 0, exc.start) + 1
        col = exc.start - data.rfind(b"\n", 0, exc.start)
        raise MatrixSyntaxError(line, col, "not valid UTF-8") from None
