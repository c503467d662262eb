"""Shared builders for the bundled codes."""

from functools import cache

from quotient_space_codes.corpus import bundled_examples, load_data_file
from quotient_space_codes.formats import parse_check_matrix, parse_omega
from quotient_space_codes.gf2_linalg import SympVector
from quotient_space_codes.qsqc_core import QscCode, build_qsc
from quotient_space_codes.stabilizer import StabilizerCode, analyze


def v(text: str) -> SympVector:
    return SympVector.parse(text)


@cache
def code(name: str) -> StabilizerCode:
    """Stabilizer code from a bundled ``<name>.chk`` file."""
    return analyze(parse_check_matrix(load_data_file(f"{name}.chk")))


def qsc(code_name: str, omega_name: str, norm_mode: str = "quantum") -> QscCode:
    c = code(code_name)
    return build_qsc(c, parse_omega(load_data_file(f"{omega_name}.om"), c.n), norm_mode)


def example(name: str) -> tuple[StabilizerCode, QscCode, int]:
    """(C, Ω, d) of a registered example."""
    entry = bundled_examples().get(name)
    return code(entry.matrix_file[:-4]), qsc(entry.matrix_file[:-4], entry.omega_file[:-3]), entry.d


C8_FAMILY = ["c8", "c81", "c82", "c83"]
