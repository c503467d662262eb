"""Quotient space quantum codes: build, search for and verify ((n, 2^k·L, d)) codes."""

__version__ = "0.1.0"

__all__ = [
    "bounds",
    "cli",
    "corpus",
    "gf2_linalg",
    "kl_oracle",
    "pauli_space",
    "qsqc_core",
    "quotient",
    "search",
    "stabilizer",
]
