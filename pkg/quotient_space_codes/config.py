"""Runtime settings with optional environment / ``.env`` overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cache

from dotenv import load_dotenv

from .errors import ConfigError

_LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


@dataclass(frozen=True)
class Settings:
    """Limits that keep enumeration and the state-space oracle desk-scale.

    Attributes:
        enum_dim_limit: Largest subspace dimension enumerated element by element.
        brute_force_dim: Largest dimension for brute-force minimum weight.
        oracle_max_qubits: Oracle refuses above this qubit count.
        search_node_budget: Branch-and-bound node budget.
        log_level: Root log level used by the CLI.
    """

    enum_dim_limit: int = 22
    brute_force_dim: int = 20
    oracle_max_qubits: int = 14
    search_node_budget: int = 2_000_000
    log_level: str = "WARNING"


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}", variable=name) from None
    if value < 1:
        raise ConfigError(f"{name} must be >= 1, got {value}", variable=name)
    return value


@cache
def _load_dotenv_once() -> bool:
    return load_dotenv()


def load_settings() -> Settings:
    """Load settings, letting ``QSQC_*`` environment variables override defaults."""
    _load_dotenv_once()
    defaults = Settings()
    level = os.environ.get("QSQC_LOG_LEVEL", defaults.log_level).strip().upper()
    if level not in _LOG_LEVELS:
        raise ConfigError(f"QSQC_LOG_LEVEL must be one of {sorted(_LOG_LEVELS)}", variable="QSQC_LOG_LEVEL")
    return Settings(
        enum_dim_limit=_int_env("QSQC_ENUM_DIM_LIMIT", defaults.enum_dim_limit),
        brute_force_dim=_int_env("QSQC_BRUTE_FORCE_DIM", defaults.brute_force_dim),
        oracle_max_qubits=_int_env("QSQC_ORACLE_MAX_QUBITS", defaults.oracle_max_qubits),
        search_node_budget=_int_env("QSQC_SEARCH_NODE_BUDGET", defaults.search_node_budget),
        log_level=level,
    )
