import pytest

from quotient_space_codes.config import Settings, load_settings
from quotient_space_codes.errors import ConfigError

_VARIABLES = (
    "QSQC_ENUM_DIM_LIMIT",
    "QSQC_BRUTE_FORCE_DIM",
    "QSQC_ORACLE_MAX_QUBITS",
    "QSQC_SEARCH_NODE_BUDGET",
    "QSQC_LOG_LEVEL",
)


def test_defaults(monkeypatch):
    for name in _VARIABLES:
        monkeypatch.delenv(name, raising=False)
    assert load_settings() == Settings()


def test_environment_override(monkeypatch):
    monkeypatch.setenv("QSQC_ORACLE_MAX_QUBITS", "10")
    monkeypatch.setenv("QSQC_LOG_LEVEL", "debug")
    settings = load_settings()
    assert settings.oracle_max_qubits == 10
    assert settings.log_level == "DEBUG"


def test_blank_value_uses_default(monkeypatch):
    monkeypatch.setenv("QSQC_SEARCH_NODE_BUDGET", " ")
    assert load_settings().search_node_budget == Settings().search_node_budget


@pytest.mark.parametrize("value", ["many", "0", "-3"])
def test_invalid_integer(monkeypatch, value):
    monkeypatch.setenv("QSQC_ENUM_DIM_LIMIT", value)
    with pytest.raises(ConfigError) as info:
        load_settings()
    assert info.value.fields["variable"] == "QSQC_ENUM_DIM_LIMIT"


def test_invalid_log_level(monkeypatch):
    monkeypatch.setenv("QSQC_LOG_LEVEL", "LOUD")
    with pytest.raises(ConfigError):
        load_settings()
