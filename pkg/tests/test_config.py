import pytest

from praaf.config import EngineConfig, load_config
from praaf.errors import ConfigurationError
from praaf.models import SemanticsName, WorldMode


def test_defaults():
    config = load_config()
    assert config.mode == WorldMode.RAW
    assert config.semantics == SemanticsName.ADMISSIBLE
    assert config.tolerance == 1e-9
    assert config.max_elements == 20
    assert config.max_arguments == 20
    assert config.output == "table"
    assert config.eta_id == "eta"
    assert config.exact is False


def test_environment(monkeypatch):
    monkeypatch.setenv("PRAAF_MODE", "induced")
    monkeypatch.setenv("PRAAF_SEMANTICS", "stable")
    monkeypatch.setenv("PRAAF_TOLERANCE", "1e-6")
    monkeypatch.setenv("PRAAF_MAX_ELEMENTS", "12")
    monkeypatch.setenv("PRAAF_OUTPUT", "jsonl")
    monkeypatch.setenv("PRAAF_ETA", "truth")
    monkeypatch.setenv("PRAAF_EXACT", "yes")
    monkeypatch.setenv("PRAAF_LOG_LEVEL", "info")
    config = load_config()
    assert config.mode == WorldMode.INDUCED
    assert config.semantics == SemanticsName.STABLE
    assert config.tolerance == 1e-6
    assert config.max_elements == 12
    assert config.output == "jsonl"
    assert config.eta_id == "truth"
    assert config.exact is True
    assert config.log_level == "INFO"


def test_overrides_skip_none():
    config = EngineConfig().with_overrides(semantics="grounded", mode=None)
    assert config.semantics == SemanticsName.GROUNDED
    assert config.mode == WorldMode.RAW


@pytest.mark.parametrize("overrides", [
    {"tolerance": 0},
    {"max_elements": 0},
    {"max_arguments": -1},
    {"output": "xml"},
    {"eta_id": "not an id"},
    {"semantics": "semi-stable"},
    {"log_level": "LOUD"}
])
def test_invalid_values(overrides):
    with pytest.raises(ConfigurationError):
        EngineConfig().with_overrides(**overrides)


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv("PRAAF_MAX_ARGUMENTS", "many")
    with pytest.raises(ConfigurationError):
        load_config()
