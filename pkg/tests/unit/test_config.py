"""Unit tests for configuration loading."""

import pytest

from core.config import Config, get_config, reset_config
from core.exceptions import GuardError, ValidationError
from core.guards import check_guard


@pytest.fixture
def no_env(tmp_path):
    return str(tmp_path / "missing.env")


def test_defaults_from_packaged_settings():
    config = get_config()
    assert config.engine.cache_enabled is True
    assert config.engine.max_vertices == 14
    assert config.engine.oracle_lambdas == [1, 2, 3, 4]
    assert config.engine.default_engines == ["dc", "subset", "flats", "oracle"]
    assert config.verifier.workers == 1
    assert config.output.default_format == "json"


def test_get_config_is_a_singleton():
    assert get_config() is get_config()
    first = get_config()
    reset_config()
    assert get_config() is not first


def test_missing_settings_file_uses_defaults(tmp_path, no_env):
    config = Config(env_file=no_env, settings_file=str(tmp_path / "absent.yaml"))
    assert config.engine.max_edges == 25
    assert config.engine.max_partition_vertices == 10
    assert config.log_level == "WARNING"


def test_yaml_overrides(tmp_path, no_env):
    settings = tmp_path / "settings.yaml"
    settings.write_text(
        "engine:\n  max_vertices: 9\n  cache_enabled: false\n"
        "verifier:\n  workers: 3\nlogging:\n  level: DEBUG\n"
    )
    config = Config(env_file=no_env, settings_file=str(settings))
    assert config.engine.max_vertices == 9
    assert config.engine.cache_enabled is False
    assert config.verifier.workers == 3
    assert config.log_level == "DEBUG"


def test_environment_overrides_yaml(tmp_path, no_env, monkeypatch):
    settings = tmp_path / "settings.yaml"
    settings.write_text("engine:\n  cache_enabled: true\n")
    monkeypatch.setenv("KDEFECT_CACHE", "false")
    monkeypatch.setenv("KDEFECT_WORKERS", "4")
    monkeypatch.setenv("KDEFECT_MAX_COLORINGS", "500")
    config = Config(env_file=no_env, settings_file=str(settings))
    assert config.engine.cache_enabled is False
    assert config.verifier.workers == 4
    assert config.engine.max_colorings == 500


def test_env_file_is_loaded(tmp_path, monkeypatch):
    env = tmp_path / ".env"
    env.write_text("KDEFECT_LOG_LEVEL=ERROR\n")
    # registered first so teardown removes what load_dotenv sets
    monkeypatch.setenv("KDEFECT_LOG_LEVEL", "unset")
    monkeypatch.delenv("KDEFECT_LOG_LEVEL")
    config = Config(env_file=str(env), settings_file=str(tmp_path / "absent.yaml"))
    assert config.log_level == "ERROR"


def test_malformed_yaml(tmp_path, no_env):
    settings = tmp_path / "settings.yaml"
    settings.write_text("engine: [unclosed\n")
    with pytest.raises(ValidationError, match="Failed to load settings"):
        Config(env_file=no_env, settings_file=str(settings))


def test_unknown_engine_rejected(tmp_path, no_env):
    settings = tmp_path / "settings.yaml"
    settings.write_text("engine:\n  default_engines: [dc, magic]\n")
    with pytest.raises(ValidationError, match="magic"):
        Config(env_file=no_env, settings_file=str(settings))


def test_guard_message_names_guard_and_values():
    check_guard("max_edges", 25, 25)
    with pytest.raises(GuardError) as excinfo:
        check_guard("max_edges", 26, 25)
    assert excinfo.value.name == "max_edges"
    assert str(excinfo.value) == "size guard 'max_edges' exceeded: 26 > 25"
