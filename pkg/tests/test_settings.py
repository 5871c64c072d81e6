import os

import pytest

from affine_weyl.bruhat import DEFAULT_LENGTH_CAP
from affine_weyl.errors import ConfigurationError
from verifier.settings import (
    ENV_CACHE_DIR,
    ENV_DIMENSION_CAP,
    ENV_LENGTH_CAP,
    ENV_LOG_LEVEL,
    SuiteConfig,
    load_settings,
)


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    for name in (ENV_CACHE_DIR, ENV_LENGTH_CAP, ENV_DIMENSION_CAP, ENV_LOG_LEVEL):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


def test_defaults(clean_env):
    settings = load_settings()
    assert settings.cache_dir is None
    assert settings.length_cap == DEFAULT_LENGTH_CAP
    assert settings.log_level == "INFO"


def test_environment_overrides(clean_env, tmp_path):
    clean_env.setenv(ENV_CACHE_DIR, str(tmp_path / "kl"))
    clean_env.setenv(ENV_LENGTH_CAP, "9")
    clean_env.setenv(ENV_DIMENSION_CAP, "50")
    clean_env.setenv(ENV_LOG_LEVEL, "debug")
    settings = load_settings()
    assert settings.cache_dir == str(tmp_path / "kl")
    assert settings.length_cap == 9
    assert settings.dimension_cap == 50
    assert settings.log_level == "DEBUG"


def test_dotenv_file_fills_unset_variables(clean_env, tmp_path):
    (tmp_path / ".env").write_text(f"{ENV_LENGTH_CAP}=7\n", encoding="utf-8")
    try:
        assert load_settings().length_cap == 7
    finally:
        os.environ.pop(ENV_LENGTH_CAP, None)


@pytest.mark.parametrize("name,value", [
    (ENV_LENGTH_CAP, "abc"),
    (ENV_LENGTH_CAP, "-1"),
    (ENV_DIMENSION_CAP, "1.5"),
    (ENV_LOG_LEVEL, "chatty"),
])
def test_bad_variables(clean_env, name, value):
    clean_env.setenv(name, value)
    with pytest.raises(ConfigurationError):
        load_settings()


def test_suite_config_validation():
    with pytest.raises(ConfigurationError):
        SuiteConfig(jobs=0)
    with pytest.raises(ConfigurationError):
        SuiteConfig(max_len=-1)


def test_suite_config_dict_omits_run_only_fields():
    data = SuiteConfig(datum="SL:2", max_len=4, jobs=3, output="out.json").to_dict()
    assert "jobs" not in data
    assert "output" not in data
    assert data["datum"] == "SL:2"
    assert data["max_len"] == 4
