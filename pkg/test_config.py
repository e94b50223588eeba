#!/usr/bin/env python3
"""
Tests for settings: YAML file, environment overrides, runtime updates and export
"""

import json
import os
import sys
import tempfile
from contextlib import contextmanager
from pathlib import Path

import pytest
import yaml

from config import ConfigManager, WreathSettings, get_config, get_config_value, reload_config
from error_handler import ConfigurationError


@contextmanager
def environment(**values):
    """Temporarily set WREATH_* variables."""
    saved = {key: os.environ.get(key) for key in values}
    os.environ.update({key: str(value) for key, value in values.items()})
    try:
        yield
    finally:
        for key, old in saved.items():
            if old is None:
                os.environ.pop(key, None)
            else:
                os.environ[key] = old


@contextmanager
def config_file(content):
    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / "wreathcount.yaml"
        path.write_text(content)
        yield str(path)


def test_defaults():
    settings = WreathSettings()
    assert settings.series_order >= 0
    assert settings.output_format in ("csv", "json", "table")
    assert settings.solver_tolerance > 0


def test_yaml_file_and_environment_precedence():
    with config_file("series_order: 32\nworkers: 2\noutput_format: JSON\n") as path:
        manager = ConfigManager(path)
        settings = manager.load_config()
        assert settings.series_order == 32
        assert settings.workers == 2
        assert settings.output_format == "json"

        with environment(WREATH_WORKERS=3, WREATH_LOG_LEVEL="debug"):
            settings = ConfigManager(path).load_config()
        assert settings.workers == 3
        assert settings.log_level == "DEBUG"
        assert settings.series_order == 32


def test_invalid_settings_are_rejected():
    for content in ("output_format: xml\n", "workers: 0\n", "solver_floor: -1\n", "log_level: LOUD\n"):
        with config_file(content) as path:
            with pytest.raises(ConfigurationError):
                ConfigManager(path).load_config()
    with config_file("- just\n- a list\n") as path:
        with pytest.raises(ConfigurationError):
            ConfigManager(path).load_config()
    with config_file("series_order: [unclosed\n") as path:
        with pytest.raises(ConfigurationError):
            ConfigManager(path).load_config()


def test_update_validates():
    with config_file("series_order: 16\n") as path:
        manager = ConfigManager(path)
        manager.update({"oracle_budget": 1000, "solver_floor": 20.0})
        assert manager.get("oracle_budget") == 1000
        assert manager.get("solver_floor") == 20.0
        manager.set("output_format", "TABLE")
        assert manager.get("output_format") == "table"

        with pytest.raises(ConfigurationError):
            manager.update({"workers": 0})
        with pytest.raises(ConfigurationError):
            manager.update({"no_such_setting": 1})
        # a rejected update leaves the previous settings in place
        assert manager.get("oracle_budget") == 1000


def test_validate_reports_issues():
    with config_file("series_order: 5000\nsolver_tolerance: 0.001\n") as path:
        manager = ConfigManager(path)
        assert manager.validate() == ["Configuration not loaded"]
        manager.load_config()
        issues = manager.validate()
        assert any("series_order" in issue for issue in issues)
        assert any("solver_tolerance" in issue for issue in issues)


def test_export_config():
    with config_file("series_order: 24\n") as path:
        manager = ConfigManager(path)
        assert yaml.safe_load(manager.export_config("yaml"))["series_order"] == 24
        assert json.loads(manager.export_config("json"))["series_order"] == 24
        with pytest.raises(ConfigurationError):
            manager.export_config("toml")


def test_global_accessors():
    with config_file("oracle_budget: 12345\n") as path:
        reload_config(path)
        try:
            assert get_config().oracle_budget == 12345
            assert get_config_value("oracle_budget") == 12345
            assert get_config_value("missing", "fallback") == "fallback"
        finally:
            reload_config()


if __name__ == "__main__":
    print("=" * 60)
    print("wreathcount - configuration tests")
    print("=" * 60)
    failed = 0
    for name, func in list(globals().items()):
        if name.startswith("test_") and callable(func):
            try:
                func()
                print(f"PASS {name}")
            except Exception as e:
                failed += 1
                print(f"FAIL {name}: {e!r}")
    print("=" * 60)
    sys.exit(1 if failed else 0)
