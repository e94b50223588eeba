"""
Configuration for wreathcount: validated settings from environment variables,
an optional YAML file and defaults (in that order of precedence).
"""

import json
import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from dotenv import load_dotenv
from pydantic import BaseSettings, Field, ValidationError, validator

from error_handler import ConfigurationError
from enhanced_logging import get_enhanced_logger

# Load environment variables
load_dotenv()

ENV_PREFIX = "WREATH_"
DEFAULT_CONFIG_FILE = "wreathcount.yaml"


class WreathSettings(BaseSettings):
    """Tunable defaults for the exact, oracle and asymptotic computations."""

    # Exact series
    series_order: int = Field(default=64, env="WREATH_SERIES_ORDER")

    # Brute-force oracle
    oracle_budget: int = Field(default=10**8, env="WREATH_ORACLE_BUDGET")

    # Asymptotic solvers
    solver_floor: float = Field(default=100.0, env="WREATH_SOLVER_FLOOR")
    solver_tolerance: float = Field(default=1e-10, env="WREATH_SOLVER_TOLERANCE")
    solver_max_iterations: int = Field(default=200, env="WREATH_SOLVER_MAX_ITERATIONS")
    hayman_tolerance: float = Field(default=1e-9, env="WREATH_HAYMAN_TOLERANCE")
    lattice_cutoff: float = Field(default=1e-30, env="WREATH_LATTICE_CUTOFF")

    # Execution
    workers: int = Field(default=1, env="WREATH_WORKERS")
    output_format: str = Field(default="csv", env="WREATH_OUTPUT_FORMAT")

    # Logging
    log_level: str = Field(default="WARNING", env="WREATH_LOG_LEVEL")
    log_file: Optional[str] = Field(default=None, env="WREATH_LOG_FILE")
    structured_logs: bool = Field(default=True, env="WREATH_STRUCTURED_LOGS")

    @validator("series_order")
    def validate_series_order(cls, v):
        if v < 0:
            raise ValueError("series_order must be non-negative")
        return v

    @validator("oracle_budget", "solver_max_iterations", "workers")
    def validate_positive_int(cls, v, field):
        if v < 1:
            raise ValueError(f"{field.name} must be at least 1")
        return v

    @validator("solver_floor", "solver_tolerance", "hayman_tolerance", "lattice_cutoff")
    def validate_positive_float(cls, v, field):
        if not v > 0:
            raise ValueError(f"{field.name} must be positive")
        return v

    @validator("output_format")
    def validate_output_format(cls, v):
        if v.lower() not in ("csv", "json", "table"):
            raise ValueError("output_format must be csv, json or table")
        return v.lower()

    @validator("log_level")
    def validate_log_level(cls, v):
        valid_levels = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
        if v.upper() not in valid_levels:
            raise ValueError(f"Log level must be one of {valid_levels}")
        return v.upper()

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        case_sensitive = False


class ConfigManager:
    """Loads, validates and exports :class:`WreathSettings`."""

    def __init__(self, config_file: Optional[str] = None):
        self.config_file = Path(config_file or os.getenv("WREATH_CONFIG_FILE", DEFAULT_CONFIG_FILE))
        self.settings: Optional[WreathSettings] = None
        self.logger = get_enhanced_logger("config_manager")

    def load_config(self) -> WreathSettings:
        """Load configuration from the YAML file and environment variables."""
        yaml_config: Dict[str, Any] = {}
        if self.config_file.exists():
            try:
                with open(self.config_file, "r", encoding="utf-8") as f:
                    yaml_config = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigurationError(f"cannot parse {self.config_file}: {e}") from e
            if not isinstance(yaml_config, dict):
                raise ConfigurationError(f"{self.config_file} must hold a mapping")

        # Environment variables take precedence over the file
        env_config = {
            key[len(ENV_PREFIX):].lower(): value
            for key, value in os.environ.items()
            if key.startswith(ENV_PREFIX) and key != "WREATH_CONFIG_FILE"
        }
        merged_config = {**yaml_config, **env_config}

        try:
            self.settings = WreathSettings(**merged_config)
        except ValidationError as e:
            raise ConfigurationError(f"invalid configuration: {e}") from e

        self.logger.debug("Configuration loaded", config_file=str(self.config_file))
        return self.settings

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value"""
        if self.settings is None:
            self.load_config()
        return getattr(self.settings, key, default)

    def set(self, key: str, value: Any) -> None:
        """Set a configuration value (validated, runtime only)"""
        self.update({key: value})

    def update(self, updates: Dict[str, Any]) -> None:
        """Update multiple configuration values, re-running validation."""
        if self.settings is None:
            self.load_config()
        unknown = [k for k in updates if k not in WreathSettings.__fields__]
        if unknown:
            raise ConfigurationError(f"unknown setting(s): {', '.join(sorted(unknown))}")
        try:
            self.settings = WreathSettings(**{**self.settings.dict(), **updates})
        except ValidationError as e:
            raise ConfigurationError(f"invalid configuration: {e}") from e
        self.logger.info("Configuration updated", updates=updates)

    def validate(self) -> List[str]:
        """Return advisory issues with the current settings."""
        issues: List[str] = []
        if self.settings is None:
            issues.append("Configuration not loaded")
            return issues

        if self.settings.series_order > 2048:
            issues.append("series_order above 2048 makes exact series very slow")
        if self.settings.oracle_budget > 10**9:
            issues.append("oracle_budget above 1e9 may run for hours")
        if self.settings.solver_tolerance > 1e-6:
            issues.append("solver_tolerance looser than 1e-6 weakens the residual certificate")
        if self.settings.log_file and not Path(self.settings.log_file).parent.exists():
            issues.append(f"Log directory does not exist: {self.settings.log_file}")
        return issues

    def export_config(self, format: str = "yaml") -> str:
        """Export current configuration to string"""
        if self.settings is None:
            self.load_config()

        config_dict = self.settings.dict()
        if format.lower() == "yaml":
            return yaml.safe_dump(config_dict, default_flow_style=False, indent=2)
        elif format.lower() == "json":
            return json.dumps(config_dict, indent=2)
        raise ConfigurationError("Format must be 'yaml' or 'json'")


# ---------- GLOBAL CONFIG INSTANCE ----------
_config_manager: Optional[ConfigManager] = None


def get_config_manager() -> ConfigManager:
    """Get or create the global configuration manager."""
    global _config_manager
    if _config_manager is None:
        _config_manager = ConfigManager()
    return _config_manager


def get_config() -> WreathSettings:
    """Get the current configuration settings"""
    manager = get_config_manager()
    return manager.settings or manager.load_config()


def get_config_value(key: str, default: Any = None) -> Any:
    """Get a specific configuration value"""
    return get_config_manager().get(key, default)


def reload_config(config_file: Optional[str] = None) -> WreathSettings:
    """Reload configuration from file and environment."""
    global _config_manager
    _config_manager = ConfigManager(config_file)
    return _config_manager.load_config()
