"""
AltPeaks Configuration Management
=================================

Layered configuration with dot-notation keys.

Configuration Loading Priority (highest to lowest):
1. Runtime overrides (`Config.set`, CLI flags)
2. Environment variables (ALTPEAKS_*)
3. .env file in the working directory
4. Default values

Environment keys map their first underscore-separated word to the
section: ALTPEAKS_LIMITS_MAX_N -> limits.max_n.

Example:
    config = get_config()
    config.get_int("limits.max_n")      # 30 unless overridden
    config.set("workers.jobs", 1)
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import orjson
from dotenv import dotenv_values


ENV_PREFIX = "ALTPEAKS_"


def default_settings() -> Dict[str, Any]:
    """Built-in defaults."""
    return {
        "limits": {
            "max_n": 30,
            "bits": 128,
        },
        "workers": {
            "jobs": os.cpu_count() or 1,
        },
        "log": {
            "level": "WARNING",
            "format": "text",
        },
    }


@dataclass
class ConfigSource:
    """Represents a configuration source with priority."""
    name: str
    data: Dict[str, Any]
    priority: int = 0


class Config:
    """
    Configuration container.

    Values from higher-priority sources override lower ones; nested
    dictionaries are merged key by key.

    Example:
        config = Config()
        config.add_source("defaults", default_settings())
        config.get("limits.max_n")            # 30
        config.get("limits.missing", 7)       # 7
    """

    def __init__(self) -> None:
        self._sources: List[ConfigSource] = []
        self._cache: Dict[str, Any] = {}
        self._merged: Dict[str, Any] = {}
        self._dirty = True

    def load(self, env_file: Optional[Union[str, Path]] = None) -> "Config":
        """
        Load defaults, the .env file and ALTPEAKS_* environment variables.

        Args:
            env_file: Path to a .env file (defaults to ./.env)

        Returns:
            Self for chaining
        """
        self.add_source("defaults", default_settings(), priority=0)

        path = Path(env_file) if env_file else Path.cwd() / ".env"
        if path.exists():
            values = {k: v for k, v in dotenv_values(path).items() if v is not None}
            self.add_source("dotenv", self._from_env_mapping(values), priority=50)

        self.add_source("env_vars", self._from_env_mapping(dict(os.environ)), priority=100)
        return self

    def _from_env_mapping(self, mapping: Dict[str, str]) -> Dict[str, Any]:
        """Collect ALTPEAKS_* keys into a nested dict."""
        overrides: Dict[str, Any] = {}
        for key, value in mapping.items():
            if not key.startswith(ENV_PREFIX):
                continue
            section, _, name = key[len(ENV_PREFIX):].lower().partition("_")
            config_key = f"{section}.{name}" if name else section
            overrides[config_key] = self._parse_env_value(value)
        return self._unflatten(overrides)

    def _parse_env_value(self, value: str) -> Any:
        """Parse environment variable value to appropriate type."""
        if value.lower() in ("true", "yes"):
            return True
        if value.lower() in ("false", "no"):
            return False

        try:
            return int(value)
        except ValueError:
            pass

        try:
            return float(value)
        except ValueError:
            pass

        if value.startswith(("{", "[")):
            try:
                return orjson.loads(value)
            except orjson.JSONDecodeError:
                pass

        return value

    def _unflatten(self, flat: Dict[str, Any]) -> Dict[str, Any]:
        """Convert flat dot-notation keys to nested dict."""
        result: Dict[str, Any] = {}

        for key, value in flat.items():
            parts = key.split(".")
            current = result

            for part in parts[:-1]:
                if part not in current:
                    current[part] = {}
                current = current[part]

            current[parts[-1]] = value

        return result

    def add_source(
        self,
        name: str,
        data: Dict[str, Any],
        priority: int = 0,
    ) -> None:
        """Add a configuration source."""
        self._sources.append(ConfigSource(name=name, data=data, priority=priority))
        self._dirty = True
        self._cache.clear()

    def _merge(self) -> None:
        """Merge all sources into single configuration."""
        if not self._dirty:
            return

        self._merged = {}
        for source in sorted(self._sources, key=lambda s: s.priority):
            self._deep_merge(self._merged, source.data)

        self._dirty = False
        self._cache.clear()

    def _deep_merge(self, base: Dict[str, Any], override: Dict[str, Any]) -> None:
        """Deep merge override into base."""
        for key, value in override.items():
            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                self._deep_merge(base[key], value)
            elif isinstance(value, dict):
                base[key] = {}
                self._deep_merge(base[key], value)
            else:
                base[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        """
        Get configuration value using dot notation.

        Args:
            key: Configuration key (e.g., "limits.max_n")
            default: Default value if key not found
        """
        self._merge()
        if key in self._cache:
            return self._cache[key]

        current: Any = self._merged
        for part in key.split("."):
            if not isinstance(current, dict) or part not in current:
                return default
            current = current[part]

        self._cache[key] = current
        return current

    def get_int(self, key: str, default: int = 0) -> int:
        """Get configuration value as integer."""
        value = self.get(key, default)
        try:
            return int(value)
        except (TypeError, ValueError):
            return default

    def get_str(self, key: str, default: str = "") -> str:
        """Get configuration value as string."""
        value = self.get(key, default)
        return default if value is None else str(value)

    def set(self, key: str, value: Any) -> None:
        """
        Set a runtime configuration value.

        Runtime values have the highest priority.
        """
        runtime_source = next((s for s in self._sources if s.name == "runtime"), None)
        if runtime_source is None:
            runtime_source = ConfigSource(name="runtime", data={}, priority=1000)
            self._sources.append(runtime_source)

        parts = key.split(".")
        current = runtime_source.data
        for part in parts[:-1]:
            current = current.setdefault(part, {})
        current[parts[-1]] = value

        self._dirty = True
        self._cache.clear()

# Global configuration instance
_config: Optional[Config] = None


def get_config() -> Config:
    """Get global configuration instance, loading it on first use."""
    global _config
    if _config is None:
        _config = Config().load()
    return _config


def reset_config(config: Optional[Config] = None) -> Config:
    """Replace the global configuration (reloads from the environment by default)."""
    global _config
    _config = config if config is not None else Config().load()
    return _config
