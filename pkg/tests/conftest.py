"""Shared fixtures: isolated configuration and quiet logging."""

from __future__ import annotations

import os

import pytest

from altpeaks.core.config import Config, reset_config
from altpeaks.utils.logger import LogLevel, configure_logging


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Fresh configuration per test, without ALTPEAKS_* variables or a .env file."""
    for key in list(os.environ):
        if key.startswith("ALTPEAKS_"):
            monkeypatch.delenv(key, raising=False)
    config = reset_config(Config().load(env_file=tmp_path / ".env"))
    config.set("workers.jobs", 1)
    configure_logging(level=LogLevel.WARNING)
    yield config
    reset_config(Config().load(env_file=tmp_path / ".env"))
    configure_logging(level=LogLevel.WARNING)
