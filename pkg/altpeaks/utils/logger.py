"""
AltPeaks Logger
===============

Structured logging to stderr.

Records carry a message plus key/value context; the text formatter
prints the context as key=value pairs, the JSON formatter emits one
object per line.

Example:
    logger = get_logger("altpeaks.oracle")
    logger.info("census finished", n=9, total=7936)

    shard_logger = logger.with_context(shard=3)
    shard_logger.debug("shard started")
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from datetime import datetime
from enum import IntEnum
from typing import Any, Dict, List, Optional, TextIO

import orjson


class LogLevel(IntEnum):
    """Log levels."""

    DEBUG = 10
    INFO = 20
    WARNING = 30
    ERROR = 40

    @classmethod
    def parse(cls, value: Any, default: Optional["LogLevel"] = None) -> "LogLevel":
        """Accept a level name ("info") or number."""
        if isinstance(value, LogLevel):
            return value
        try:
            if isinstance(value, str) and not value.isdigit():
                return cls[value.strip().upper()]
            return cls(int(value))
        except (KeyError, ValueError):
            if default is not None:
                return default
            raise ValueError(f"unknown log level {value!r}")


@dataclass
class LogRecord:
    """
    Structured log record.

    Attributes:
        level: Log level
        message: Log message
        timestamp: Record timestamp
        context: Additional context
    """

    level: LogLevel
    message: str
    timestamp: datetime = field(default_factory=datetime.now)
    context: Dict[str, Any] = field(default_factory=dict)
    logger_name: str = "altpeaks"

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary."""
        data: Dict[str, Any] = {
            "timestamp": self.timestamp.isoformat(),
            "level": self.level.name,
            "message": self.message,
            "logger": self.logger_name,
        }

        if self.context:
            data["context"] = self.context

        return data

    def to_json(self) -> str:
        """Convert to JSON string."""
        return orjson.dumps(self.to_dict(), default=str).decode()


class LogFormatter:
    """Base log formatter."""

    def format(self, record: LogRecord) -> str:
        raise NotImplementedError


class TextFormatter(LogFormatter):
    """
    Plain text formatter.

    Example output:
        2026-01-15 10:30:45 [INFO] census finished n=9 total=7936
    """

    DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

    def __init__(self, colors: bool = True):
        self.colors = colors and sys.stderr.isatty()

        self._colors = {
            LogLevel.DEBUG: "\033[36m",
            LogLevel.INFO: "\033[32m",
            LogLevel.WARNING: "\033[33m",
            LogLevel.ERROR: "\033[31m",
        }
        self._reset = "\033[0m"

    def format(self, record: LogRecord) -> str:
        level = record.level.name
        if self.colors:
            level = f"{self._colors.get(record.level, '')}{level}{self._reset}"

        message = record.message
        if record.context:
            message += " " + " ".join(f"{k}={v}" for k, v in record.context.items())

        return f"{record.timestamp.strftime(self.DATE_FORMAT)} [{level}] {message}"


class JsonFormatter(LogFormatter):
    """One JSON object per line."""

    def format(self, record: LogRecord) -> str:
        return record.to_json()


class StreamHandler:
    """Writes formatted records to a stream (stderr by default)."""

    def __init__(
        self,
        stream: Optional[TextIO] = None,
        formatter: Optional[LogFormatter] = None,
        level: LogLevel = LogLevel.DEBUG,
    ):
        self.stream = stream
        self.formatter = formatter or TextFormatter()
        self.level = level

    def handle(self, record: LogRecord) -> None:
        if record.level < self.level:
            return
        stream = self.stream or sys.stderr
        stream.write(self.formatter.format(record) + "\n")
        stream.flush()


class Logger:
    """
    Structured logger.

    Loggers created by `get_logger` share the handlers and level of the
    root "altpeaks" logger unless they were given their own.

    Example:
        logger = Logger("altpeaks", handlers=[StreamHandler()])
        logger.info("verification passed", n=8, roundtrips=1385)
    """

    def __init__(
        self,
        name: str = "altpeaks",
        level: Optional[LogLevel] = None,
        handlers: Optional[List[StreamHandler]] = None,
        parent: Optional["Logger"] = None,
    ):
        self.name = name
        self._level = level
        self._handlers = handlers
        self._parent = parent
        self._context: Dict[str, Any] = {}

    @property
    def level(self) -> LogLevel:
        if self._level is not None:
            return self._level
        if self._parent is not None:
            return self._parent.level
        return LogLevel.WARNING

    @property
    def handlers(self) -> List[StreamHandler]:
        if self._handlers is not None:
            return self._handlers
        if self._parent is not None:
            return self._parent.handlers
        return []

    def with_context(self, **context: Any) -> "Logger":
        """Create a logger that adds `context` to every record."""
        child = Logger(name=self.name, level=self._level, handlers=self._handlers, parent=self._parent)
        child._context = {**self._context, **context}
        return child

    def _log(
        self,
        level: LogLevel,
        message: str,
        **context: Any,
    ) -> None:
        if level < self.level:
            return

        record = LogRecord(
            level=level,
            message=message,
            context={**self._context, **context},
            logger_name=self.name,
        )

        for handler in self.handlers:
            try:
                handler.handle(record)
            except Exception:
                pass

    def debug(self, message: str, **context: Any) -> None:
        self._log(LogLevel.DEBUG, message, **context)

    def info(self, message: str, **context: Any) -> None:
        self._log(LogLevel.INFO, message, **context)

    def warning(self, message: str, **context: Any) -> None:
        self._log(LogLevel.WARNING, message, **context)


_root = Logger(name="altpeaks", level=LogLevel.WARNING, handlers=[StreamHandler()])
_loggers: Dict[str, Logger] = {"altpeaks": _root}


def get_logger(name: str = "altpeaks") -> Logger:
    """Get or create a logger attached to the root."""
    if name not in _loggers:
        _loggers[name] = Logger(name=name, parent=_root)
    return _loggers[name]


def configure_logging(
    level: Any = LogLevel.WARNING,
    format: str = "text",
    stream: Optional[TextIO] = None,
    colors: bool = True,
) -> Logger:
    """
    Configure the root logger.

    Args:
        level: Level name or LogLevel
        format: Output format ("text" or "json")
        stream: Target stream (stderr by default)
        colors: Enable colored text output

    Returns:
        The root logger
    """
    formatter: LogFormatter = JsonFormatter() if format == "json" else TextFormatter(colors=colors)
    parsed = LogLevel.parse(level, default=LogLevel.WARNING)
    _root._level = parsed
    _root._handlers = [StreamHandler(stream=stream, formatter=formatter, level=parsed)]
    return _root
