"""
Structured logging for wreathcount: structlog configuration, a context-carrying
logger wrapper and a performance decorator for the expensive exact computations.
"""

import logging
import sys
import time
from functools import wraps
from pathlib import Path
from typing import Any, Dict, Optional

import structlog

_configured = False


def configure_logging(
    level: str = "WARNING",
    structured: bool = True,
    log_file: Optional[str] = None,
) -> None:
    """Configure stdlib logging and the structlog processor chain."""
    global _configured

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        Path(log_file).parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(message)s",
        handlers=handlers,
        force=True,
    )

    renderer = (
        structlog.processors.JSONRenderer()
        if structured
        else structlog.dev.ConsoleRenderer(colors=False)
    )
    structlog.configure(
        processors=[
            structlog.stdlib.filter_by_level,
            structlog.stdlib.add_logger_name,
            structlog.stdlib.add_log_level,
            structlog.stdlib.PositionalArgumentsFormatter(),
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        wrapper_class=structlog.stdlib.BoundLogger,
        cache_logger_on_first_use=True,
    )
    _configured = True


class EnhancedLogger:
    """Logger wrapper with bound context and exception details."""

    def __init__(self, name: str = "wreathcount"):
        self.name = name
        self.logger = structlog.get_logger(name)
        self.context: Dict[str, Any] = {}

    def set_context(self, **kwargs):
        """Set logging context"""
        self.context.update(kwargs)

    def clear_context(self):
        """Clear logging context"""
        self.context.clear()

    def debug(self, message: str, **kwargs):
        self.logger.debug(message, **self.context, **kwargs)

    def info(self, message: str, **kwargs):
        self.logger.info(message, **self.context, **kwargs)

    def warning(self, message: str, **kwargs):
        self.logger.warning(message, **self.context, **kwargs)

    def error(self, message: str, exception: Optional[BaseException] = None, **kwargs):
        """Log error message with context and exception details"""
        error_data = {**self.context, **kwargs}
        if exception is not None:
            error_data.update({
                "exception_type": type(exception).__name__,
                "exception_message": str(exception),
            })
        self.logger.error(message, **error_data)

    def performance(self, operation: str, duration: float, **kwargs):
        """Log performance metrics"""
        self.logger.info(
            "Performance metric",
            operation=operation,
            duration_ms=round(duration * 1000, 3),
            **self.context,
            **kwargs,
        )


_loggers: Dict[str, EnhancedLogger] = {}


def get_enhanced_logger(name: str = "wreathcount") -> EnhancedLogger:
    """Get (or create) the enhanced logger registered under ``name``."""
    if not _configured:
        configure_logging()
    if name not in _loggers:
        _loggers[name] = EnhancedLogger(name)
    return _loggers[name]


def log_performance(operation: str):
    """Decorator for logging the wall time of an operation."""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            logger = get_enhanced_logger("performance")
            start_time = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                logger.error(
                    f"{operation} failed",
                    exception=e,
                    duration_ms=round((time.perf_counter() - start_time) * 1000, 3),
                    function=func.__name__,
                )
                raise
            logger.performance(operation, time.perf_counter() - start_time, function=func.__name__)
            return result
        return wrapper
    return decorator
