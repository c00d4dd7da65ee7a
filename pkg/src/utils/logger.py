"""Logging utility for the JB*-triple workbench."""

import logging
import sys
from pathlib import Path
from typing import Any, Dict, Optional

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def setup_logger(
    name: str = "jbtriple",
    log_level: str = "INFO",
    log_file: Optional[Path] = None,
) -> logging.Logger:
    """Set up and configure the root workbench logger.

    Library modules log through children of this logger (``jbtriple.*``),
    so configuring it once in the CLI configures everything.

    Args:
        name: Logger name.
        log_level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL).
        log_file: Optional path to log file. If None, logs only to console.

    Returns:
        Configured logger instance.
    """
    level = getattr(logging, log_level.upper())
    logger = logging.getLogger(name)
    logger.setLevel(level)

    # Remove existing handlers to avoid duplicates
    logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stdout)
    console_handler.setLevel(level)
    console_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
    logger.addHandler(console_handler)

    if log_file:
        log_file.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=DATE_FORMAT))
        logger.addHandler(file_handler)

    return logger


def get_logger(name: str = "jbtriple") -> logging.Logger:
    """Return a logger in the ``jbtriple`` hierarchy.

    Unlike ``setup_logger`` this never attaches handlers: records propagate
    to whatever the entry point configured, and stay silent otherwise.
    """
    if name != "jbtriple" and not name.startswith("jbtriple."):
        name = f"jbtriple.{name}"
    return logging.getLogger(name)


def log_event(
    logger: logging.Logger,
    level: int,
    message: str,
    extra: Optional[Dict[str, Any]] = None,
) -> None:
    """Log an event with optional structured extra context.

    Args:
        logger: Logger instance from ``get_logger``.
        level: Logging level from ``logging`` (e.g., logging.INFO).
        message: Human-readable message.
        extra: Optional dictionary with additional context.
    """
    if extra is None:
        logger.log(level, message)
    else:
        logger.log(level, f"{message} | extra={extra}")
