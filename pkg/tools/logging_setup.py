"""
Console and file sinks for the qtau command line.

The console stays at WARNING unless asked otherwise, so enumeration progress
only shows with --verbose or LOG_LEVEL=INFO. Every run also appends DEBUG
records to <log_dir>/qtau.log.

Usage:
    from tools.logging_setup import setup_logging
    setup_logging("./logs", "INFO")
"""

import os
import sys
from pathlib import Path
from typing import Optional

from loguru import logger

CONSOLE_FORMAT = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | <level>{message}</level>"
FILE_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | <level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> - <level>{message}</level>"
)
LOG_FILE = "qtau.log"


def setup_logging(log_dir: Optional[str] = None, level: Optional[str] = None) -> Path:
    """
    Replace every loguru sink with a console sink and a rotating DEBUG file.

    Args:
        log_dir: Directory of the log file (default logs/)
        level: Console level; falls back to LOG_LEVEL, then WARNING

    Returns:
        Path of the log file
    """
    logger.remove()

    console_level = (level or os.getenv("LOG_LEVEL") or "WARNING").upper()
    logger.add(sys.stdout, level=console_level, enqueue=True, backtrace=False, diagnose=False, format=CONSOLE_FORMAT)

    path = Path(log_dir or "logs") / LOG_FILE
    path.parent.mkdir(parents=True, exist_ok=True)
    # rotation 10 MB, five files kept
    logger.add(
        str(path),
        level="DEBUG",
        rotation="10 MB",
        retention=5,
        enqueue=True,
        backtrace=True,
        diagnose=False,
        format=FILE_FORMAT,
    )
    return path
