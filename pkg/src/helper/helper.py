#helper.py
# Environment-backed settings and small shared utilities.

import logging
import os
import time
from functools import wraps
from typing import Any, Callable, TypeVar

from dotenv import load_dotenv, find_dotenv

from src.core.errors import ConfigError

R = TypeVar('R')

THREADS_ENV = "RUNCORR_THREADS"
LOG_DIR_ENV = "RUNCORR_LOG_DIR"
LOG_LEVEL_ENV = "RUNCORR_LOG_LEVEL"


# A .env file anywhere above the working directory may carry these settings.
# the format for that file is (without the comment)
#RUNCORR_THREADS=4
def load_env():
    _ = load_dotenv(find_dotenv(usecwd=True))


def get_thread_count() -> int:
    """Worker cap for partitioned searches and verification sweeps."""
    load_env()
    raw = os.getenv(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return value


def get_log_dir() -> str:
    load_env()
    return os.getenv(LOG_DIR_ENV, "logs")


def get_log_level() -> int:
    load_env()
    name = os.getenv(LOG_LEVEL_ENV, "WARNING").upper()
    level = logging.getLevelName(name)
    return level if isinstance(level, int) else logging.WARNING


def timing_decorator(func: Callable[..., R]) -> Callable[..., R]:
    """
    Decorator to measure and log the execution time of functions.

    Args:
        func: The function to be timed

    Returns:
        Wrapped function that logs execution time
    """
    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> R:
        # imported lazily: the logger module itself depends on this one
        from src.helper.logger import get_logger

        start_time = time.time()
        try:
            return func(*args, **kwargs)
        finally:
            execution_time = time.time() - start_time
            # same short name the module registers its own logger under
            get_logger(func.__module__.rsplit(".", 1)[-1]).info(
                f"Function '{func.__name__}' took {execution_time:.2f} seconds to execute"
            )
    return wrapper
