"""Automatic logging for the run-correlation toolkit.

Every module asks `get_logger(name)` for an `AutoLogger`. Messages carry the
name of the calling function, go to a daily log file at DEBUG level and are
mirrored to stderr at the configured console level, so stdout stays free for
catalogs and reports.

Features:
- Daily log file per logger name
- Automatic function name detection
- Console level taken from RUNCORR_LOG_LEVEL
- Exception tracking with stack traces
"""
import logging
import inspect
from datetime import datetime
from pathlib import Path
from types import FrameType
from typing import Optional, Callable, Any, Dict

from src.helper.helper import get_log_dir, get_log_level


class AutoLogger:
    """A logger with automatic caller detection.

    Example:
        >>> logger = AutoLogger("search_service")
        >>> logger.info("Scanning partition")  # prefixed with the caller name
        >>> logger.log_step("Partition finished")
    """

    logger: logging.Logger

    def __init__(self,
                 name: str = "runcorr",
                 log_dir: Optional[str] = None,
                 console_level: Optional[int] = None) -> None:
        """Initialize the logger.

        Args:
            name: Name of the logger and prefix for log files
            log_dir: Directory for log files, created if missing (default from RUNCORR_LOG_DIR)
            console_level: Minimum level echoed to stderr (default from RUNCORR_LOG_LEVEL)
        """
        self.logger = logging.getLogger(name)
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        if self.logger.handlers:
            return

        log_dir_path = Path(log_dir if log_dir is not None else get_log_dir())
        console_level = console_level if console_level is not None else get_log_level()

        # Console handler with simpler format
        console_handler: logging.StreamHandler = logging.StreamHandler()
        console_handler.setLevel(console_level)
        console_handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))
        self.logger.addHandler(console_handler)

        # File handler with detailed format; an unwritable directory only costs the file log
        try:
            log_dir_path.mkdir(parents=True, exist_ok=True)
            timestamp: str = datetime.now().strftime('%Y%m%d')
            file_handler: logging.FileHandler = logging.FileHandler(log_dir_path / f"{name}_{timestamp}.log")
        except OSError as e:
            self.logger.warning(f"File logging disabled for '{name}': {e}")
            return
        file_handler.setLevel(logging.DEBUG)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        ))
        self.logger.addHandler(file_handler)

    def _get_caller_name(self) -> str:
        """Name of the first function outside this module on the stack."""
        frame: Optional[FrameType] = inspect.currentframe()
        try:
            while frame is not None and frame.f_code.co_filename == __file__:
                frame = frame.f_back
            return frame.f_code.co_name if frame is not None else "unknown"
        finally:
            del frame

    def _log_with_caller(self,
                         level: Callable[..., None],
                         message: str,
                         *args: Any,
                         **kwargs: Any) -> None:
        caller: str = self._get_caller_name()
        level(f"[{caller}] {message}", *args, **kwargs)

    def debug(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log_with_caller(self.logger.debug, message, *args, **kwargs)

    def info(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log_with_caller(self.logger.info, message, *args, **kwargs)

    def warning(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log_with_caller(self.logger.warning, message, *args, **kwargs)

    def error(self, message: str, *args: Any, **kwargs: Any) -> None:
        self._log_with_caller(self.logger.error, message, *args, **kwargs)

    def log_step(self, message: str) -> None:
        """Log a milestone of a long-running operation.

        Args:
            message: Message to log
        """
        self._log_with_caller(self.logger.info, message)

    def exception(self, message: str, *args: Any, exc_info: bool = True, **kwargs: Any) -> None:
        """Log an error together with the active exception's traceback."""
        self._log_with_caller(self.logger.error, message, *args, exc_info=exc_info, **kwargs)


_loggers: Dict[str, AutoLogger] = {}


def get_logger(name: str = "runcorr") -> AutoLogger:
    """Get or create the logger registered under `name`.

    Args:
        name: Name of the logger

    Returns:
        AutoLogger instance
    """
    if name not in _loggers:
        _loggers[name] = AutoLogger(name=name)
    return _loggers[name]
