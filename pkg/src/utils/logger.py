import logging
import os
import sys

_LOGGERS: dict[str, logging.Logger] = {}


class _ColorFormatter(logging.Formatter):
    COLORS = {
        logging.DEBUG: "\033[36m",     # cyan
        logging.INFO: "\033[32m",      # green
        logging.WARNING: "\033[33m",   # yellow
        logging.ERROR: "\033[31m",     # red
        logging.CRITICAL: "\033[1;31m",  # bold red
    }
    RESET = "\033[0m"

    def __init__(self, fmt: str, datefmt: str, use_color: bool):
        super().__init__(fmt, datefmt=datefmt)
        self._use_color = use_color

    def format(self, record):
        if not self._use_color:
            return super().format(record)
        color = self.COLORS.get(record.levelno, self.RESET)
        original = record.levelname
        record.levelname = f"{color}{original}{self.RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = original


def _wants_color() -> bool:
    if os.getenv("NO_COLOR"):
        return False
    return hasattr(sys.stderr, "isatty") and sys.stderr.isatty()


def _resolve_level(level: str) -> int:
    return getattr(logging, level.upper(), logging.INFO)


def setup_logger(name: str, level: str = "INFO") -> logging.Logger:
    """Return a stderr logger; stdout is reserved for command results."""
    logger = logging.getLogger(name)
    if logger.handlers:
        return logger

    logger.setLevel(_resolve_level(level))
    logger.propagate = False

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(
        _ColorFormatter("%(asctime)s [%(levelname)s] %(name)s: %(message)s",
                        datefmt="%H:%M:%S", use_color=_wants_color())
    )
    logger.addHandler(handler)
    _LOGGERS[name] = logger
    return logger


def set_level(level: str) -> None:
    """Re-level every logger handed out by setup_logger."""
    resolved = _resolve_level(level)
    for logger in _LOGGERS.values():
        logger.setLevel(resolved)
