import logging

from rich.console import Console
from rich.logging import RichHandler


LOGGER_NAME = "scrminer"


def setup_logging(level: str = "INFO") -> logging.Logger:
    """Attach a stderr RichHandler to the package logger; safe to call repeatedly."""
    log = logging.getLogger(LOGGER_NAME)
    for h in list(log.handlers):
        if isinstance(h, RichHandler):
            log.removeHandler(h)
    handler = RichHandler(
        console=Console(stderr=True, soft_wrap=True),
        show_time=False,
        show_path=False,
        markup=False,
    )
    handler.setFormatter(logging.Formatter("%(message)s"))
    log.addHandler(handler)
    log.setLevel(getattr(logging, str(level).upper(), logging.INFO))
    return log
