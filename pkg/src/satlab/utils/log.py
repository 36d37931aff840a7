"""Logging setup shared by the CLI and the selftest runner."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

_HANDLER_NAME = "satlab-rich"


def setup_logging(level: str = "WARNING") -> logging.Logger:
    """Attach a rich handler writing to stderr to the ``satlab`` logger.

    Calling it again only updates the level, so repeated CLI invocations in
    one process (tests) do not stack handlers.

    Args:
        level: Name of the log level.

    Returns:
        The package logger.
    """
    logger = logging.getLogger("satlab")
    logger.setLevel(level)
    if not any(h.get_name() == _HANDLER_NAME for h in logger.handlers):
        handler = RichHandler(
            console=Console(stderr=True),
            show_time=False,
            show_path=False,
            markup=False,
        )
        handler.set_name(_HANDLER_NAME)
        logger.addHandler(handler)
        logger.propagate = False
    return logger
