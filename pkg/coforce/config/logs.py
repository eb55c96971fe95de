"""Logging setup: rich handler on stderr, optional plain file handler."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

from coforce.config.models import LoggingConfig


def setup_logging(config: LoggingConfig) -> None:
    level = getattr(logging, config.level.upper(), None)
    if not isinstance(level, int):
        raise ValueError(f"unknown log level {config.level!r}")
    handlers: list[logging.Handler] = [
        RichHandler(console=Console(stderr=True), show_path=False, rich_tracebacks=True)
    ]
    if config.file:
        file_handler = logging.FileHandler(config.file)
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s %(levelname)s %(name)s: %(message)s")
        )
        handlers.append(file_handler)
    logging.basicConfig(level=level, format="%(message)s", handlers=handlers, force=True)
