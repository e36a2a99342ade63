"""
Logging configuration using rich.
"""

import logging
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler

from config.settings import get_settings

_configured = False


def configure_logging(level: Optional[str] = None) -> None:
    """
    Install a RichHandler on the root logger.

    Args:
        level: Log level name (defaults to DEBUG under settings.debug, else settings.log_level)
    """
    global _configured

    settings = get_settings()
    level = (level or ("DEBUG" if settings.debug else settings.log_level)).upper()
    root = logging.getLogger()
    root.setLevel(level)

    if _configured:
        return

    handler = RichHandler(
        console=Console(stderr=True),
        show_path=False,
        rich_tracebacks=True
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    root.addHandler(handler)
    _configured = True
