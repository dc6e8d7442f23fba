import logging

from hampic.reporting import theme
from rich.console import Console
from rich.logging import RichHandler

root_logger = "hampic"


def configure(verbose: bool = False) -> logging.Logger:
    """Route every ``hampic.*`` logger through a single rich handler on stderr."""
    console = Console(theme=theme.hampic_theme, stderr=True)
    handler = RichHandler(console=console, show_path=False, markup=True)
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))

    logger = logging.getLogger(root_logger)
    logger.handlers = [handler]
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)

    return logger
