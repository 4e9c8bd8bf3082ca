import sys

from loguru import logger


def configure_logging(level: str = "INFO"):
    """Replace loguru's default sink with a single stderr sink at the given level."""
    logger.remove()
    logger.add(sys.stderr, level=level.upper(), format="{message}")
