#!/usr/bin/env python

"""
Top-level of unruhcoh package: accessible l1-coherence of multipartite
bosonic states when some parties are uniformly accelerated.
"""

import sys
from loguru import logger

__version__ = "0.1.0"

# quiet by default when imported as a library; the CLI turns it back on.
logger.disable("unruhcoh")


def set_log_level(level: str = "INFO"):
    "Enable package logging to stderr at the given level."
    logger.remove()
    logger.add(
        sys.stderr,
        level=level,
        format="<level>{level: <8}</level> | <cyan>{name}</cyan> | {message}",
    )
    logger.enable("unruhcoh")
