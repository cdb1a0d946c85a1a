#!/usr/bin/env python3
# threearc - logger.py
# Revision: 1.0.0

"""
Logging configuration for threearc

Certificates and reports go to stdout, so every log record goes to
stderr or to the optional log file.
"""

import logging
import os
from typing import Optional

CONSOLE_FORMAT = "threearc: %(levelname)s: %(message)s"
VERBOSE_CONSOLE_FORMAT = "threearc: %(levelname)s: [%(module)s] %(message)s"
FILE_FORMAT = "%(asctime)s %(levelname)-7s %(module)s: %(message)s"


def setup_logging(verbose: bool = False, log_file: Optional[str] = None) -> None:
    """
    Configure logging for one threearc command.

    Safe to call more than once per process; earlier handlers are replaced.

    Args:
        verbose: Log per-vertex construction detail (DEBUG) with module names
        log_file: Also append records to this file, creating its directory
    """
    level = logging.DEBUG if verbose else logging.INFO
    console_format = VERBOSE_CONSOLE_FORMAT if verbose else CONSOLE_FORMAT
    logging.basicConfig(level=level, format=console_format, force=True)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)

        file_handler = logging.FileHandler(log_file, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(FILE_FORMAT))
        logging.getLogger().addHandler(file_handler)

        logging.debug(f"Construction log also written to {log_file}")
    else:
        logging.debug("Construction log on stderr only")
