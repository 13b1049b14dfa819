"""
Logging Configuration
Sets up logging for the classifier
"""
import logging
import sys
from datetime import datetime
from pathlib import Path


def setup_logging(log_level: str = "INFO", log_to_file: bool = False) -> logging.Logger:
    """Configure logging; console output goes to stderr so stdout stays reproducible"""

    # Create logger
    logger = logging.getLogger()
    logger.setLevel(getattr(logging, log_level.upper()))

    # Remove existing handlers
    logger.handlers = []

    # Console handler
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(getattr(logging, log_level.upper()))
    console_format = logging.Formatter(
        "%(asctime)s | %(levelname)-8s | %(message)s",
        datefmt="%H:%M:%S"
    )
    console_handler.setFormatter(console_format)
    logger.addHandler(console_handler)

    # File handler
    if log_to_file:
        log_dir = Path("logs")
        log_dir.mkdir(exist_ok=True)
        log_filename = log_dir / f"cliffsub_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"
        file_handler = logging.FileHandler(log_filename)
        file_handler.setLevel(logging.DEBUG)
        file_format = logging.Formatter(
            "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )
        file_handler.setFormatter(file_format)
        logger.addHandler(file_handler)

        logging.info(f"Logging to file: {log_filename}")

    return logger


def log_outcome(basis: int, kind: str, detail: str = ""):
    """Log the solver outcome for one canonical basis"""
    logger = logging.getLogger("outcomes")
    if detail:
        logger.info(f"BASIS | {basis} | {kind} | {detail}")
    else:
        logger.info(f"BASIS | {basis} | {kind}")


def log_summary(
    n: int,
    one_parameter: int,
    isolated: int,
    contradictions: int,
    unresolved: int
):
    """Log a classification summary"""
    logger = logging.getLogger("summary")
    logger.info(
        f"SUMMARY | g({n}) | one-parameter: {one_parameter} | isolated: {isolated} | "
        f"none: {contradictions} | unresolved: {unresolved}"
    )
