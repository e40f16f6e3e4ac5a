from functions.IMPORT import sys, logger
from functions.settings import get_log_level

LOG_FORMAT = "{time:HH:mm:ss} | {level: <8} | {name}:{function} - {message}"


def configure_logging(level=None):
    """Route every record to stderr so stdout stays reserved for command output."""
    level = (level or get_log_level()).upper()
    logger.remove()
    logger.add(sys.stderr, level=level, format=LOG_FORMAT, colorize=False, backtrace=False)
    return level
