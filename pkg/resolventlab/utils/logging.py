"""Logging utilities for solver runs and scenario pipelines
"""

import os
from functools import wraps
from time import time

from termcolor import colored

from resolventlab.utils.errors import ArgumentError

LOG_ENV = "RESOLVENTLAB_LOG"
LOG_LEVELS = {"error": 0, "info": 1, "debug": 2}


def log_level():
    """Current verbosity read from ``RESOLVENTLAB_LOG`` (default ``info``)."""
    name = os.environ.get(LOG_ENV, "info").strip().lower()
    if name not in LOG_LEVELS:
        raise ArgumentError('{} must be one of {}, got {!r}'.format(
            LOG_ENV, sorted(LOG_LEVELS), name))
    return LOG_LEVELS[name]


def is_enabled(level):
    return log_level() >= LOG_LEVELS[level]


def timing(f):
    @wraps(f)
    def wrap(*args, **kw):
        ts = time()
        result = f(*args, **kw)
        te = time()
        log_debug('func:%r  took: %2.4f sec' % (f.__name__, te - ts))
        return result
    return wrap


def printcolor_single(message, color="white"):
    """Print a message in a certain color"""
    print(colored(message, color))


def printcolor(message, color="white", level="info"):
    "Print a message in a certain color (only if the level is enabled)"
    if is_enabled(level):
        print(colored(message, color))


def log_error(message):
    printcolor(message, 'red', level='error')


def log_info(message, color='cyan'):
    printcolor(message, color, level='info')


def log_debug(message):
    printcolor(message, 'grey', level='debug')


def progress_disabled(level='debug'):
    """tqdm ``disable`` flag: bars are drawn only from ``level`` upwards."""
    return not is_enabled(level)
