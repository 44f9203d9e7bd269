import os
import logging
import colorlog
from time import time
from datetime import datetime
from functools import wraps


def initialize_log():
    pid = os.getpid()

    handler = colorlog.StreamHandler()
    handler.setFormatter(colorlog.ColoredFormatter())

    logging.basicConfig(handlers=[handler])
    log = logging.getLogger(f'ladderwood-{pid}')
    log_level = os.environ.get('LADDERWOOD_LOG', 'INFO')
    log.setLevel(log_level)
    return log


def timed(f):
    """
    Intended to be called from within verification suite methods.
    The wrapped object must expose a `runtime_log` dictionary.
    """
    @wraps(f)
    def wrap(suite, *args, **kw):
        ts = time()
        result = f(suite, *args, **kw)
        te = time()
        log.debug(f' `{suite.name}.{f.__name__}` runtime: {round(te - ts, 2)} seconds')
        suite.runtime_log[(f.__name__, datetime.fromtimestamp(ts))] = round(te - ts, 2)
        return result
    return wrap


log = initialize_log()
