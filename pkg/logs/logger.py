# logs/logger.py

import logging
import os

from config import LOG_DIR, LOG_LEVEL, LOG_TO_FILE

_FORMAT = '%(asctime)s %(levelname)-7s %(name)s: %(message)s'
_configured = False


def _configure_root():
    global _configured
    if _configured:
        return
    root = logging.getLogger('pmod4')
    root.setLevel(LOG_LEVEL)
    console = logging.StreamHandler()
    console.setFormatter(logging.Formatter(_FORMAT))
    root.addHandler(console)
    if LOG_TO_FILE:
        try:
            os.makedirs(LOG_DIR, exist_ok=True)
            file_handler = logging.FileHandler(os.path.join(LOG_DIR, 'pmod4.log'))
            file_handler.setFormatter(logging.Formatter(_FORMAT))
            root.addHandler(file_handler)
        except OSError as exc:
            root.warning("file logging disabled: %s", exc)
    root.propagate = False
    _configured = True


def get_logger(name):
    """
    Return a logger below the package root, configuring handlers on first use.

    Args:
        name (str): Usually ``__name__`` of the calling module.

    Returns:
        logging.Logger: The child logger.
    """
    _configure_root()
    return logging.getLogger(f'pmod4.{name}')
