# __init__.py inside the logs/ directory

from .logger import get_logger

__all__ = ['get_logger']
