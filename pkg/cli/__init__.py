# __init__.py inside the cli/ directory

from .commands import EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION, build_parser, run

__all__ = ['EXIT_INPUT', 'EXIT_OK', 'EXIT_VERIFICATION', 'build_parser', 'run']
