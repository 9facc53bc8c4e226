# __init__.py inside the config/ directory

from .settings import *
