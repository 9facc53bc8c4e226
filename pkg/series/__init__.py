# __init__.py inside the series/ directory

from .laurent import (
    ExactLaurentSeries,
    Mod4LaurentSeries,
    coefficient,
    inv,
    mul,
    power,
    substitute_poly,
)

__all__ = ['ExactLaurentSeries', 'Mod4LaurentSeries', 'coefficient', 'inv', 'mul', 'power', 'substitute_poly']
