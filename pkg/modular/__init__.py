# __init__.py inside the modular/ directory

from .named_series import EXACT, MOD4, NamedSeriesId, delta_power_mod4, euler_product, gen
from .vector_valued import c_r, f_coefficient, omega_coefficient, r_component, series_exponents

__all__ = [
    'EXACT', 'MOD4', 'NamedSeriesId', 'delta_power_mod4', 'euler_product', 'gen',
    'c_r', 'f_coefficient', 'omega_coefficient', 'r_component', 'series_exponents',
]
