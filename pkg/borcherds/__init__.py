# __init__.py inside the borcherds/ directory

from .product import borcherds_log, congruence_check, exponent, gauss_sum_check, l_expansion, l_via_product, psi_log
from .quad_irrational import BorcherdsLogSeries, QuadIrrational

__all__ = [
    'borcherds_log', 'congruence_check', 'exponent', 'gauss_sum_check', 'l_expansion', 'l_via_product', 'psi_log',
    'BorcherdsLogSeries', 'QuadIrrational',
]
