# __init__.py inside the classpoly/ directory

from .hilbert import (
    HilbertClassPolynomial,
    PrecisionPolicy,
    hilbert,
    precision_estimate,
    resubstitution_residual,
    stability_check,
)
from .j_invariant import delta_value, eisenstein_e4, euler_product_value, j_at

__all__ = [
    'HilbertClassPolynomial', 'PrecisionPolicy', 'hilbert', 'precision_estimate',
    'resubstitution_residual', 'stability_check',
    'delta_value', 'eisenstein_e4', 'euler_product_value', 'j_at',
]
