# __init__.py inside the congruence/ directory

from .pipeline import (
    DiscriminantSet,
    assemble,
    class_polynomial_mod4,
    coefficient_column,
    gamma0_index,
    hol_norm,
    needed_arguments,
    sturm_bound,
    twisted_p,
)

__all__ = [
    'DiscriminantSet', 'assemble', 'class_polynomial_mod4', 'coefficient_column', 'gamma0_index',
    'hol_norm', 'needed_arguments', 'sturm_bound', 'twisted_p',
]
