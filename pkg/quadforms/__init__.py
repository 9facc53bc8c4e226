# __init__.py inside the quadforms/ directory

from .forms import (
    HeegnerPoint,
    QuadForm,
    class_number,
    classno_bound,
    heegner_points,
    reduced_forms,
    require_eligible,
)
from .kronecker import (
    character_table,
    character_values,
    chi12,
    chi_minus12,
    eligible,
    is_squarefree,
    kronecker,
)
from .survey import class_numbers, class_numbers_upto, eligible_upto, squarefree_mask, survey

__all__ = [
    'HeegnerPoint', 'QuadForm', 'class_number', 'classno_bound', 'heegner_points', 'reduced_forms',
    'require_eligible',
    'character_table', 'character_values', 'chi12', 'chi_minus12', 'eligible', 'is_squarefree', 'kronecker',
    'class_numbers', 'class_numbers_upto', 'eligible_upto', 'squarefree_mask', 'survey',
]
