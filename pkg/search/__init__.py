# __init__.py inside the search/ directory

from .discovery import (
    SearchReport,
    contains_relation,
    find_relations,
    identity_sum,
    restrict,
    verify_identity,
)
from .fixtures import IDENTITIES, IDENTITY_1, IDENTITY_2, IdentityFixture
from .procedures import (
    class_filter,
    density,
    digits_of_largest_partition,
    enumerate_set,
    final_reduction,
    first_estimate,
    heuristic_value_count,
    improved_estimate,
    largest_needed_argument,
    min_classno,
    needed_value_count,
    search_stats,
)

__all__ = [
    'SearchReport', 'contains_relation', 'find_relations', 'identity_sum', 'restrict', 'verify_identity',
    'IDENTITIES', 'IDENTITY_1', 'IDENTITY_2', 'IdentityFixture',
    'class_filter', 'density', 'digits_of_largest_partition', 'enumerate_set', 'final_reduction',
    'first_estimate', 'heuristic_value_count', 'improved_estimate', 'largest_needed_argument', 'min_classno',
    'needed_value_count', 'search_stats',
]
