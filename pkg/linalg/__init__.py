# __init__.py inside the linalg/ directory

from .howell import annihilates, as_mod4, brute_kernel, canonical_generators, howell, kernel, last_nonzero, span
from .relations import (
    RelationSummary,
    RelationVector,
    kernel_relations,
    read_relations,
    summary,
    verify_relation,
    write_relations,
)

__all__ = [
    'annihilates', 'as_mod4', 'brute_kernel', 'canonical_generators', 'howell', 'kernel', 'last_nonzero', 'span',
    'RelationSummary', 'RelationVector', 'kernel_relations', 'read_relations', 'summary', 'verify_relation',
    'write_relations',
]
