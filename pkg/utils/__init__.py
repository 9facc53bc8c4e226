# __init__.py in the utils folder

from .errors import *
from .utils import d_of, format_coefficients, k_of, timed

__all__ = [
    'Pmod4Error', 'InputError', 'VerificationError',
    'DomainMismatchError', 'NotAUnitError', 'PrecisionError',
    'ExactLimitError', 'UncertifiedError', 'PartitionSourceError', 'PartitionMismatchError', 'TableFormatError',
    'IneligibleDiscriminantError', 'UnsupportedSeriesError', 'CertificationError', 'InconsistencyError',
    'd_of', 'format_coefficients', 'k_of', 'timed',
]
