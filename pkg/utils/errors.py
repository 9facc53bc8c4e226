# utils/errors.py


class Pmod4Error(Exception):
    """Base class for every error raised by this package."""


class InputError(Pmod4Error):
    """Bad user input (files, arguments). Maps to CLI exit code 2."""


class VerificationError(Pmod4Error):
    """A checked identity or congruence failed. Maps to CLI exit code 1."""


# series
class DomainMismatchError(Pmod4Error):
    pass


class NotAUnitError(Pmod4Error):
    pass


class PrecisionError(Pmod4Error):
    pass


# partitions
class ExactLimitError(InputError):
    pass


class UncertifiedError(VerificationError):
    pass


class PartitionSourceError(InputError):
    pass


class PartitionMismatchError(VerificationError):
    pass


class TableFormatError(InputError):
    def __init__(self, message, line=None, offset=None):
        self.line = line
        self.offset = offset
        if line is not None:
            message = f"{message} (line {line}, offset {offset})"
        super().__init__(message)


# quadforms / theta
class IneligibleDiscriminantError(InputError):
    pass


class UnsupportedSeriesError(InputError):
    pass


# classpoly
class CertificationError(VerificationError):
    pass


# borcherds
class InconsistencyError(VerificationError):
    pass
