"""Exception types, mapped to process exit codes by the CLI."""


class SynRealMixError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class InputValidationError(SynRealMixError):
    """Invalid array contents, shapes, values, or parameters."""

    exit_code = 4


class InvalidPairError(InputValidationError):
    """Two inputs that must agree (spatial dims, channels) do not."""


class ManifestError(InputValidationError):
    """Dataset manifest is malformed or inconsistent with files on disk."""


class NumericalError(SynRealMixError):
    """Non-finite values appeared where finite numbers are required."""

    exit_code = 5
