"""Error hierarchy shared by the library and the command line surface."""
from __future__ import annotations

from typing import Optional


class PpdError(Exception):
    """Base class for every error raised by the package.

    ``code`` is a stable identifier that the CLI prints and that tests match on;
    the message is free text.
    """

    code = "PPD_ERROR"

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


class NotPrimeError(PpdError, ValueError):
    code = "NOT_PRIME"


class MagnitudeOverflowError(PpdError, ValueError):
    code = "OVERFLOW"


class ZeroModulusError(PpdError, ValueError):
    code = "ZERO_MODULUS"


class DimensionMismatchError(PpdError, ValueError):
    code = "DIMENSION_MISMATCH"


class FieldMismatchError(PpdError, ValueError):
    code = "FIELD_MISMATCH"


class SingularMatrixError(PpdError, ValueError):
    code = "SINGULAR"


class SingularInputError(PpdError, ValueError):
    code = "SINGULAR_INPUT"


class InconsistentFieldError(PpdError, ValueError):
    code = "INCONSISTENT"


class InvalidCaseError(PpdError, ValueError):
    code = "INVALID_CASE"


class NotSimilitudeError(PpdError):
    code = "NOT_SIMILITUDE"


class UnsupportedCaseError(PpdError):
    code = "UNSUPPORTED_CASE"


class ExponentNotAllowedError(PpdError, ValueError):
    code = "E_NOT_ALLOWED"


class UnsupportedDimensionError(PpdError):
    """The group is in the small-dimension regime the recogniser refuses."""

    code = "UNSUPPORTED_DIMENSION"

    def __init__(self, message: str, reason: str) -> None:
        super().__init__(message)
        self.reason = reason


class EnumerationCapError(PpdError):
    code = "CAP_EXCEEDED"


class NoPpdAtDimensionError(PpdError):
    code = "NO_PPD_AT_D"


class GroupFileParseError(PpdError):
    code = "PARSE_ERROR"

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class GroupValidationError(PpdError):
    """A generator of a group input failed validation."""

    code = "VALIDATION_ERROR"

    def __init__(self, message: str, index: Optional[int] = None) -> None:
        prefix = f"generator {index}: " if index is not None else ""
        super().__init__(prefix + message)
        self.index = index


__all__ = [
    "PpdError",
    "NotPrimeError",
    "MagnitudeOverflowError",
    "ZeroModulusError",
    "DimensionMismatchError",
    "FieldMismatchError",
    "SingularMatrixError",
    "SingularInputError",
    "InconsistentFieldError",
    "InvalidCaseError",
    "NotSimilitudeError",
    "UnsupportedCaseError",
    "ExponentNotAllowedError",
    "UnsupportedDimensionError",
    "EnumerationCapError",
    "NoPpdAtDimensionError",
    "GroupFileParseError",
    "GroupValidationError",
]
