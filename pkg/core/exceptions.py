from typing import Any, Optional

from constants import general as general_constants


class LipfreeException(Exception):
    """
    Base exception carrying the CLI exit code and a user-facing detail
    """
    exit_code: int = general_constants.EXIT_CODE_INPUT_ERROR
    kind: str = general_constants.ERROR_KIND_INVALID_ARGUMENT

    def __init__(self, detail: str, context: Optional[Any] = None):
        super().__init__(detail)
        self.detail = detail
        self.context = context


class InputError(LipfreeException):
    """Bad input: exit code 2."""


class ParseError(InputError):
    """Malformed document or literal."""
    kind = general_constants.ERROR_KIND_PARSE


class InvalidArgumentError(InputError):
    """An operation precondition does not hold."""
    kind = general_constants.ERROR_KIND_INVALID_ARGUMENT


class ResourceLimitError(InputError):
    """The instance is larger than a configured cap."""
    kind = general_constants.ERROR_KIND_RESOURCE_LIMIT


class NotAttainingError(InputError):
    """
    The molecule family is not cyclically monotone; `context` holds the
    negative cycle witness
    """
    kind = general_constants.ERROR_KIND_NOT_ATTAINING


class CertificateMismatchError(LipfreeException):
    """A certificate failed re-verification or an oracle disagreed."""
    exit_code = general_constants.EXIT_CODE_CERTIFICATE_MISMATCH
    kind = general_constants.ERROR_KIND_CERTIFICATE_MISMATCH


class InternalConsistencyError(CertificateMismatchError):
    """Conflicting assignments where the theory rules them out: a bug, not bad input."""
    kind = general_constants.ERROR_KIND_INTERNAL_CONSISTENCY
