from enum import IntEnum
from typing import Optional


class ExitCode(IntEnum):
    OK = 0
    FAILED_CHECK = 1
    CONFIG = 2
    INFEASIBLE = 3
    IO = 4
    BUDGET = 5
    PROMISE = 6
    PARSE = 7


class SecretaryError(Exception):
    """Base class for every error raised by this package"""

    exit_code = ExitCode.FAILED_CHECK


class InvalidQueryError(SecretaryError, ValueError):
    """An oracle query named an element outside the ground set or view"""


class AuditViolation(SecretaryError):
    """An oracle query touched an element that has not arrived yet"""

    def __init__(self, unrevealed):
        self.unrevealed = frozenset(unrevealed)
        super().__init__(f"query touches unrevealed elements {sorted(self.unrevealed)}")


class OutOfPromiseError(SecretaryError, ValueError):
    """A weight lies outside the classed range (W/2^h, W]"""

    exit_code = ExitCode.PROMISE


class PromiseViolationError(SecretaryError):
    """An aided instance breaks promise (i) or (ii)"""

    exit_code = ExitCode.PROMISE


class InvalidBucketingError(SecretaryError, ValueError):
    pass


class EnumerationBudgetError(SecretaryError):
    """Exact enumeration requested above the configured budget"""

    exit_code = ExitCode.BUDGET


class InfeasibleParametersError(SecretaryError, ValueError):
    exit_code = ExitCode.INFEASIBLE


class ConfigError(SecretaryError):
    exit_code = ExitCode.CONFIG


class InstanceParseError(SecretaryError):
    """Malformed instance or weights file; carries the 1-based line number"""

    exit_code = ExitCode.PARSE

    def __init__(self, path: str, line_no: Optional[int], message: str):
        self.path = path
        self.line_no = line_no
        self.message = message
        where = f"{path}:{line_no}" if line_no is not None else path
        super().__init__(f"{where}: {message}")
