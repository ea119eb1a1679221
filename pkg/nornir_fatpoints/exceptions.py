"""Custom exception classes."""


class FatPointException(Exception):
    """Base exception for fat point verification and ledger replay."""


class SchemeError(FatPointException, ValueError):
    """Invalid scheme specification, degree range or serialized input."""


class DegenerateTrialError(FatPointException):
    """A random instance behaved like a special one (collision, cap exceeded)."""


class LedgerError(FatPointException):
    """A ledger step or certificate failed one of its checks.

    Attributes:
        rule (str): Name of the rule that failed.
        state (str): Description of the configuration the rule was applied to.
    """

    def __init__(self, message: str, rule: str = "", state: str = ""):
        """Initialize the object."""
        super().__init__(message)
        self.rule = rule
        self.state = state

    def __str__(self):
        """Render the message with the failing rule attached."""
        message = super().__str__()
        if self.rule:
            message = f"{self.rule}: {message}"
        if self.state:
            message = f"{message} [{self.state}]"
        return message
