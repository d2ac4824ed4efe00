"""Exception types shared across the package."""


class ArithmosError(Exception):
    """Base class for every error raised by arithmos."""


class PreconditionError(ArithmosError, ValueError):
    """An operation was called outside its contract (bad input, unmet hypothesis)."""


class ContractViolation(ArithmosError):
    """Two routes that must agree did not.

    Raised when an internal cross-check fails, e.g. a decision procedure
    disagrees with its brute-force oracle. This should never happen; the CLI
    maps it to exit status 1.
    """
