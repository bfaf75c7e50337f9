"""Exception types shared across the package."""


class TandemCodeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TandemCodeError, ValueError):
    """An argument is outside the domain an operation is defined on."""


class CapacityError(TandemCodeError):
    """A requested materialization exceeds the configured size limit."""


class BudgetExceededError(TandemCodeError):
    """A brute-force computation exceeded its search budget."""


class NotAnEdgeError(TandemCodeError, ValueError):
    """The given state pair is not an edge of the encoder graph."""


class UnlabeledEdgeError(TandemCodeError, ValueError):
    """The edge exists but its index exceeds the labeled range q**ell."""


class CorruptInputError(TandemCodeError, ValueError):
    """Input data does not decode: framing, block, or format damage."""


class NotADescendantError(TandemCodeError, ValueError):
    """The received word cannot descend from any codeword."""
