"""Exception types shared across the package."""


class OptrealError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(OptrealError):
    """Input text could not be tokenized into integers."""


class DomainError(OptrealError):
    """A value is outside the domain an operation accepts."""


class NotGraphicError(DomainError):
    """The degree sequence has no realization as a simple graph."""


class NetworkError(OptrealError):
    """A flow network violates its structural invariants."""


class InfeasibleError(OptrealError):
    """A flow fell short of the saturation value required by a reduction."""


class ContractError(OptrealError):
    """An input object violates the contract of the operation it was passed to."""


class FlipError(ContractError):
    """The four vertices handed to a flip do not satisfy its edge preconditions."""


class LimitError(DomainError):
    """An exhaustive operation was asked to run beyond its configured size limit."""


class InternalError(OptrealError):
    """An invariant the algorithm guarantees was violated; indicates a bug."""
