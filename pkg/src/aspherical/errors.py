"""Error types. The CLI prints the class name on stderr, so names are stable."""


class DomainError(ValueError):
    """Base class for mathematical precondition failures."""


class ParameterError(DomainError):
    pass


class SpanError(DomainError):
    """A product left span{1, kappa, kappa^-1}."""


class DegenerateParameterError(DomainError):
    pass


class ModelViolationError(DomainError):
    pass


class NotAddableError(DomainError):
    pass


class ResourceLimitError(DomainError):
    pass


class InconsistentDecompositionError(DomainError):
    pass


class PreconditionError(DomainError):
    pass


class ParseError(DomainError):
    pass
