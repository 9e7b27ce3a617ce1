"""Exception types raised by the library."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class CertificateInfeasibleError(ValueError):
    """A certificate fails the positivity/negativity conditions of the LP bound."""


class DivisionUndefinedError(ZeroDivisionError):
    """A ratio f(x)/f_x was requested where f_x is zero."""
