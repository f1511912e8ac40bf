"""Exception hierarchy shared by the numerical modules and the CLI."""


class TaumaxError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TaumaxError, ValueError):
    """An argument lies outside the domain of the requested function."""


class UsageError(TaumaxError, ValueError):
    """A caller asked for something the API does not offer (unknown name, bad order)."""


class SolverError(TaumaxError, ArithmeticError):
    """A root finder failed: no sign change on the bracket or no convergence."""


class JetError(TaumaxError, ValueError):
    """Incompatible Taylor jets or a singular constant term."""
