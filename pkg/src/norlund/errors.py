"""Exception hierarchy shared by all norlund modules."""


class NorlundError(Exception):
    """Base class for all errors raised by this package."""


class RingMismatchError(NorlundError):
    """Operands live in different coefficient rings."""


class OrderMismatchError(NorlundError):
    """Operands are truncated at different orders."""


class ConstantTermError(NorlundError):
    """The constant term does not satisfy the operation's precondition."""


class ParameterError(NorlundError, ValueError):
    """A parameter lies outside the domain of the requested family."""


class SingularParameterError(ParameterError):
    """rho = 1 makes the Eulerian generating function singular."""


class DegenerateParameterError(ParameterError):
    """alpha * rho = 1 collapses the Eulerian family to zero."""


class UnsupportedParameterError(ParameterError):
    """The parameters are valid but outside what this code path supports."""
