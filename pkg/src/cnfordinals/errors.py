"""Exception hierarchy shared by every module of the package."""


class OrdinalError(Exception):
    """Base class for all errors raised by this package."""


class InvariantError(OrdinalError, ValueError):
    """A value would break a normal-form invariant."""


class NotInNormalForm(InvariantError):
    """A term is not in Cantor normal form.

    ``path`` locates the offending subterm as a sequence of ``"exp"`` /
    ``"rest"`` steps from the root.
    """

    def __init__(self, message, path=()):
        super().__init__(message)
        self.path = tuple(path)


class GuardViolation(InvariantError):
    """``omega_plus(e, r)`` was called with ``e < first_exp(r)``."""

    def __init__(self, exp, rest):
        super().__init__(f"exponent {exp!r} is below the leading exponent of {rest!r}")
        self.exp = exp
        self.rest = rest


class PreconditionViolation(OrdinalError):
    """A well-founded recursion step recursed on an argument that is not smaller."""

    def __init__(self, arg, caller):
        super().__init__(f"recursive call on {arg!r}, which is not below {caller!r}")
        self.arg = arg
        self.caller = caller


class OutOfRange(OrdinalError, ValueError):
    """An ordinal lies outside the domain of the coefficient-vector oracle."""


class ResourceLimit(OrdinalError):
    """A configured resource cap was hit."""


class DepthExceeded(ResourceLimit):
    pass


class NumeralTooLarge(ResourceLimit, ValueError):
    pass


class CoefficientOverflow(ResourceLimit, OverflowError):
    pass


class TermTooLarge(ResourceLimit):
    """A normal form would hold more summands than ``Limits.max_terms``."""


class ParseError(OrdinalError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class JsonError(OrdinalError, ValueError):
    pass
