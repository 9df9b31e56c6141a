"""Exception hierarchy shared by every module of the package."""


class SMMVError(Exception):
    """Base class for all errors raised by this package."""


class DomainMismatch(SMMVError):
    pass


class InvalidParameter(SMMVError, ValueError):
    pass


class ClosureExceeded(SMMVError):
    def __init__(self, cap):
        super().__init__(f"subalgebra closure exceeded cap of {cap} elements")
        self.cap = cap


class NotAFilter(SMMVError):
    pass


class NotAChain(SMMVError):
    pass


class NotASubalgebra(SMMVError):
    pass


class UnknownFixture(SMMVError, KeyError):
    pass


class ScopeMismatch(SMMVError):
    pass


class Unsupported(SMMVError):
    pass


class TooLarge(SMMVError):
    pass


class NotComparable(SMMVError):
    pass


class NotInImage(SMMVError):
    pass


class UnboundVariable(SMMVError, KeyError):
    pass


class ParseError(SMMVError):
    """Syntax error in a term, equation, descriptor or element literal."""

    def __init__(self, message, position=None, text=None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class UnknownEquation(SMMVError, KeyError):
    pass


class ResourceLimit(SMMVError):
    def __init__(self, message, cases=0, elapsed=0.0):
        super().__init__(message)
        self.cases = cases
        self.elapsed = elapsed


class UnknownSuite(SMMVError, KeyError):
    pass


class UnknownDescriptor(SMMVError):
    pass
