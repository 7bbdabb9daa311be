"""Exception hierarchy."""


class GroupError(ValueError):
    """Base class for invalid group input."""


class NotAssociative(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class NotClosed(GroupError):
    pass


class DegreeMismatch(GroupError):
    pass


class CapExceeded(RuntimeError):
    """A configured size cap would be exceeded."""


class OrderCapExceeded(CapExceeded):
    pass


class LatticeCapExceeded(CapExceeded):
    pass


class TooManyPrimes(CapExceeded):
    pass


class ComplexError(ValueError):
    pass


class IndexOutOfRange(ComplexError):
    pass


class PredicateNotHereditary(ComplexError):
    pass


class ArityUnsupported(ValueError):
    pass


class LabelMismatch(ValueError):
    pass
