"""Exception hierarchy shared by every module."""


class PermSolvError(Exception):
    pass


class MalformedCycle(PermSolvError, ValueError):
    pass


class PointRepeated(PermSolvError, ValueError):
    pass


class PointOutOfRange(PermSolvError, ValueError):
    pass


class DegreeMismatch(PermSolvError, ValueError):
    pass


class CapExceeded(PermSolvError):
    """The group is larger than the enumeration cap in force."""

    def __init__(self, order, cap):
        self.order = order
        self.cap = cap
        super().__init__(f"group order {order} exceeds enumeration cap {cap}")


class NotInAmbient(PermSolvError, ValueError):
    pass


class SeriesTooLong(PermSolvError, RuntimeError):
    pass


class RadicalNotSubgroup(PermSolvError, RuntimeError):
    pass


class PrimeDoesNotDivide(PermSolvError, ValueError):
    pass


class IndexTooLarge(PermSolvError):
    def __init__(self, index, cap):
        self.index = index
        self.cap = cap
        super().__init__(f"index {index} exceeds degree cap {cap}")


class OddPermutation(PermSolvError, ValueError):
    pass


class DegreeTooSmall(PermSolvError, ValueError):
    pass


class NoSuitablePrime(PermSolvError, ValueError):
    pass


class NotApplicable(PermSolvError, ValueError):
    pass


class BadSpec(PermSolvError, ValueError):
    pass


class UnsupportedParameter(PermSolvError, ValueError):
    pass


class OrderMismatch(PermSolvError, RuntimeError):
    pass


class VertexUniverseMismatch(PermSolvError, ValueError):
    pass
