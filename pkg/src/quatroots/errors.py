"""Exception types raised across the package."""


class QuatRootsError(Exception):
    pass


class ZeroPolynomialError(QuatRootsError, ValueError):
    pass


class AllZeroError(QuatRootsError, ValueError):
    """Every polynomial handed to a gcd was zero."""


class DegreeTooSmallError(QuatRootsError, ValueError):
    pass


class DegreeViolationError(QuatRootsError, ValueError):
    """A Barnett stack member has degree >= deg P."""


class DegreeZeroError(QuatRootsError, ValueError):
    pass


class NoConvergence(QuatRootsError, ArithmeticError):
    """Simultaneous iteration hit its cap; ``partial`` holds the last iterate."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial or []


class PairingAmbiguity(QuatRootsError, ArithmeticError):
    pass


class ConditionFails(QuatRootsError, ValueError):
    """The quadratic has no complex root (the resultant condition is nonzero)."""


class HasRealFactor(QuatRootsError, ValueError):
    pass


class NotQuaternionic(QuatRootsError, ValueError):
    """The polynomial already lies in C[t]."""


class PolySyntaxError(QuatRootsError, SyntaxError):
    def __init__(self, message, text="", pos=0):
        super().__init__(f"{message} at position {pos}")
        self.text = text
        self.pos = pos


class NonPolynomialError(PolySyntaxError):
    pass


class ConsistencyError(QuatRootsError, AssertionError):
    """Two independent routes to the same quantity disagreed."""
