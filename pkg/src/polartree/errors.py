"""Exception types shared across the package."""


class PolartreeError(Exception):
    """Base class for input and precondition errors (CLI exit code 2)."""


class ZeroPolynomial(PolartreeError):
    pass


class DivisionByZero(PolartreeError):
    pass


class TowerDepthExceeded(PolartreeError):
    pass


class NotMonic(PolartreeError):
    pass


class CurveSyntaxError(PolartreeError):
    def __init__(self, message, position, expected=()):
        super().__init__("%s at position %d" % (message, position))
        self.position = position
        self.expected = tuple(expected)


class NonReduced(PolartreeError):
    pass


class EmptySupport(PolartreeError):
    pass


class GammaIsRoot(PolartreeError):
    pass


class TruncationTooShort(PolartreeError):
    pass


class NotGeneric(PolartreeError):
    """Some polar component meets the curve with positive intersection."""

    def __init__(self, message, point=None, intersection=None):
        super().__init__(message)
        self.point = point
        self.intersection = intersection


class ZeroJacobian(PolartreeError):
    pass


class InternalInconsistency(Exception):
    """Bug trap: two routes that must agree did not."""


class ContradictionWitness(InternalInconsistency):
    """A constant-contact family is neither equivalent nor almost equivalent."""
