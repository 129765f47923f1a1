"""Custom exceptions module"""


class TiltForgeException(Exception):
    """Common base class for all tilt-forge exceptions."""
    def __init__(self, reason: str):
        super().__init__()
        self.reason = reason

    def __str__(self) -> str:
        return '%s' % self.reason


class InvalidArgumentException(TiltForgeException):
    """Raised when arguments are not correct."""
    pass


class PresentationException(TiltForgeException):
    """Raised when a quiver or presentation breaks its invariants."""
    pass


class CompositionException(TiltForgeException):
    """Raised when two paths are not composable."""
    pass


class LookupException(TiltForgeException):
    """Raised if an arrow or vertex id is not found."""
    pass


class ParseException(TiltForgeException):
    """Raised if a presentation document is malformed."""
    def __init__(self, reason: str, line: int = 0, column: int = 0):
        super().__init__(reason)
        self.line = line
        self.column = column

    def __str__(self) -> str:
        return 'line %d, column %d: %s' % (self.line, self.column, self.reason)


class GradingException(TiltForgeException):
    """Raised if a grading is inhomogeneous or not Gorenstein-consistent."""
    pass


class PreconditionException(TiltForgeException):
    """Raised if an operation is called outside its preconditions."""
    pass


class DimensionBoundExceeded(TiltForgeException):
    """Raised if an algebra does not vanish below the length bound"""
    def __init__(self, reason: str, table=None):
        super().__init__(reason)
        self.table = table


class NotQuadraticException(TiltForgeException):
    """Raised if a quadratic dual is requested for non-quadratic relations"""
    pass


class CollectionNotFullException(TiltForgeException):
    """Raised if the classes of a collection do not form a basis"""
    pass
