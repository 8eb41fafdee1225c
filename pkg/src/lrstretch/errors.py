"""Exception types raised across the package."""


class LRError(ValueError):
    """Base class for input errors."""


class MonotonicityViolation(LRError):
    pass


class NegativePart(LRError):
    pass


class LengthMismatch(LRError):
    pass


class WeightMismatch(LRError):
    pass


class NonzeroSum(LRError):
    pass


class UnbalancedRay(LRError):
    pass


class DuplicateAbscissa(LRError):
    pass


class ResourceLimit(RuntimeError):
    """A configured cap (k, visited nodes, ...) was exceeded."""
