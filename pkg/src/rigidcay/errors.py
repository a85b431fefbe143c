"""Exception types raised across the package."""


class RigidCayError(Exception):
    """Base class for all errors raised by rigidcay."""


class InvalidParameter(RigidCayError, ValueError):
    pass


class CapacityExceeded(RigidCayError):
    pass


class InvalidGenerator(RigidCayError, ValueError):
    pass


class InvalidInput(RigidCayError, ValueError):
    pass


class InvalidPartition(RigidCayError, ValueError):
    pass


class AmbiguousColoring(RigidCayError, ValueError):
    pass


class InvalidColoring(RigidCayError, ValueError):
    pass


class PredictionMismatch(RigidCayError, AssertionError):
    """A family construction disagrees with its closed-form prediction."""
