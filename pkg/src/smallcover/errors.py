"""Exception hierarchy shared by every module."""

from __future__ import annotations


class SmallCoverError(ValueError):
    """Base class for all input and consistency errors raised by the package."""


# geometry / polytope construction
class NotFullDimensional(SmallCoverError):
    pass


class NotSimplicial(SmallCoverError):
    pass


class InteriorPoint(SmallCoverError):
    pass


class InvalidParameters(SmallCoverError):
    pass


class InvalidPolytope(SmallCoverError):
    pass


# linear algebra
class WrongArity(SmallCoverError):
    pass


class DimensionMismatch(SmallCoverError):
    pass


class SingularPrefix(SmallCoverError):
    pass


# enumeration / classification
class MissingBaseVertex(SmallCoverError):
    pass


class ActionLeavesSet(SmallCoverError):
    pass


class InputNotCharacteristic(SmallCoverError):
    pass


class NotCharacteristic(SmallCoverError):
    pass


class TooLarge(SmallCoverError):
    pass
