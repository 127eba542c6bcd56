"""Exception hierarchy shared by every module."""


class MPUlamError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(MPUlamError, ValueError):
    """Two sequences that must have equal length do not."""


class ParameterError(MPUlamError, ValueError):
    """A parameter is outside its admissible range (bad r, index, radius...)."""


class StructuralError(MPUlamError, ValueError):
    """A tableau or partition violates its shape/ordering invariants."""


class CapacityError(MPUlamError, RuntimeError):
    """An exhaustive computation would exceed its configured size cap."""


class UnsupportedRegimeError(MPUlamError, ValueError):
    """A bound was requested outside the parameter regime where it holds (n/r = 2)."""
