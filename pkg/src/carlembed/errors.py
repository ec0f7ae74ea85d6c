"""Exception hierarchy and warnings shared across the package."""


class CarlembedError(Exception):
    """Base class for every error raised by this package."""


class InputError(CarlembedError, ValueError):
    """Invalid user-supplied data: bad dimensions, weights, or file contents."""


class UnsupportedError(CarlembedError):
    """The operation is not defined for the requested space or dimension."""


class SingularityError(CarlembedError):
    """A kernel denominator vanished to machine precision."""


class NumericError(CarlembedError):
    """A numerical routine failed to meet its accuracy contract."""


class KernelConditioningWarning(UserWarning):
    """A point lies so close to the boundary that kernel values are ill conditioned.

    Reproducing kernels grow like (1 - |z|^2)**-n, so points with
    1 - |z|^2 below roughly 1e-8 lose about half the significand.
    """
