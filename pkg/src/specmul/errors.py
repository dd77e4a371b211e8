"""Exception types shared across the package."""


class SpecmulError(Exception):
    """Base class for every error raised by this library."""


class DimensionMismatchError(SpecmulError):
    pass


class NonUnitaryError(SpecmulError):
    pass


class ConvergenceFailureError(SpecmulError):
    pass


class ClosureRefusedError(SpecmulError):
    pass


class IncompleteClosureError(SpecmulError):
    pass


class DeterminantNotOneError(SpecmulError):
    pass


class InvalidParamsError(SpecmulError):
    pass


class PrimeMismatchError(SpecmulError):
    pass


class ZeroSpectralRadiusError(SpecmulError):
    pass
