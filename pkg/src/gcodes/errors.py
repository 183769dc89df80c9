"""Exception types shared across the package."""


class GCodesError(Exception):
    """Base class for every error raised by this package."""


class ConductorMismatch(GCodesError):
    pass


class DimensionMismatch(GCodesError):
    pass


class NotAUnit(GCodesError):
    def __init__(self, value, modulus):
        super().__init__(f"{value} is not a unit mod {modulus}")
        self.value = value
        self.modulus = modulus


class InvalidInvolution(GCodesError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidPermutation(GCodesError):
    pass


class CapExceeded(GCodesError):
    def __init__(self, what, cap):
        super().__init__(f"{what} exceeds cap {cap}")
        self.what = what
        self.cap = cap


class NotThetaFixed(GCodesError):
    pass


class NotIdempotent(GCodesError):
    pass


class DegenerateForm(GCodesError):
    def __init__(self, witness):
        super().__init__(f"bilinear form is degenerate; witness v={witness}")
        self.witness = witness


class CocycleViolation(GCodesError):
    def __init__(self, witness):
        super().__init__(f"quadratic cocycle law fails at (u, v, w)={witness}")
        self.witness = witness


class TwistViolation(GCodesError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotSelfDualIsotropic(GCodesError):
    pass


class ParseError(GCodesError):
    def __init__(self, message, location=""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location


class AssumptionViolated(GCodesError):
    pass


class UnknownCheck(GCodesError):
    pass
