"""Exception types shared across the kernel."""


class KernelError(Exception):
    """Base class for every error raised by this package."""


class NotInvertibleError(KernelError, ArithmeticError):
    """A nonzero element that has no inverse in the ring it lives in."""


class VarSetMismatch(KernelError, ValueError):
    pass


class XiCoefficientError(KernelError, ValueError):
    """A Groebner computation was handed coefficients involving xi."""


class FactorizationError(KernelError):
    def __init__(self, message, index=None, residual=None):
        super().__init__(message)
        self.index = index
        self.residual = residual


class MembershipError(KernelError, ValueError):
    """An input that was required to lie in some ring or ideal does not."""


class NormalizationError(KernelError, ValueError):
    pass


class ScenarioError(KernelError, ValueError):
    """Invalid scenario input (unknown keys, bad values, degenerate data)."""


class ParseError(KernelError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position
