"""
Global iwasawa exception classes.
"""
from typing import Any, Optional


class ImproperlyConfigured(Exception):
    """iwasawa is somehow improperly configured"""


class CommandNotFound(Exception):
    """The command cannot be found"""


class ManagerNotFound(Exception):
    """Manager is not found"""


class HookNotFound(Exception):
    """Cannot find the hook in the manager"""


# --------------------------------- Numerics --------------------------------- #


class IwasawaError(Exception):
    """Base class of every numerical error raised by iwasawa"""


class DimensionMismatch(IwasawaError):
    """Operands of an operation live in different dimensions p"""


class InvalidElement(IwasawaError):
    """A matrix violates the invariants of the type it was given to"""


class ImaginaryResidue(IwasawaError):
    """Tr(nm) has a non-negligible imaginary part: inputs are not skew-Hermitian"""


class ZeroVector(IwasawaError):
    """Polar coordinates are undefined at m = 0"""


class NotInPrincipalOrbit(IwasawaError):
    """-i m is not positive definite, so m is not of the form i s*s"""


class NoConvergence(IwasawaError):
    """An adaptive quadrature exhausted its subdivision budget"""


class PreconditionViolation(IwasawaError):
    """An operation was called outside the inputs it is defined for"""


class NonFiniteSample(IwasawaError):
    """A sphere integrand returned NaN or infinity"""

    def __init__(self, message: str, direction: Optional[Any] = None) -> None:
        super().__init__(message)
        # The offending unit direction, as a p x p array
        self.direction = direction
