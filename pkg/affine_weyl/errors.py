"""
Error Types
Exceptions raised by the affine Weyl group, Hecke algebra and verifier packages
"""

from typing import Optional


class AffineKLError(ValueError):
    """Base class for every error raised by this project"""


class InvalidCartanError(AffineKLError):
    """Cartan matrix is not of finite type, not symmetrizable or not irreducible"""


class DatumMismatchError(AffineKLError):
    """Operands belong to different root data"""


class UnsupportedDatumError(AffineKLError):
    """Operation is not defined for this family of root data"""


class ElementSyntaxError(AffineKLError):
    """Element expression could not be parsed"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class InvalidWindowError(AffineKLError):
    """Window violates the congruence conditions of an affine permutation"""


class CapExceededError(AffineKLError):
    """A computation was asked to go beyond a configured cap"""

    def __init__(self, what: str, cap: int, requested: Optional[int] = None):
        detail = f"{what} exceeds cap {cap}"
        if requested is not None:
            detail += f" (requested {requested})"
        super().__init__(detail)
        self.cap = cap
        self.requested = requested


class ReducednessError(AffineKLError):
    """A product that must be reduced is not"""


class ConfigurationError(AffineKLError):
    """Environment or command-line configuration is malformed"""


class KLComputationError(AffineKLError):
    """Internal consistency check of a canonical basis computation failed"""
