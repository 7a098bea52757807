"""Exception hierarchy shared by every mvkit module."""

from __future__ import annotations


class MVKitError(Exception):
    """Base class for all library errors."""


class InvalidUnit(MVKitError, ValueError):
    pass


class EmptyProduct(MVKitError, ValueError):
    pass


class UnsupportedQuotient(MVKitError, ValueError):
    pass


class ElementNotInAlgebra(MVKitError, ValueError):
    pass


class UnboundVariable(MVKitError, KeyError):
    pass


class InfiniteCarrierExhaustive(MVKitError, ValueError):
    pass


class ShapeMismatch(MVKitError, ValueError):
    pass


class UnsupportedShape(MVKitError, ValueError):
    pass


class NotGammaAlgebra(MVKitError, ValueError):
    pass


class InvalidIdeal(MVKitError, ValueError):
    pass


class CarrierTooLarge(MVKitError, ValueError):
    pass


class NotLocal(MVKitError, ValueError):
    pass


class NotPerfect(MVKitError, ValueError):
    pass


class BaseNotSupported(MVKitError, ValueError):
    pass


class NotStrictlyOrdered(MVKitError, ValueError):
    pass


class OutOfUnitInterval(MVKitError, ValueError):
    pass


class VerificationError(MVKitError):
    """A construction failed its own verification; ``witness`` says where."""

    def __init__(self, message: str, witness: dict | None = None):
        super().__init__(message)
        self.witness = witness or {}


class DSLError(MVKitError):
    """Raised for spec-file problems; carries a source location."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{line}:{col}: {message}" if line else message)
        self.line = line
        self.col = col
        self.detail = message


class DSLSyntaxError(DSLError):
    def __init__(self, line: int, col: int, expected: str, found: str = ""):
        msg = f"expected {expected}"
        if found:
            msg += f", found {found!r}"
        super().__init__(msg, line, col)
        self.expected = expected


class UnknownName(DSLError):
    pass


class ArityError(DSLError):
    pass
