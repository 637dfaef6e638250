"""Exception taxonomy shared across the toolkit.

Every domain error raised by this package derives from ExactQTError so the
CLI can map failures to machine-readable reports without guessing.
"""

from __future__ import annotations


class ExactQTError(Exception):
    """Root of all domain errors raised by exactqt."""

    @property
    def code(self) -> str:
        return type(self).__name__


class NonPrimeCharacteristic(ExactQTError):
    pass


class ReducibleModulus(ExactQTError):
    pass


class FieldMismatch(ExactQTError):
    """Operands belong to different fields; no implicit coercion exists."""


class DivisionByZero(ExactQTError):
    pass


class ImproperField(ExactQTError):
    """The field carries the identity involution, so the request is meaningless."""


class WrongField(ExactQTError):
    """The operation is only defined over a different kind of field."""


class DimensionMismatch(ExactQTError):
    pass


class NonSquare(ExactQTError):
    pass


class Inconsistent(ExactQTError):
    """A linear system has no solution."""


class NotHermitian(ExactQTError):
    pass


class NotUnitary(ExactQTError):
    pass


class IncompleteSpectrum(ExactQTError):
    """The observable's eigenspaces do not span the whole space."""


class ZeroState(ExactQTError):
    pass


class ImpossibleOutcome(ExactQTError):
    """Requested outcome has zero component in the state."""


class IsotropicVector(ExactQTError):
    """A vector with vanishing self form value was used where a norm is needed."""


class NotOrthogonal(ExactQTError):
    pass


class EvenExtensionDegree(ExactQTError):
    """Involution-compatible embeddings only exist for odd extension degrees."""


class NoRootFound(ExactQTError):
    pass


class FieldNotFinite(ExactQTError):
    pass


class NotHomogeneous(ExactQTError):
    pass


class ParseError(ExactQTError):
    """Syntax error in a textual element, sentence, or polynomial.

    position is the 0-based character offset of the failure.
    """

    def __init__(self, message: str, position: int | None = None):
        if position is None:
            super().__init__(message)
        else:
            super().__init__(f"{message} at column {position}")
        self.position = position
