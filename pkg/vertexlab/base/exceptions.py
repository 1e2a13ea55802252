import typing as t


class VertexlabError(Exception):
    """Base class for all vertexlab exceptions."""


class LatticeError(VertexlabError):
    """Raised when a lattice lacks a property an operation requires."""

    def __init__(self, message: str) -> None:
        """Initialize LatticeError with a message."""
        super().__init__(message)


class LatticeMismatchError(LatticeError):
    """Raised when operands belong to different lattices or ranks."""

    def __init__(self, message: str) -> None:
        """Initialize LatticeMismatchError with a message."""
        super().__init__(message)


class StateError(VertexlabError):
    """Raised for malformed Fock states."""

    def __init__(self, message: str) -> None:
        """Initialize StateError with a message."""
        super().__init__(message)


class StateSyntaxError(StateError):
    """Raised when a state string does not match the state grammar."""

    def __init__(self, message: str) -> None:
        """Initialize StateSyntaxError with a message."""
        super().__init__(message)


class PresentationError(VertexlabError):
    """Raised for unknown or malformed conformal presentations."""

    def __init__(self, message: str) -> None:
        """Initialize PresentationError with a message."""
        super().__init__(message)


class MissingImageError(PresentationError):
    """Raised when a morphism has no image for a generator."""

    def __init__(self, message: str) -> None:
        """Initialize MissingImageError with a message."""
        super().__init__(message)


class RootSystemError(VertexlabError):
    """Raised for invalid root-system input."""

    def __init__(self, message: str) -> None:
        """Initialize RootSystemError with a message."""
        super().__init__(message)


class ConstraintViolation(RootSystemError):
    """Raised when reconstruction data breaks a compatibility constraint."""

    def __init__(self, message: str, witness: t.Any = None) -> None:
        """Initialize ConstraintViolation with a message and offending data."""
        super().__init__(message)
        self.witness = witness
