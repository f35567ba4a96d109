"""Exceptions shared across the package.

Each exception maps to one failure category so callers (and the command
line tool) can translate them into exit codes without string matching.
"""


class InvalidInputError(ValueError):
    """Malformed input text or an object that fails basic validation."""


class DomainError(ValueError):
    """A structurally valid object that violates a required predicate.

    ``predicate`` is a short machine-readable name of the violated
    condition, e.g. ``"avoids-321"`` or ``"last-2-increasing"``.
    """

    def __init__(self, predicate, message):
        super().__init__(message)
        self.predicate = predicate


class UnsupportedClassError(ValueError):
    """No closed form is implemented for the requested class or family."""


class ResourceLimitError(RuntimeError):
    """An exhaustive computation was refused because it exceeds a size cap."""


class VerificationError(AssertionError):
    """A cross-check between two independent computations disagreed."""
