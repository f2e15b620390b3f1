"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["SqtopError", "InvalidInput", "VertexCapExceeded", "VerificationFailed"]


class SqtopError(Exception):
    """Base class for errors raised by sqtop."""


class InvalidInput(SqtopError, ValueError):
    """Malformed complex, cochain or argument."""


class VertexCapExceeded(SqtopError):
    """A computation would enumerate more vertex subsets than allowed."""


class VerificationFailed(SqtopError):
    """A constructed object failed its built-in check.

    ``reason`` is a short tag such as ``"not-a-cocycle"`` or ``"class-is-zero"``.
    """

    def __init__(self, reason: str, detail: str = "") -> None:
        self.reason = reason
        self.detail = detail
        super().__init__(f"{reason}: {detail}" if detail else reason)
