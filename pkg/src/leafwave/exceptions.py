"""Exception types raised by leafwave."""

from __future__ import annotations

__all__ = [
    "LeafwaveError",
    "LeafDomainError",
    "InvalidParamsError",
    "ConvergenceError",
]


class LeafwaveError(Exception):
    """Base class for all leafwave errors."""


class LeafDomainError(LeafwaveError, ValueError):
    """An argument lies outside the domain of a leaf function or its inverse."""


class InvalidParamsError(LeafwaveError, ValueError):
    """Wave parameters, grids or step sizes that cannot be used."""


class ConvergenceError(LeafwaveError, RuntimeError):
    """An iterative numerical routine did not reach the requested accuracy."""
