"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: InputError -> 1, InfeasibleError -> 2,
ContractViolation -> 3. ResourceError is an InputError (the caller asked
for more than the budget allows).
"""

from __future__ import annotations


class OrientdiaError(Exception):
    """Base class for all package errors."""


class InputError(OrientdiaError, ValueError):
    """Malformed or out-of-contract input supplied by the caller."""


class ResourceError(InputError):
    """A search would exceed its configured budget."""


class InfeasibleError(OrientdiaError):
    """The graph has no strong orientation (it contains a bridge)."""

    def __init__(self, message: str, bridge: tuple[int, int] | None = None) -> None:
        super().__init__(message)
        self.bridge = bridge


class ContractViolation(OrientdiaError, AssertionError):
    """A guaranteed construction failed: an internal bug, never user error."""
