"""Exceptions shared across the package."""

from __future__ import annotations


class BoundExceededError(ValueError):
    """An enumeration request exceeds the configured safety bound.

    Exhaustive enumeration is meant for desk-scale verification; anything
    past the bound would silently take hours, so we refuse instead.
    """

    def __init__(self, n: int, bound: int, what: str = "enumeration"):
        super().__init__(
            f"{what} at n={n} refused: exceeds the configured bound {bound}"
        )
        self.n = n
        self.bound = bound


class InvariantError(RuntimeError):
    """Two routes that must agree exactly have disagreed."""
