"""Exception types shared across the package."""
from __future__ import annotations


class CctsError(Exception):
    pass


class ParseError(CctsError):
    """Raised when a JSON document does not describe a valid object."""


class IllegalSwapError(CctsError):
    def __init__(self, message, colors):
        super().__init__(message)
        self.colors = colors


class NotStarError(CctsError):
    """Raised when the star decision procedure gets a non-star swap graph."""


class StateLimitError(CctsError):
    def __init__(self, states_explored):
        super().__init__(f"state budget exhausted after {states_explored} states")
        self.states_explored = states_explored
