"""Exception types raised by squarekit.

Every domain error carries a short ``kind`` tag and a JSON-friendly
``details`` mapping so the CLI can report it as structured output.
"""

from __future__ import annotations


class SquareKitError(Exception):
    kind = "error"

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.message = message
        self.details = details

    def to_json(self) -> dict:
        return {"error": self.kind, "message": self.message, **self.details}


class DisconnectedGraphError(SquareKitError):
    kind = "disconnected"


class UnknownVertexError(SquareKitError, KeyError):
    kind = "unknown-vertex"

    def __str__(self) -> str:
        return self.message


class NotMedianError(SquareKitError):
    kind = "not-median"


class NotSquaregraphError(SquareKitError):
    kind = "not-squaregraph"


class NotTwoConnectedError(SquareKitError):
    kind = "not-2-connected"


class InvalidSplitSystemError(SquareKitError):
    kind = "invalid-split-system"


class InvalidDiagramError(SquareKitError):
    kind = "invalid-diagram"


class ColoringCapExceeded(SquareKitError):
    kind = "coloring-cap-exceeded"


class InvalidParameterError(SquareKitError, ValueError):
    kind = "invalid-parameter"


class SizeLimitError(SquareKitError):
    kind = "size-limit"
