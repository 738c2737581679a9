"""Exception hierarchy shared by every layer of the toolkit."""

from __future__ import annotations


class NumradError(RuntimeError):
    """Base class for all toolkit errors."""


# ---------- algebra ----------


class ShapeMismatch(NumradError):
    """Raised when two elements do not share a block shape signature."""


class NonFiniteEntries(NumradError):
    """Raised when a matrix block contains NaN or Inf."""


class DimensionMismatch(NumradError):
    """Raised when a witness vector does not fit the block it points at."""


class NotHermitian(NumradError):
    """Raised by the eigensolver when its input is not self-adjoint."""


class NoConvergence(NumradError):
    """Raised when an iterative routine hits its iteration cap."""


# ---------- checks ----------


class InapplicableInput(NumradError):
    """Raised when an input does not satisfy a corollary's hypothesis."""


class NotCentral(NumradError):
    """Raised when an element fails the centrality check."""


class NotUnitary(NumradError):
    """Raised when an element fails the unitarity check."""


# ---------- harness ----------


class ParseError(NumradError):
    """Raised for malformed element documents."""

    def __init__(self, message: str, *, line: int | None = None, field: str | None = None) -> None:
        self.line = line
        self.field = field
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field '{field}'")
        suffix = f" ({', '.join(where)})" if where else ""
        super().__init__(f"{message}{suffix}")


class ShapeError(ParseError):
    """Raised for documents describing non-square matrices."""


class UnsupportedFamilyDim(NumradError):
    """Raised when an ensemble family cannot produce the requested dimension."""


class UnknownTag(NumradError):
    """Raised when a suite run asks for a check tag that is not registered."""


__all__ = [
    "DimensionMismatch",
    "InapplicableInput",
    "NoConvergence",
    "NonFiniteEntries",
    "NotCentral",
    "NotHermitian",
    "NotUnitary",
    "NumradError",
    "ParseError",
    "ShapeError",
    "ShapeMismatch",
    "UnknownTag",
    "UnsupportedFamilyDim",
]
