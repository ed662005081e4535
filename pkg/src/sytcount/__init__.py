"""Exact enumeration of standard Young tableaux and their variants."""

from .shapes import (
    CellGrid,
    CellPoset,
    Partition,
    PsytShape,
    ShapeError,
    ShapeParseError,
    ShiftedShape,
    SkewShape,
    build_poset,
    parse_shape,
    psyt_poset,
    shifted_grid,
)

__all__ = [
    "CellGrid",
    "CellPoset",
    "Partition",
    "PsytShape",
    "ShapeError",
    "ShapeParseError",
    "ShiftedShape",
    "SkewShape",
    "build_poset",
    "parse_shape",
    "psyt_poset",
    "shifted_grid",
]

__version__ = "0.1.0"
