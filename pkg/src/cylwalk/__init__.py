"""Cylindric shapes, walks in the dilated simplex and cylindric Robinson-Schensted."""

from .shapes import DomainError, Shape, make_shape
from .tableaux import OCT, SCT

__all__ = ["DomainError", "OCT", "SCT", "Shape", "make_shape"]
__version__ = "0.1.0"
