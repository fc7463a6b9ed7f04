"""Figure rendering for wigbarrier CSV outputs."""

from .jobs import FIGURE_KINDS, FigureInputError, FigureJob
from .render import MirrorAssertionError, render

__all__ = [
    "FIGURE_KINDS",
    "FigureInputError",
    "FigureJob",
    "MirrorAssertionError",
    "render",
]
