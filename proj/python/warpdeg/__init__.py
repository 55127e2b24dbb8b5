"""Warping degrees of oriented knot diagrams."""

from ._core import *  # noqa: F401,F403
from ._core import Diagram, Error, InputError, DegenerateInputError, IoError

__version__ = "0.1.0"
