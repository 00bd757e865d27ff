"""Exact dominator colorings of oriented trees.

Thin Python layer over the C++ core. Trees are ``OrientedTree`` values built
with :func:`build_tree` or one of the generators; colorings are plain lists
of positive integers, one per vertex.
"""

from ._core import *  # noqa: F401,F403
from ._core import DomchromError, OrientedTree

__all__ = [name for name in dir() if not name.startswith("_")]
