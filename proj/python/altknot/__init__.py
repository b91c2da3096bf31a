"""Alternating knot diagrams and their adjacency polynomials."""

from ._altknot import *  # noqa: F401,F403
from ._altknot import __doc__  # noqa: F401
