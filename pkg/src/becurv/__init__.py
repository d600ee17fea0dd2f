"""Bakry-Emery curvature on weighted graphs and CD(0, inf) classification scans.

Submodules: ``graph``, ``formats``, ``families``, ``operators``, ``linalg``,
``curvature``, ``classify`` and ``cli``.
"""

from ._backend import BACKEND
from .graph import WeightedGraph
from .operators import VertexFunction

__all__ = ["BACKEND", "VertexFunction", "WeightedGraph"]
