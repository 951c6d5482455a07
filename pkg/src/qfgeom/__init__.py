"""Exact coordinate model of a quantifier-free constructive geometry.

Typical use::

    import qfgeom as qg
    a, b = qg.P(0, 0), qg.P(3, 0)
    m = qg.construct.mid(a, b)
    qg.geom.between(a, m, b)
"""

from __future__ import annotations

__version__ = "0.1.0"

from . import conformance, construct, exactnum, geom, script
from .construct import ConstructionError
from .exactnum import ConstructibleReal, Q, sqrt
from .geom import ALPHA, BETA, GAMMA, P, Point

__all__ = [
    "ALPHA", "BETA", "GAMMA", "ConstructibleReal", "ConstructionError", "P", "Point", "Q",
    "conformance", "construct", "exactnum", "geom", "script", "sqrt",
]
