"""Exact arithmetic for the pentagram map: polygons, Y-pattern dynamics and F-polynomials."""
from .cluster import F, M, Y, FValues, YSeed, alpha1, alpha2, b0_matrix, mutate, theorem_Tk, theorem_Tkx
from .exact import HLine, HPoint, ProjMap, Rat, rat
from .laurent import LaurentRing, LMonomial, LPoly
from .polygon import (
    TwistedPolygon,
    closed_polygon,
    iterate,
    pentagram,
    random_polygon,
    x_coords,
    y_params,
)

__version__ = "0.1.0"

__all__ = [
    "F", "M", "Y", "FValues", "YSeed", "alpha1", "alpha2", "b0_matrix", "mutate", "theorem_Tk", "theorem_Tkx",
    "HLine", "HPoint", "ProjMap", "Rat", "rat",
    "LaurentRing", "LMonomial", "LPoly",
    "TwistedPolygon", "closed_polygon", "iterate", "pentagram", "random_polygon", "x_coords", "y_params",
]
