"""Exact calculator for ruled surfaces, their linear systems and scroll images."""

from .values import Tri, ExactOrInterval
from .curve_model import CurveModel, DivisorClass, Effectivity, Domain
from .surface import RuledSurface, PicClass, NumClass

__all__ = [
    "Tri",
    "ExactOrInterval",
    "CurveModel",
    "DivisorClass",
    "Effectivity",
    "Domain",
    "RuledSurface",
    "PicClass",
    "NumClass",
]

__version__ = "0.1.0"
