"""p-harmonic mappings of the unit disk.

Series calculus (:mod:`.harmonic`, :mod:`.bipoly`), sampled geometric
predicates (:mod:`.geometry`), Landau radii (:mod:`.landau`), Bloch bounds
(:mod:`.bloch`) and regions of variability (:mod:`.variability`).
"""
from .bipoly import BiPolynomial
from .harmonic import (
    HarmonicSeries,
    PHarmonicMap,
    WirtingerJet,
    apply_D,
    evaluate,
    metrics,
    to_bipoly,
    wirtinger,
)
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BiPolynomial",
    "HarmonicSeries",
    "PHarmonicMap",
    "WirtingerJet",
    "apply_D",
    "evaluate",
    "metrics",
    "to_bipoly",
    "wirtinger",
]
