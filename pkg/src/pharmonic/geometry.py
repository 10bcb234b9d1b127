"""Sampled geometric predicates for maps of the unit disk.

All checks evaluate pointwise inequalities on a polar grid that excludes
the origin. Nothing here certifies univalence.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .harmonic import HarmonicSeries, PHarmonicMap, apply_D, first_jet

ZERO_TOL = 1e-12
ORIGIN_TOL = 1e-12


@dataclass(frozen=True)
class SamplingGrid:
    radii: tuple[float, ...]
    angles_per_ring: int = 256
    r_max: float = 0.99

    def __post_init__(self):
        radii = tuple(float(r) for r in self.radii)
        object.__setattr__(self, "radii", radii)
        if not radii:
            raise ValueError("grid needs at least one radius")
        if self.r_max > 0.999:
            raise ValueError("r_max must be <= 0.999")
        if self.angles_per_ring < 1:
            raise ValueError("angles_per_ring must be positive")
        if radii[0] <= 0 or radii[-1] > self.r_max + 1e-15:
            raise ValueError("radii must lie in (0, r_max]")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("radii must be strictly increasing")

    @classmethod
    def uniform(cls, n_radii: int = 64, angles_per_ring: int = 256, r_max: float = 0.99,
                r_min: float | None = None) -> "SamplingGrid":
        r_min = r_max / n_radii if r_min is None else r_min
        return cls(tuple(np.linspace(r_min, r_max, n_radii)), angles_per_ring, r_max)

    def points(self) -> np.ndarray:
        """Grid points, radius-major then angle-minor."""
        t = 2 * np.pi * np.arange(self.angles_per_ring) / self.angles_per_ring
        return (np.asarray(self.radii)[:, None] * np.exp(1j * t)[None, :]).ravel()

    def describe(self) -> dict:
        return {"n_radii": len(self.radii), "r_min": self.radii[0], "r_max": self.r_max,
                "angles_per_ring": self.angles_per_ring}


DEFAULT_GRID = SamplingGrid.uniform()


@dataclass(frozen=True)
class PredicateReport:
    passed: bool
    min_margin: float
    worst_point: complex
    points_checked: int
    vacuous: bool = False
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "min_margin": self.min_margin,
            "worst_point": {"re": self.worst_point.real, "im": self.worst_point.imag},
            "points_checked": self.points_checked,
            "vacuous": self.vacuous,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _argmin(values: np.ndarray) -> int:
    # np.argmin returns the first minimum, i.e. the lexicographically first point
    return int(np.argmin(values))


def _vacuous(n: int) -> PredicateReport:
    return PredicateReport(False, 0.0, 0j, n, vacuous=True, reason="map is identically zero")


def _jacobian(fz, fzb):
    return np.abs(fz) ** 2 - np.abs(fzb) ** 2


def sense_preserving_report(fmap: PHarmonicMap, grid: SamplingGrid = DEFAULT_GRID) -> PredicateReport:
    """Minimum Jacobian over the grid; passes iff it is positive."""
    z = grid.points()
    if fmap.is_zero():
        return _vacuous(z.size)
    _, fz, fzb = first_jet(fmap, z)
    J = _jacobian(fz, fzb)
    q = _argmin(J)
    passed = bool(J[q] > 0)
    return PredicateReport(passed, float(J[q]), complex(z[q]), z.size,
                           reason="" if passed else "Jacobian not positive")


def _ratio_report(fmap: PHarmonicMap, grid: SamplingGrid, order: int) -> PredicateReport:
    z = grid.points()
    n = z.size
    if fmap.is_zero():
        return _vacuous(n)
    f0 = fmap.bipoly(0j)
    if abs(f0) > ORIGIN_TOL:
        return PredicateReport(False, float("nan"), 0j, 0, reason="f(0)≠0")
    f, fz, fzb = first_jet(fmap, z)
    Df = apply_D(fmap)
    num = Df.bipoly(z)
    if order == 1:
        den = f
        nonzero = np.abs(f) > ZERO_TOL
        what = "f(z)=0"
    else:
        den = num
        num = apply_D(Df).bipoly(z)
        nonzero = (np.abs(f) > ZERO_TOL) & (np.abs(den) > ZERO_TOL)
        what = "f(z)·Df(z)=0"
    with np.errstate(divide="ignore", invalid="ignore"):
        margin = np.where(nonzero, (num / np.where(nonzero, den, 1.0)).real, -np.inf)
    q = _argmin(margin)
    J = _jacobian(fz, fzb)
    reasons = []
    if not nonzero.all():
        reasons.append(what + " at a grid point")
    if not (J > 0).all():
        reasons.append("not sense-preserving")
    if margin[q] <= 0:
        reasons.append("ratio test not positive")
    return PredicateReport(not reasons, float(margin[q]), complex(z[q]), n,
                           reason="; ".join(reasons))


def starlike_report(fmap: PHarmonicMap, grid: SamplingGrid = DEFAULT_GRID) -> PredicateReport:
    """Sampled starlikeness: ``Re(Df/f) > 0``, ``f != 0`` and ``J_f > 0`` off the origin.

    ``min_margin`` is the smallest ``Re(Df/f)``; failure of the other two
    conditions shows up in ``passed`` and ``reason``.
    """
    return _ratio_report(fmap, grid, 1)


def convex_report(fmap: PHarmonicMap, grid: SamplingGrid = DEFAULT_GRID) -> PredicateReport:
    """Sampled convexity: ``Re(D^2 f / Df) > 0`` with ``f Df != 0`` and ``J_f > 0``."""
    return _ratio_report(fmap, grid, 2)


@dataclass(frozen=True)
class IdentityDeviation:
    first_order: float
    second_order: float
    points_used: int
    vacuous: bool

    @property
    def max(self) -> float:
        return max(self.first_order, self.second_order)


def weighted_map(G: HarmonicSeries, lambdas: Sequence[complex]) -> PHarmonicMap:
    """``G * sum_k lambdas[k-1] |z|**(2(k-1))`` as a p-harmonic map."""
    if len(lambdas) < 1:
        raise ValueError("need at least one weight")
    return PHarmonicMap(tuple(G.scaled(complex(lam)) for lam in lambdas))


def ratio_identity_check(G: HarmonicSeries, lambdas: Sequence[complex],
                        grid: SamplingGrid = DEFAULT_GRID, admit_tol: float = 1e-10) -> IdentityDeviation:
    """Max deviation of ``Df/f`` from ``DG/G`` and of ``D^2 f/Df`` from ``D^2 G/DG``.

    Only points where ``|G| * |sum lambda_k |z|^(2(k-1))|`` exceeds
    `admit_tol` are used; the second ratio additionally needs ``DG != 0``.
    """
    f = weighted_map(G, lambdas)
    g = PHarmonicMap.harmonic(G)
    z = grid.points()
    r2 = np.abs(z) ** 2
    weight = sum(complex(lam) * r2 ** k for k, lam in enumerate(lambdas))
    Gz = g(z)
    ok = np.abs(Gz) * np.abs(weight) > admit_tol
    if not ok.any():
        return IdentityDeviation(0.0, 0.0, 0, True)
    z = z[ok]
    Df, DG = apply_D(f), apply_D(g)
    # layer-wise evaluation: the expanded monomial form sums in a different
    # order and loses ~1e-13 relative accuracy where |DG/G| is large
    fv, Dfv, D2fv = f(z), Df(z), apply_D(Df)(z)
    Gv, DGv, D2Gv = Gz[ok], DG(z), apply_D(DG)(z)
    first = float(np.max(np.abs(Dfv / fv - DGv / Gv)))
    ok2 = (np.abs(DGv) * np.abs(weight[ok]) > admit_tol) & (np.abs(DGv) > admit_tol)
    second = float(np.max(np.abs(D2fv[ok2] / Dfv[ok2] - D2Gv[ok2] / DGv[ok2]))) if ok2.any() else 0.0
    return IdentityDeviation(first, second, int(z.size), False)


# name used by the original interface contract
thm1_identity_check = ratio_identity_check


def build_weighted_map(G: HarmonicSeries, p: int) -> PHarmonicMap:
    """``|z|**(2(p-1)) G(z)``: layer ``p`` is ``G``, the others vanish."""
    if p < 1:
        raise ValueError("p must be >= 1")
    zero = HarmonicSeries.zero(G.N)
    return PHarmonicMap(tuple([zero] * (p - 1) + [G]))
