"""Bloch seminorm: the ``phi_p`` upper bound and sampled estimates.

For a p-harmonic map whose layers are bounded by ``M``,
``B_f <= 2 M max_{0<y<1} phi_p(y)`` with
``phi_p(y) = (2/pi) sum_{k=1}^p y^(2(k-1)) + y (1 - y^2) sum_{k=2}^p (k-1) y^(2(k-2))``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import SamplingGrid
from .harmonic import PHarmonicMap, first_jet

SCAN_POINTS = 10_000
P2_CLOSED_FORM_PHI = 2 / (27 * math.pi ** 3) * (8 + 36 * math.pi ** 2 + (4 + 3 * math.pi ** 2) ** 1.5)
P2_CLOSED_FORM_Y = (2 + math.sqrt(4 + 3 * math.pi ** 2)) / (3 * math.pi)
P2_PUBLISHED_BOUND = 30.7682


class NonuniqueCriticalPoint(RuntimeError):
    pass


def _check(p, y):
    if int(p) != p or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")
    y = np.asarray(y, dtype=float)
    if np.any(y < 0) or np.any(y > 1):
        raise ValueError("y must lie in [0, 1]")
    return y


def _out(v):
    return float(v) if np.ndim(v) == 0 else v


def phi(p: int, y):
    y = _check(p, y)
    first = sum(y ** (2 * (k - 1)) for k in range(1, p + 1))
    second = sum((k - 1) * y ** (2 * (k - 2)) for k in range(2, p + 1))
    return _out(2 / math.pi * first + y * (1 - y * y) * second)


def phi_prime(p: int, y):
    """Term-wise derivative of :func:`phi` in ``y``."""
    y = _check(p, y)
    d_first = sum(2 * (k - 1) * y ** (2 * k - 3) for k in range(2, p + 1))
    # d/dy [(k-1) (y^(2k-3) - y^(2k-1))]
    d_second = sum((k - 1) * ((2 * k - 3) * y ** (2 * k - 4) - (2 * k - 1) * y ** (2 * k - 2))
                   for k in range(2, p + 1))
    return _out(2 / math.pi * d_first + d_second + 0 * y)


def critical_point(p: int, tol: float = 1e-15) -> float | None:
    """Unique maximiser of ``phi_p`` in ``(0, 1)``; ``None`` for ``p = 1``
    where ``phi_1 = 2/pi`` is constant."""
    _check(p, 0.0)
    if p == 1:
        return None
    y = np.linspace(0, 1, SCAN_POINTS + 1)[1:-1]
    d = phi_prime(p, y)
    s = np.sign(d)
    changes = np.nonzero(s[:-1] != s[1:])[0]
    if len(changes) != 1 or not (s[changes[0]] > 0 > s[changes[0] + 1]):
        raise NonuniqueCriticalPoint(f"phi_{p}' has {len(changes)} sign changes on (0, 1)")
    lo, hi = float(y[changes[0]]), float(y[changes[0] + 1])
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if phi_prime(p, mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class BlochBound:
    p: int
    M: float
    y_star: float | None
    phi_at_star: float
    bound: float

    @property
    def degenerate(self) -> bool:
        return self.y_star is None


def bloch_upper_bound(p: int, M: float) -> BlochBound:
    if not M > 0:
        raise ValueError(f"M must be > 0, got {M!r}")
    y = critical_point(p)
    value = 2 / math.pi if y is None else phi(p, y)
    return BlochBound(p, M, y, value, 2 * M * value)


@dataclass(frozen=True)
class BlochEstimate:
    sup_value: float
    argmax_point: complex
    grid: dict


def bloch_grid(p: int, n_radii: int = 128, angles_per_ring: int = 256,
               r_max: float = 0.999) -> SamplingGrid:
    """Radii clustered around the predicted maximiser ``y*`` (uniform for ``p = 1``)."""
    y = critical_point(p) if p >= 2 else None
    if y is None:
        return SamplingGrid.uniform(n_radii, angles_per_ring, r_max)
    u = np.linspace(-1, 1, n_radii)
    lo = r_max / (4 * n_radii)
    radii = np.where(u < 0, y + (y - lo) * u ** 3, y + (r_max - y) * u ** 3)
    return SamplingGrid(tuple(np.unique(radii)), angles_per_ring, r_max)


def bloch_seminorm_estimate(fmap: PHarmonicMap, grid: SamplingGrid | None = None) -> BlochEstimate:
    """``max (1 - |z|^2) Lambda_f(z)`` over the grid.

    Ties go to the smallest radius, then the smallest angle.
    """
    grid = bloch_grid(fmap.p) if grid is None else grid
    z = grid.points()
    _, fz, fzb = first_jet(fmap, z)
    vals = (1 - np.abs(z) ** 2) * (np.abs(fz) + np.abs(fzb))
    k = int(np.argmax(vals))
    return BlochEstimate(float(vals[k]), complex(z[k]), grid.describe())


def lower_side(fmap: PHarmonicMap, z):
    """``(1 - |z|^2) |lambda_f(z)|``; never exceeds the seminorm."""
    _, fz, fzb = first_jet(fmap, z)
    return (1 - np.abs(z) ** 2) * np.abs(np.abs(fz) - np.abs(fzb))


def layer_sum_derivatives(fmap: PHarmonicMap, z):
    """``f_z`` and ``f_zbar`` assembled from the layers by the product rule.

    Independent of the monomial route in :func:`first_jet`; used to cross-check it.
    """
    z = np.asarray(z, dtype=np.complex128)
    zb = np.conj(z)
    r2 = (z * zb).real
    fz = np.zeros_like(z)
    fzb = np.zeros_like(z)
    for k, layer in enumerate(fmap.layers, start=1):
        G = layer(z)
        Gz = sum(n * c * z ** (n - 1) for n, c in enumerate(layer.c, start=1)) + 0 * z
        Gzb = sum(n * d * zb ** (n - 1) for n, d in enumerate(layer.d, start=1)) + 0 * z
        w = r2 ** (k - 1)
        dw = (k - 1) * r2 ** (k - 2) if k >= 2 else 0.0
        fz = fz + w * Gz + dw * zb * G
        fzb = fzb + w * Gzb + dw * z * G
    return fz, fzb


def hyperbolic_distance(z: complex, w: complex) -> float:
    s = abs((z - w) / (1 - np.conj(z) * w))
    return float(0.5 * math.log((1 + s) / (1 - s)))


def hyperbolic_quotient(fmap: PHarmonicMap, z: complex, w: complex) -> float:
    """``|f(z) - f(w)| / rho(z, w)`` with ``rho`` the hyperbolic distance."""
    if z == w:
        raise ValueError("z and w must differ")
    if abs(z) >= 1 or abs(w) >= 1:
        raise ValueError("points must lie in the open unit disk")
    return abs(fmap(z) - fmap(w)) / hyperbolic_distance(z, w)
