"""Regions of variability for the normalised p-harmonic class.

The class holds p-harmonic self-maps of the disk whose ``z**(p-1)`` Taylor
coefficient is 1. For ``p >= 2`` it contains the Möbius-type family
``f_a(z) = (z**(p-1) - a) / (1 - a zbar**(p-1))``, and ``a -> f_a(z0)`` is
a disk automorphism, so the values at ``z0`` fill the closed disk.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from .harmonic import HarmonicSeries, PHarmonicMap, sampled_sup

DEFAULT_EPS = 1e-3


@dataclass(frozen=True)
class MobiusFamilyMember:
    p: int
    a: complex
    K: int
    truncated: PHarmonicMap
    tail_bound: float

    def closed_form(self, z):
        z = np.asarray(z, dtype=np.complex128)
        w = z ** (self.p - 1)
        out = (w - self.a) / (1 - self.a * np.conj(w))
        return complex(out) if out.ndim == 0 else out

    def __call__(self, z):
        return self.truncated(z)


def mobius_member(p: int, a: complex, K: int = 60, eps: float = DEFAULT_EPS) -> MobiusFamilyMember:
    """Closed form plus a layered truncation after ``K`` geometric terms.

    Layer 1 is ``z^(p-1) - a - sum_{n=1}^K a^(n+1) zbar^((p-1)n)`` and layer
    ``p`` (weight ``|z|^(2(p-1))``) is ``sum_{n=1}^K a^n zbar^((n-1)(p-1))``.
    On ``|z| <= 1`` the omitted part is at most ``|a|^(K+1) / (1 - |a|)``.
    """
    if int(p) != p or p < 2:
        raise ValueError("p must be an integer >= 2")
    if K < 1:
        raise ValueError("K must be >= 1")
    a = complex(a)
    if abs(a) > 1 - eps:
        raise ValueError(f"|a| = {abs(a)!r} exceeds 1 - eps = {1 - eps!r}; truncation error unbounded")
    m = p - 1
    N = m * K
    base_c = {m: 1.0}
    base_d = {}
    for n in range(1, K + 1):
        base_d[m * n] = base_d.get(m * n, 0j) - a ** (n + 1)
    top_c0 = 0j
    top_d = {}
    for n in range(1, K + 1):
        deg = (n - 1) * m
        if deg == 0:
            top_c0 += a ** n
        else:
            top_d[deg] = top_d.get(deg, 0j) + a ** n
    base = HarmonicSeries.from_dicts(-a, base_c, base_d, N=N)
    top = HarmonicSeries.from_dicts(top_c0, None, top_d, N=N)
    layers = [base] + [HarmonicSeries.zero(N)] * (p - 2) + [top]
    tail = abs(a) ** (K + 1) / (1 - abs(a))
    return MobiusFamilyMember(p, a, K, PHarmonicMap(tuple(layers)), tail)


def normalization_check(fmap: PHarmonicMap, p: int) -> float:
    """``|e (p-1)! - (p-1)!|`` with ``e`` the ``z**(p-1)`` coefficient."""
    fact = math.factorial(p - 1)
    e = fmap.bipoly.coefficient(p - 1, 0)
    return abs(e * fact - fact)


@dataclass(frozen=True)
class RegionSample:
    z0: complex
    p: int
    points: np.ndarray
    coverage_radius: float

    def max_modulus(self) -> float:
        return float(np.max(np.abs(self.points)))


def parameter_grid(n_samples: int, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Polar grid on ``|a| <= 1 - eps``, radius-major.

    Ring ``i`` gets a number of angles proportional to its radius so the
    spacing is roughly even; the centre is always included.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be positive")
    n_rings = max(1, int(round(math.sqrt(n_samples / math.pi))))
    radii = (1 - eps) * np.arange(1, n_rings + 1) / n_rings
    weights = radii / radii.sum()
    counts = np.maximum(1, np.floor(weights * (n_samples - 1)).astype(int))
    # hand the rounding remainder to the outer rings
    short = (n_samples - 1) - counts.sum()
    for i in range(int(short)):
        counts[-1 - (i % n_rings)] += 1
    pts = [np.zeros(1, dtype=np.complex128)]
    for r, c in zip(radii, counts):
        pts.append(r * np.exp(2j * np.pi * np.arange(c) / c))
    return np.concatenate(pts)


def mobius_values(p: int, z0: complex, a):
    w = complex(z0) ** (p - 1)
    a = np.asarray(a, dtype=np.complex128)
    return (w - a) / (1 - a * np.conj(w))


def coverage_radius(points: np.ndarray, target_radius: float = 0.99, n_side: int = 201) -> float:
    """Largest distance from a target in the ``target_radius`` disk to the nearest point."""
    x = np.linspace(-target_radius, target_radius, n_side)
    X, Y = np.meshgrid(x, x)
    t = (X + 1j * Y).ravel()
    t = t[np.abs(t) <= target_radius]
    # boundary ring so the rim is sampled as densely as the interior
    ring = target_radius * np.exp(2j * np.pi * np.arange(4 * n_side) / (4 * n_side))
    t = np.concatenate([t, ring])
    tree = cKDTree(np.column_stack([points.real, points.imag]))
    dist, _ = tree.query(np.column_stack([t.real, t.imag]))
    return float(dist.max())


def region_sample(p: int, z0: complex, n_samples: int = 10_000,
                  eps: float = DEFAULT_EPS) -> RegionSample:
    if int(p) != p or p < 2:
        raise ValueError("p must be an integer >= 2 (the p = 1 region is the single point 1)")
    if abs(z0) >= 1:
        raise ValueError("|z0| must be < 1")
    a = parameter_grid(n_samples, eps)
    pts = mobius_values(p, z0, a)
    return RegionSample(complex(z0), p, pts, coverage_radius(pts))


def parseval_sum(s: HarmonicSeries) -> float:
    """``|c0|^2 + sum (|c_n|^2 + |d_n|^2)``: the boundary mean of ``|s|^2``."""
    return abs(s.c0) ** 2 + sum(abs(v) ** 2 for v in s.c) + sum(abs(v) ** 2 for v in s.d)


@dataclass(frozen=True)
class RigidityReport:
    sampled_sup: float
    parseval: float
    premise_holds: bool
    is_identity: bool
    violation: tuple[str, int] | None
    upheld: bool


def cartan_rigidity_check(s: HarmonicSeries, radius: float = 0.9999, n_angles: int = 8192,
                          tol: float = 1e-9) -> RigidityReport:
    """A harmonic self-map of the disk with ``f_z(0) = 1`` must be ``z``.

    Reports whether the premise holds (sampled ``sup |s| <= 1``, Parseval sum
    ``<= 1`` and ``c_1 = 1``), names the first coefficient other than ``c_1``
    that is nonzero, and whether the conclusion is upheld: either the premise
    fails or ``s`` is the identity.
    """
    sup = sampled_sup(s, radius, n_angles)
    ps = parseval_sum(s)
    violation = None
    if abs(s.c0) > tol:
        violation = ("const", 0)
    else:
        for n in range(1, s.N + 1):
            if n != 1 and abs(s.coeff_z(n)) > tol:
                violation = ("z", n)
                break
            if abs(s.coeff_zbar(n)) > tol:
                violation = ("zbar", n)
                break
    c1_ok = abs(s.coeff_z(1) - 1) <= tol
    premise = sup <= 1 + tol and ps <= 1 + tol and c1_ok
    is_identity = violation is None and c1_ok
    return RigidityReport(sup, ps, premise, is_identity, violation,
                          upheld=(not premise) or is_identity)


def in_class(fmap: PHarmonicMap, p: int, radius: float = 0.999, tol: float = 1e-9) -> bool:
    """Sampled membership test: normalisation plus ``|f| <= 1``."""
    return normalization_check(fmap, p) <= tol and sampled_sup(fmap, radius) <= 1 + tol
