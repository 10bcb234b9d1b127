"""Harmonic layers and p-harmonic maps of the unit disk.

A p-harmonic map is stored as ``p`` harmonic layers; layer ``k`` (1-based)
carries the weight ``|z|**(2*(k-1))``::

    f(z) = sum_k |z|**(2*(k-1)) * layer_k(z)
    layer_k(z) = c0 + sum_n c[n] z**n + sum_n d[n] zbar**n

Notes
-----
``d[n]`` is the literal coefficient of ``zbar**n``. Series written as
``h + conj(g)`` with ``g = sum b_n z**n`` convert via ``d[n] = conj(b_n)``.
Layer ``k`` is the function often written ``G_{p-k+1}``, so the unweighted
layer is ``G_p`` and the heaviest-weighted one is ``G_1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .bipoly import BiPolynomial

UNIMODULAR_TOL = 1e-12


def _as_complex_tuple(values) -> tuple[complex, ...]:
    out = tuple(complex(v) for v in values)
    for v in out:
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ValueError("coefficients must be finite")
    return out


@dataclass(frozen=True)
class HarmonicSeries:
    """Truncated harmonic polynomial ``c0 + sum c_n z^n + sum d_n zbar^n``.

    ``c[n-1]`` and ``d[n-1]`` hold the degree-``n`` coefficients.
    """

    c0: complex = 0j
    c: tuple[complex, ...] = ()
    d: tuple[complex, ...] = ()

    def __post_init__(self):
        c = _as_complex_tuple(self.c)
        d = _as_complex_tuple(self.d)
        if len(c) != len(d):
            raise ValueError(f"c and d must have the same length, got {len(c)} and {len(d)}")
        (c0,) = _as_complex_tuple([self.c0])
        object.__setattr__(self, "c0", c0)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_dicts(cls, c0=0j, c=None, d=None, N=None) -> "HarmonicSeries":
        """Build from sparse ``{n: coefficient}`` maps, e.g. ``from_dicts(c={1: 1})`` for ``z``."""
        c = dict(c or {})
        d = dict(d or {})
        for n in (*c, *d):
            if n < 1:
                raise ValueError(f"degree must be >= 1, got {n}")
        top = max([*c, *d, 0])
        N = top if N is None else N
        if N < top:
            raise ValueError(f"N={N} below highest degree {top}")
        return cls(c0, [c.get(n, 0) for n in range(1, N + 1)],
                   [d.get(n, 0) for n in range(1, N + 1)])

    @classmethod
    def zero(cls, N: int = 0) -> "HarmonicSeries":
        return cls(0j, (0j,) * N, (0j,) * N)

    @property
    def N(self) -> int:
        return len(self.c)

    def coeff_z(self, n: int) -> complex:
        return self.c[n - 1] if 1 <= n <= self.N else 0j

    def coeff_zbar(self, n: int) -> complex:
        return self.d[n - 1] if 1 <= n <= self.N else 0j

    def is_zero(self) -> bool:
        return self.c0 == 0 and not any(self.c) and not any(self.d)

    def scaled(self, lam: complex) -> "HarmonicSeries":
        return HarmonicSeries(lam * self.c0, [lam * v for v in self.c], [lam * v for v in self.d])

    def to_bipoly(self) -> BiPolynomial:
        terms = {(0, 0): self.c0}
        for n in range(1, self.N + 1):
            terms[(n, 0)] = self.c[n - 1]
            terms[(0, n)] = terms.get((0, n), 0j) + self.d[n - 1]
        return BiPolynomial(terms)

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        zb = np.conj(z)
        acc_c = np.zeros_like(z)
        acc_d = np.zeros_like(z)
        # Horner in z and zbar separately
        for n in range(self.N, 0, -1):
            acc_c = (acc_c + self.c[n - 1]) * z
            acc_d = (acc_d + self.d[n - 1]) * zb
        out = self.c0 + acc_c + acc_d
        return complex(out) if out.ndim == 0 else out


@dataclass(frozen=True)
class PHarmonicMap:
    """``sum_k |z|**(2(k-1)) layers[k-1]``; ``p = len(layers)``."""

    layers: tuple[HarmonicSeries, ...] = field(default_factory=tuple)

    def __post_init__(self):
        layers = tuple(self.layers)
        if not layers:
            raise ValueError("a p-harmonic map needs at least one layer (p >= 1)")
        for layer in layers:
            if not isinstance(layer, HarmonicSeries):
                raise TypeError(f"layers must be HarmonicSeries, got {type(layer).__name__}")
        object.__setattr__(self, "layers", layers)

    @classmethod
    def harmonic(cls, series: HarmonicSeries) -> "PHarmonicMap":
        return cls((series,))

    @classmethod
    def from_G(cls, *G: HarmonicSeries) -> "PHarmonicMap":
        """Build from ``G_1, ..., G_p`` where ``G_j`` carries weight ``|z|**(2(p-j))``."""
        return cls(tuple(reversed(G)))

    @property
    def p(self) -> int:
        return len(self.layers)

    def layer(self, k: int) -> HarmonicSeries:
        """Layer ``k`` (1-based), the one multiplied by ``|z|**(2(k-1))``."""
        return self.layers[k - 1]

    def is_zero(self) -> bool:
        return all(layer.is_zero() for layer in self.layers)

    @cached_property
    def bipoly(self) -> BiPolynomial:
        return to_bipoly(self)

    def __call__(self, z):
        return evaluate(self, z)


@dataclass(frozen=True)
class WirtingerJet:
    """Value and Wirtinger derivatives up to order two at one point."""

    f: complex
    f_z: complex
    f_zbar: complex
    f_zz: complex
    f_zbarzbar: complex
    f_zzbar: complex


def evaluate(fmap: PHarmonicMap, z):
    """Evaluate ``fmap`` at a complex scalar or array, layer by layer."""
    z = np.asarray(z, dtype=np.complex128)
    r2 = (z * np.conj(z)).real
    acc = np.zeros_like(z)
    for layer in reversed(fmap.layers):
        acc = acc * r2 + np.asarray(layer(z))
    return complex(acc) if acc.ndim == 0 else acc


def to_bipoly(fmap: PHarmonicMap) -> BiPolynomial:
    """Expand ``|z|**(2(k-1)) = z**(k-1) zbar**(k-1)`` into monomials."""
    total = BiPolynomial()
    for k, layer in enumerate(fmap.layers, start=1):
        weight = BiPolynomial.monomial(k - 1, k - 1)
        total = total + weight * layer.to_bipoly()
    return total


def laplacian(q: BiPolynomial) -> BiPolynomial:
    return q.laplacian()


def wirtinger(fmap: PHarmonicMap, z: complex) -> WirtingerJet:
    q = fmap.bipoly
    qz, qzb = q.d_z(), q.d_zbar()
    return WirtingerJet(
        f=q(z), f_z=qz(z), f_zbar=qzb(z),
        f_zz=qz.d_z()(z), f_zbarzbar=qzb.d_zbar()(z), f_zzbar=qz.d_zbar()(z),
    )


def first_jet(fmap: PHarmonicMap, z):
    """Vectorised ``(f, f_z, f_zbar)`` over an array of points."""
    return fmap.bipoly.jet(z)


def metrics(fmap: PHarmonicMap, z):
    """Return ``(lambda_f, Lambda_f, J_f)``; works on scalars or arrays.

    ``J_f`` is taken as ``|f_z|**2 - |f_zbar|**2``, which equals
    ``lambda_f * Lambda_f`` up to rounding.
    """
    _, fz, fzb = first_jet(fmap, z)
    a, b = np.abs(fz), np.abs(fzb)
    lam, Lam, J = a - b, a + b, a * a - b * b
    if np.ndim(lam) == 0:
        return float(lam), float(Lam), float(J)
    return lam, Lam, J


def _apply_D_layer(s: HarmonicSeries) -> HarmonicSeries:
    return HarmonicSeries(0j, [n * v for n, v in enumerate(s.c, start=1)],
                          [-n * v for n, v in enumerate(s.d, start=1)])


def apply_D(fmap: PHarmonicMap) -> PHarmonicMap:
    """Apply ``D = z d/dz - zbar d/dzbar``.

    ``D`` kills every weight ``|z|**(2(k-1))``, so it acts on each layer
    separately and the result has the same ``p``.
    """
    return PHarmonicMap(tuple(_apply_D_layer(s) for s in fmap.layers))


def _check_unimodular(name, value):
    if abs(abs(value) - 1.0) > UNIMODULAR_TOL:
        raise ValueError(f"{name} must be unimodular, got |{name}| = {abs(value)!r}")


def extremal_series(n: int, M: float, alpha: complex = 1.0, beta: complex = 1.0,
                    K: int = 50) -> HarmonicSeries:
    """Truncated extremal function for the coefficient bound ``|c_n| + |d_n| <= 4M/pi``.

    The function is ``(2 M alpha / pi) Im log((1 + beta z^n) / (1 - beta z^n))``
    expanded as ``(2 M alpha / (i pi)) sum_k [(beta z^n)^(2k-1) - (conj(beta) zbar^n)^(2k-1)] / (2k-1)``
    and cut after ``K`` odd powers. See :func:`extremal_tail_bound`.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if K < 1:
        raise ValueError("K must be >= 1")
    if M < 0:
        raise ValueError("M must be >= 0")
    alpha, beta = complex(alpha), complex(beta)
    _check_unimodular("alpha", alpha)
    _check_unimodular("beta", beta)
    scale = 2 * M * alpha / (1j * math.pi)
    c, d = {}, {}
    for k in range(1, K + 1):
        m = 2 * k - 1
        if scale == 0:
            break
        c[n * m] = scale * beta ** m / m
        d[n * m] = -scale * beta.conjugate() ** m / m
    return HarmonicSeries.from_dicts(0j, c, d, N=n * (2 * K - 1))


def extremal_tail_bound(n: int, M: float, K: int, r: float) -> float:
    """Bound on the omitted part of :func:`extremal_series` at ``|z| <= r < 1``."""
    w = r ** n
    w2 = w * w
    # sum_{k>K} 2 w^(2k-1)/(2k-1) <= 2 w^(2K+1) / ((2K+1)(1-w^2))
    return (2 * M / math.pi) * 2 * w ** (2 * K + 1) / ((2 * K + 1) * (1 - w2))


# name used by the original interface contract
extremal_lemma1 = extremal_series


def sampled_sup(fn, radius: float = 0.999, n_angles: int = 4096) -> float:
    """``max |fn(z)|`` on the circle ``|z| = radius``."""
    t = np.linspace(0.0, 2 * np.pi, n_angles, endpoint=False)
    return float(np.max(np.abs(fn(radius * np.exp(1j * t)))))


@dataclass(frozen=True)
class CoeffBoundReport:
    M: float
    slacks: tuple[float, ...]
    c0_slack: float
    sampled_sup: float
    sup_within_M: bool

    @property
    def min_slack(self) -> float:
        return min((*self.slacks, self.c0_slack))

    def slack(self, n: int) -> float:
        return self.slacks[n - 1]


def coeff_bound_check(s: HarmonicSeries, M: float, radius: float = 0.999) -> CoeffBoundReport:
    """Per-degree slack ``4M/pi - (|c_n| + |d_n|)`` and ``M - |c0|``.

    The premise ``sup |s| <= M`` is sampled and reported, never enforced.
    """
    bound = 4 * M / math.pi
    slacks = tuple(bound - (abs(cn) + abs(dn)) for cn, dn in zip(s.c, s.d))
    sup = sampled_sup(s, radius)
    return CoeffBoundReport(M=M, slacks=slacks, c0_slack=M - abs(s.c0),
                            sampled_sup=sup, sup_within_M=sup <= M * (1 + 1e-12))


def heinz_bounds(r):
    """Schwarz-type bounds for a harmonic self-map of the disk fixing 0.

    Returns ``((4/pi) arctan r, (4/pi) / (1 - r**2))``: upper bounds for
    ``|f(z)|`` and ``Lambda_f(z)`` at ``|z| = r``.
    """
    r = np.asarray(r, dtype=float)
    return 4 / np.pi * np.arctan(r), 4 / np.pi / (1 - r * r)


def taylor_map(coeffs: Sequence[complex]) -> PHarmonicMap:
    """Harmonic map ``sum coeffs[n-1] z**n`` (analytic, no constant)."""
    return PHarmonicMap.harmonic(HarmonicSeries.from_dicts(c={n: v for n, v in enumerate(coeffs, 1)}))
