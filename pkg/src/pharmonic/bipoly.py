"""Sparse polynomials in ``z`` and ``conj(z)``.

A :class:`BiPolynomial` stores ``sum e[i, j] z**i zbar**j`` as a map from
exponent pairs to complex coefficients. Differential operators act on
monomials exactly, so kernel checks like ``laplacian**p == 0`` are
structural rather than numerical.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Mapping

import numpy as np

from . import kernels

Exponent = tuple[int, int]


def _canonical(terms) -> dict[Exponent, complex]:
    out = {}
    for (i, j), c in terms:
        if i < 0 or j < 0:
            raise ValueError(f"negative exponent ({i}, {j})")
        c = complex(c)
        if not np.isfinite(c.real) or not np.isfinite(c.imag):
            raise ValueError(f"non-finite coefficient at ({i}, {j})")
        key = (int(i), int(j))
        out[key] = out.get(key, 0j) + c
    return {k: v for k, v in out.items() if v != 0}


@dataclass(frozen=True, eq=False)
class BiPolynomial:
    """Canonical sparse bipolynomial; zero coefficients are never stored."""

    terms: Mapping[Exponent, complex] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", MappingProxyType(_canonical(self.terms.items())))

    @classmethod
    def monomial(cls, i: int, j: int, coef: complex = 1.0) -> "BiPolynomial":
        return cls({(i, j): coef})

    @classmethod
    def zero(cls) -> "BiPolynomial":
        return cls()

    # -- algebra ---------------------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return BiPolynomial(dict(_canonical([*self.terms.items(), *other.terms.items()])))

    def __neg__(self):
        return BiPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiPolynomial):
            prod = [((i1 + i2, j1 + j2), c1 * c2)
                    for (i1, j1), c1 in self.terms.items()
                    for (i2, j2), c2 in other.terms.items()]
            return BiPolynomial(_canonical(prod))
        if isinstance(other, (int, float, complex, np.number)):
            return BiPolynomial({k: v * other for k, v in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        inner = ", ".join(f"{k}: {v!r}" for k, v in sorted(self.terms.items()))
        return f"BiPolynomial({{{inner}}})"

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, i: int, j: int) -> complex:
        return self.terms.get((i, j), 0j)

    @property
    def degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    # -- calculus --------------------------------------------------------
    def d_z(self) -> "BiPolynomial":
        return BiPolynomial({(i - 1, j): i * c for (i, j), c in self.terms.items() if i > 0})

    def d_zbar(self) -> "BiPolynomial":
        return BiPolynomial({(i, j - 1): j * c for (i, j), c in self.terms.items() if j > 0})

    def laplacian(self) -> "BiPolynomial":
        """``4 d^2/dz dzbar`` term by term."""
        return BiPolynomial({(i - 1, j - 1): 4 * i * j * c
                             for (i, j), c in self.terms.items() if i > 0 and j > 0})

    def rotational(self) -> "BiPolynomial":
        """``z d/dz - zbar d/dzbar``; multiplies ``e[i, j]`` by ``i - j``."""
        return BiPolynomial({(i, j): (i - j) * c for (i, j), c in self.terms.items()})

    # -- evaluation ------------------------------------------------------
    @cached_property
    def _arrays(self):
        keys = sorted(self.terms)
        i_exp = np.array([k[0] for k in keys], dtype=np.int64)
        j_exp = np.array([k[1] for k in keys], dtype=np.int64)
        coef = np.array([self.terms[k] for k in keys], dtype=np.complex128)
        return i_exp, j_exp, coef

    def __call__(self, z):
        """Evaluate at a complex scalar or array."""
        arr = np.asarray(z, dtype=np.complex128)
        out = kernels.eval_bipoly(*self._arrays, arr.ravel())
        if arr.ndim == 0:
            return complex(out[0])
        return out.reshape(arr.shape)

    def jet(self, z):
        """Values of ``(f, f_z, f_zbar)`` at a scalar or array of points."""
        arr = np.asarray(z, dtype=np.complex128)
        f, fz, fzb = kernels.eval_jet(*self._arrays, arr.ravel())
        if arr.ndim == 0:
            return complex(f[0]), complex(fz[0]), complex(fzb[0])
        return f.reshape(arr.shape), fz.reshape(arr.shape), fzb.reshape(arr.shape)


def laplacian(q: BiPolynomial) -> BiPolynomial:
    return q.laplacian()


def laplacian_power(q: BiPolynomial, n: int) -> BiPolynomial:
    for _ in range(n):
        if q.is_zero():
            break
        q = q.laplacian()
    return q
