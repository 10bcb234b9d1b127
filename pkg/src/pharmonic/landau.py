"""Landau-type radii for ``D f`` with ``f`` p-harmonic and bounded by ``M``.

Two radius equations are solved by bisection. Both left-hand sides start at
``lambda0(M) > 0`` for ``rho = 0`` and decrease to ``-inf`` as ``rho -> 1``,
so the root in ``(0, 1)`` is unique.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .harmonic import PHarmonicMap, first_jet, sampled_sup

PI = math.pi
SQRT17 = math.sqrt(17.0)

M0 = PI / (2 * (2 * PI ** 2 - 16) ** 0.25)
M1 = PI / math.sqrt(PI ** 2 - 8)
R0 = math.sqrt((5 - SQRT17) / 2)
S0 = (SQRT17 - 1) / (SQRT17 - 3) * math.sqrt(2 / (5 - SQRT17))

BRACKET_EPS = 1e-9
MAX_ITER = 200


class Theorem(enum.Enum):
    THM41 = "41"
    THM42 = "42"

    @classmethod
    def parse(cls, value) -> "Theorem":
        if isinstance(value, cls):
            return value
        key = str(value).strip().lower().removeprefix("thm")
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown theorem {value!r}; expected 41 or 42")


class NoBracketError(RuntimeError):
    pass


@dataclass(frozen=True)
class LandauConstants:
    M0: float
    M1: float
    s0: float
    r0: float


@dataclass(frozen=True)
class LandauResult:
    theorem: Theorem
    M: float
    p: int
    rho: float
    R: float
    residual: float
    iterations: int


def q(x):
    """``(2 - x^2) / ((1 - x^2) x)`` on ``(0, 1)``; its minimum is ``s0``."""
    return (2 - x * x) / ((1 - x * x) * x)


def constants() -> LandauConstants:
    return LandauConstants(M0=M0, M1=M1, s0=S0, r0=R0)


def _check_M(M):
    if not M >= 1:
        raise ValueError(f"M must be ≥ 1, got {M!r}")


def _check_p(p):
    if int(p) != p or p < 1:
        raise ValueError(f"p must be a positive integer, got {p!r}")


def _check_rho(rho):
    if not 0 <= rho < 1:
        raise ValueError(f"rho must lie in [0, 1), got {rho!r}")


def lambda0(M: float) -> float:
    """Lower bound for ``lambda_f(0)`` of a normalised harmonic map bounded by ``M``."""
    _check_M(M)
    if M <= M0:
        return math.sqrt(2) / (math.sqrt(M * M - 1) + math.sqrt(M * M + 1))
    return PI / (4 * M)


def T_of_M(M: float) -> float:
    """Bound on ``|a_n| + |b_n|`` for ``n >= 2``."""
    _check_M(M)
    if M <= M1:
        return math.sqrt(2 * M * M - 2)
    return 4 * M / PI


def _arctan_term(M, rho, factor=16):
    return factor * M / PI ** 2 * S0 * math.atan(rho)


def p_thm41(rho: float, M: float, p: int) -> float:
    _check_rho(rho)
    _check_M(M)
    _check_p(p)
    T = T_of_M(M)
    s1 = sum((2 * k - 1) * rho ** (2 * (k - 1)) for k in range(2, p + 1))
    s2 = sum(rho ** (2 * k - 1) for k in range(1, p + 1))
    return (lambda0(M) - T / (1 - rho) ** 2 * s1 - 2 * T * s2 / (1 - rho) ** 3
            - _arctan_term(M, rho))


def p_thm42(rho: float, M: float) -> float:
    _check_rho(rho)
    _check_M(M)
    return lambda0(M) - _arctan_term(M, rho, 48) - 2 * T_of_M(M) * rho / (1 - rho) ** 3


def _bisect(fn, tol):
    lo, hi = BRACKET_EPS, 1 - BRACKET_EPS
    if fn(lo) <= 0:
        raise NoBracketError("no bracket: equation is not positive near 0")
    if fn(hi) >= 0:
        raise NoBracketError("no bracket: equation is not negative near 1")
    it = 0
    while hi - lo > tol and it < MAX_ITER:
        mid = 0.5 * (lo + hi)
        if fn(mid) > 0:
            lo = mid
        else:
            hi = mid
        it += 1
    rho = 0.5 * (lo + hi)
    return rho, fn(rho), it


def solve_thm41(M: float, p: int, tol: float = 1e-12) -> LandauResult:
    """Univalence radius ``rho`` and covered-disk radius ``R`` for the layered class."""
    _check_M(M)
    _check_p(p)
    rho, res, it = _bisect(lambda r: p_thm41(r, M, p), tol)
    T = T_of_M(M)
    inner = (lambda0(M)
             - sum(T * rho ** (2 * (k - 1)) / (1 - rho) ** 2 for k in range(2, p + 1))
             - _arctan_term(M, rho))
    return LandauResult(Theorem.THM41, M, p, rho, rho * inner, res, it)


def solve_thm42(M: float, p: int, tol: float = 1e-12) -> LandauResult:
    """Radii for ``f = |z|^(2(p-1)) G``; ``rho`` does not depend on ``p``."""
    _check_M(M)
    _check_p(p)
    rho, res, it = _bisect(lambda r: p_thm42(r, M), tol)
    R = rho ** (2 * p - 1) * (lambda0(M) - _arctan_term(M, rho))
    return LandauResult(Theorem.THM42, M, p, rho, R, res, it)


def solve(theorem, M: float, p: int, tol: float = 1e-12) -> LandauResult:
    theorem = Theorem.parse(theorem)
    return (solve_thm41 if theorem is Theorem.THM41 else solve_thm42)(M, p, tol)


def generate_table(theorem, Ms: Iterable[float], ps: Iterable[int],
                   tol: float = 1e-12) -> list[LandauResult]:
    """Solve every ``(M, p)`` pair, ``p`` outer and ``M`` inner (row order of the
    published tables)."""
    Ms, ps = list(Ms), list(ps)
    return [solve(theorem, M, p, tol) for p in ps for M in Ms]


def format_rows(rows: Iterable[LandauResult], digits: int = 6) -> str:
    lines = ["M,p,rho,R"]
    for r in rows:
        lines.append(f"{r.M:.{digits}g},{r.p},{r.rho:.{digits}g},{r.R:.{digits}g}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class HypothesisReport:
    f0_zero: bool
    top_layer_zero_at_origin: bool
    jacobian_at_origin: float
    jacobian_normalised: bool
    layer_sups: tuple[float, ...]
    layers_bounded: bool
    layers_harmonic: bool = True

    @property
    def passed(self) -> bool:
        return (self.f0_zero and self.top_layer_zero_at_origin and self.jacobian_normalised
                and self.layers_bounded and self.layers_harmonic)


def validate_thm41_hypotheses(fmap: PHarmonicMap, M: float, radius: float = 0.999,
                              tol: float = 1e-9) -> HypothesisReport:
    """Check the normalisation the layered radius result assumes.

    Layers are harmonic by construction. ``f(0) = 0``, the unweighted layer
    vanishing at 0 and ``J_f(0) = 1`` are checked directly; ``|layer| <= M``
    is sampled on ``|z| = radius``.
    """
    f0 = fmap.bipoly(0j)
    top0 = fmap.layer(1)(0j)
    _, fz, fzb = first_jet(fmap, 0j)
    J0 = abs(fz) ** 2 - abs(fzb) ** 2
    sups = tuple(sampled_sup(layer, radius) for layer in fmap.layers)
    return HypothesisReport(
        f0_zero=abs(f0) <= tol,
        top_layer_zero_at_origin=abs(top0) <= tol,
        jacobian_at_origin=float(J0),
        jacobian_normalised=abs(J0 - 1) <= tol,
        layer_sups=sups,
        layers_bounded=bool(np.all(np.asarray(sups) <= M * (1 + 1e-12))),
    )
