"""Pure numpy implementations of the point-evaluation kernels.

These are the reference versions; ``_ckernels`` must agree with them to
rounding.
"""
import numpy as np


def _power_tables(z, max_i, max_j):
    zc = np.conj(z)
    zp = z[:, None] ** np.arange(max_i + 1)
    zbp = zc[:, None] ** np.arange(max_j + 1)
    return zp, zbp


def eval_bipoly(i_exp, j_exp, coef, z):
    """Evaluate ``sum coef[t] z**i_exp[t] conj(z)**j_exp[t]`` at every point of `z`."""
    z = np.ascontiguousarray(z, dtype=np.complex128)
    if len(coef) == 0:
        return np.zeros(z.shape, dtype=np.complex128)
    zp, zbp = _power_tables(z, int(i_exp.max()), int(j_exp.max()))
    return (zp[:, i_exp] * zbp[:, j_exp]) @ coef


def eval_jet(i_exp, j_exp, coef, z):
    """Return ``(f, f_z, f_zbar)`` of a bipolynomial at every point of `z`."""
    z = np.ascontiguousarray(z, dtype=np.complex128)
    n = z.shape[0]
    if len(coef) == 0:
        zero = np.zeros(n, dtype=np.complex128)
        return zero, zero.copy(), zero.copy()
    zp, zbp = _power_tables(z, int(i_exp.max()), int(j_exp.max()))
    im1 = np.maximum(i_exp - 1, 0)
    jm1 = np.maximum(j_exp - 1, 0)
    f = (zp[:, i_exp] * zbp[:, j_exp]) @ coef
    fz = (zp[:, im1] * zbp[:, j_exp]) @ (coef * i_exp)
    fzb = (zp[:, i_exp] * zbp[:, jm1]) @ (coef * j_exp)
    return f, fz, fzb
