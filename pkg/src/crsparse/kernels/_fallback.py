"""Pure numpy versions of the compiled kernels in ``_core.pyx``."""
import numpy as np


def sample_inverse_cdf(cdf, u):
    cdf = np.asarray(cdf, dtype=np.float64)
    if cdf.size == 0:
        raise ValueError("empty cdf")
    idx = np.searchsorted(cdf, np.asarray(u, dtype=np.float64) * cdf[-1], side="right")
    return np.minimum(idx, cdf.size - 1).astype(np.int64)


def count_draws(draws, size):
    return np.bincount(draws, minlength=size).astype(np.int64)


def accumulate_laplacian(n, u, v, w):
    L = np.zeros((n, n), dtype=np.float64)
    np.add.at(L, (u, u), w)
    np.add.at(L, (v, v), w)
    np.add.at(L, (u, v), -w)
    np.add.at(L, (v, u), -w)
    return L


def outer_accumulate(At, B, idx, scale):
    # one BLAS call instead of a rank-1 loop; rounding differs from _core
    return (At[idx].T * scale) @ B[idx]
