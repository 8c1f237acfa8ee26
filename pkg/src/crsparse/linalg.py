"""Dense symmetric linear algebra: eigendecomposition, norms, the
pseudo-inverse square root, and the Laplacian condition number.

Matrices are plain ``numpy.ndarray`` objects. ``as_symmetric`` is the
validating constructor for the symmetric case.
"""
from typing import NamedTuple

import numpy as np

from .errors import (
    DegenerateLaplacian,
    DisconnectedGraph,
    InvalidMatrix,
    NotPSD,
    ShapeError,
)


class Spectrum(NamedTuple):
    eigenvalues: np.ndarray  # ascending
    eigenvectors: np.ndarray  # columns, orthonormal


def _finite(M):
    M = np.asarray(M, dtype=np.float64)
    if not np.all(np.isfinite(M)):
        raise InvalidMatrix("matrix has non-finite entries")
    return M


def as_matrix(M):
    M = _finite(M)
    if M.ndim != 2:
        raise ShapeError(f"expected a 2-d matrix, got shape {M.shape}")
    return M


def as_symmetric(M, atol=None):
    """Validate ``M`` as square and symmetric, returning an exactly symmetric copy.

    Asymmetry beyond ``atol`` (default ``1e-10 * max|M|``) raises InvalidMatrix;
    anything smaller is removed by averaging with the transpose.
    """
    M = as_matrix(M)
    if M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise ShapeError(f"expected a non-empty square matrix, got shape {M.shape}")
    scale = np.abs(M).max(initial=0.0)
    if atol is None:
        atol = 1e-10 * max(scale, 1.0)
    if np.abs(M - M.T).max(initial=0.0) > atol:
        raise InvalidMatrix("matrix is not symmetric")
    return (M + M.T) / 2


def default_tol(n):
    return n * 2.0**-50


def eig_sym(M):
    """Eigendecomposition of a symmetric matrix, eigenvalues ascending.

    Uses LAPACK's ``syevd`` through ``numpy.linalg.eigh``, which is
    deterministic for a fixed input.
    """
    M = as_symmetric(M)
    lam, V = np.linalg.eigh(M)
    return Spectrum(lam, V)


def spectral_norm(M):
    M = as_matrix(M)
    if M.size == 0:
        return 0.0
    return float(np.linalg.norm(M, 2))


def frobenius_norm(M):
    M = as_matrix(M)
    return float(np.sqrt(np.sum(M * M)))


def _null_threshold(lam, tol):
    lam_max = max(float(np.max(np.abs(lam))), 0.0)
    return tol * lam_max


def pseudo_inv_sqrt(L, tol=None):
    """Square root of the Moore-Penrose pseudo-inverse of a PSD matrix.

    Eigenvalues at or below ``tol * lambda_max`` are treated as zero and map
    to zero; the rest map to ``1/sqrt(lambda)``. Default ``tol = n * 2**-50``.
    """
    lam, V = eig_sym(L)
    if tol is None:
        tol = default_tol(len(lam))
    cut = _null_threshold(lam, tol)
    if lam[0] < -cut:
        raise NotPSD(f"smallest eigenvalue {lam[0]:.3e} below -{cut:.3e}")
    f = np.zeros_like(lam)
    keep = lam > cut
    f[keep] = 1.0 / np.sqrt(lam[keep])
    out = (V * f) @ V.T
    return (out + out.T) / 2


def null_dimension(L, tol=None):
    lam = np.linalg.eigvalsh(as_symmetric(L))
    if tol is None:
        tol = default_tol(len(lam))
    return int(np.count_nonzero(lam <= _null_threshold(lam, tol)))


def condition_number_laplacian(L, tol=None):
    """lambda_max / lambda_2 for the Laplacian of a connected graph.

    lambda_2 is the smallest eigenvalue above the null threshold; exactly one
    eigenvalue may fall below it.
    """
    lam = np.linalg.eigvalsh(as_symmetric(L))
    if tol is None:
        tol = default_tol(len(lam))
    cut = _null_threshold(lam, tol)
    nonnull = lam[lam > cut]
    if nonnull.size == 0:
        raise DegenerateLaplacian("all eigenvalues are in the null space")
    n_null = lam.size - nonnull.size
    if n_null > 1:
        raise DisconnectedGraph(f"Laplacian has {n_null} null eigenvalues")
    return float(nonnull[-1] / nonnull[0])
