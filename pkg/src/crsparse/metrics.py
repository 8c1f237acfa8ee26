"""Spectral error measures between a Laplacian and its sketch."""
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from .errors import InvalidParameter, NullQuadraticForm, ShapeError
from .linalg import (
    as_symmetric,
    condition_number_laplacian,
    default_tol,
    frobenius_norm,
    null_dimension,
    pseudo_inv_sqrt,
)


@dataclass(frozen=True)
class ErrorReport:
    delta_frobenius: float
    delta_spectral: float
    isotropic_error: float
    additive_bound_frobenius: Optional[float] = None
    null_space_mismatch: bool = False

    def as_dict(self):
        return asdict(self)


def _pair(L, Ltil):
    L, Ltil = as_symmetric(L), as_symmetric(Ltil)
    if L.shape != Ltil.shape:
        raise ShapeError(f"shapes differ: {L.shape} vs {Ltil.shape}")
    return L, Ltil


def additive_error(L, Ltil):
    """Smallest eps with ``|x^T (L - Ltil) x| <= eps ||x||^2`` for all x.

    For symmetric ``Delta`` this is its spectral radius.
    """
    L, Ltil = _pair(L, Ltil)
    lam = np.linalg.eigvalsh(L - Ltil)
    return float(max(abs(lam[0]), abs(lam[-1])))


def check_additive_certificate(L, Ltil, W, eps):
    """True iff the sketch is an additive ``2 W eps`` sparsifier.

    ``||Delta||_F <= 2 W eps`` is sufficient and is checked first.
    """
    if not (W > 0 and eps > 0):
        raise InvalidParameter("W and eps must be positive")
    L, Ltil = _pair(L, Ltil)
    bound = 2.0 * W * eps
    if frobenius_norm(L - Ltil) <= bound:
        return True
    return additive_error(L, Ltil) <= bound


def isotropic_error(L, Ltil, tol=None, inv_sqrt=None):
    """``||L^{-1/2} (L - Ltil) L^{-1/2}||_2`` with ``L^{-1/2}`` the pseudo-inverse root.

    The congruence only sees ``range(L)``, so a sketch with a larger null space
    (a disconnected sample) is still measured, just on ``range(L)``.
    ``inv_sqrt`` may pass a precomputed ``pseudo_inv_sqrt(L, tol)``.
    """
    L, Ltil = _pair(L, Ltil)
    if inv_sqrt is None:
        inv_sqrt = pseudo_inv_sqrt(L, tol)
    M = inv_sqrt @ (L - Ltil) @ inv_sqrt
    lam = np.linalg.eigvalsh((M + M.T) / 2)
    return float(max(abs(lam[0]), abs(lam[-1])))


def check_multiplicative_certificate(L, Ltil, eps, tol=None):
    """True iff the isotropic error is at most ``kappa(L) * eps``."""
    if not eps > 0:
        raise InvalidParameter("eps must be positive")
    kappa = condition_number_laplacian(L, tol)
    return isotropic_error(L, Ltil, tol) <= kappa * eps


def quadratic_form_ratio(L, Ltil, x, tol=None):
    """``x^T L x / x^T Ltil x``; raises NullQuadraticForm when the denominator vanishes."""
    L, Ltil = _pair(L, Ltil)
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if x.size != L.shape[0]:
        raise ShapeError("vector length does not match the matrix")
    if not np.any(x):
        raise NullQuadraticForm("x is the zero vector")
    if tol is None:
        tol = default_tol(L.shape[0])
    den = float(x @ Ltil @ x)
    scale = max(np.abs(Ltil).max(), np.abs(L).max()) * float(x @ x)
    if den <= tol * scale:
        raise NullQuadraticForm(f"x^T Ltil x = {den:.3e} is numerically zero")
    return float(x @ L @ x) / den


def error_report(L, Ltil, W=None, eps=None, tol=None, inv_sqrt=None):
    L, Ltil = _pair(L, Ltil)
    delta = L - Ltil
    lam = np.linalg.eigvalsh(delta)
    bound = 2.0 * W * eps if (W is not None and eps is not None) else None
    return ErrorReport(
        delta_frobenius=frobenius_norm(delta),
        delta_spectral=float(max(abs(lam[0]), abs(lam[-1]))),
        isotropic_error=isotropic_error(L, Ltil, tol, inv_sqrt),
        additive_bound_frobenius=bound,
        null_space_mismatch=null_dimension(Ltil, tol) > null_dimension(L, tol),
    )
