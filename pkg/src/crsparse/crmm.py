"""CR approximate matrix multiplication.

Sample r column/row index pairs with replacement, with probability
proportional to ``||A[:, i]|| * ||B[i, :]||``, and sum the sampled outer
products rescaled by ``1 / (r p_i)``. The result is an unbiased estimate of
``A @ B``; that particular distribution minimizes ``E||AB - Y||_F^2``.
"""
import math
import warnings
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from . import kernels
from ._random import make_rng
from .errors import (
    AssumptionViolated,
    DegenerateDistribution,
    InvalidParameter,
    ShapeError,
)
from .linalg import as_matrix


class SampleSizeWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SamplingDistribution:
    """Normalized probabilities over N indices.

    Zero-probability indices are left out of the CDF so they can never be
    drawn.
    """

    probs: np.ndarray

    def __post_init__(self):
        p = np.asarray(self.probs, dtype=np.float64).reshape(-1)
        if p.size == 0 or not np.all(np.isfinite(p)) or np.any(p < 0):
            raise InvalidParameter("probabilities must be finite and non-negative")
        total = p.sum()
        if total <= 0:
            raise DegenerateDistribution("all probabilities are zero")
        p = p / total
        p.flags.writeable = False
        object.__setattr__(self, "probs", p)

    @classmethod
    def from_weights(cls, weights):
        return cls(np.asarray(weights, dtype=np.float64))

    @classmethod
    def uniform(cls, size):
        return cls(np.full(size, 1.0 / size))

    @property
    def size(self):
        return self.probs.size

    @cached_property
    def support(self):
        return np.flatnonzero(self.probs > 0)

    @cached_property
    def cdf(self):
        return np.cumsum(self.probs[self.support])

    def sample(self, r, seed=None):
        """Draw ``r`` indices with replacement by inverse-CDF lookup."""
        r = int(r)
        if r < 1:
            raise InvalidParameter(f"r must be >= 1, got {r}")
        u = make_rng(seed).random(r)
        pos = kernels.sample_inverse_cdf(self.cdf, u)
        return SampleMultiset(self.support[pos], self.size)


@dataclass(frozen=True)
class SampleMultiset:
    draws: np.ndarray
    size: int

    @property
    def r(self):
        return int(self.draws.size)

    def __len__(self):
        return self.r

    @cached_property
    def counts(self):
        return kernels.count_draws(np.ascontiguousarray(self.draws, dtype=np.int64), self.size)


@dataclass(frozen=True)
class CRResult:
    """Outcome of one CR multiplication; ``C`` and ``R`` are built on first access."""

    Y: np.ndarray
    samples: SampleMultiset
    dist: SamplingDistribution
    A: np.ndarray = field(repr=False)
    B: np.ndarray = field(repr=False)

    def _scale(self):
        p = self.dist.probs[self.samples.draws]
        return 1.0 / np.sqrt(self.samples.r * p)

    @cached_property
    def C(self):
        return self.A[:, self.samples.draws] * self._scale()

    @cached_property
    def R(self):
        return self.B[self.samples.draws] * self._scale()[:, None]


def _check_pair(A, B):
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise ShapeError(f"inner dimensions differ: {A.shape} x {B.shape}")
    return A, B


def cr_probabilities(A, B):
    A, B = _check_pair(A, B)
    products = np.linalg.norm(A, axis=0) * np.linalg.norm(B, axis=1)
    if not np.any(products > 0):
        raise DegenerateDistribution("every column/row norm product is zero")
    return SamplingDistribution(products)


def cr_multiply(A, B, r, seed=None, dist=None):
    """Approximate ``A @ B`` from ``r`` sampled column/row pairs.

    ``dist`` overrides the norm-product distribution (for comparing sampling
    schemes); any distribution positive wherever the products are nonzero
    keeps the estimate unbiased.
    """
    A, B = _check_pair(A, B)
    if dist is None:
        dist = cr_probabilities(A, B)
    elif dist.size != A.shape[1]:
        raise ShapeError("distribution size does not match the inner dimension")
    samples = dist.sample(r, seed)
    counts = samples.counts
    hit = np.flatnonzero(counts)
    # repeated draws collapse into one weighted rank-1 update
    scale = counts[hit] / (samples.r * dist.probs[hit])
    Y = kernels.outer_accumulate(np.ascontiguousarray(A.T), np.ascontiguousarray(B),
                                 hit.astype(np.int64), scale)
    return CRResult(Y, samples, dist, A, B)


def empirical_variance(A, B, r, trials, seed=None, dist=None):
    """Mean of ``||AB - Y||_F^2`` over ``trials`` independent runs."""
    if trials < 2:
        raise InvalidParameter("need at least two trials")
    A, B = _check_pair(A, B)
    if dist is None:
        dist = cr_probabilities(A, B)
    exact = A @ B
    rng = make_rng(seed)
    errs = np.empty(trials)
    for t in range(trials):
        Y = cr_multiply(A, B, r, rng, dist).Y
        errs[t] = np.sum((exact - Y) ** 2)
    return float(errs.mean())


def _positive(**kw):
    for name, val in kw.items():
        if not val > 0:
            raise InvalidParameter(f"{name} must be positive, got {val}")


def _warn_exceeds(r, n_available):
    if n_available is not None and r > n_available:
        warnings.warn(f"required samples {r} exceed N={n_available}; "
                      "sampling with replacement still applies", SampleSizeWarning,
                      stacklevel=3)


def r_min_frobenius(eps, delta, n_available=None):
    """Trials for ``||AB - CR||_F <= eps ||A||_F ||B||_F`` w.p. ``1 - delta``."""
    _positive(eps=eps, delta=delta)
    r = math.ceil(1.0 / (delta**2 * eps**2))
    _warn_exceeds(r, n_available)
    return r


def r_min_spectral(frobsq, eps, delta, n_available=None):
    """Trials for ``||AA^T - Y||_2 <= eps`` w.p. ``1 - delta`` when ``||A||_2 <= 1``.

    ``frobsq`` is ``||A||_F^2`` and must be at least 1/24.
    """
    _positive(frobsq=frobsq, eps=eps, delta=delta)
    if not eps < 1 or delta > 1:
        raise InvalidParameter("need eps in (0, 1) and delta in (0, 1]")
    if frobsq < 1.0 / 24:
        raise AssumptionViolated(f"||A||_F^2 = {frobsq} is below 1/24")
    x = 96.0 * frobsq / eps**2
    r = math.ceil(x * math.log(x / math.sqrt(delta)))
    _warn_exceeds(r, n_available)
    return r


def r_min_prop2(W, sigma_max_B, eps, delta, n_available=None):
    """Trials for the multiplicative Laplacian guarantee with ``gamma = 8W / (eps sigma_max(B))``."""
    _positive(W=W, sigma_max_B=sigma_max_B, eps=eps, delta=delta)
    if not eps < 1 or delta > 1:
        raise InvalidParameter("need eps in (0, 1) and delta in (0, 1]")
    g2 = (8.0 * W / (eps * sigma_max_B)) ** 2
    r = math.ceil(6.0 * g2 * math.log(g2 / math.sqrt(delta)))
    _warn_exceeds(r, n_available)
    return r
