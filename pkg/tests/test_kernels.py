"""Compiled and pure-Python kernels must agree."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

import crsparse.kernels as kernels
from crsparse import cr_multiply, cr_sparsify, gen_random_connected, laplacian
from crsparse.kernels import _fallback

needs_compiled = pytest.mark.skipif("compiled" not in kernels.available_backends(),
                                    reason="compiled extension not built")


def _core():
    from crsparse.kernels import _core
    return _core


def test_use_backend_rejects_unknown():
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_sample_inverse_cdf_reference(backend):
    cdf = np.array([0.1, 0.1, 0.5, 1.0])
    u = np.array([0.0, 0.05, 0.1, 0.3, 0.5, 0.99999])
    # first index whose cdf exceeds u
    assert kernels.sample_inverse_cdf(cdf, u).tolist() == [0, 0, 2, 2, 3, 3]


def test_sample_inverse_cdf_unnormalized(backend):
    cdf = np.array([2.0, 3.0, 4.0])
    assert kernels.sample_inverse_cdf(cdf, np.array([0.49, 0.5, 0.74, 0.75])).tolist() == [0, 1, 1, 2]


def test_laplacian_kernel_reference(backend):
    L = kernels.accumulate_laplacian(3, np.array([0, 1]), np.array([1, 2]), np.array([1.0, 3.0]))
    assert L.tolist() == [[1, -1, 0], [-1, 4, -3], [0, -3, 3]]


@needs_compiled
@settings(max_examples=100, deadline=None)
@given(arrays(np.float64, st.integers(1, 40), elements=st.floats(0, 10)),
       arrays(np.float64, st.integers(0, 200), elements=st.floats(0, 1, exclude_max=True)))
def test_sampling_bit_identical(weights, u):
    if weights.sum() <= 0:
        weights = weights + 1.0
    cdf = np.cumsum(weights)
    assert np.array_equal(_core().sample_inverse_cdf(cdf, u), _fallback.sample_inverse_cdf(cdf, u))


@needs_compiled
@settings(max_examples=50, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_laplacian_bit_identical(seed):
    G = gen_random_connected(int(seed % 30) + 2, 0.3, 100, seed=seed)
    w = G.w * 0.1  # non-integer so rounding order matters
    a = _core().accumulate_laplacian(G.n, G.u, G.v, w)
    b = _fallback.accumulate_laplacian(G.n, G.u, G.v, w)
    assert np.array_equal(a, b)


@needs_compiled
def test_count_draws_identical(rng):
    d = rng.integers(0, 17, 500).astype(np.int64)
    assert np.array_equal(_core().count_draws(d, 20), _fallback.count_draws(d, 20))


@needs_compiled
@pytest.mark.parametrize("shape", [(4, 6, 3), (1, 1, 1), (10, 3, 7)])
def test_outer_accumulate_close(rng, shape):
    L, N, M = shape
    At = rng.standard_normal((N, L))
    B = rng.standard_normal((N, M))
    idx = rng.integers(0, N, 5).astype(np.int64)
    scale = rng.random(5)
    a = _core().outer_accumulate(At, B, idx, scale)
    b = _fallback.outer_accumulate(At, B, idx, scale)
    np.testing.assert_allclose(a, b, rtol=1e-12, atol=1e-12)


@needs_compiled
def test_end_to_end_backends_agree():
    G = gen_random_connected(25, 0.3, 100, seed=9)
    outs = {}
    for name in ("compiled", "python"):
        prev = kernels.use_backend(name)
        try:
            out = cr_sparsify(G, 200, seed=5)
            outs[name] = (out.sketch, laplacian(out.sketch))
            A = np.arange(12.0).reshape(3, 4)
            outs[name + "Y"] = cr_multiply(A, A.T, 7, seed=1).Y
        finally:
            kernels.use_backend(prev)
    assert outs["compiled"][0] == outs["python"][0]
    assert np.array_equal(outs["compiled"][1], outs["python"][1])
    np.testing.assert_allclose(outs["compiledY"], outs["pythonY"], rtol=1e-12)
