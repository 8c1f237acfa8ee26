import math

import numpy as np
import pytest

from crsparse import (
    SamplingDistribution,
    cr_multiply,
    cr_probabilities,
    empirical_variance,
    r_min_frobenius,
    r_min_prop2,
    r_min_spectral,
)
from crsparse._random import make_rng
from crsparse.crmm import SampleSizeWarning
from crsparse.errors import (
    AssumptionViolated,
    DegenerateDistribution,
    InvalidParameter,
    ShapeError,
)
from crsparse.graph import boundary
from helpers import single_edge
from crsparse import WeightedGraph


def exact_variance(A, B, r, probs):
    """E||AB - Y||_F^2 for r i.i.d. draws, from the variance of one rescaled draw."""
    a = np.linalg.norm(A, axis=0) ** 2
    b = np.linalg.norm(B, axis=1) ** 2
    mask = probs > 0
    return (np.sum(a[mask] * b[mask] / probs[mask]) - np.sum((A @ B) ** 2)) / r


def skewed_pair(seed, L=4, N=6, M=3):
    g = np.random.default_rng(seed)
    scales = np.exp(g.uniform(-2, 2, N))
    A = g.standard_normal((L, N)) * scales
    B = g.standard_normal((N, M)) * g.permutation(scales)[:, None]
    return A, B


class TestProbabilities:
    def test_identity_pair(self):
        assert cr_probabilities(np.eye(2), np.eye(2)).probs.tolist() == [0.5, 0.5]

    def test_boundary_gram_is_weight_proportional(self):
        G = WeightedGraph(3, [0, 1], [1, 2], [1.0, 3.0])
        B = boundary(G)
        np.testing.assert_allclose(cr_probabilities(B.T, B).probs, [0.25, 0.75], rtol=1e-14)

    def test_scale_invariant(self, rng):
        A, B = rng.standard_normal((3, 5)), rng.standard_normal((5, 2))
        np.testing.assert_allclose(cr_probabilities(7.5 * A, B).probs,
                                   cr_probabilities(A, B).probs, rtol=1e-14)

    def test_shape_error(self):
        with pytest.raises(ShapeError):
            cr_probabilities(np.ones((2, 3)), np.ones((2, 3)))

    def test_degenerate(self):
        A = np.array([[1.0, 0.0]])
        B = np.array([[0.0], [1.0]])
        with pytest.raises(DegenerateDistribution):
            cr_probabilities(A, B)

    def test_distribution_sums_to_one(self, rng):
        p = SamplingDistribution(rng.random(1000) ** 4)
        assert abs(p.probs.sum() - 1) <= 1e-12
        assert np.all(p.probs >= 0)

    def test_zero_probability_never_drawn(self):
        d = SamplingDistribution(np.array([0.0, 1.0, 0.0, 3.0, 0.0]))
        draws = d.sample(10000, seed=0).draws
        assert set(np.unique(draws).tolist()) <= {1, 3}

    def test_sample_frequencies(self):
        d = SamplingDistribution(np.array([1.0, 2.0, 7.0]))
        counts = d.sample(100000, seed=3).counts
        # 4-sigma multinomial band
        sd = np.sqrt(100000 * d.probs * (1 - d.probs))
        assert np.all(np.abs(counts - 100000 * d.probs) <= 4 * sd)


class TestMultiply:
    @pytest.mark.parametrize("r", [1, 2, 17])
    @pytest.mark.parametrize("seed", [0, 1, 99])
    def test_single_pair_exact(self, r, seed):
        A = np.array([[1.5], [-2.0]])
        B = np.array([[3.0, 0.5, 4.0]])
        res = cr_multiply(A, B, r, seed)
        np.testing.assert_allclose(res.Y, A @ B, rtol=1e-14)
        assert res.dist.probs.tolist() == [1.0]

    def test_c_r_factors(self, rng):
        A, B = rng.standard_normal((4, 6)), rng.standard_normal((6, 3))
        res = cr_multiply(A, B, 9, seed=4)
        C, R = res.C, res.R
        assert C.shape == (4, 9) and R.shape == (9, 3)
        assert np.abs(C @ R - res.Y).max() <= 1e-10 * np.abs(res.Y).max()
        j = 2
        i = res.samples.draws[j]
        np.testing.assert_allclose(C[:, j], A[:, i] / np.sqrt(9 * res.dist.probs[i]))

    def test_streaming_sum_matches_definition(self, rng):
        A, B = rng.standard_normal((3, 5)), rng.standard_normal((5, 4))
        res = cr_multiply(A, B, 11, seed=8)
        p = res.dist.probs
        Y = sum(np.outer(A[:, j], B[j]) / (11 * p[j]) for j in res.samples.draws)
        np.testing.assert_allclose(res.Y, Y, rtol=1e-12, atol=1e-12)

    def test_deterministic(self, rng):
        A, B = rng.standard_normal((4, 6)), rng.standard_normal((6, 3))
        a, b = cr_multiply(A, B, 20, seed=123), cr_multiply(A, B, 20, seed=123)
        assert np.array_equal(a.samples.draws, b.samples.draws)
        assert np.array_equal(a.Y, b.Y)

    def test_bad_r(self):
        with pytest.raises(InvalidParameter):
            cr_multiply(np.eye(2), np.eye(2), 0)

    def test_unbiased(self):
        g = np.random.default_rng(5)
        A, B = g.standard_normal((4, 6)), g.standard_normal((6, 3))
        rng = make_rng(17)
        trials = 20000
        Ys = np.stack([cr_multiply(A, B, 3, rng).Y for _ in range(trials)])
        mean = Ys.mean(axis=0)
        exact = A @ B
        assert np.linalg.norm(mean - exact) / np.linalg.norm(exact) <= 0.02
        se = Ys.std(axis=0, ddof=1) / np.sqrt(trials)
        assert np.all(np.abs(mean - exact) <= 3 * se + 1e-12)

    def test_rms_error_scaling(self):
        g = np.random.default_rng(6)
        A, B = g.standard_normal((4, 6)), g.standard_normal((6, 3))
        rng = make_rng(18)

        def rms(r):
            return math.sqrt(np.mean([np.sum((A @ B - cr_multiply(A, B, r, rng).Y) ** 2)
                                      for _ in range(4000)]))

        ratio = rms(64) / rms(32)
        assert abs(ratio / (1 / math.sqrt(2)) - 1) <= 0.2


class TestEmpiricalVariance:
    def test_single_pair_zero(self):
        assert empirical_variance(np.array([[2.0]]), np.array([[3.0]]), 4, 10, seed=0) == 0.0

    def test_needs_two_trials(self):
        with pytest.raises(InvalidParameter):
            empirical_variance(np.eye(2), np.eye(2), 1, 1)

    def test_matches_closed_form(self):
        A, B = skewed_pair(0)
        p = cr_probabilities(A, B).probs
        emp = empirical_variance(A, B, 5, 20000, seed=2)
        assert emp == pytest.approx(exact_variance(A, B, 5, p), rel=0.05)

    def test_halves_when_r_doubles(self):
        A, B = skewed_pair(1)
        v4 = empirical_variance(A, B, 4, 20000, seed=3)
        v8 = empirical_variance(A, B, 8, 20000, seed=4)
        assert abs(v8 / v4 - 0.5) <= 0.5 * 0.15

    def test_closed_form_minimized_by_norm_products(self, rng):
        # oracle check of the optimality claim: random distributions never beat Eq.-3 probs
        for seed in range(20):
            A, B = skewed_pair(100 + seed)
            best = exact_variance(A, B, 3, cr_probabilities(A, B).probs)
            for _ in range(50):
                q = rng.dirichlet(np.ones(A.shape[1]))
                assert exact_variance(A, B, 3, q) >= best - 1e-12

    @pytest.mark.slow
    def test_optimal_beats_alternatives(self):
        trials = 20000
        for seed in range(10):
            A, B = skewed_pair(200 + seed)
            N = A.shape[1]
            opt = empirical_variance(A, B, 3, trials, seed=seed)
            others = [SamplingDistribution.uniform(N),
                      SamplingDistribution(np.arange(1.0, N + 1)),
                      SamplingDistribution(np.linalg.norm(A, axis=0) ** 2)]
            for dist in others:
                alt = empirical_variance(A, B, 3, trials, seed=seed + 1000, dist=dist)
                assert opt < alt, (seed, opt, alt)

    def test_frobenius_tail_at_minimum_r(self):
        eps, delta = 0.5, 0.25
        r = r_min_frobenius(eps, delta)
        A, B = skewed_pair(7)
        bound = eps * np.linalg.norm(A) * np.linalg.norm(B)
        rng = make_rng(21)
        ok = sum(np.linalg.norm(A @ B - cr_multiply(A, B, r, rng).Y) <= bound for _ in range(5000))
        assert ok / 5000 >= 1 - delta


class TestBounds:
    @pytest.mark.parametrize("eps,delta,expected", [(0.5, 0.25, 64), (1, 1, 1), (0.1, 0.1, 10000)])
    def test_frobenius(self, eps, delta, expected):
        assert r_min_frobenius(eps, delta) == expected

    @pytest.mark.parametrize("args", [(0, 0.5), (0.5, 0), (-1, 1)])
    def test_frobenius_invalid(self, args):
        with pytest.raises(InvalidParameter):
            r_min_frobenius(*args)

    def test_spectral_value(self):
        # 96 * 1 / 0.25 = 384; 384 * ln(384) = 2285.0467...
        assert r_min_spectral(1, 0.5, 1) == 2286

    def test_spectral_floor_case(self):
        eps, delta = 0.3, 0.2
        lower = math.ceil(4 / eps**2 * math.log(4 / (eps**2 * math.sqrt(delta))))
        assert r_min_spectral(1 / 24, eps, delta) >= lower

    def test_spectral_assumption(self):
        with pytest.raises(AssumptionViolated):
            r_min_spectral(0.01, 0.5, 0.5)

    def test_spectral_monotone(self):
        vals = [r_min_spectral(f, 0.4, 0.3) for f in np.linspace(1 / 24, 20, 200)]
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_prop2_value(self):
        # gamma = 8 * 1 / (0.5 * 2) = 8; 6 * 64 * ln(64) = 1597.011...
        assert r_min_prop2(1, 2, 0.5, 1) == 1598

    def test_prop2_gamma_doubling(self):
        a = r_min_prop2(1, 2, 0.5, 1)
        b = r_min_prop2(2, 2, 0.5, 1)
        assert b > 4 * a

    def test_prop2_delta(self):
        assert r_min_prop2(1, 2, 0.5, 0.1) > r_min_prop2(1, 2, 0.5, 0.9)

    def test_prop2_invalid(self):
        with pytest.raises(InvalidParameter):
            r_min_prop2(0, 2, 0.5, 1)

    def test_warns_when_exceeding_n(self):
        with pytest.warns(SampleSizeWarning):
            assert r_min_frobenius(0.5, 0.25, n_available=10) == 64


def test_single_edge_boundary_pair_exact():
    B = boundary(single_edge(3.0))
    res = cr_multiply(B.T, B, 5, seed=0)
    np.testing.assert_allclose(res.Y, [[3, -3], [-3, 3]], rtol=1e-14)
