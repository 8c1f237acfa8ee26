"""Edge-sampling sparsifiers built on CR multiplication of ``B^T B``.

``cr_sparsify`` samples edges in proportion to weight, so every draw adds
``W / r`` to the chosen edge. ``er_sparsify`` is the effective-resistance
baseline, sampling in proportion to ``w_e r_e``. Both return the sketch as a
:class:`~crsparse.graph.WeightedGraph` together with the diagonal sketching
matrix and the raw draws.
"""
from dataclasses import dataclass

import numpy as np

from .crmm import SampleMultiset, SamplingDistribution, cr_multiply
from .errors import DisconnectedGraph, NoEdges, ShapeError, InvalidParameter
from .graph import WeightedGraph, boundary, connected_components, laplacian
from .linalg import pseudo_inv_sqrt


@dataclass(frozen=True)
class SketchingDiag:
    """Diagonal ``S`` with ``S[e] = count(e) / (r p_e)``; zero for unsampled edges."""

    r: int
    entries: np.ndarray
    counts: np.ndarray

    def matrix(self):
        return np.diag(self.entries)


@dataclass(frozen=True)
class SparsifyOutput:
    sketch: WeightedGraph
    S: SketchingDiag
    samples: SampleMultiset
    source_W: float  # total weight of the source graph
    source_m: int
    method: str
    sketch_edges: np.ndarray  # positions of the sketch edges in the source edge list

    @property
    def r(self):
        return self.S.r

    @property
    def distinct_edges(self):
        return self.sketch.m

    @property
    def retained_fraction(self):
        return self.sketch.m / self.source_m


@dataclass(frozen=True)
class ResistanceTable:
    """Per-edge effective resistances and the weight-proportional rescaling.

    ``pi`` is the diagonal of ``diag(w_e / W)``, i.e. the CR sampling
    probabilities.
    """

    resistances: np.ndarray
    pi: np.ndarray
    graph: WeightedGraph

    def sampling_vectors(self):
        """Rows ``x_e = sqrt(pi_e) * chi_e / sqrt(2)`` so that ``||x_e||^2 == pi_e``.

        ``chi_e / sqrt(2)`` is the unit-norm incidence direction.
        """
        G = self.graph
        X = np.zeros((G.m, G.n))
        s = np.sqrt(self.pi / 2.0)
        rows = np.arange(G.m)
        X[rows, G.u] = s
        X[rows, G.v] = -s
        return X

    def foster_sum(self):
        return float(np.dot(self.graph.w, self.resistances))


def _check_sampleable(G, r):
    if G.m == 0:
        raise NoEdges("graph has no edges to sample")
    if int(r) < 1:
        raise InvalidParameter(f"r must be >= 1, got {r}")


def sample_sparsify(G, dist, r, seed=None, method="custom"):
    """Sparsify by drawing ``r`` edges from ``dist`` with unbiased reweighting.

    Each draw of edge e adds ``w_e / (r p_e)`` to its sketch weight, so the
    expected sketch Laplacian is the source Laplacian whenever ``dist`` is
    positive on every edge.
    """
    _check_sampleable(G, r)
    if dist.size != G.m:
        raise ShapeError("distribution size does not match the edge count")
    samples = dist.sample(r, seed)
    counts = samples.counts
    hit = np.flatnonzero(counts)
    S = np.zeros(G.m)
    S[hit] = counts[hit] / (samples.r * dist.probs[hit])
    return _assemble(G, samples, SketchingDiag(samples.r, S, counts), S[hit] * G.w[hit],
                     hit, method)


def _assemble(G, samples, S, new_w, hit, method):
    sketch = WeightedGraph(G.n, G.u[hit], G.v[hit], new_w)
    return SparsifyOutput(sketch, S, samples, G.total_weight(), G.m, method, hit)


def cr_probabilities_graph(G):
    return SamplingDistribution.from_weights(G.w)


def cr_sparsify(G, r, seed=None):
    """Weight-proportional edge sampling; each draw adds exactly ``W / r``."""
    _check_sampleable(G, r)
    r = int(r)
    dist = cr_probabilities_graph(G)
    samples = dist.sample(r, seed)
    counts = samples.counts
    hit = np.flatnonzero(counts)
    W = G.total_weight()
    unit = W / r
    S = np.zeros(G.m)
    S[hit] = counts[hit] * unit / G.w[hit]
    return _assemble(G, samples, SketchingDiag(r, S, counts), counts[hit] * unit, hit, "cr")


def effective_resistances(G, inv_sqrt=None):
    """Exact ``r_e = ||L^{-1/2} chi_e||^2`` through a dense pseudo-inverse root.

    ``inv_sqrt`` may pass a precomputed ``L^{-1/2}`` for the same graph.
    """
    if connected_components(G) != 1:
        raise DisconnectedGraph("effective resistances need a connected graph")
    if inv_sqrt is None:
        inv_sqrt = pseudo_inv_sqrt(laplacian(G))
    X = inv_sqrt[:, G.u] - inv_sqrt[:, G.v]
    res = np.einsum("ij,ij->j", X, X)
    return ResistanceTable(res, G.w / G.total_weight(), G)


def er_probabilities(G, table=None):
    if table is None:
        table = effective_resistances(G)
    return SamplingDistribution.from_weights(G.w * table.resistances)


def er_sparsify(G, r, seed=None, table=None):
    """Sample edges with ``q_e`` proportional to ``w_e r_e``, reweighting by ``w_e / (r q_e)``."""
    _check_sampleable(G, r)
    dist = er_probabilities(G, table)
    return sample_sparsify(G, dist, r, seed, method="er")


def uniform_sparsify(G, r, seed=None):
    _check_sampleable(G, r)
    return sample_sparsify(G, SamplingDistribution.uniform(G.m), r, seed, method="uniform")


def aligned_boundaries(G1, G2):
    """Boundary matrices of both graphs on the sorted union edge set.

    Rows for edges absent from a graph are zero.
    """
    if G1.n != G2.n:
        raise ShapeError(f"vertex counts differ: {G1.n} vs {G2.n}")
    union = sorted(set(zip(G1.u.tolist(), G1.v.tolist())) | set(zip(G2.u.tolist(), G2.v.tolist())))
    pos = {e: i for i, e in enumerate(union)}

    def embed(G):
        B = np.zeros((len(union), G.n))
        rows = np.array([pos[e] for e in zip(G.u.tolist(), G.v.tolist())], dtype=np.int64)
        if rows.size:
            B[rows] = boundary(G)
        return B

    return embed(G1), embed(G2), union


def intersection_approx(G1, G2, r, seed=None):
    """CR estimate of ``B1^T B2``; only edges present in both graphs can be drawn."""
    B1, B2, _ = aligned_boundaries(G1, G2)
    return cr_multiply(B1.T, B2, r, seed).Y
