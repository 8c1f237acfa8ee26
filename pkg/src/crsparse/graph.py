"""Weighted undirected simple graphs, their Laplacians and boundary matrices."""
import warnings

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components as _cc

from . import kernels
from .errors import GraphValidationError, InvalidBoundary
from .linalg import as_matrix


class DuplicateEdgeWarning(UserWarning):
    pass


class WeightedGraph:
    """Vertex count plus a canonical edge list.

    Edges are stored as three read-only arrays ``u``, ``v``, ``w`` with
    ``u < v``, sorted lexicographically by ``(u, v)``, no repeats, ``w > 0``.
    Use :meth:`from_edges` for raw input (it canonicalizes, merges duplicates
    by summing weights and rejects self-loops). The constructor itself
    validates and refuses anything non-canonical.
    """

    __slots__ = ("n", "u", "v", "w")

    def __init__(self, n, u, v, w):
        n = int(n)
        u = np.array(u, dtype=np.int64).reshape(-1)
        v = np.array(v, dtype=np.int64).reshape(-1)
        w = np.array(w, dtype=np.float64).reshape(-1)
        if n < 1:
            raise GraphValidationError(f"vertex count must be >= 1, got {n}")
        if not (u.size == v.size == w.size):
            raise GraphValidationError("u, v, w must have equal length")
        if u.size:
            if u.min() < 0 or v.max() >= n:
                raise GraphValidationError("vertex id out of range")
            if np.any(u >= v):
                raise GraphValidationError("edges must satisfy u < v")
            if not np.all(np.isfinite(w)) or np.any(w <= 0):
                raise GraphValidationError("weights must be finite and positive")
            key = u * n + v
            if np.any(np.diff(key) <= 0):
                raise GraphValidationError("edges must be sorted and unique")
        for a in (u, v, w):
            a.flags.writeable = False
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "w", w)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedGraph is immutable")

    @classmethod
    def from_edges(cls, n, edges):
        """Build from an iterable of ``(u, v, w)`` in any orientation or order."""
        merged = {}
        dupes = 0
        for a, b, wt in edges:
            a, b, wt = int(a), int(b), float(wt)
            if a == b:
                raise GraphValidationError(f"self-loop at vertex {a}")
            if a < 0 or b < 0 or a >= n or b >= n:
                raise GraphValidationError(f"edge ({a}, {b}) out of range for n={n}")
            key = (a, b) if a < b else (b, a)
            if key in merged:
                dupes += 1
                merged[key] += wt
            else:
                merged[key] = wt
        if dupes:
            warnings.warn(f"merged {dupes} duplicate edge(s) by summing weights",
                          DuplicateEdgeWarning, stacklevel=2)
        keys = sorted(merged)
        return cls(n, [k[0] for k in keys], [k[1] for k in keys], [merged[k] for k in keys])

    @property
    def m(self):
        return int(self.u.size)

    def total_weight(self):
        return float(self.w.sum())

    def edges(self):
        return list(zip(self.u.tolist(), self.v.tolist(), self.w.tolist()))

    def edge_index(self):
        """Map ``(u, v)`` to the edge's row position."""
        return {(a, b): i for i, (a, b) in enumerate(zip(self.u.tolist(), self.v.tolist()))}

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.u, other.u)
                and np.array_equal(self.v, other.v) and np.array_equal(self.w, other.w))

    def __hash__(self):
        return hash((self.n, self.u.tobytes(), self.v.tobytes(), self.w.tobytes()))

    def __repr__(self):
        return f"WeightedGraph(n={self.n}, m={self.m}, W={self.total_weight():g})"


def incidence_vector(n, u, v):
    """e_u - e_v as a dense length-n vector."""
    chi = np.zeros(n)
    chi[u] = 1.0
    chi[v] = -1.0
    return chi


def laplacian(G):
    """L = D - A, accumulated edge by edge."""
    return kernels.accumulate_laplacian(G.n, G.u, G.v, G.w)


def boundary(G):
    """m x n boundary matrix, -sqrt(w) at column u and +sqrt(w) at column v."""
    B = np.zeros((G.m, G.n))
    rows = np.arange(G.m)
    s = np.sqrt(G.w)
    B[rows, G.u] = -s
    B[rows, G.v] = s
    return B


def laplacian_from_boundary(B):
    """B^T B after checking that every row looks like a weighted incidence vector.

    All-zero rows are accepted (absent edges in an aligned edge set).
    """
    B = as_matrix(B)
    nz = B != 0
    counts = nz.sum(axis=1)
    bad = np.flatnonzero((counts != 0) & (counts != 2))
    if bad.size:
        raise InvalidBoundary(f"row {bad[0]} has {counts[bad[0]]} nonzeros, expected 2")
    pairs = B[counts == 2][nz[counts == 2]].reshape(-1, 2)
    if pairs.size:
        if np.any(np.sign(pairs[:, 0]) == np.sign(pairs[:, 1])):
            raise InvalidBoundary("row entries must have opposite signs")
        a, b = np.abs(pairs[:, 0]), np.abs(pairs[:, 1])
        if not np.allclose(a, b, rtol=1e-12, atol=0):
            raise InvalidBoundary("row entries must have equal magnitude")
    L = B.T @ B
    return (L + L.T) / 2


def connected_components(G):
    adj = coo_matrix((np.ones(G.m), (G.u, G.v)), shape=(G.n, G.n))
    count, _ = _cc(adj, directed=False)
    return int(count)


def component_labels(G):
    adj = coo_matrix((np.ones(G.m), (G.u, G.v)), shape=(G.n, G.n))
    return _cc(adj, directed=False)[1]
