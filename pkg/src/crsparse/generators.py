"""Random test graphs: barbells and Erdos-Renyi graphs with integer weights."""
import numpy as np

from ._random import make_rng
from .errors import InvalidParameter
from .graph import WeightedGraph


def barbell_edges(k, p):
    """Edge pairs of two ``K_k`` cliques joined by a path of ``p`` edges.

    Cliques occupy vertices ``0..k-1`` and ``k..2k-1``; the ``p - 1`` inner
    path vertices follow. The path runs from vertex ``k - 1`` to vertex ``k``.
    """
    iu, iv = np.triu_indices(k, 1)
    pairs = [(int(a), int(b)) for a, b in zip(iu, iv)]
    pairs += [(int(a) + k, int(b) + k) for a, b in zip(iu, iv)]
    path = [k - 1, *range(2 * k, 2 * k + p - 1), k]
    pairs += [(min(a, b), max(a, b)) for a, b in zip(path[:-1], path[1:])]
    return sorted(pairs)


def gen_barbell(k, p, weight_max=1, seed=None):
    """Barbell on ``2k + p - 1`` vertices with weights uniform on ``1..weight_max``."""
    if k < 2 or p < 1 or weight_max < 1:
        raise InvalidParameter("need k >= 2, p >= 1, weight_max >= 1")
    pairs = barbell_edges(k, p)
    w = make_rng(seed).integers(1, weight_max + 1, size=len(pairs))
    n = 2 * k + p - 1
    return WeightedGraph(n, [a for a, _ in pairs], [b for _, b in pairs], w)


def gen_random(n, edge_prob, weight_max=1, seed=None):
    """Each of the ``n(n-1)/2`` pairs is an edge independently with ``edge_prob``."""
    if n < 1 or not 0 <= edge_prob <= 1 or weight_max < 1:
        raise InvalidParameter("need n >= 1, edge_prob in [0, 1], weight_max >= 1")
    rng = make_rng(seed)
    iu, iv = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < edge_prob
    w = rng.integers(1, weight_max + 1, size=int(keep.sum()))
    return WeightedGraph(n, iu[keep], iv[keep], w)


def gen_random_connected(n, edge_prob, weight_max=1, seed=None):
    """Like :func:`gen_random` with a random spanning path added first."""
    if n < 1 or not 0 <= edge_prob <= 1 or weight_max < 1:
        raise InvalidParameter("need n >= 1, edge_prob in [0, 1], weight_max >= 1")
    rng = make_rng(seed)
    order = rng.permutation(n)
    chosen = np.zeros((n, n), dtype=bool)
    chosen[np.minimum(order[:-1], order[1:]), np.maximum(order[:-1], order[1:])] = True
    iu, iv = np.triu_indices(n, 1)
    keep = chosen[iu, iv] | (rng.random(iu.size) < edge_prob)
    w = rng.integers(1, weight_max + 1, size=int(keep.sum()))
    return WeightedGraph(n, iu[keep], iv[keep], w)
