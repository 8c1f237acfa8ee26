import numpy as np

from crsparse import WeightedGraph


def triangle(w=(1.0, 1.0, 1.0)):
    return WeightedGraph(3, [0, 0, 1], [1, 2, 2], w)


def path3(w01=1.0, w12=1.0):
    return WeightedGraph(3, [0, 1], [1, 2], [w01, w12])


def single_edge(w=1.0):
    return WeightedGraph(2, [0], [1], [w])


def complete(n, w=1.0):
    iu, iv = np.triu_indices(n, 1)
    return WeightedGraph(n, iu, iv, np.full(iu.size, w))


def random_symmetric(rng, n):
    X = rng.standard_normal((n, n))
    return (X + X.T) / 2


def skewed_graph(seed, n=12, edge_prob=0.5):
    """Connected graph with weights spanning three orders of magnitude."""
    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    pairs = {tuple(sorted((int(a), int(b)))) for a, b in zip(order[:-1], order[1:])}
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < edge_prob:
                pairs.add((a, b))
    pairs = sorted(pairs)
    w = np.exp(rng.uniform(0, np.log(1000.0), len(pairs)))
    return WeightedGraph(n, [p[0] for p in pairs], [p[1] for p in pairs], w)
