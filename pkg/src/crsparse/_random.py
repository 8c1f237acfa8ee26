import numpy as np


def make_rng(seed=None, *stream):
    """Philox generator keyed by ``(seed, *stream)``.

    A ``numpy.random.Generator`` passes through unchanged (``stream`` must be
    empty then). Distinct ``stream`` tuples give independent streams, which is
    how per-trial and per-record seeds are derived.
    """
    if isinstance(seed, np.random.Generator):
        if stream:
            raise TypeError("stream keys need an integer seed")
        return seed
    if seed is None:
        return np.random.Generator(np.random.Philox())
    entropy = [int(seed), *(int(s) for s in stream)]
    if any(e < 0 for e in entropy):
        raise ValueError("seed and stream keys must be non-negative")
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(entropy)))
